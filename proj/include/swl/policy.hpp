#pragma once

#include <string>
#include <vector>

#include "swl/graph.hpp"

namespace swl {

enum class PolicyKind {
    NodeMarking,          // nm
    DistanceEncoding,     // de
    Constant,             // const
    Ego,                  // ego:k
    EgoMarking,           // egonm:k
    EgoDistance,          // egode:k
    NodeDeletion,         // nd
    NodeDeletionMarking,  // ndm
};

struct Policy {
    PolicyKind kind = PolicyKind::NodeMarking;
    int radius = 0;  // hop radius, >= 1 for ego variants

    static Policy node_marking() { return {PolicyKind::NodeMarking, 0}; }
    // Accepts the CLI names: nm, de, const, ego:k, egonm:k, egode:k, nd, ndm.
    static Policy parse(const std::string& name);
    std::string name() const;
    bool operator==(const Policy&) const = default;
};

// Structured, isomorphism-invariant initial color token for an ordered pair.
// Tokens are compared exactly across the two graphs of a joint run, so they
// carry the policy-visible structure rather than a pre-hashed integer.
struct InitialKey {
    enum Tag : int { kConstant = 0, kPlain = 1, kMark = 2, kDist = 3, kMarkDist = 4 };
    int tag = kConstant;
    int value = 0;  // subgraph distance for kDist/kMarkDist (kUnreachable allowed)

    bool operator==(const InitialKey&) const = default;
    auto operator<=>(const InitialKey&) const = default;
};

// Per-root subgraph edge structure plus the initial pair colors. All roots
// share the vertex set 1..n; for ego policies the vertices outside the hop
// ball stay present with empty neighborhoods.
class SubgraphBag {
public:
    SubgraphBag(const Graph& g, Policy policy);

    int vertex_count() const { return n_; }
    const Policy& policy() const { return policy_; }

    // Neighbors of v inside the root-u subgraph.
    const std::vector<int>& subgraph_neighbors(int u, int v) const {
        return shared_edges_ ? graph_.neighbors(v) : adjacency_[u][v];
    }
    // Edge set of the root-u subgraph, normalized u < v, sorted.
    std::vector<std::pair<int, int>> subgraph_edges(int u) const;

    const InitialKey& initial_key(int u, int v) const {
        return keys_[static_cast<size_t>(u - 1) * n_ + (v - 1)];
    }

    const Graph& graph() const { return graph_; }

private:
    Graph graph_;  // owned copy, so bags outlive their construction site
    Policy policy_;
    int n_;
    bool shared_edges_;  // true when every root reuses the original edge set
    std::vector<std::vector<std::vector<int>>> adjacency_;  // [root][vertex]
    std::vector<InitialKey> keys_;
};

SubgraphBag generate(const Graph& g, Policy policy);

}  // namespace swl
