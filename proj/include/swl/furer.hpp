#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"

namespace swl {

using BaseEdge = std::pair<int, int>;  // normalized u < v

// Base graphs are labeled by their vertex ids 1..n; the labels drive the
// chain lengths of the augmentation, so relabeling changes the augmented
// graphs (but not any distinguishability verdict).
bool is_proper_base(const Graph& base);

struct MetaVertex {
    int base_vertex = 0;
    // Bit i selects the i-th entry of the base vertex's sorted neighbor
    // list; population count is always even.
    uint32_t subset_mask = 0;
};

// The meta-vertex graph over a base graph F: vertices are (x, X) with
// X an even subset of N(x); {(x,X),(y,Y)} is an edge iff {x,y} is a base
// edge and x-in-Y matches y-in-X, with the match flipped on twisted edges.
class FurerGraph {
public:
    explicit FurerGraph(Graph base);

    const Graph& base() const { return base_; }
    const std::vector<BaseEdge>& twisted_edges() const { return twisted_; }
    const std::vector<MetaVertex>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    // Vertex ids are base-vertex-major, subsets in ascending mask order.
    int meta_first(int base_vertex) const { return meta_first_[base_vertex]; }
    int meta_size(int base_vertex) const { return meta_size_[base_vertex]; }
    int vertex_id(int base_vertex, uint32_t subset_mask) const;

    // Applies the symmetric difference of `edges` to the twist set.
    FurerGraph twisted(const std::vector<BaseEdge>& edges) const;

    // Materializes the meta-vertex graph with the current twist set.
    Graph graph() const;

private:
    Graph base_;
    std::vector<BaseEdge> twisted_;
    std::vector<MetaVertex> vertices_;
    std::vector<int> meta_first_, meta_size_;
};

// Attaches one chain of u+1 auxiliary vertices per base vertex u, the first
// chain vertex adjacent to every vertex of Meta(u). Meta vertices keep their
// FurerGraph ids; chains follow in base-vertex order.
Graph augment(const FurerGraph& fg);

// Witness for the fact that twisting two edges yields an isomorphic graph:
// maps (z, Z) to (z, Z ^ {path predecessor, path successor}) along a simple
// path joining e1 and e2. Verified edge-preserving from fg to
// fg.twisted({e1, e2}) before it is returned.
VertexPermutation double_twist_isomorphism(const FurerGraph& fg, BaseEdge e1,
                                           BaseEdge e2);

// The canonical counterexample pair of a proper base: the augmented meta
// graph and its augmentation after twisting the lexicographically smallest
// base edge. Which edge is twisted does not matter up to isomorphism.
std::pair<Graph, Graph> make_pair(const Graph& base);

// Randomized enumeration over proper bases; returns the first one whose
// augmented pair the strong algorithm distinguishes and the weak one does
// not. Deterministic in `seed`; empty when the budget runs out.
std::optional<Graph> search_separating_base(const AlgorithmSpec& weak,
                                            const AlgorithmSpec& strong, int max_n,
                                            int budget, uint64_t seed,
                                            int threads = 1);

}  // namespace swl
