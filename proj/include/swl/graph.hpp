#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swl {

// Hop count for vertex pairs in different components. Kept as a distinct
// sentinel (never a large finite value) so distance-based color keys cannot
// collide with real distances.
inline constexpr int kUnreachable = -1;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line)
        : std::runtime_error(std::move(msg)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Finite simple undirected graph with vertices 1..n and sorted adjacency
// lists. Disconnected graphs are representable; connectivity is checked at
// the refinement-engine entry points, not here.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return adj_matrix_[index(u, v)]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    size_t index(int u, int v) const {
        return static_cast<size_t>(u - 1) * n_ + (v - 1);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> adj_matrix_;
};

using DistanceMatrix = std::vector<std::vector<int>>;

// Bijection on 1..n stored as image[v] (index 0 unused).
class VertexPermutation {
public:
    explicit VertexPermutation(std::vector<int> image);
    static VertexPermutation identity(int n);

    int size() const { return static_cast<int>(image_.size()) - 1; }
    int operator()(int v) const { return image_[v]; }
    VertexPermutation inverse() const;

private:
    std::vector<int> image_;
};

// Edge-list text format: first line "n m", then one "u v" line per edge.
// Lines starting with '#' are comments. Duplicate edges, self-loops and
// out-of-range ids are parse errors carrying the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
// Mirror of the parser; emits edges sorted lexicographically so that
// parse(serialize(g)) round-trips bit-exactly.
std::string serialize_edge_list(const Graph& g);

DistanceMatrix bfs_distances(const Graph& g);
int diameter(const Graph& g);

// True iff one BFS from vertex 1 reaches all vertices. Rejects n = 0.
bool is_connected(const Graph& g);

// Articulation points of a connected graph via low-link.
std::vector<int> cut_vertices(const Graph& g);

// Deterministic Erdos-Renyi sample resampled until connected. The generator
// is splitmix64 seeded with `seed`; an edge {u,v} (u < v, lexicographic
// order) is included iff the next draw maps below p. Errors out after 10^4
// failed connectivity attempts.
Graph random_connected_graph(int n, double p, uint64_t seed);

Graph permute(const Graph& g, const VertexPermutation& sigma);
VertexPermutation random_permutation(int n, uint64_t seed);

// Backtracking isomorphism oracle with iterated-degree color pruning.
// Correct-or-refuse: inputs above the size cap raise instead of guessing.
// A returned witness has been re-checked edge by edge.
std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h,
                                                  int size_cap = 60);

// splitmix64: the single PRNG behind every seeded operation in this project.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform in [0, bound).
    uint64_t next_below(uint64_t bound) { return next() % bound; }
};

}  // namespace swl
