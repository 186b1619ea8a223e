#include "swl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace swl {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(n + 1, {});
    adj_matrix_.assign(static_cast<size_t>(n) * n, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (adj_matrix_[index(u, v)]) throw std::invalid_argument("duplicate edge");
        adj_matrix_[index(u, v)] = 1;
        adj_matrix_[index(v, u)] = 1;
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

VertexPermutation::VertexPermutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size()) - 1;
    std::vector<char> seen(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int w = image_[v];
        if (w < 1 || w > n || seen[w])
            throw std::invalid_argument("mapping is not a bijection on 1..n");
        seen[w] = 1;
    }
}

VertexPermutation VertexPermutation::identity(int n) {
    std::vector<int> image(n + 1);
    std::iota(image.begin(), image.end(), 0);
    return VertexPermutation(std::move(image));
}

VertexPermutation VertexPermutation::inverse() const {
    const int n = size();
    std::vector<int> image(n + 1, 0);
    for (int v = 1; v <= n; ++v) image[image_[v]] = v;
    return VertexPermutation(std::move(image));
}

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("expected header line \"n m\"", line_no);
            seen.assign(static_cast<size_t>(n) * n, 0);
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            throw ParseError("malformed edge line", line_no);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens on edge line", line_no);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex id out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        const size_t idx = static_cast<size_t>(std::min(u, v) - 1) * n + (std::max(u, v) - 1);
        if (seen[idx]) throw ParseError("duplicate edge", line_no);
        seen[idx] = 1;
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("missing header line", line_no);
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count does not match header", line_no);
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

DistanceMatrix bfs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix d(n + 1, std::vector<int>(n + 1, kUnreachable));
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 1; s <= n; ++s) {
        auto& row = d[s];
        row[s] = 0;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return d;
}

int diameter(const Graph& g) {
    const auto d = bfs_distances(g);
    int best = 0;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (d[u][v] == kUnreachable)
                throw std::invalid_argument("diameter of a disconnected graph");
            best = std::max(best, d[u][v]);
        }
    return best;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
    std::vector<char> visited(n + 1, 0);
    std::vector<int> queue{1};
    visited[1] = 1;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut vertices require a connected graph");
    const int n = g.vertex_count();
    std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
    std::vector<char> is_cut(n + 1, 0);
    int timer = 0;

    // Iterative DFS to keep deep chain graphs off the call stack.
    struct Frame {
        int v;
        size_t next_child;
    };
    std::vector<Frame> stack;
    stack.push_back({1, 0});
    disc[1] = low[1] = ++timer;
    int root_children = 0;
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        if (next_child < g.neighbors(v).size()) {
            const int w = g.neighbors(v)[next_child++];
            if (disc[w] == 0) {
                parent[w] = v;
                if (v == 1) ++root_children;
                disc[w] = low[w] = ++timer;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                const int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (p != 1 && low[v] >= disc[p]) is_cut[p] = 1;
            }
        }
    }
    if (root_children > 1) is_cut[1] = 1;

    std::vector<int> result;
    for (int v = 1; v <= n; ++v)
        if (is_cut[v]) result.push_back(v);
    return result;
}

Graph random_connected_graph(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("edge probability must be in (0,1]");
    SplitMix64 rng(seed);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.next_double() < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("failed to sample a connected graph within the retry cap");
}

Graph permute(const Graph& g, const VertexPermutation& sigma) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("permutation size does not match graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(sigma(u), sigma(v));
    return Graph(g.vertex_count(), std::move(edges));
}

VertexPermutation random_permutation(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> image(n + 1);
    std::iota(image.begin(), image.end(), 0);
    for (int i = n; i > 1; --i)
        std::swap(image[i], image[1 + static_cast<int>(rng.next_below(i))]);
    return VertexPermutation(std::move(image));
}

namespace {

// Iterated degree refinement; the classical vertex-color pruning invariant.
std::vector<int> vertex_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n + 1, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> sig{color[v]};
            for (int w : g.neighbors(v)) sig.push_back(color[w]);
            std::sort(sig.begin() + 1, sig.end());
            sigs[v - 1] = {std::move(sig), v};
        }
        auto sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n + 1, 0);
        int classes = 0;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
            next[sorted[i].second] = classes;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<int>& order,
                    size_t depth, std::vector<int>& image, std::vector<char>& used,
                    const std::vector<int>& cg, const std::vector<int>& ch) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 1; w <= h.vertex_count(); ++w) {
        if (used[w] || cg[v] != ch[w]) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            const int prev = order[i];
            if (g.has_edge(v, prev) != h.has_edge(w, image[prev])) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        if (extend_mapping(g, h, order, depth + 1, image, used, cg, ch)) return true;
        used[w] = 0;
        image[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h,
                                                  int size_cap) {
    if (g.vertex_count() > size_cap || h.vertex_count() > size_cap)
        throw std::runtime_error("graph too large for the isomorphism oracle");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.vertex_count();
    if (n == 0) return VertexPermutation::identity(0);

    const auto cg = vertex_colors(g);
    const auto ch = vertex_colors(h);
    auto counts = [n](const std::vector<int>& c) {
        std::vector<int> hist(n + 1, 0);
        for (int v = 1; v <= n; ++v) ++hist[c[v]];
        return hist;
    };
    if (counts(cg) != counts(ch)) return std::nullopt;

    // Most-constrained-first: rare color classes early, ties by degree.
    std::vector<int> class_size(n + 1, 0);
    for (int v = 1; v <= n; ++v) ++class_size[cg[v]];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (class_size[cg[a]] != class_size[cg[b]])
            return class_size[cg[a]] < class_size[cg[b]];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> image(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    if (!extend_mapping(g, h, order, 0, image, used, cg, ch)) return std::nullopt;

    VertexPermutation sigma(image);
    // Witnesses are re-verified before being returned; the oracle never
    // reports a mapping it has not checked edge by edge.
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (g.has_edge(u, v) != h.has_edge(sigma(u), sigma(v)))
                throw std::logic_error("isomorphism witness failed verification");
    return sigma;
}

}  // namespace swl
