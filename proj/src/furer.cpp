#include "swl/furer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace swl {

bool is_proper_base(const Graph& base) {
    if (base.vertex_count() == 0 || !is_connected(base)) return false;
    int max_degree = 0;
    for (int v = 1; v <= base.vertex_count(); ++v) {
        if (base.degree(v) < 2) return false;
        max_degree = std::max(max_degree, base.degree(v));
    }
    return max_degree >= 3;
}

FurerGraph::FurerGraph(Graph base) : base_(std::move(base)) {
    if (base_.vertex_count() == 0 || !is_connected(base_))
        throw std::invalid_argument("base graph must be connected");
    const int n = base_.vertex_count();
    meta_first_.assign(n + 1, 0);
    meta_size_.assign(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        const int deg = base_.degree(x);
        if (deg > 30) throw std::invalid_argument("base degree too large");
        meta_first_[x] = static_cast<int>(vertices_.size()) + 1;
        for (uint32_t mask = 0; mask < (1u << deg); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            vertices_.push_back({x, mask});
            ++meta_size_[x];
        }
    }
}

int FurerGraph::vertex_id(int base_vertex, uint32_t subset_mask) const {
    for (int i = 0; i < meta_size_[base_vertex]; ++i) {
        const int id = meta_first_[base_vertex] + i;
        if (vertices_[id - 1].subset_mask == subset_mask) return id;
    }
    throw std::invalid_argument("no such meta vertex");
}

FurerGraph FurerGraph::twisted(const std::vector<BaseEdge>& edges) const {
    FurerGraph result(*this);
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!base_.has_edge(u, v))
            throw std::invalid_argument("twist edge is not a base edge");
        const BaseEdge e{u, v};
        auto it = std::find(result.twisted_.begin(), result.twisted_.end(), e);
        if (it != result.twisted_.end())
            result.twisted_.erase(it);
        else
            result.twisted_.push_back(e);
    }
    std::sort(result.twisted_.begin(), result.twisted_.end());
    return result;
}

Graph FurerGraph::graph() const {
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : base_.edges()) {
        const bool twisted =
            std::binary_search(twisted_.begin(), twisted_.end(), BaseEdge{x, y});
        // Position of y in N(x) and of x in N(y).
        const auto& nx = base_.neighbors(x);
        const auto& ny = base_.neighbors(y);
        const uint32_t bit_y_in_x =
            1u << (std::lower_bound(nx.begin(), nx.end(), y) - nx.begin());
        const uint32_t bit_x_in_y =
            1u << (std::lower_bound(ny.begin(), ny.end(), x) - ny.begin());
        for (int i = 0; i < meta_size_[x]; ++i) {
            const int xi = meta_first_[x] + i;
            const bool y_in_X = vertices_[xi - 1].subset_mask & bit_y_in_x;
            for (int j = 0; j < meta_size_[y]; ++j) {
                const int yj = meta_first_[y] + j;
                const bool x_in_Y = vertices_[yj - 1].subset_mask & bit_x_in_y;
                if ((x_in_Y == y_in_X) != twisted) edges.emplace_back(xi, yj);
            }
        }
    }
    return Graph(vertex_count(), std::move(edges));
}

Graph augment(const FurerGraph& fg) {
    const int n = fg.base().vertex_count();
    const Graph meta = fg.graph();
    std::vector<std::pair<int, int>> edges = meta.edges();
    int next = meta.vertex_count();
    for (int u = 1; u <= n; ++u) {
        const int chain_len = u + 1;
        const int head = next + 1;
        for (int i = 1; i < chain_len; ++i)
            edges.emplace_back(next + i, next + i + 1);
        for (int i = 0; i < fg.meta_size(u); ++i)
            edges.emplace_back(fg.meta_first(u) + i, head);
        next += chain_len;
    }
    return Graph(next, std::move(edges));
}

VertexPermutation double_twist_isomorphism(const FurerGraph& fg, BaseEdge e1,
                                           BaseEdge e2) {
    const Graph& base = fg.base();
    auto normalize = [&](BaseEdge e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!base.has_edge(e.first, e.second))
            throw std::invalid_argument("twist edge is not a base edge");
        return e;
    };
    e1 = normalize(e1);
    e2 = normalize(e2);
    if (e1 == e2) throw std::invalid_argument("the two twist edges must differ");

    // Simple path (w_0, ..., w_k) with {w_0,w_1} = e1 and {w_{k-1},w_k} = e2.
    std::vector<int> path;
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
        e1.second == e2.second) {
        const int shared = (e1.first == e2.first || e1.first == e2.second) ? e1.first
                                                                           : e1.second;
        const int a = e1.first == shared ? e1.second : e1.first;
        const int b = e2.first == shared ? e2.second : e2.first;
        path = {a, shared, b};
    } else {
        // Multi-source BFS from e1's endpoints until e2 is reached; a
        // shortest connector has interior disjoint from both edges.
        const int n = base.vertex_count();
        std::vector<int> parent(n + 1, 0);
        std::vector<int> queue{e1.first, e1.second};
        parent[e1.first] = e1.second;  // orient the e1 edge once an endpoint is fixed
        parent[e1.second] = e1.first;
        int hit = 0;
        for (size_t head = 0; head < queue.size() && !hit; ++head) {
            for (int w : base.neighbors(queue[head])) {
                if (parent[w] != 0) continue;
                parent[w] = queue[head];
                if (w == e2.first || w == e2.second) {
                    hit = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (!hit) throw std::logic_error("no connector found in a connected base");
        for (int v = hit; v != e1.first && v != e1.second; v = parent[v])
            path.push_back(v);
        path.push_back(path.empty() ? 0 : parent[path.back()]);
        std::reverse(path.begin(), path.end());
        // path now runs from an endpoint of e1 to `hit`; prepend the other
        // e1 endpoint and append the far endpoint of e2.
        path.insert(path.begin(), path[0] == e1.first ? e1.second : e1.first);
        path.push_back(hit == e2.first ? e2.second : e2.first);
    }

    // f(z, Z) = (z, Z ^ {w_{i-1}, w_{i+1}}) for interior path vertices.
    std::vector<int> image(fg.vertex_count() + 1);
    for (int id = 1; id <= fg.vertex_count(); ++id) image[id] = id;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
        const int z = path[i];
        const auto& nz = base.neighbors(z);
        const uint32_t bit_prev =
            1u << (std::lower_bound(nz.begin(), nz.end(), path[i - 1]) - nz.begin());
        const uint32_t bit_next =
            1u << (std::lower_bound(nz.begin(), nz.end(), path[i + 1]) - nz.begin());
        for (int j = 0; j < fg.meta_size(z); ++j) {
            const int id = fg.meta_first(z) + j;
            const uint32_t mask = fg.vertices()[id - 1].subset_mask;
            image[id] = fg.vertex_id(z, mask ^ bit_prev ^ bit_next);
        }
    }
    VertexPermutation sigma(std::move(image));

    const Graph before = fg.graph();
    const Graph after = fg.twisted({e1, e2}).graph();
    for (auto [a, b] : before.edges())
        if (!after.has_edge(sigma(a), sigma(b)))
            throw std::logic_error("double-twist witness failed edge preservation");
    if (before.edge_count() != after.edge_count())
        throw std::logic_error("double-twist witness failed edge preservation");
    return sigma;
}

std::pair<Graph, Graph> make_pair(const Graph& base) {
    if (!is_proper_base(base))
        throw std::invalid_argument("base graph is not proper");
    const FurerGraph fg(base);
    const BaseEdge first_edge = base.edges().front();
    return {augment(fg), augment(fg.twisted({first_edge}))};
}

std::optional<Graph> search_separating_base(const AlgorithmSpec& weak,
                                            const AlgorithmSpec& strong, int max_n,
                                            int budget, uint64_t seed, int threads) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        const int n = 4 + static_cast<int>(rng.next_below(std::max(1, max_n - 3)));
        const double p = 0.3 + 0.1 * static_cast<double>(rng.next_below(5));
        std::vector<std::pair<int, int>> candidate_edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.next_double() < p) candidate_edges.emplace_back(u, v);
        Graph base(n, std::move(candidate_edges));
        if (!is_proper_base(base)) continue;
        const auto [g, h] = make_pair(base);
        if (distinguish(g, h, weak, threads).distinguished) continue;
        if (distinguish(g, h, strong, threads).distinguished) return base;
    }
    return std::nullopt;
}

}  // namespace swl
