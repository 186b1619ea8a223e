#include "swl/policy.hpp"

#include <algorithm>
#include <stdexcept>

namespace swl {

Policy Policy::parse(const std::string& name) {
    auto ego_radius = [&](size_t prefix_len) {
        if (name.size() <= prefix_len || name[prefix_len] != ':')
            throw std::invalid_argument("ego policies need a hop radius, e.g. ego:2");
        const int k = std::stoi(name.substr(prefix_len + 1));
        if (k < 1) throw std::invalid_argument("ego hop radius must be >= 1");
        return k;
    };
    if (name == "nm") return {PolicyKind::NodeMarking, 0};
    if (name == "de") return {PolicyKind::DistanceEncoding, 0};
    if (name == "const") return {PolicyKind::Constant, 0};
    if (name == "nd") return {PolicyKind::NodeDeletion, 0};
    if (name == "ndm") return {PolicyKind::NodeDeletionMarking, 0};
    if (name.rfind("egonm", 0) == 0) return {PolicyKind::EgoMarking, ego_radius(5)};
    if (name.rfind("egode", 0) == 0) return {PolicyKind::EgoDistance, ego_radius(5)};
    if (name.rfind("ego", 0) == 0) return {PolicyKind::Ego, ego_radius(3)};
    throw std::invalid_argument("unknown policy: " + name);
}

std::string Policy::name() const {
    switch (kind) {
        case PolicyKind::NodeMarking: return "nm";
        case PolicyKind::DistanceEncoding: return "de";
        case PolicyKind::Constant: return "const";
        case PolicyKind::Ego: return "ego:" + std::to_string(radius);
        case PolicyKind::EgoMarking: return "egonm:" + std::to_string(radius);
        case PolicyKind::EgoDistance: return "egode:" + std::to_string(radius);
        case PolicyKind::NodeDeletion: return "nd";
        case PolicyKind::NodeDeletionMarking: return "ndm";
    }
    return "?";
}

namespace {

bool uses_marking(PolicyKind k) {
    return k == PolicyKind::NodeMarking || k == PolicyKind::EgoMarking ||
           k == PolicyKind::NodeDeletionMarking;
}

bool uses_distance(PolicyKind k) {
    return k == PolicyKind::DistanceEncoding || k == PolicyKind::EgoDistance;
}

bool uses_ego(PolicyKind k) {
    return k == PolicyKind::Ego || k == PolicyKind::EgoMarking ||
           k == PolicyKind::EgoDistance;
}

bool uses_deletion(PolicyKind k) {
    return k == PolicyKind::NodeDeletion || k == PolicyKind::NodeDeletionMarking;
}

// Single-source hop distances restricted to an adjacency table.
std::vector<int> restricted_bfs(int n, int source,
                                const std::vector<std::vector<int>>& adj) {
    std::vector<int> dist(n + 1, kUnreachable);
    dist[source] = 0;
    std::vector<int> queue{source};
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : adj[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

SubgraphBag::SubgraphBag(const Graph& g, Policy policy)
    : graph_(g), policy_(policy), n_(g.vertex_count()) {
    if (!is_connected(g))
        throw std::invalid_argument("subgraph generation requires a connected graph");
    const PolicyKind kind = policy.kind;
    shared_edges_ = !uses_ego(kind) && !uses_deletion(kind);

    DistanceMatrix original_dist;
    if (uses_distance(kind) || uses_ego(kind)) original_dist = bfs_distances(g);

    if (!shared_edges_) {
        adjacency_.assign(n_ + 1, {});
        for (int u = 1; u <= n_; ++u) {
            auto& adj = adjacency_[u];
            adj.assign(n_ + 1, {});
            if (uses_deletion(kind)) {
                for (auto [a, b] : g.edges()) {
                    if (a == u || b == u) continue;
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
            } else {  // ego: keep edges with both endpoints within radius hops
                for (auto [a, b] : g.edges()) {
                    if (original_dist[u][a] <= policy.radius &&
                        original_dist[u][b] <= policy.radius) {
                        adj[a].push_back(b);
                        adj[b].push_back(a);
                    }
                }
            }
        }
    }

    keys_.resize(static_cast<size_t>(n_) * n_);
    for (int u = 1; u <= n_; ++u) {
        std::vector<int> subgraph_dist;
        if (uses_distance(kind))
            subgraph_dist = shared_edges_ ? original_dist[u]
                                          : restricted_bfs(n_, u, adjacency_[u]);
        for (int v = 1; v <= n_; ++v) {
            InitialKey key;
            const bool marked = (u == v);
            if (uses_distance(kind)) {
                key.tag = uses_marking(kind) ? InitialKey::kMarkDist : InitialKey::kDist;
                key.value = subgraph_dist[v];
            } else if (uses_marking(kind)) {
                key.tag = marked ? InitialKey::kMark : InitialKey::kPlain;
            } else {
                key.tag = InitialKey::kConstant;
            }
            keys_[static_cast<size_t>(u - 1) * n_ + (v - 1)] = key;
        }
    }
}

std::vector<std::pair<int, int>> SubgraphBag::subgraph_edges(int u) const {
    if (shared_edges_) return graph_.edges();
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n_; ++v)
        for (int w : adjacency_[u][v])
            if (v < w) edges.emplace_back(v, w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

SubgraphBag generate(const Graph& g, Policy policy) { return SubgraphBag(g, policy); }

}  // namespace swl
