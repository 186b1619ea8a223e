#include <doctest.h>

#include "swl/policy.hpp"

using namespace swl;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("policy names") {
    CHECK(Policy::parse("nm").kind == PolicyKind::NodeMarking);
    CHECK(Policy::parse("ego:2").radius == 2);
    CHECK(Policy::parse("egonm:1").kind == PolicyKind::EgoMarking);
    CHECK(Policy::parse("egode:3").kind == PolicyKind::EgoDistance);
    CHECK_THROWS_AS(Policy::parse("ego:0"), std::invalid_argument);
    CHECK_THROWS_AS(Policy::parse("xyz"), std::invalid_argument);
    for (const char* name : {"nm", "de", "const", "ego:2", "egonm:2", "egode:2", "nd", "ndm"})
        CHECK(Policy::parse(name).name() == name);
}

TEST_CASE("node marking keys on P2") {
    const auto bag = generate(path(2), Policy::parse("nm"));
    CHECK(bag.initial_key(1, 1).tag == InitialKey::kMark);
    CHECK(bag.initial_key(1, 2).tag == InitialKey::kPlain);
    CHECK(bag.subgraph_edges(1) == path(2).edges());
}

TEST_CASE("node deletion drops incident edges") {
    const auto bag = generate(complete(3), Policy::parse("nd"));
    CHECK(bag.subgraph_edges(1) == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(bag.subgraph_neighbors(1, 1).empty());
    CHECK(bag.initial_key(1, 1).tag == InitialKey::kConstant);

    const auto marked = generate(complete(3), Policy::parse("ndm"));
    CHECK(marked.subgraph_edges(1) == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(marked.initial_key(1, 1).tag == InitialKey::kMark);
}

TEST_CASE("ego networks keep in-ball edges only") {
    const auto bag = generate(path(4), Policy::parse("ego:1"));
    CHECK(bag.subgraph_edges(2) == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(bag.subgraph_neighbors(2, 4).empty());
}

TEST_CASE("distance encoding keys") {
    const auto bag = generate(path(4), Policy::parse("de"));
    CHECK(bag.initial_key(1, 4).tag == InitialKey::kDist);
    CHECK(bag.initial_key(1, 4).value == 3);
    CHECK(bag.initial_key(2, 2).value == 0);
    CHECK(bag.subgraph_edges(3) == path(4).edges());

    // Vertices outside the hop ball keep a key with the unreachable sentinel.
    const auto ego = generate(path(4), Policy::parse("egode:1"));
    CHECK(ego.initial_key(1, 2).value == 1);
    CHECK(ego.initial_key(1, 3).value == kUnreachable);
}

TEST_CASE("generation rejects disconnected graphs") {
    CHECK_THROWS_AS(generate(Graph(4, {{1, 2}, {3, 4}}), Policy::parse("nm")),
                    std::invalid_argument);
}

TEST_CASE("generation is permutation equivariant") {
    SplitMix64 rng(5);
    for (const char* name : {"nm", "de", "ego:1", "egonm:2", "egode:1", "nd", "ndm", "const"}) {
        const Policy policy = Policy::parse(name);
        for (int i = 0; i < 8; ++i) {
            const int n = 3 + static_cast<int>(rng.next_below(5));
            const Graph g = random_connected_graph(n, 0.5, rng.next());
            const auto sigma = random_permutation(n, rng.next());
            const Graph h = permute(g, sigma);
            const auto bag_g = generate(g, policy);
            const auto bag_h = generate(h, policy);
            for (int u = 1; u <= n; ++u) {
                for (int v = 1; v <= n; ++v)
                    CHECK(bag_g.initial_key(u, v) == bag_h.initial_key(sigma(u), sigma(v)));
                auto edges = bag_g.subgraph_edges(u);
                for (auto& [a, b] : edges) {
                    a = sigma(a);
                    b = sigma(b);
                    if (a > b) std::swap(a, b);
                }
                std::sort(edges.begin(), edges.end());
                CHECK(edges == bag_h.subgraph_edges(sigma(u)));
            }
        }
    }
}

TEST_CASE("ego radius at the diameter reproduces the original edges") {
    SplitMix64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const Graph g = random_connected_graph(7, 0.4, rng.next());
        const int d = diameter(g);
        const auto bag = generate(g, Policy{PolicyKind::Ego, std::max(1, d)});
        for (int u = 1; u <= 7; ++u) CHECK(bag.subgraph_edges(u) == g.edges());
    }
}
