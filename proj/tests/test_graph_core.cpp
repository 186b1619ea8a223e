#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "swl/graph.hpp"

using namespace swl;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Independent articulation-point oracle: drop each vertex and re-check
// connectivity of the remainder.
std::vector<int> cut_vertices_by_removal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> cuts;
    for (int v = 1; v <= n; ++v) {
        std::vector<char> alive(n + 1, 1);
        alive[v] = 0;
        int start = 0;
        for (int w = 1; w <= n; ++w)
            if (alive[w]) {
                start = w;
                break;
            }
        if (start == 0) continue;
        std::vector<char> visited(n + 1, 0);
        std::vector<int> queue{start};
        visited[start] = 1;
        int reached = 1;
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : g.neighbors(queue[head]))
                if (alive[w] && !visited[w]) {
                    visited[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
        if (reached != n - 1) cuts.push_back(v);
    }
    return cuts;
}

}  // namespace

TEST_CASE("edge list parsing") {
    const Graph k3 = parse_edge_list("3 3\n1 2\n2 3\n1 3\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(1, 3));

    const Graph p2 = parse_edge_list("2 1\n1 2\n");
    CHECK(p2.edge_count() == 1);

    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n1 2\n1 2\n"), "duplicate edge", ParseError);
    try {
        parse_edge_list("3 2\n1 2\n1 2\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\nx y\n"), ParseError);

    // Comments and blank lines are skipped without affecting line numbers.
    const Graph commented = parse_edge_list("# triangle\n3 3\n1 2\n\n2 3\n1 3\n");
    CHECK(commented == k3);
}

TEST_CASE("serialize round trip") {
    SplitMix64 rng(42);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_connected_graph(2 + i % 9, 0.5, rng.next());
        const std::string text = serialize_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        CHECK(serialize_edge_list(parse_edge_list(text)) == text);
    }
}

TEST_CASE("bfs distances") {
    const auto dk3 = bfs_distances(complete(3));
    for (int u = 1; u <= 3; ++u)
        for (int v = 1; v <= 3; ++v) CHECK(dk3[u][v] == (u == v ? 0 : 1));

    const auto dp4 = bfs_distances(path(4));
    CHECK(dp4[1][4] == 3);
    CHECK(dp4[2][4] == 2);

    const Graph two_edges(4, {{1, 2}, {3, 4}});
    const auto d = bfs_distances(two_edges);
    CHECK(d[1][3] == kUnreachable);
    CHECK(d[1][2] == 1);
}

TEST_CASE("distances are permutation equivariant") {
    SplitMix64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_connected_graph(8, 0.4, rng.next());
        const auto sigma = random_permutation(8, rng.next());
        const auto dg = bfs_distances(g);
        const auto dh = bfs_distances(permute(g, sigma));
        for (int u = 1; u <= 8; ++u)
            for (int v = 1; v <= 8; ++v) CHECK(dh[sigma(u)][sigma(v)] == dg[u][v]);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete(3)));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(4, {{1, 2}, {3, 4}})));
    CHECK_THROWS_AS(is_connected(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("cut vertices") {
    CHECK(cut_vertices(path(3)) == std::vector<int>{2});
    CHECK(cut_vertices(complete(3)).empty());

    // Two triangles sharing vertex 1.
    const Graph bowtie(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
    CHECK(cut_vertices(bowtie) == cut_vertices_by_removal(bowtie));
    CHECK(cut_vertices(bowtie) == std::vector<int>{1});

    CHECK_THROWS_AS(cut_vertices(Graph(4, {{1, 2}, {3, 4}})), std::invalid_argument);

    SplitMix64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_connected_graph(3 + i % 6, 0.45, rng.next());
        CHECK(cut_vertices(g) == cut_vertices_by_removal(g));
    }
}

TEST_CASE("random connected graphs are deterministic in the seed") {
    CHECK(random_connected_graph(1, 0.5, 3).vertex_count() == 1);
    CHECK(random_connected_graph(5, 1.0, 0) == complete(5));
    const Graph a = random_connected_graph(9, 0.35, 123456);
    const Graph b = random_connected_graph(9, 0.35, 123456);
    CHECK(a == b);
    CHECK(is_connected(a));
}

TEST_CASE("permute") {
    const Graph p3 = path(3);
    CHECK(permute(p3, VertexPermutation::identity(3)) == p3);

    const VertexPermutation swap12({0, 2, 1, 3});
    const Graph swapped = permute(p3, swap12);
    CHECK(swapped.has_edge(2, 1));
    CHECK(swapped.has_edge(1, 3));
    CHECK_FALSE(swapped.has_edge(2, 3));
    CHECK(permute(swapped, swap12.inverse()) == p3);

    CHECK_THROWS_AS(VertexPermutation({0, 1, 1, 3}), std::invalid_argument);
}

TEST_CASE("isomorphism oracle") {
    const Graph k3 = complete(3);
    const Graph k3_relabeled = permute(k3, VertexPermutation({0, 3, 1, 2}));
    CHECK(find_isomorphism(k3, k3_relabeled).has_value());

    CHECK_FALSE(find_isomorphism(path(3), k3).has_value());

    // C6 versus two disjoint triangles: brute-force over all 6! bijections
    // freezes the expected answer.
    const Graph c6 = cycle(6);
    const Graph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    {
        std::vector<int> image{0, 1, 2, 3, 4, 5, 6};
        bool any = false;
        do {
            bool ok = true;
            for (int u = 1; u <= 6 && ok; ++u)
                for (int v = u + 1; v <= 6 && ok; ++v)
                    if (c6.has_edge(u, v) != two_triangles.has_edge(image[u], image[v]))
                        ok = false;
            any = any || ok;
        } while (!any && std::next_permutation(image.begin() + 1, image.end()));
        CHECK_FALSE(any);
    }
    CHECK_FALSE(find_isomorphism(c6, two_triangles).has_value());

    CHECK_THROWS_AS(find_isomorphism(complete(9), complete(9), 8), std::runtime_error);
}

TEST_CASE("oracle finds a witness for every permuted graph") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(rng.next_below(8));
        const Graph g = random_connected_graph(n, 0.4, rng.next());
        const Graph h = permute(g, random_permutation(n, rng.next()));
        const auto witness = find_isomorphism(g, h);
        REQUIRE(witness.has_value());
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                CHECK(g.has_edge(u, v) == h.has_edge((*witness)(u), (*witness)(v)));
    }
}
