#include <doctest.h>

#include <cmath>
#include <map>

#include "swl/algorithm.hpp"

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

// Monte-Carlo hitting-time oracle: empirical mean over `walks` random walks.
double mc_hitting_time(const Graph& g, int from, int to, int walks, uint64_t seed) {
    SplitMix64 rng(seed);
    double total = 0.0;
    for (int i = 0; i < walks; ++i) {
        int v = from;
        int steps = 0;
        while (v != to) {
            const auto& nbrs = g.neighbors(v);
            v = nbrs[rng.next_below(nbrs.size())];
            ++steps;
        }
        total += steps;
    }
    return total / walks;
}

// Laplacian pseudoinverse oracle for resistance distance (floating point):
// invert L + J/n, then R(u,v) = M[u][u] + M[v][v] - 2 M[u][v].
std::vector<std::vector<double>> rd_by_pseudoinverse(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) a[u][v] = 1.0 / n;
        a[u][u] += g.degree(u + 1);
        for (int w : g.neighbors(u + 1)) a[u][w - 1] -= 1.0;
        a[u][n + u] = 1.0;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<std::vector<double>> inv(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r][c] = a[r][n + c] / a[r][r];
    std::vector<std::vector<double>> rd(n + 1, std::vector<double>(n + 1, 0.0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            rd[u][v] = inv[u - 1][u - 1] + inv[v - 1][v - 1] - 2 * inv[u - 1][v - 1];
    return rd;
}

}  // namespace

TEST_CASE("hitting time hand values") {
    // K3, adjacent pair: the symmetric 2-variable system gives 2.
    const auto hk3 = hitting_times(complete(3));
    CHECK(hk3[1][2] == Rational(2));
    CHECK(hk3[2][1] == Rational(2));
    CHECK(hk3[1][1] == Rational(0));

    // P3 end to end: h(2) = 1 + h(1)/2, h(1) = 1 + h(2) gives h(1) = 4.
    const auto hp3 = hitting_times(path(3));
    CHECK(hp3[1][3] == Rational(4));
    CHECK(hp3[2][3] == Rational(3));

    CHECK_THROWS_AS(hitting_times(Graph(4, {{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("hitting times are asymmetric in general") {
    // Lollipop: triangle {1,2,3} plus pendant path 3-4. Reaching the hub
    // from the pendant is faster than the other way around.
    const Graph lollipop(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const auto h = hitting_times(lollipop);
    CHECK(h[4][3] != h[3][4]);
}

TEST_CASE("monte carlo agreement") {
    SplitMix64 rng(314);
    for (int i = 0; i < 6; ++i) {
        const int n = 3 + static_cast<int>(rng.next_below(6));
        const Graph g = random_connected_graph(n, 0.55, rng.next());
        const int from = 1 + static_cast<int>(rng.next_below(n));
        int to = 1 + static_cast<int>(rng.next_below(n));
        if (to == from) to = to % n + 1;
        const double exact = hitting_times(g)[from][to].to_double();
        const double sampled = mc_hitting_time(g, from, to, 200000, rng.next());
        CHECK(std::fabs(exact - sampled) < 0.1);
    }
}

TEST_CASE("resistance distances") {
    const auto rk3 = resistance_distances(complete(3));
    CHECK(rk3[1][2] == Rational(2, 3));
    CHECK(rk3[1][1] == Rational(0));

    const auto rp2 = resistance_distances(path(2));
    CHECK(rp2[1][2] == Rational(1));

    SplitMix64 rng(2718);
    for (int i = 0; i < 8; ++i) {
        const int n = 3 + static_cast<int>(rng.next_below(6));
        const Graph g = random_connected_graph(n, 0.5, rng.next());
        const auto exact = resistance_distances(g);
        const auto oracle = rd_by_pseudoinverse(g);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                CHECK(exact[u][v] == exact[v][u]);
                CHECK(std::fabs(exact[u][v].to_double() - oracle[u][v]) < 1e-9);
            }
    }
}

TEST_CASE("gdwl basics") {
    const Graph g = random_connected_graph(7, 0.5, 5);
    for (const char* preset : {"gdwl:spd", "gdwl:htd", "gdwl:rd", "gdwl:spd+htd"}) {
        const AlgorithmSpec spec = AlgorithmSpec::preset(preset);
        CHECK_FALSE(distinguish(g, g, spec).distinguished);
        const auto base = certificate_of(g, spec);
        for (int i = 0; i < 3; ++i) {
            const Graph h = permute(g, random_permutation(7, 77 + i));
            CHECK(certificate_of(h, spec) == base);
        }
    }
    CHECK(distinguish(complete(3), path(3), AlgorithmSpec::preset("gdwl:spd")).distinguished);
    CHECK_THROWS_AS(AlgorithmSpec::preset("gdwl:xyz"), std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmSpec::gdwl({}), std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmSpec::gdwl({DistanceKind::Spd, DistanceKind::Spd}),
                    std::invalid_argument);
}

TEST_CASE("gdwl certificates decide distinguishability") {
    SplitMix64 rng(999);
    for (int i = 0; i < 8; ++i) {
        const int n = 4 + static_cast<int>(rng.next_below(4));
        const Graph g = random_connected_graph(n, 0.5, rng.next());
        const Graph h = i % 2 == 0 ? permute(g, random_permutation(n, rng.next()))
                                   : random_connected_graph(n, 0.5, rng.next());
        for (const char* preset : {"gdwl:spd", "gdwl:spd+htd", "gdwl:rd"}) {
            const AlgorithmSpec spec = AlgorithmSpec::preset(preset);
            CHECK(distinguish(g, h, spec).distinguished ==
                  (certificate_of(g, spec) != certificate_of(h, spec)));
        }
    }
}

TEST_CASE("hitting-time cut-vertex additivity") {
    // H(u,v) = H(u,w) + H(w,v) exactly when w separates u from v.
    SplitMix64 rng(424242);
    int separating_triples = 0;
    for (int i = 0; i < 12; ++i) {
        const int n = 4 + static_cast<int>(rng.next_below(4));
        const Graph g = random_connected_graph(n, 0.4, rng.next());
        const auto H = hitting_times(g);
        for (int u = 1; u <= n; ++u)
            for (int w = 1; w <= n; ++w)
                for (int v = 1; v <= n; ++v) {
                    if (u == v || u == w || v == w) continue;
                    // Does w lie on every u-v path? Remove w and BFS.
                    std::vector<char> visited(n + 1, 0);
                    visited[w] = 1;
                    std::vector<int> queue{u};
                    visited[u] = 1;
                    for (size_t head = 0; head < queue.size(); ++head)
                        for (int x : g.neighbors(queue[head]))
                            if (!visited[x]) {
                                visited[x] = 1;
                                queue.push_back(x);
                            }
                    const bool separates = !visited[v];
                    separating_triples += separates;
                    CHECK((H[u][v] == H[u][w] + H[w][v]) == separates);
                }
    }
    CHECK(separating_triples > 0);  // the corpus exercises both cases
}

TEST_CASE("rational guard rejects runaway growth") {
    Rational::set_bit_limit(64);
    Rational big(1);
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 100; ++i) big *= Rational(1000000007L, 3);
        }(),
        std::overflow_error);
    Rational::set_bit_limit(4096);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational(-2, 3).str() == "-2/3");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("equal stable pair colors force equal distance and hitting time") {
    // Joint vanilla-plus-point runs: two pairs with the same stable color
    // have the same hop distance and the same reverse hitting time.
    SplitMix64 rng(717);
    for (int i = 0; i < 6; ++i) {
        const int n = 4 + static_cast<int>(rng.next_below(3));
        const Graph g = random_connected_graph(n, 0.5, rng.next());
        const Graph h = random_connected_graph(n, 0.5, rng.next());
        const auto run = run_pair(g, h, AlgorithmSpec::preset("pswl-vs"));
        const auto dg = bfs_distances(g), dh = bfs_distances(h);
        const auto hg = hitting_times(g), hh = hitting_times(h);
        std::map<int, std::pair<int, Rational>> seen;  // color -> (dis, H[v][u])
        auto scan = [&](const RefineHistory& hist, const DistanceMatrix& d,
                        const std::vector<std::vector<Rational>>& H) {
            const int nn = hist.n;
            for (int u = 1; u <= nn; ++u)
                for (int v = 1; v <= nn; ++v) {
                    const int color = hist.colors.back()[(u - 1) * nn + (v - 1)];
                    const auto [it, inserted] =
                        seen.emplace(color, std::make_pair(d[u][v], H[v][u]));
                    CHECK(it->second.first == d[u][v]);
                    CHECK(it->second.second == H[v][u]);
                }
        };
        scan(run.joint.histories[0], dg, hg);
        scan(run.joint.histories[1], dh, hh);
    }
}
