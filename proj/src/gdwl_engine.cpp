#include <algorithm>
#include <map>
#include <stdexcept>

#include "swl/algorithm.hpp"

namespace swl {

std::vector<std::vector<Rational>> hitting_times(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("hitting times require a connected graph");
    const int n = g.vertex_count();
    std::vector<std::vector<Rational>> H(n + 1, std::vector<Rational>(n + 1));

    // For each target v solve, over all x != v:
    //   deg(x) h(x) - sum_{y in N(x), y != v} h(y) = deg(x),   h(v) = 0.
    for (int v = 1; v <= n; ++v) {
        const int dim = n - 1;
        if (dim == 0) continue;
        std::vector<int> vars;  // vertex of each variable index
        std::vector<int> var_of(n + 1, -1);
        for (int x = 1; x <= n; ++x)
            if (x != v) {
                var_of[x] = static_cast<int>(vars.size());
                vars.push_back(x);
            }
        std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1));
        for (int r = 0; r < dim; ++r) {
            const int x = vars[r];
            m[r][var_of[x]] = Rational(g.degree(x));
            m[r][dim] = Rational(g.degree(x));
            for (int y : g.neighbors(x))
                if (y != v) m[r][var_of[y]] -= Rational(1);
        }
        // Exact Gaussian elimination with nonzero pivoting.
        for (int col = 0; col < dim; ++col) {
            int pivot = -1;
            for (int r = col; r < dim; ++r)
                if (!m[r][col].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                throw std::logic_error("singular hitting-time system on a connected graph");
            std::swap(m[col], m[pivot]);
            for (int r = col + 1; r < dim; ++r) {
                if (m[r][col].is_zero()) continue;
                const Rational factor = m[r][col] / m[col][col];
                for (int c = col; c <= dim; ++c) m[r][c] -= factor * m[col][c];
            }
        }
        for (int r = dim - 1; r >= 0; --r) {
            Rational acc = m[r][dim];
            for (int c = r + 1; c < dim; ++c) acc -= m[r][c] * m[c][dim];
            m[r][dim] = acc / m[r][r];
        }
        for (int r = 0; r < dim; ++r) H[vars[r]][v] = m[r][dim];
    }
    return H;
}

std::vector<std::vector<Rational>> resistance_distances(const Graph& g) {
    const auto H = hitting_times(g);
    const int n = g.vertex_count();
    const Rational two_m(2L * g.edge_count());
    std::vector<std::vector<Rational>> R(n + 1, std::vector<Rational>(n + 1));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            R[u][v] = (H[u][v] + H[v][u]) / two_m;
            R[v][u] = R[u][v];
        }
    return R;
}

namespace {

// One entry of the generalized distance vector, kept exact.
struct DistanceTuple {
    std::vector<int> spd;            // hop counts, in spec order
    std::vector<Rational> rational;  // HTD/RD values, in spec order

    bool operator<(const DistanceTuple& o) const {
        if (spd != o.spd) return spd < o.spd;
        for (size_t i = 0; i < rational.size(); ++i) {
            if (rational[i] < o.rational[i]) return true;
            if (o.rational[i] < rational[i]) return false;
        }
        return false;
    }
    bool operator==(const DistanceTuple& o) const {
        return spd == o.spd && rational == o.rational;
    }
};

struct TokenIndex {
    std::map<DistanceTuple, int64_t> ids;
    std::vector<DistanceTuple> tuples;
};

// Node-level refinement keyed on exact distance vectors. The token index is
// shared across the graphs of one run; certificate bytes expand tokens back
// into exact values, so serialized output never references run-local ids.
class GdwlSource final : public SignatureSource {
public:
    GdwlSource(const Graph& g, std::vector<DistanceKind> kinds)
        : graph_(g), kinds_(std::move(kinds)), n_(g.vertex_count()) {
        if (!is_connected(g))
            throw std::invalid_argument("refinement requires a connected graph");
        const bool needs_spd =
            std::find(kinds_.begin(), kinds_.end(), DistanceKind::Spd) != kinds_.end();
        const bool needs_h =
            std::find(kinds_.begin(), kinds_.end(), DistanceKind::Htd) != kinds_.end();
        const bool needs_r =
            std::find(kinds_.begin(), kinds_.end(), DistanceKind::Rd) != kinds_.end();
        DistanceMatrix spd;
        std::vector<std::vector<Rational>> htd, rd;
        if (needs_spd) spd = bfs_distances(g);
        if (needs_h || needs_r) htd = hitting_times(g);
        if (needs_r) rd = resistance_distances(g);

        tuples_.resize(static_cast<size_t>(n_) * n_);
        for (int from = 1; from <= n_; ++from)
            for (int to = 1; to <= n_; ++to) {
                DistanceTuple t;
                for (DistanceKind k : kinds_) {
                    switch (k) {
                        case DistanceKind::Spd: t.spd.push_back(spd[from][to]); break;
                        case DistanceKind::Htd: t.rational.push_back(htd[from][to]); break;
                        case DistanceKind::Rd: t.rational.push_back(rd[from][to]); break;
                    }
                }
                tuples_[static_cast<size_t>(from - 1) * n_ + (to - 1)] = std::move(t);
            }
    }

    // Token ids must be assigned jointly and in canonical tuple order so
    // that certificates serialize entries in a run-independent order.
    void adopt_index(std::shared_ptr<const TokenIndex> index) {
        index_ = std::move(index);
    }
    const std::vector<DistanceTuple>& tuples() const { return tuples_; }

    int vertex_count() const override { return n_; }
    size_t cell_count() const override { return static_cast<size_t>(n_); }

    Signature initial_token(size_t) const override { return {chunk::kLiteral, 0}; }

    void build(size_t cell, const std::vector<int>& colors, Signature& out) const override {
        const int to = static_cast<int>(cell) + 1;
        std::vector<std::pair<int64_t, int64_t>> entries;
        entries.reserve(n_);
        for (int from = 1; from <= n_; ++from) {
            const auto& tuple = tuples_[static_cast<size_t>(from - 1) * n_ + (to - 1)];
            entries.emplace_back(index_->ids.at(tuple), colors[from - 1]);
        }
        std::sort(entries.begin(), entries.end());
        out.push_back(chunk::kExtMultiset);
        out.push_back(n_);
        for (auto [token, color] : entries) {
            out.push_back(token);
            out.push_back(color);
        }
    }

    void expand_external(int64_t token, std::vector<uint8_t>& out) const override {
        const DistanceTuple& t = index_->tuples.at(static_cast<size_t>(token));
        size_t spd_i = 0, rat_i = 0;
        for (DistanceKind k : kinds_) {
            out.push_back(static_cast<uint8_t>(k));
            if (k == DistanceKind::Spd) {
                const int64_t d = t.spd[spd_i++];
                const uint64_t zz =
                    (static_cast<uint64_t>(d) << 1) ^ static_cast<uint64_t>(d >> 63);
                for (uint64_t v = zz;; v >>= 7) {
                    if (v >= 0x80) {
                        out.push_back(static_cast<uint8_t>(v) | 0x80);
                    } else {
                        out.push_back(static_cast<uint8_t>(v));
                        break;
                    }
                }
            } else {
                t.rational[rat_i++].encode(out);
            }
        }
    }

private:
    Graph graph_;  // owned copy
    std::vector<DistanceKind> kinds_;
    int n_;
    std::vector<DistanceTuple> tuples_;  // (from,to) -> distance tuple
    std::shared_ptr<const TokenIndex> index_;
};

}  // namespace

std::vector<std::unique_ptr<SignatureSource>> make_gdwl_sources(
    const std::vector<const Graph*>& graphs, const std::vector<DistanceKind>& kinds) {
    std::vector<std::unique_ptr<SignatureSource>> result;
    std::vector<GdwlSource*> sources;
    for (const Graph* g : graphs) {
        auto src = std::make_unique<GdwlSource>(*g, kinds);
        sources.push_back(src.get());
        result.push_back(std::move(src));
    }
    auto index = std::make_shared<TokenIndex>();
    std::vector<DistanceTuple> all;
    for (GdwlSource* src : sources)
        all.insert(all.end(), src->tuples().begin(), src->tuples().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    index->tuples = all;
    for (size_t i = 0; i < all.size(); ++i)
        index->ids.emplace(all[i], static_cast<int64_t>(i));
    for (GdwlSource* src : sources) src->adopt_index(index);
    return result;
}

}  // namespace swl
