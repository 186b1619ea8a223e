#include <algorithm>
#include <stdexcept>

#include "swl/algorithm.hpp"

namespace swl {

namespace {

// Isomorphism-type initial color of an ordered pair.
enum IsoType : int64_t { kDiag = 0, kEdge = 1, kNonEdge = 2 };

int64_t iso_type(const Graph& g, int u, int v) {
    if (u == v) return kDiag;
    return g.has_edge(u, v) ? kEdge : kNonEdge;
}

class FwlSource final : public SignatureSource {
public:
    FwlSource(const Graph& g, Localization loc)
        : graph_(g), loc_(loc), n_(g.vertex_count()) {
        if (!is_connected(g))
            throw std::invalid_argument("refinement requires a connected graph");
        if (loc_ == Localization::SymLocal) {
            // Precomputed closed-neighborhood unions keep the walk loop tight.
            unions_.assign(cell_count(), {});
            for (int u = 1; u <= n_; ++u)
                for (int v = 1; v <= n_; ++v) {
                    auto& set = unions_[static_cast<size_t>(u - 1) * n_ + (v - 1)];
                    set.insert(set.end(), g.neighbors(u).begin(), g.neighbors(u).end());
                    set.push_back(u);
                    set.insert(set.end(), g.neighbors(v).begin(), g.neighbors(v).end());
                    set.push_back(v);
                    std::sort(set.begin(), set.end());
                    set.erase(std::unique(set.begin(), set.end()), set.end());
                }
        }
    }

    int vertex_count() const override { return n_; }
    size_t cell_count() const override { return static_cast<size_t>(n_) * n_; }

    Signature initial_token(size_t cell) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        return {chunk::kLiteral, iso_type(graph_, u, v)};
    }

    void build(size_t cell, const std::vector<int>& colors, Signature& out) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        auto at = [&](int a, int b) {
            return static_cast<int64_t>(colors[static_cast<size_t>(a - 1) * n_ + (b - 1)]);
        };
        out.push_back(chunk::kColor);
        out.push_back(at(u, v));
        // The walk multiset stores ordered (left, right) color pairs; the
        // order inside each pair is load-bearing.
        std::vector<std::pair<int64_t, int64_t>> pairs;
        auto emit = [&](int w) { pairs.emplace_back(at(u, w), at(w, v)); };
        switch (loc_) {
            case Localization::Full:
                pairs.reserve(n_);
                for (int w = 1; w <= n_; ++w) emit(w);
                break;
            case Localization::Local:
                for (int w : graph_.neighbors(v)) emit(w);
                emit(v);  // N^1 includes the vertex itself
                break;
            case Localization::SymLocal:
                for (int w : unions_[cell]) emit(w);
                break;
        }
        std::sort(pairs.begin(), pairs.end());
        out.push_back(chunk::kPairMultiset);
        out.push_back(static_cast<int64_t>(pairs.size()));
        for (auto [a, b] : pairs) {
            out.push_back(a);
            out.push_back(b);
        }
    }

private:
    Graph graph_;  // owned copy
    Localization loc_;
    int n_;
    std::vector<std::vector<int>> unions_;
};

class Delta2Source final : public SignatureSource {
public:
    explicit Delta2Source(const Graph& g) : graph_(g), n_(g.vertex_count()) {
        if (!is_connected(g))
            throw std::invalid_argument("refinement requires a connected graph");
    }

    int vertex_count() const override { return n_; }
    size_t cell_count() const override { return static_cast<size_t>(n_) * n_; }

    Signature initial_token(size_t cell) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        return {chunk::kLiteral, iso_type(graph_, u, v)};
    }

    void build(size_t cell, const std::vector<int>& colors, Signature& out) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        auto at = [&](int a, int b) {
            return static_cast<int64_t>(colors[static_cast<size_t>(a - 1) * n_ + (b - 1)]);
        };
        out.push_back(chunk::kColor);
        out.push_back(at(u, v));
        out.push_back(chunk::kMultiset);
        out.push_back(graph_.degree(v));
        for (int w : graph_.neighbors(v)) out.push_back(at(u, w));
        std::sort(out.end() - graph_.degree(v), out.end());
        out.push_back(chunk::kMultiset);
        out.push_back(graph_.degree(u));
        for (int w : graph_.neighbors(u)) out.push_back(at(w, v));
        std::sort(out.end() - graph_.degree(u), out.end());
    }

private:
    Graph graph_;  // owned copy
    int n_;
};

}  // namespace

std::unique_ptr<SignatureSource> make_fwl_source(const Graph& g, Localization loc) {
    return std::make_unique<FwlSource>(g, loc);
}

std::unique_ptr<SignatureSource> make_delta2_source(const Graph& g) {
    return std::make_unique<Delta2Source>(g);
}

}  // namespace swl
