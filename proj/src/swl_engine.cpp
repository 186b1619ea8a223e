#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "swl/algorithm.hpp"

namespace swl {

AggScheme parse_scheme(const std::string& dsl) {
    AggScheme scheme = 0;
    std::istringstream in(dsl);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        if (item == "puv") continue;  // implied
        if (item == "pvu") scheme |= kAggPvu;
        else if (item == "puu") scheme |= kAggPuu;
        else if (item == "pvv") scheme |= kAggPvv;
        else if (item == "gu") scheme |= kAggGu;
        else if (item == "gv") scheme |= kAggGv;
        else if (item == "lu") scheme |= kAggLu;
        else if (item == "lv") scheme |= kAggLv;
        else if (item == "dss") scheme |= kAggExtDss;
        else throw std::invalid_argument("unknown aggregation: " + item);
    }
    return scheme;
}

std::string scheme_name(AggScheme scheme) {
    std::string out = "puv";
    const std::pair<AggScheme, const char*> names[] = {
        {kAggPvu, "pvu"}, {kAggPuu, "puu"}, {kAggPvv, "pvv"}, {kAggGu, "gu"},
        {kAggGv, "gv"},   {kAggLu, "lu"},   {kAggLv, "lv"},   {kAggExtDss, "dss"},
    };
    for (auto [bit, name] : names)
        if (scheme & bit) out += std::string(",") + name;
    return out;
}

AlgorithmSpec AlgorithmSpec::swl(Policy policy, AggScheme scheme, Pooling pooling) {
    AlgorithmSpec spec;
    spec.family = Family::Swl;
    spec.policy = policy;
    spec.scheme = scheme;
    spec.pooling = pooling;
    return spec;
}

AlgorithmSpec AlgorithmSpec::fwl2(Localization loc) {
    AlgorithmSpec spec;
    spec.family = Family::Fwl2;
    spec.localization = loc;
    return spec;
}

AlgorithmSpec AlgorithmSpec::delta2lwl() {
    AlgorithmSpec spec;
    spec.family = Family::Delta2Lwl;
    return spec;
}

AlgorithmSpec AlgorithmSpec::gdwl(std::vector<DistanceKind> kinds) {
    if (kinds.empty()) throw std::invalid_argument("gdwl needs at least one distance kind");
    for (size_t i = 0; i < kinds.size(); ++i)
        for (size_t j = i + 1; j < kinds.size(); ++j)
            if (kinds[i] == kinds[j])
                throw std::invalid_argument("duplicate distance kind");
    AlgorithmSpec spec;
    spec.family = Family::Gdwl;
    spec.distances = std::move(kinds);
    return spec;
}

AlgorithmSpec AlgorithmSpec::preset(const std::string& name) {
    const Policy nm = Policy::node_marking();
    if (name == "swl-vs") return swl(nm, kAggLu, Pooling::VS);
    if (name == "swl-sv") return swl(nm, kAggLu, Pooling::SV);
    if (name == "pswl-vs") return swl(nm, kAggLu | kAggPvv, Pooling::VS);
    if (name == "pswl-sv") return swl(nm, kAggLu | kAggPvv, Pooling::SV);
    if (name == "gswl") return swl(nm, kAggLu | kAggGv, Pooling::VS);
    if (name == "sswl") return swl(nm, kAggLu | kAggLv, Pooling::VS);
    if (name == "dsswl") return swl(nm, kAggLu | kAggGv | kAggExtDss, Pooling::VS);
    if (name == "fwl2") return fwl2(Localization::Full);
    if (name == "lfwl2") return fwl2(Localization::Local);
    if (name == "slfwl2") return fwl2(Localization::SymLocal);
    if (name == "delta2lwl") return delta2lwl();
    if (name.rfind("gdwl:", 0) == 0) {
        std::vector<DistanceKind> kinds;
        std::istringstream in(name.substr(5));
        std::string item;
        while (std::getline(in, item, '+')) {
            if (item == "spd") kinds.push_back(DistanceKind::Spd);
            else if (item == "htd") kinds.push_back(DistanceKind::Htd);
            else if (item == "rd") kinds.push_back(DistanceKind::Rd);
            else throw std::invalid_argument("unknown distance kind: " + item);
        }
        return gdwl(std::move(kinds));
    }
    throw std::invalid_argument("unknown algorithm: " + name);
}

const std::vector<std::string>& AlgorithmSpec::preset_names() {
    static const std::vector<std::string> names = {
        "swl-vs", "swl-sv",  "pswl-vs",   "pswl-sv",  "gswl",
        "sswl",   "dsswl",   "fwl2",      "lfwl2",    "slfwl2",
        "delta2lwl", "gdwl:spd", "gdwl:htd", "gdwl:rd", "gdwl:spd+htd", "gdwl:spd+rd",
    };
    return names;
}

std::string AlgorithmSpec::name() const {
    switch (family) {
        case Family::Swl: {
            std::string out = "swl[" + policy.name() + ";" + scheme_name(scheme) + ";";
            out += pooling == Pooling::VS ? "vs]" : "sv]";
            return out;
        }
        case Family::Fwl2:
            switch (localization) {
                case Localization::Full: return "fwl2";
                case Localization::Local: return "lfwl2";
                case Localization::SymLocal: return "slfwl2";
            }
            return "fwl2";
        case Family::Delta2Lwl:
            return "delta2lwl";
        case Family::Gdwl: {
            std::string out = "gdwl:";
            bool first = true;
            for (DistanceKind k : distances) {
                if (!first) out += "+";
                first = false;
                out += k == DistanceKind::Spd ? "spd" : k == DistanceKind::Htd ? "htd" : "rd";
            }
            return out;
        }
    }
    return "?";
}

PoolKind AlgorithmSpec::pool_kind() const {
    if (family == Family::Swl)
        return pooling == Pooling::VS ? PoolKind::VertexSubgraph : PoolKind::SubgraphVertex;
    return PoolKind::Flat;
}

namespace {

class SwlSource final : public SignatureSource {
public:
    SwlSource(const Graph& g, Policy policy, AggScheme scheme)
        : graph_(g), bag_(graph_, policy), scheme_(scheme), n_(graph_.vertex_count()) {}

    int vertex_count() const override { return n_; }
    size_t cell_count() const override { return static_cast<size_t>(n_) * n_; }

    Signature initial_token(size_t cell) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        const InitialKey& key = bag_.initial_key(u, v);
        return {chunk::kLiteral, key.tag, chunk::kLiteral, key.value};
    }

    void build(size_t cell, const std::vector<int>& colors, Signature& out) const override {
        const int u = static_cast<int>(cell) / n_ + 1;
        const int v = static_cast<int>(cell) % n_ + 1;
        auto at = [&](int a, int b) {
            return static_cast<int64_t>(colors[static_cast<size_t>(a - 1) * n_ + (b - 1)]);
        };
        out.push_back(chunk::kColor);
        out.push_back(at(u, v));
        if (scheme_ & kAggPvu) {
            out.push_back(chunk::kColor);
            out.push_back(at(v, u));
        }
        if (scheme_ & kAggPuu) {
            out.push_back(chunk::kColor);
            out.push_back(at(u, u));
        }
        if (scheme_ & kAggPvv) {
            out.push_back(chunk::kColor);
            out.push_back(at(v, v));
        }
        if (scheme_ & kAggGu) {
            out.push_back(chunk::kMultiset);
            out.push_back(n_);
            for (int w = 1; w <= n_; ++w) out.push_back(at(u, w));
            std::sort(out.end() - n_, out.end());
        }
        if (scheme_ & kAggGv) {
            out.push_back(chunk::kMultiset);
            out.push_back(n_);
            for (int w = 1; w <= n_; ++w) out.push_back(at(w, v));
            std::sort(out.end() - n_, out.end());
        }
        if (scheme_ & kAggLu) {
            const auto& nbrs = bag_.subgraph_neighbors(u, v);
            out.push_back(chunk::kMultiset);
            out.push_back(static_cast<int64_t>(nbrs.size()));
            for (int w : nbrs) out.push_back(at(u, w));
            std::sort(out.end() - nbrs.size(), out.end());
        }
        if (scheme_ & kAggLv) {
            const auto& nbrs = bag_.subgraph_neighbors(v, u);
            out.push_back(chunk::kMultiset);
            out.push_back(static_cast<int64_t>(nbrs.size()));
            for (int w : nbrs) out.push_back(at(w, v));
            std::sort(out.end() - nbrs.size(), out.end());
        }
        if (scheme_ & kAggExtDss) {
            const auto& nbrs = graph_.neighbors(v);
            const size_t count = nbrs.size() * static_cast<size_t>(n_);
            out.push_back(chunk::kMultiset);
            out.push_back(static_cast<int64_t>(count));
            for (int w = 1; w <= n_; ++w)
                for (int wp : nbrs) out.push_back(at(w, wp));
            std::sort(out.end() - count, out.end());
        }
    }

    const SubgraphBag& bag() const { return bag_; }

private:
    Graph graph_;  // owned copy
    SubgraphBag bag_;
    AggScheme scheme_;
    int n_;
};

}  // namespace

std::unique_ptr<SignatureSource> make_swl_source(const Graph& g, Policy policy,
                                                 AggScheme scheme) {
    return std::make_unique<SwlSource>(g, policy, scheme);
}

Certificate EngineRun::certificate(size_t graph_index) const {
    return build_certificate(joint.histories.at(graph_index), *sources.at(graph_index),
                             pool);
}

bool EngineRun::pooled_colorings_equal() const {
    if (joint.histories.size() != 2)
        throw std::logic_error("pooled comparison needs a two-graph run");
    return pooled_equal(joint.histories[0], joint.histories[1], pool);
}

namespace {

std::unique_ptr<SignatureSource> make_source(const Graph& g, const AlgorithmSpec& spec) {
    switch (spec.family) {
        case AlgorithmSpec::Family::Swl:
            return make_swl_source(g, spec.policy, spec.scheme);
        case AlgorithmSpec::Family::Fwl2:
            return make_fwl_source(g, spec.localization);
        case AlgorithmSpec::Family::Delta2Lwl:
            return make_delta2_source(g);
        case AlgorithmSpec::Family::Gdwl:
            break;  // handled jointly below
    }
    throw std::logic_error("unhandled algorithm family");
}

EngineRun run_impl(std::vector<const Graph*> graphs, const AlgorithmSpec& spec,
                   int threads) {
    EngineRun run;
    run.pool = spec.pool_kind();
    if (spec.family == AlgorithmSpec::Family::Gdwl) {
        run.sources = make_gdwl_sources(graphs, spec.distances);
    } else {
        for (const Graph* g : graphs) run.sources.push_back(make_source(*g, spec));
    }
    std::vector<const SignatureSource*> views;
    for (const auto& src : run.sources) views.push_back(src.get());
    int cap = spec.iteration_cap;
    if (cap == 0 && spec.family == AlgorithmSpec::Family::Gdwl) {
        cap = 0;  // node partitions stabilize within n rounds
        for (const Graph* g : graphs) cap += g->vertex_count();
    }
    run.joint = joint_refine(views, cap, threads);
    return run;
}

}  // namespace

EngineRun run_pair(const Graph& g, const Graph& h, const AlgorithmSpec& spec,
                   int threads) {
    return run_impl({&g, &h}, spec, threads);
}

EngineRun run_single(const Graph& g, const AlgorithmSpec& spec, int threads) {
    return run_impl({&g}, spec, threads);
}

Verdict distinguish(const Graph& g, const Graph& h, const AlgorithmSpec& spec,
                    int threads) {
    const EngineRun run = run_pair(g, h, spec, threads);
    Verdict verdict;
    verdict.distinguished = !run.pooled_colorings_equal();
    verdict.rounds = run.joint.rounds;
    verdict.signature_entries = run.joint.signature_entries;
    for (size_t t = 0; t < run.joint.histories[0].class_counts.size(); ++t)
        verdict.class_counts.push_back({run.joint.histories[0].class_counts[t],
                                        run.joint.histories[1].class_counts[t]});
    return verdict;
}

Certificate certificate_of(const Graph& g, const AlgorithmSpec& spec, int threads) {
    return run_single(g, spec, threads).certificate(0);
}

}  // namespace swl
