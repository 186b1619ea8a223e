#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "swl/graph.hpp"
#include "swl/policy.hpp"
#include "swl/rational.hpp"
#include "swl/refine.hpp"

namespace swl {

// Atomic aggregations of a pair-refinement round. Puv (the cell's own old
// color) is always present and is not listed in schemes explicitly.
enum AggOp : unsigned {
    kAggPvu = 1u << 0,
    kAggPuu = 1u << 1,
    kAggPvv = 1u << 2,
    kAggGu = 1u << 3,
    kAggGv = 1u << 4,
    kAggLu = 1u << 5,
    kAggLv = 1u << 6,
    kAggExtDss = 1u << 7,  // {{chi(w,w') : w in V, w' in N(v)}}
};
using AggScheme = unsigned;

// Comma list over {puv,pvu,puu,pvv,gu,gv,lu,lv,dss}; "puv" is accepted and
// ignored since it is implied.
AggScheme parse_scheme(const std::string& dsl);
std::string scheme_name(AggScheme scheme);

enum class Pooling { VS, SV };

enum class Localization { Full, Local, SymLocal };

enum class DistanceKind { Spd, Htd, Rd };

struct AlgorithmSpec {
    enum class Family { Swl, Fwl2, Delta2Lwl, Gdwl };

    Family family = Family::Swl;
    Policy policy = Policy::node_marking();
    AggScheme scheme = kAggLu;
    Pooling pooling = Pooling::VS;
    Localization localization = Localization::Full;
    std::vector<DistanceKind> distances;
    int iteration_cap = 0;  // 0 = default (sum of squared vertex counts)

    static AlgorithmSpec swl(Policy policy, AggScheme scheme, Pooling pooling);
    static AlgorithmSpec fwl2(Localization loc);
    static AlgorithmSpec delta2lwl();
    static AlgorithmSpec gdwl(std::vector<DistanceKind> kinds);

    // Canonical names: swl-vs, swl-sv, pswl-vs, pswl-sv, gswl, sswl, dsswl,
    // fwl2, lfwl2, slfwl2, delta2lwl, gdwl:spd, gdwl:spd+htd, ...
    static AlgorithmSpec preset(const std::string& name);
    static const std::vector<std::string>& preset_names();

    std::string name() const;
    PoolKind pool_kind() const;
};

struct Verdict {
    bool distinguished = false;
    int rounds = 0;
    std::vector<std::array<int, 2>> class_counts;  // per round, per graph
    uint64_t signature_entries = 0;
};

// A completed refinement run over one or two graphs; keeps the signature
// sources alive so certificates can be built from the recorded histories.
struct EngineRun {
    std::vector<std::unique_ptr<SignatureSource>> sources;
    JointRun joint;
    PoolKind pool = PoolKind::VertexSubgraph;

    Certificate certificate(size_t graph_index) const;
    bool pooled_colorings_equal() const;  // pairs only
};

EngineRun run_pair(const Graph& g, const Graph& h, const AlgorithmSpec& spec,
                   int threads = 1);
EngineRun run_single(const Graph& g, const AlgorithmSpec& spec, int threads = 1);

Verdict distinguish(const Graph& g, const Graph& h, const AlgorithmSpec& spec,
                    int threads = 1);
Certificate certificate_of(const Graph& g, const AlgorithmSpec& spec, int threads = 1);

// Signature source factories, exposed for targeted tests.
std::unique_ptr<SignatureSource> make_swl_source(const Graph& g, Policy policy,
                                                 AggScheme scheme);
std::unique_ptr<SignatureSource> make_fwl_source(const Graph& g, Localization loc);
std::unique_ptr<SignatureSource> make_delta2_source(const Graph& g);
std::vector<std::unique_ptr<SignatureSource>> make_gdwl_sources(
    const std::vector<const Graph*>& graphs, const std::vector<DistanceKind>& kinds);

// Exact expected random-walk steps from u until first reaching v, solved per
// target by rational Gaussian elimination. H[v][v] = 0.
std::vector<std::vector<Rational>> hitting_times(const Graph& g);

// dis_R(u,v) = (H[u][v] + H[v][u]) / (2|E|); symmetric by construction.
std::vector<std::vector<Rational>> resistance_distances(const Graph& g);

}  // namespace swl
