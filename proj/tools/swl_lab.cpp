// Batch front end: run refinement algorithms on graph pairs, verify the
// catalog matrix, build counterexample graphs, dump exact distances, and
// solve pebbling games. All randomness flows through explicit --seed flags
// and emission is sorted, so identical invocations print identical bytes
// (timings are opt-in via --timings).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "swl/algorithm.hpp"
#include "swl/catalog.hpp"
#include "swl/furer.hpp"
#include "swl/pebble.hpp"

using json = nlohmann::json;
using namespace swl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kSchemaVersion = 1;

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

AlgorithmSpec resolve_algorithm(const std::string& alg, const std::string& agg,
                                const std::string& pool, const std::string& policy) {
    if (!agg.empty()) {
        return AlgorithmSpec::swl(Policy::parse(policy.empty() ? "nm" : policy),
                                  parse_scheme(agg),
                                  pool == "sv" ? Pooling::SV : Pooling::VS);
    }
    return AlgorithmSpec::preset(alg);
}

json verdict_report(const AlgorithmSpec& spec, const std::string& a,
                    const std::string& b, const Verdict& verdict, bool timings,
                    double wall) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "compare";
    report["algorithm"] = spec.name();
    report["inputs"] = {a, b};
    report["distinguished"] = verdict.distinguished;
    report["rounds"] = verdict.rounds;
    json trajectory = json::array();
    for (const auto& [cg, ch] : verdict.class_counts) trajectory.push_back({cg, ch});
    report["class_counts"] = std::move(trajectory);
    if (timings) report["wall_seconds"] = wall;
    return report;
}

void emit(const json& report, bool as_tsv, const std::string& tsv) {
    if (as_tsv)
        std::cout << tsv;
    else
        std::cout << report.dump(2) << "\n";
}

struct ArrowCheck {
    const char* weak;
    const char* strong;
};

// Expressivity inclusions verified by the matrix sweep: weak distinguishes
// implies strong distinguishes.
constexpr ArrowCheck kArrows[] = {
    {"swl-vs", "swl-sv"},   {"swl-vs", "pswl-vs"}, {"swl-sv", "pswl-sv"},
    {"pswl-vs", "pswl-sv"}, {"pswl-sv", "gswl"},   {"gswl", "sswl"},
    {"pswl-vs", "lfwl2"},   {"sswl", "slfwl2"},    {"lfwl2", "slfwl2"},
    {"slfwl2", "fwl2"},
};

int cmd_compare(const std::string& alg, const std::string& agg, const std::string& pool,
                const std::string& policy, const std::string& file_a,
                const std::string& file_b, bool as_tsv, bool timings, int jobs) {
    const AlgorithmSpec spec = resolve_algorithm(alg, agg, pool, policy);
    const Graph a = read_graph(file_a);
    const Graph b = read_graph(file_b);
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict verdict = distinguish(a, b, spec, jobs);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string tsv = "algorithm\tdistinguished\trounds\n" + spec.name() + "\t" +
                      (verdict.distinguished ? "true" : "false") + "\t" +
                      std::to_string(verdict.rounds) + "\n";
    emit(verdict_report(spec, file_a, file_b, verdict, timings, wall), as_tsv, tsv);
    return kExitOk;
}

int cmd_matrix(const std::string& catalog_path, int random_pairs, uint64_t seed,
               bool as_tsv, bool timings, int jobs) {
    const auto entries = load_catalog_file(catalog_path);
    const auto results = verify_catalog(entries, jobs);

    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "matrix";
    json rows = json::array();
    std::string tsv = "entry\tlemma\talgorithm\texpected\tactual\tpass\n";
    bool all_pass = true;
    for (const auto& r : results) {
        json row;
        row["entry"] = r.entry;
        row["lemma"] = r.lemma;
        row["algorithm"] = r.algorithm;
        row["expected"] = r.expected;
        row["actual"] = r.actual;
        row["pass"] = r.pass;
        row["rounds"] = r.rounds;
        if (timings) row["wall_seconds"] = r.wall_seconds;
        rows.push_back(std::move(row));
        all_pass = all_pass && r.pass;
        tsv += r.entry + "\t" + r.lemma + "\t" + r.algorithm + "\t" +
               (r.expected ? "true" : "false") + "\t" + (r.actual ? "true" : "false") +
               "\t" + (r.pass ? "PASS" : "FAIL") + "\n";
    }
    report["results"] = std::move(rows);

    // Optional random sweep of every inclusion arrow.
    if (random_pairs > 0) {
        SplitMix64 rng(seed);
        json sweep = json::array();
        int violations = 0;
        for (int i = 0; i < random_pairs; ++i) {
            const int n = 4 + static_cast<int>(rng.next_below(7));
            const Graph g = random_connected_graph(n, 0.45, rng.next());
            const Graph h = random_connected_graph(n, 0.45, rng.next());
            std::map<std::string, bool> outcome;
            for (const auto& arrow : kArrows) {
                for (const char* name : {arrow.weak, arrow.strong})
                    if (!outcome.count(name))
                        outcome[name] =
                            distinguish(g, h, AlgorithmSpec::preset(name), jobs)
                                .distinguished;
                if (outcome[arrow.weak] && !outcome[arrow.strong]) {
                    ++violations;
                    sweep.push_back(
                        {{"pair", i}, {"weak", arrow.weak}, {"strong", arrow.strong}});
                }
            }
        }
        report["arrow_violations"] = std::move(sweep);
        all_pass = all_pass && violations == 0;
        tsv += "arrow_violations\t" + std::to_string(violations) + "\n";
    }
    report["all_pass"] = all_pass;
    tsv += std::string("all_pass\t") + (all_pass ? "true" : "false") + "\n";
    emit(report, as_tsv, tsv);
    return kExitOk;
}

int cmd_furer(const std::string& base_path, int twist_count, bool augmented,
              bool as_pair, const std::string& out_g, const std::string& out_h) {
    const Graph base = read_graph(base_path);
    if (as_pair) {
        const auto [g, h] = make_pair(base);
        std::ofstream og(out_g), oh(out_h);
        if (!og || !oh) throw std::runtime_error("cannot open output files");
        og << serialize_edge_list(g);
        oh << serialize_edge_list(h);
        std::cout << "wrote " << out_g << " (" << g.vertex_count() << " vertices) and "
                  << out_h << " (" << h.vertex_count() << " vertices)\n";
        return kExitOk;
    }
    FurerGraph fg(base);
    if (twist_count > base.edge_count())
        throw std::runtime_error("more twists than base edges");
    const std::vector<BaseEdge> twists(base.edges().begin(),
                                       base.edges().begin() + twist_count);
    fg = fg.twisted(twists);
    const Graph result = augmented ? augment(fg) : fg.graph();
    std::cout << serialize_edge_list(result);
    return kExitOk;
}

int cmd_search(const std::string& weak, const std::string& strong, int max_n,
               int budget, uint64_t seed, bool as_tsv, int jobs) {
    const auto found =
        search_separating_base(AlgorithmSpec::preset(weak),
                               AlgorithmSpec::preset(strong), max_n, budget, seed, jobs);
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "search";
    report["weak"] = weak;
    report["strong"] = strong;
    report["found"] = found.has_value();
    std::string tsv;
    if (found) {
        json edges = json::array();
        for (auto [u, v] : found->edges()) edges.push_back({u, v});
        report["base_edges"] = std::move(edges);
        tsv = serialize_edge_list(*found);
    } else {
        tsv = "none\n";
    }
    emit(report, as_tsv, tsv);
    return kExitOk;
}

int cmd_distances(const std::string& kind, const std::string& path) {
    const Graph g = read_graph(path);
    const int n = g.vertex_count();
    std::cout << "u\tv\t" << kind << "\n";
    if (kind == "spd") {
        const auto d = bfs_distances(g);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                std::cout << u << "\t" << v << "\t" << d[u][v] << "/1\n";
        return kExitOk;
    }
    if (kind != "htd" && kind != "rd")
        throw std::runtime_error("unknown distance kind: " + kind);
    const auto values = kind == "htd" ? hitting_times(g) : resistance_distances(g);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            std::cout << u << "\t" << v << "\t" << values[u][v].str() << "\n";
    return kExitOk;
}

int cmd_pebble_solve(const std::string& alg, const std::string& file_a,
                     const std::string& file_b, int cap, bool as_tsv) {
    const auto game = GameSpec::from_algorithm(AlgorithmSpec::preset(alg));
    const auto result = solve_game(read_graph(file_a), read_graph(file_b), game, cap);
    const char* winner = result.winner == Winner::Spoiler ? "spoiler" : "duplicator";
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "pebble-solve";
    report["algorithm"] = alg;
    report["winner"] = winner;
    report["fixpoint_passes"] = result.fixpoint_passes;
    emit(report, as_tsv, std::string("winner\t") + winner + "\n");
    return kExitOk;
}

int cmd_pebble_verify(int max_n, int extra_pairs, uint64_t seed, bool as_tsv) {
    std::vector<std::pair<Graph, Graph>> corpus;
    SplitMix64 rng(seed);
    for (int i = 0; i < extra_pairs; ++i) {
        const Graph g = random_connected_graph(max_n, 0.5, rng.next());
        const Graph h = random_connected_graph(max_n, 0.5, rng.next());
        corpus.emplace_back(g, h);
    }
    const std::vector<AlgorithmSpec> specs = {
        AlgorithmSpec::preset("swl-vs"), AlgorithmSpec::preset("swl-sv"),
        AlgorithmSpec::preset("sswl"),   AlgorithmSpec::preset("lfwl2"),
        AlgorithmSpec::preset("slfwl2"), AlgorithmSpec::preset("fwl2"),
    };
    const auto mismatches = check_equivalence(corpus, specs, max_n);
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "pebble-verify";
    report["pairs"] = corpus.size();
    report["mismatches"] = json::array();
    for (const auto& mm : mismatches)
        report["mismatches"].push_back(
            {{"pair", mm.pair_index},
             {"algorithm", mm.algorithm},
             {"game_spoiler_wins", mm.game_spoiler_wins},
             {"refinement_distinguishes", mm.refinement_distinguishes}});
    report["all_pass"] = mismatches.empty();
    emit(report, as_tsv,
         "pairs\t" + std::to_string(corpus.size()) + "\nmismatches\t" +
             std::to_string(mismatches.size()) + "\n");
    return mismatches.empty() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Color-refinement test laboratory for pair-refinement, localized "
                 "folklore, and distance-based WL algorithms"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_tsv = false, timings = false;
    int jobs = 1;
    app.add_flag("--tsv", as_tsv, "emit TSV instead of JSON");
    app.add_flag("--timings", timings, "include wall times (breaks byte determinism)");
    app.add_option("--jobs", jobs, "worker threads for job-level parallelism");

    auto* compare = app.add_subcommand("compare", "run one algorithm on a graph pair");
    std::string alg = "sswl", agg, pool = "vs", policy = "nm";
    std::string file_a, file_b;
    compare->add_option("--alg", alg, "algorithm preset name");
    compare->add_option("--agg", agg, "aggregation DSL, e.g. lu,lv (overrides --alg)");
    compare->add_option("--pool", pool, "vs or sv (with --agg)");
    compare->add_option("--policy", policy, "graph generation policy (with --agg)");
    compare->add_option("a", file_a, "first edge-list file")->required();
    compare->add_option("b", file_b, "second edge-list file")->required();

    auto* matrix = app.add_subcommand("matrix", "verify catalog claims");
    std::string catalog_path;
    int also_random = 0;
    uint64_t seed = 0;
    matrix->add_option("--catalog", catalog_path, "catalog JSON file")->required();
    matrix->add_option("--also-random", also_random,
                       "additionally sweep inclusion arrows over random pairs");
    matrix->add_option("--seed", seed, "seed for the random sweep");

    auto* furer = app.add_subcommand("furer", "build counterexample graphs");
    std::string base_path, out_g = "pair_g.el", out_h = "pair_h.el";
    int twist_count = 0;
    bool augmented = false, as_pair = false;
    furer->add_option("--base", base_path, "base graph edge-list file")->required();
    furer->add_option("--twist", twist_count, "twist the first k base edges");
    furer->add_flag("--augment", augmented, "attach identifying chains");
    furer->add_flag("--pair", as_pair, "write the augmented pair to --out-g/--out-h");
    furer->add_option("--out-g", out_g, "output file for the untwisted side");
    furer->add_option("--out-h", out_h, "output file for the twisted side");

    auto* search = app.add_subcommand("search", "find a separating base graph");
    std::string weak, strong;
    int max_n = 8, budget = 10000;
    uint64_t search_seed = 0;
    search->add_option("--weak", weak, "algorithm that must not distinguish")->required();
    search->add_option("--strong", strong, "algorithm that must distinguish")->required();
    search->add_option("--max-n", max_n, "largest base size to sample");
    search->add_option("--budget", budget, "sampling attempts");
    search->add_option("--seed", search_seed, "sampling seed");

    auto* distances = app.add_subcommand("distances", "dump exact distance matrices");
    std::string kind = "spd", dist_path;
    distances->add_option("--kind", kind, "spd, htd, or rd");
    distances->add_option("graph", dist_path, "edge-list file")->required();

    auto* pebble = app.add_subcommand("pebble", "pebbling games");
    auto* solve = pebble->add_subcommand("solve", "solve one game");
    std::string game_alg = "sswl", game_a, game_b;
    int cap = 8;
    solve->add_option("--alg", game_alg, "algorithm whose game rules apply");
    solve->add_option("--cap", cap, "solver size cap");
    solve->add_option("a", game_a, "first edge-list file")->required();
    solve->add_option("b", game_b, "second edge-list file")->required();
    auto* verify = pebble->add_subcommand("verify", "game vs refinement agreement");
    int verify_n = 5, verify_pairs = 20;
    uint64_t verify_seed = 1;
    verify->add_option("--max-n", verify_n, "graph size");
    verify->add_option("--pairs", verify_pairs, "number of random pairs");
    verify->add_option("--seed", verify_seed, "pair sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compare)
            return cmd_compare(alg, agg, pool, policy, file_a, file_b, as_tsv, timings,
                               jobs);
        if (*matrix)
            return cmd_matrix(catalog_path, also_random, seed, as_tsv, timings, jobs);
        if (*furer)
            return cmd_furer(base_path, twist_count, augmented, as_pair, out_g, out_h);
        if (*search)
            return cmd_search(weak, strong, max_n, budget, search_seed, as_tsv, jobs);
        if (*distances) return cmd_distances(kind, dist_path);
        if (*pebble) {
            if (*solve) return cmd_pebble_solve(game_alg, game_a, game_b, cap, as_tsv);
            if (*verify)
                return cmd_pebble_verify(verify_n, verify_pairs, verify_seed, as_tsv);
            std::cerr << "pebble needs a subcommand (solve or verify)\n";
            return kExitUsage;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
