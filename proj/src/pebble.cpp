#include "swl/pebble.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace swl {

GameSpec GameSpec::from_algorithm(const AlgorithmSpec& spec) {
    GameSpec game;
    switch (spec.family) {
        case AlgorithmSpec::Family::Swl:
            if (spec.scheme & kAggExtDss)
                throw std::invalid_argument("no game rule for the double aggregation");
            if (!(spec.scheme & (kAggLu | kAggLv)))
                throw std::invalid_argument("game requires a local aggregation");
            if (spec.policy.kind != PolicyKind::NodeMarking)
                throw std::invalid_argument("games are defined for the node marking policy");
            game.kind = Kind::Swl;
            game.scheme = spec.scheme;
            game.pooling = spec.pooling;
            return game;
        case AlgorithmSpec::Family::Fwl2:
            game.kind = Kind::Fwl;
            game.loc = spec.localization;
            return game;
        default:
            throw std::invalid_argument("no pebbling game for this algorithm family");
    }
}

std::string GameSpec::name() const {
    if (kind == Kind::Fwl) {
        switch (loc) {
            case Localization::Full: return "game[fwl2]";
            case Localization::Local: return "game[lfwl2]";
            case Localization::SymLocal: return "game[slfwl2]";
        }
    }
    return "game[" + scheme_name(scheme) + (pooling == Pooling::VS ? ";vs]" : ";sv]");
}

namespace {

// Kuhn's augmenting-path matching; returns true iff a perfect matching
// saturating both sides exists. `adjacent(i, j)` indexes left x right.
bool has_perfect_matching(int left, int right,
                          const std::vector<uint8_t>& adjacent) {
    if (left != right) return false;
    if (left == 0) return true;
    std::vector<int> match_right(right, -1);
    std::vector<uint8_t> visited(right, 0);
    std::function<bool(int)> try_kuhn = [&](int i) {
        for (int j = 0; j < right; ++j) {
            if (!adjacent[static_cast<size_t>(i) * right + j] || visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] < 0 || try_kuhn(match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < left; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_kuhn(i)) return false;
    }
    return true;
}

struct Solver {
    const Graph& g;
    const Graph& h;
    const GameSpec& spec;
    int ng, nh;
    std::vector<uint8_t> wins;  // Duplicator-winning main positions

    size_t index(int ug, int uh, int vg, int vh) const {
        return ((static_cast<size_t>(ug - 1) * nh + (uh - 1)) * ng + (vg - 1)) * nh +
               (vh - 1);
    }

    bool iso_types_match(int ug, int uh, int vg, int vh) const {
        if ((ug == vg) != (uh == vh)) return false;
        return g.has_edge(ug, vg) == h.has_edge(uh, vh);
    }

    // Duplicator survives one vertex-selection round iff the selection sets
    // have equal size and the safe-pair relation admits a perfect matching:
    // a matching is a committed answer scheme for every Spoiler subset, and
    // a Hall violator is a winning Spoiler subset.
    bool survives_selection(const std::vector<int>& sel_g, const std::vector<int>& sel_h,
                            const std::function<bool(int, int)>& safe) const {
        if (sel_g.size() != sel_h.size()) return false;
        const int k = static_cast<int>(sel_g.size());
        std::vector<uint8_t> adjacent(static_cast<size_t>(k) * k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                adjacent[static_cast<size_t>(i) * k + j] = safe(sel_g[i], sel_h[j]);
        return has_perfect_matching(k, k, adjacent);
    }

    std::vector<int> all_g, all_h;

    bool survives_position(int ug, int uh, int vg, int vh) const {
        auto wins_at = [&](int a, int b, int c, int d) {
            return wins[index(a, b, c, d)] != 0;
        };
        if (spec.kind == GameSpec::Kind::Fwl) {
            // One selection, then Spoiler picks which pebble moves; a pair
            // is safe only if both options stay Duplicator-winning.
            std::vector<int> sel_g, sel_h;
            switch (spec.loc) {
                case Localization::Full:
                    sel_g = all_g;
                    sel_h = all_h;
                    break;
                case Localization::Local:
                    sel_g = g.neighbors(vg);
                    sel_g.push_back(vg);
                    sel_h = h.neighbors(vh);
                    sel_h.push_back(vh);
                    break;
                case Localization::SymLocal:
                    sel_g = g.neighbors(ug);
                    sel_g.insert(sel_g.end(), g.neighbors(vg).begin(), g.neighbors(vg).end());
                    sel_g.push_back(ug);
                    sel_g.push_back(vg);
                    std::sort(sel_g.begin(), sel_g.end());
                    sel_g.erase(std::unique(sel_g.begin(), sel_g.end()), sel_g.end());
                    sel_h = h.neighbors(uh);
                    sel_h.insert(sel_h.end(), h.neighbors(vh).begin(), h.neighbors(vh).end());
                    sel_h.push_back(uh);
                    sel_h.push_back(vh);
                    std::sort(sel_h.begin(), sel_h.end());
                    sel_h.erase(std::unique(sel_h.begin(), sel_h.end()), sel_h.end());
                    break;
            }
            return survives_selection(sel_g, sel_h, [&](int a, int b) {
                return wins_at(a, b, vg, vh) && wins_at(ug, uh, a, b);
            });
        }

        const AggScheme scheme = spec.scheme;
        if (scheme & kAggPvu) {
            if (!wins_at(vg, vh, ug, uh)) return false;
        }
        if (scheme & kAggPuu) {
            if (!wins_at(ug, uh, ug, uh)) return false;
        }
        if (scheme & kAggPvv) {
            if (!wins_at(vg, vh, vg, vh)) return false;
        }
        if (scheme & kAggGu) {  // pebble v moves anywhere
            if (!survives_selection(all_g, all_h, [&](int a, int b) {
                    return wins_at(ug, uh, a, b);
                }))
                return false;
        }
        if (scheme & kAggGv) {  // pebble u moves anywhere
            if (!survives_selection(all_g, all_h, [&](int a, int b) {
                    return wins_at(a, b, vg, vh);
                }))
                return false;
        }
        if (scheme & kAggLu) {  // pebble v moves to a neighbor of v
            if (!survives_selection(g.neighbors(vg), h.neighbors(vh), [&](int a, int b) {
                    return wins_at(ug, uh, a, b);
                }))
                return false;
        }
        if (scheme & kAggLv) {  // pebble u moves to a neighbor of u
            if (!survives_selection(g.neighbors(ug), h.neighbors(uh), [&](int a, int b) {
                    return wins_at(a, b, vg, vh);
                }))
                return false;
        }
        return true;
    }
};

}  // namespace

GameResult solve_game(const Graph& g, const Graph& h, const GameSpec& spec,
                      int size_cap) {
    if (g.vertex_count() > size_cap || h.vertex_count() > size_cap)
        throw std::runtime_error("graphs exceed the game solver size cap");
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument("pebbling games require connected graphs");

    Solver solver{g, h, spec, g.vertex_count(), h.vertex_count(), {}};
    for (int v = 1; v <= solver.ng; ++v) solver.all_g.push_back(v);
    for (int v = 1; v <= solver.nh; ++v) solver.all_h.push_back(v);

    const size_t total =
        static_cast<size_t>(solver.ng) * solver.nh * solver.ng * solver.nh;
    solver.wins.assign(total, 0);
    for (int ug = 1; ug <= solver.ng; ++ug)
        for (int uh = 1; uh <= solver.nh; ++uh)
            for (int vg = 1; vg <= solver.ng; ++vg)
                for (int vh = 1; vh <= solver.nh; ++vh)
                    solver.wins[solver.index(ug, uh, vg, vh)] =
                        solver.iso_types_match(ug, uh, vg, vh);

    // Iterated removal of positions that fail closure under the current map;
    // the arena is finite so the greatest fixpoint is reached.
    GameResult result;
    for (bool changed = true; changed;) {
        changed = false;
        ++result.fixpoint_passes;
        for (int ug = 1; ug <= solver.ng; ++ug)
            for (int uh = 1; uh <= solver.nh; ++uh)
                for (int vg = 1; vg <= solver.ng; ++vg)
                    for (int vh = 1; vh <= solver.nh; ++vh) {
                        auto& cell = solver.wins[solver.index(ug, uh, vg, vh)];
                        if (!cell) continue;
                        if (!solver.survives_position(ug, uh, vg, vh)) {
                            cell = 0;
                            changed = true;
                        }
                    }
    }

    // Initialization phases on top of the main-phase map.
    bool duplicator_wins_game;
    if (spec.kind == GameSpec::Kind::Fwl) {
        const int kg = solver.ng * solver.ng, kh = solver.nh * solver.nh;
        std::vector<uint8_t> adjacent;
        if (kg == kh) {
            adjacent.assign(static_cast<size_t>(kg) * kh, 0);
            for (int ug = 1; ug <= solver.ng; ++ug)
                for (int vg = 1; vg <= solver.ng; ++vg)
                    for (int uh = 1; uh <= solver.nh; ++uh)
                        for (int vh = 1; vh <= solver.nh; ++vh) {
                            const int i = (ug - 1) * solver.ng + (vg - 1);
                            const int j = (uh - 1) * solver.nh + (vh - 1);
                            adjacent[static_cast<size_t>(i) * kh + j] =
                                solver.wins[solver.index(ug, uh, vg, vh)];
                        }
        }
        duplicator_wins_game = kg == kh && has_perfect_matching(kg, kh, adjacent);
    } else {
        // VS places pebble u first; SV places pebble v first. The second
        // placement is evaluated against the main map, the first against
        // the set of survivable second placements.
        const bool u_first = spec.pooling == Pooling::VS;
        std::vector<uint8_t> first_ok(static_cast<size_t>(solver.ng) * solver.nh, 0);
        for (int fg = 1; fg <= solver.ng; ++fg)
            for (int fh = 1; fh <= solver.nh; ++fh) {
                first_ok[static_cast<size_t>(fg - 1) * solver.nh + (fh - 1)] =
                    solver.survives_selection(
                        solver.all_g, solver.all_h, [&](int sg, int sh) {
                            return u_first
                                       ? solver.wins[solver.index(fg, fh, sg, sh)] != 0
                                       : solver.wins[solver.index(sg, sh, fg, fh)] != 0;
                        });
            }
        duplicator_wins_game =
            solver.survives_selection(solver.all_g, solver.all_h, [&](int a, int b) {
                return first_ok[static_cast<size_t>(a - 1) * solver.nh + (b - 1)] != 0;
            });
    }

    result.winner = duplicator_wins_game ? Winner::Duplicator : Winner::Spoiler;
    result.duplicator_wins = std::move(solver.wins);
    result.n_g = solver.ng;
    result.n_h = solver.nh;
    return result;
}

std::vector<EquivalenceMismatch> check_equivalence(
    const std::vector<std::pair<Graph, Graph>>& corpus,
    const std::vector<AlgorithmSpec>& specs, int size_cap) {
    std::vector<EquivalenceMismatch> mismatches;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& [g, h] = corpus[i];
        for (const auto& spec : specs) {
            const GameSpec game = GameSpec::from_algorithm(spec);
            const bool spoiler = solve_game(g, h, game, size_cap).winner == Winner::Spoiler;
            const bool separated = distinguish(g, h, spec).distinguished;
            if (spoiler != separated)
                mismatches.push_back({i, spec.name(), spoiler, separated});
        }
    }
    return mismatches;
}

}  // namespace swl
