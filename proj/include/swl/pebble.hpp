#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"

namespace swl {

// Rules of the two-pebble game matching one refinement algorithm. SWL games
// need at least one local aggregation in the scheme; the double aggregation
// of dsswl has no game rule and is rejected.
struct GameSpec {
    enum class Kind { Swl, Fwl };
    Kind kind = Kind::Swl;
    AggScheme scheme = kAggLu;           // Swl
    Pooling pooling = Pooling::VS;       // Swl
    Localization loc = Localization::Full;  // Fwl

    static GameSpec from_algorithm(const AlgorithmSpec& spec);
    std::string name() const;
};

enum class Winner { Spoiler, Duplicator };

struct GameResult {
    Winner winner = Winner::Duplicator;
    // Main-phase winner map over positions (u_g, u_h, v_g, v_h); 1 marks a
    // position the Duplicator wins from.
    std::vector<uint8_t> duplicator_wins;
    int n_g = 0, n_h = 0;
    int fixpoint_passes = 0;

    size_t index(int ug, int uh, int vg, int vh) const {
        return ((static_cast<size_t>(ug - 1) * n_h + (uh - 1)) * n_g + (vg - 1)) * n_h +
               (vh - 1);
    }
};

// Greatest-fixpoint solution of the pebbling game: a main position is
// Duplicator-winning iff the two pebble pairs have the same isomorphism type
// and every Spoiler move admits a size-matched response, with the
// vertex-selection round resolved through a perfect-matching criterion.
GameResult solve_game(const Graph& g, const Graph& h, const GameSpec& spec,
                      int size_cap = 8);

struct EquivalenceMismatch {
    size_t pair_index;
    std::string algorithm;
    bool game_spoiler_wins;
    bool refinement_distinguishes;
};

// Game winner versus refinement verdict over a corpus; any mismatch is a
// correctness bug in one of the two implementations.
std::vector<EquivalenceMismatch> check_equivalence(
    const std::vector<std::pair<Graph, Graph>>& corpus,
    const std::vector<AlgorithmSpec>& specs, int size_cap = 8);

}  // namespace swl
