#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace swl {

// A signature is the structured record a refinement round computes for one
// cell (an ordered vertex pair, or a single vertex for node-level tests).
// It is a flat chunked encoding so that one generic recoloring and one
// generic certificate serializer work for every algorithm family:
//
//   kColor        c            one color reference
//   kMultiset     len, c...    sorted multiset of color references
//   kPairMultiset len, (a,b)...sorted multiset of ordered color pairs
//   kExtMultiset  len, (e,c)...sorted multiset of (external token, color)
//   kLiteral      v            plain integer, used by round-0 tokens
//
// Chunks appear in a fixed per-algorithm order and all multiset payloads are
// sorted, so lexicographic comparison of the flat vectors is a canonical
// equality test.
using Signature = std::vector<int64_t>;

namespace chunk {
inline constexpr int64_t kColor = 1;
inline constexpr int64_t kMultiset = 2;
inline constexpr int64_t kPairMultiset = 3;
inline constexpr int64_t kExtMultiset = 4;
inline constexpr int64_t kLiteral = 5;
}  // namespace chunk

// Per-graph signature builder used by the joint refinement loop. Colors are
// dense ids shared across the graphs of a run (one dictionary per round).
class SignatureSource {
public:
    virtual ~SignatureSource() = default;

    // Number of vertices and cells (n*n for pair colorings, n for node ones).
    virtual int vertex_count() const = 0;
    virtual size_t cell_count() const = 0;

    // Round-0 token for each cell, already in chunk encoding.
    virtual Signature initial_token(size_t cell) const = 0;

    // Refinement signature of a cell given the previous round's colors.
    virtual void build(size_t cell, const std::vector<int>& colors,
                       Signature& out) const = 0;

    // Canonical byte expansion of an external token id (kExtMultiset payload);
    // only node-distance sources carry these.
    virtual void expand_external(int64_t token, std::vector<uint8_t>& out) const;
};

// Color matrices for one graph across all rounds of a run, plus the number
// of distinct own-graph colors per round. Round indices are 0-based; entry
// `colors[t]` holds the dense joint ids after round t.
struct RefineHistory {
    int n = 0;
    std::vector<std::vector<int>> colors;
    std::vector<int> class_counts;

    // First round whose own partition no longer splits. Sound because class
    // counts are strictly increasing until the partition is stable.
    int stable_round() const;
};

struct JointRun {
    std::vector<RefineHistory> histories;  // one per participating graph
    int rounds = 0;                        // last round index recorded
    uint64_t signature_entries = 0;        // total multiset elements generated
};

// Runs joint color refinement over one or two graphs with a shared dense
// dictionary per round. Ids are assigned by sorting the distinct signatures,
// so parallel and serial runs produce identical colorings. Stops when the
// joint number of distinct colors is unchanged for one round; `cap` bounds
// the rounds (0 selects the sum of squared vertex counts).
JointRun joint_refine(const std::vector<const SignatureSource*>& sources, int cap = 0,
                      int threads = 1);

struct Certificate {
    std::vector<uint8_t> bytes;
    std::array<uint64_t, 2> digest{0, 0};

    // Equality is decided on the full byte sequence; the digest only indexes.
    bool operator==(const Certificate& other) const { return bytes == other.bytes; }
    bool operator!=(const Certificate& other) const { return !(*this == other); }
};

enum class PoolKind {
    VertexSubgraph,  // rows over v pooled per u, then rows pooled
    SubgraphVertex,  // the transpose order
    Flat,            // one flat multiset over all cells
};

// Canonical, dictionary-independent certificate of one graph's stable
// coloring. Dense ids never appear in the bytes: colors are renumbered per
// round by sorting their signatures recursively down to the round-0 tokens,
// and the per-round signature tables are serialized alongside the pooled
// structure. Two certificates are byte-equal exactly when the pooled stable
// colorings agree as abstract nested multisets.
Certificate build_certificate(const RefineHistory& history, const SignatureSource& source,
                              PoolKind pool);

// Joint-dictionary comparison of the pooled stable colorings of two graphs
// from the same run; equivalent to comparing their certificates byte-wise.
bool pooled_equal(const RefineHistory& a, const RefineHistory& b, PoolKind pool);

}  // namespace swl
