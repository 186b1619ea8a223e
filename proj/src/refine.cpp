#include "swl/refine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace swl {

void SignatureSource::expand_external(int64_t, std::vector<uint8_t>&) const {
    throw std::logic_error("this signature source has no external tokens");
}

int RefineHistory::stable_round() const {
    for (size_t t = 0; t + 1 < class_counts.size(); ++t)
        if (class_counts[t + 1] == class_counts[t]) return static_cast<int>(t);
    return static_cast<int>(class_counts.size()) - 1;
}

namespace {

// Elements that count toward the per-round work budget: one per multiset
// member (a walk pair counts once).
uint64_t payload_entries(const Signature& sig) {
    uint64_t total = 0;
    for (size_t pos = 0; pos < sig.size();) {
        switch (sig[pos]) {
            case chunk::kColor:
            case chunk::kLiteral:
                pos += 2;
                break;
            case chunk::kMultiset:
                total += sig[pos + 1];
                pos += 2 + sig[pos + 1];
                break;
            case chunk::kPairMultiset:
                total += sig[pos + 1];
                pos += 2 + 2 * sig[pos + 1];
                break;
            case chunk::kExtMultiset:
                total += sig[pos + 1];
                pos += 2 + 2 * sig[pos + 1];
                break;
            default:
                throw std::logic_error("malformed signature chunk");
        }
    }
    return total;
}

// Assigns dense ids 0..k-1 by sorted order of the distinct signatures.
std::pair<std::vector<int>, int> rank_signatures(const std::vector<Signature>& sigs) {
    std::vector<uint32_t> order(sigs.size());
    for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return sigs[a] < sigs[b]; });
    std::vector<int> ids(sigs.size());
    int next_id = -1;
    const Signature* prev = nullptr;
    for (uint32_t i : order) {
        if (prev == nullptr || sigs[i] != *prev) {
            ++next_id;
            prev = &sigs[i];
        }
        ids[i] = next_id;
    }
    return {std::move(ids), next_id + 1};
}

void for_each_cell(size_t total, int threads, const std::function<void(size_t, size_t)>& fn) {
    if (threads <= 1 || total < 128) {
        fn(0, total);
        return;
    }
    const size_t block = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (size_t begin = 0; begin < total; begin += block) {
        const size_t end = std::min(total, begin + block);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

int distinct_count(const std::vector<int>& colors) {
    std::vector<int> sorted(colors);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

JointRun joint_refine(const std::vector<const SignatureSource*>& sources, int cap,
                      int threads) {
    if (sources.empty() || sources.size() > 2)
        throw std::invalid_argument("joint refinement runs on one or two graphs");

    std::vector<size_t> offsets{0};
    for (const auto* src : sources) offsets.push_back(offsets.back() + src->cell_count());
    const size_t total = offsets.back();

    if (cap <= 0) {
        cap = 0;
        for (const auto* src : sources) {
            const int n = src->vertex_count();
            cap += n * n;
        }
        cap = std::max(cap, 1);
    }

    JointRun run;
    run.histories.resize(sources.size());

    // Round 0: joint dense ids from the initial tokens.
    std::vector<Signature> sigs(total);
    for (size_t s = 0; s < sources.size(); ++s)
        for (size_t c = 0; c < sources[s]->cell_count(); ++c)
            sigs[offsets[s] + c] = sources[s]->initial_token(c);
    auto [ids, joint_classes] = rank_signatures(sigs);

    auto record_round = [&](const std::vector<int>& all_ids) {
        for (size_t s = 0; s < sources.size(); ++s) {
            auto& hist = run.histories[s];
            hist.n = sources[s]->vertex_count();
            hist.colors.emplace_back(all_ids.begin() + offsets[s],
                                     all_ids.begin() + offsets[s + 1]);
            hist.class_counts.push_back(distinct_count(hist.colors.back()));
        }
    };
    record_round(ids);

    for (int round = 1; round <= cap; ++round) {
        std::vector<uint64_t> work(sources.size(), 0);
        for (size_t s = 0; s < sources.size(); ++s) {
            const auto* src = sources[s];
            const auto& colors = run.histories[s].colors.back();
            for_each_cell(src->cell_count(), threads, [&, s](size_t begin, size_t end) {
                for (size_t c = begin; c < end; ++c) {
                    auto& sig = sigs[offsets[s] + c];
                    sig.clear();
                    src->build(c, colors, sig);
                }
            });
            for (size_t c = 0; c < src->cell_count(); ++c)
                work[s] += payload_entries(sigs[offsets[s] + c]);
        }
        for (uint64_t w : work) run.signature_entries += w;

        auto [new_ids, new_classes] = rank_signatures(sigs);
        record_round(new_ids);
        run.rounds = round;
        if (new_classes == joint_classes) return run;
        joint_classes = new_classes;
    }
    throw std::logic_error("refinement failed to stabilize within the round cap");
}

namespace {

void put_varint(std::vector<uint8_t>& out, uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<uint8_t>(value) | 0x80);
        value >>= 7;
    }
    out.push_back(static_cast<uint8_t>(value));
}

void put_signed(std::vector<uint8_t>& out, int64_t value) {
    put_varint(out, (static_cast<uint64_t>(value) << 1) ^ static_cast<uint64_t>(value >> 63));
}

// Rewrites a signature with color references replaced by the previous
// round's canonical ranks. Chunk structure is preserved.
Signature translate_refs(const Signature& sig, const std::vector<int>& rank_of_color) {
    Signature out;
    out.reserve(sig.size());
    auto rank = [&](int64_t color) {
        return static_cast<int64_t>(rank_of_color[static_cast<size_t>(color)]);
    };
    for (size_t pos = 0; pos < sig.size();) {
        const int64_t tag = sig[pos];
        out.push_back(tag);
        switch (tag) {
            case chunk::kColor:
                out.push_back(rank(sig[pos + 1]));
                pos += 2;
                break;
            case chunk::kLiteral:
                out.push_back(sig[pos + 1]);
                pos += 2;
                break;
            case chunk::kMultiset: {
                const int64_t len = sig[pos + 1];
                out.push_back(len);
                for (int64_t i = 0; i < len; ++i) out.push_back(rank(sig[pos + 2 + i]));
                std::sort(out.end() - len, out.end());
                pos += 2 + len;
                break;
            }
            case chunk::kPairMultiset: {
                const int64_t len = sig[pos + 1];
                out.push_back(len);
                std::vector<std::pair<int64_t, int64_t>> pairs(len);
                for (int64_t i = 0; i < len; ++i)
                    pairs[i] = {rank(sig[pos + 2 + 2 * i]), rank(sig[pos + 3 + 2 * i])};
                std::sort(pairs.begin(), pairs.end());
                for (auto [a, b] : pairs) {
                    out.push_back(a);
                    out.push_back(b);
                }
                pos += 2 + 2 * len;
                break;
            }
            case chunk::kExtMultiset: {
                const int64_t len = sig[pos + 1];
                out.push_back(len);
                std::vector<std::pair<int64_t, int64_t>> pairs(len);
                for (int64_t i = 0; i < len; ++i)
                    pairs[i] = {sig[pos + 2 + 2 * i], rank(sig[pos + 3 + 2 * i])};
                std::sort(pairs.begin(), pairs.end());
                for (auto [a, b] : pairs) {
                    out.push_back(a);
                    out.push_back(b);
                }
                pos += 2 + 2 * len;
                break;
            }
            default:
                throw std::logic_error("malformed signature chunk");
        }
    }
    return out;
}

void serialize_signature(const Signature& sig, const SignatureSource& source,
                         std::vector<uint8_t>& out) {
    for (size_t pos = 0; pos < sig.size();) {
        const int64_t tag = sig[pos];
        out.push_back(static_cast<uint8_t>(tag));
        switch (tag) {
            case chunk::kColor:
                put_varint(out, static_cast<uint64_t>(sig[pos + 1]));
                pos += 2;
                break;
            case chunk::kLiteral:
                put_signed(out, sig[pos + 1]);
                pos += 2;
                break;
            case chunk::kMultiset: {
                const int64_t len = sig[pos + 1];
                put_varint(out, static_cast<uint64_t>(len));
                for (int64_t i = 0; i < len; ++i)
                    put_varint(out, static_cast<uint64_t>(sig[pos + 2 + i]));
                pos += 2 + len;
                break;
            }
            case chunk::kPairMultiset: {
                const int64_t len = sig[pos + 1];
                put_varint(out, static_cast<uint64_t>(len));
                for (int64_t i = 0; i < 2 * len; ++i)
                    put_varint(out, static_cast<uint64_t>(sig[pos + 2 + i]));
                pos += 2 + 2 * len;
                break;
            }
            case chunk::kExtMultiset: {
                const int64_t len = sig[pos + 1];
                put_varint(out, static_cast<uint64_t>(len));
                for (int64_t i = 0; i < len; ++i) {
                    source.expand_external(sig[pos + 2 + 2 * i], out);
                    put_varint(out, static_cast<uint64_t>(sig[pos + 3 + 2 * i]));
                }
                pos += 2 + 2 * len;
                break;
            }
            default:
                throw std::logic_error("malformed signature chunk");
        }
    }
}

std::array<uint64_t, 2> fnv_digest(const std::vector<uint8_t>& bytes) {
    uint64_t a = 0xcbf29ce484222325ULL;
    uint64_t b = 0xaf63bd4c8601b7dfULL;
    for (uint8_t byte : bytes) {
        a = (a ^ byte) * 0x100000001b3ULL;
        b = (b ^ byte) * 0x100000001b3ULL;
        b ^= b >> 29;
    }
    return {a, b};
}

// Canonical per-round rank of every color appearing in this graph. Rank
// order at round 0 follows the initial tokens; at later rounds it follows
// the signatures rewritten into previous-round ranks, so the numbering
// depends only on the colors' expansion trees.
struct RankTables {
    std::vector<std::vector<int>> rank_of_color;  // per round, indexed by joint id
    std::vector<std::vector<Signature>> table;    // per round, indexed by rank
};

RankTables build_rank_tables(const RefineHistory& history, const SignatureSource& source,
                             int upto_round) {
    RankTables tables;
    tables.rank_of_color.resize(upto_round + 1);
    tables.table.resize(upto_round + 1);
    for (int t = 0; t <= upto_round; ++t) {
        const auto& colors = history.colors[t];
        const int64_t max_id = *std::max_element(colors.begin(), colors.end());
        std::vector<size_t> representative(max_id + 1, SIZE_MAX);
        for (size_t c = 0; c < colors.size(); ++c)
            if (representative[colors[c]] == SIZE_MAX) representative[colors[c]] = c;

        std::vector<std::pair<Signature, int64_t>> entries;
        for (int64_t id = 0; id <= max_id; ++id) {
            if (representative[id] == SIZE_MAX) continue;
            Signature sig;
            if (t == 0) {
                sig = source.initial_token(representative[id]);
            } else {
                source.build(representative[id], history.colors[t - 1], sig);
                sig = translate_refs(sig, tables.rank_of_color[t - 1]);
            }
            entries.emplace_back(std::move(sig), id);
        }
        std::sort(entries.begin(), entries.end());
        tables.rank_of_color[t].assign(max_id + 1, -1);
        tables.table[t].reserve(entries.size());
        for (size_t rank = 0; rank < entries.size(); ++rank) {
            tables.rank_of_color[t][entries[rank].second] = static_cast<int>(rank);
            tables.table[t].push_back(std::move(entries[rank].first));
        }
    }
    return tables;
}

std::vector<std::vector<int>> pooled_rows(const std::vector<int>& colors, int n,
                                          PoolKind pool) {
    std::vector<std::vector<int>> rows;
    if (pool == PoolKind::Flat) {
        rows.emplace_back(colors);
        std::sort(rows[0].begin(), rows[0].end());
        return rows;
    }
    rows.assign(n, {});
    for (int u = 1; u <= n; ++u) {
        auto& row = rows[u - 1];
        row.reserve(n);
        for (int v = 1; v <= n; ++v) {
            const size_t cell = static_cast<size_t>(u - 1) * n + (v - 1);
            const size_t transposed = static_cast<size_t>(v - 1) * n + (u - 1);
            row.push_back(colors[pool == PoolKind::VertexSubgraph ? cell : transposed]);
        }
        std::sort(row.begin(), row.end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

Certificate build_certificate(const RefineHistory& history, const SignatureSource& source,
                              PoolKind pool) {
    const int stable = history.stable_round();
    const auto tables = build_rank_tables(history, source, stable);

    Certificate cert;
    auto& out = cert.bytes;
    out.insert(out.end(), {'S', 'W', 'L', 'C', 1});
    out.push_back(static_cast<uint8_t>(pool));
    put_varint(out, static_cast<uint64_t>(history.n));
    put_varint(out, static_cast<uint64_t>(stable));
    for (int t = 0; t <= stable; ++t) {
        put_varint(out, tables.table[t].size());
        for (const auto& sig : tables.table[t]) serialize_signature(sig, source, out);
    }

    std::vector<int> final_ranks(history.colors[stable].size());
    for (size_t c = 0; c < final_ranks.size(); ++c)
        final_ranks[c] = tables.rank_of_color[stable][history.colors[stable][c]];
    const auto rows = pooled_rows(final_ranks, history.n, pool);
    put_varint(out, rows.size());
    for (const auto& row : rows) {
        put_varint(out, row.size());
        for (int rank : row) put_varint(out, static_cast<uint64_t>(rank));
    }

    cert.digest = fnv_digest(cert.bytes);
    return cert;
}

bool pooled_equal(const RefineHistory& a, const RefineHistory& b, PoolKind pool) {
    const int round = static_cast<int>(a.colors.size()) - 1;
    if (static_cast<int>(b.colors.size()) - 1 != round)
        throw std::invalid_argument("pooled comparison requires histories from one run");
    return pooled_rows(a.colors[round], a.n, pool) ==
           pooled_rows(b.colors[round], b.n, pool);
}

}  // namespace swl
