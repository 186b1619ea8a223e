#include "swl/catalog.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "swl/furer.hpp"

namespace swl {

std::vector<CatalogEntry> load_catalog(std::istream& in) {
    nlohmann::json doc;
    in >> doc;
    if (!doc.is_array()) throw std::runtime_error("catalog must be a JSON array");
    std::vector<CatalogEntry> entries;
    for (const auto& record : doc) {
        CatalogEntry entry;
        entry.name = record.at("name").get<std::string>();
        entry.lemma = record.at("lemma").get<std::string>();
        if (record.contains("note")) entry.note = record.at("note").get<std::string>();
        std::vector<std::pair<int, int>> edges;
        int n = 0;
        for (const auto& e : record.at("edges")) {
            const int u = e.at(0).get<int>();
            const int v = e.at(1).get<int>();
            edges.emplace_back(u, v);
            n = std::max({n, u, v});
        }
        entry.base = Graph(n, std::move(edges));
        if (!is_proper_base(entry.base))
            throw std::runtime_error("catalog base '" + entry.name + "' is not proper");
        for (const auto& c : record.at("claims")) {
            CatalogClaim claim;
            claim.algorithm = c.at("alg").get<std::string>();
            claim.distinguishes = c.at("distinguishes").get<bool>();
            AlgorithmSpec::preset(claim.algorithm);  // validate the name
            entry.claims.push_back(std::move(claim));
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    return load_catalog(in);
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& entry : entries) {
        nlohmann::json record;
        record["name"] = entry.name;
        record["lemma"] = entry.lemma;
        if (!entry.note.empty()) record["note"] = entry.note;
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : entry.base.edges()) edges.push_back({u, v});
        record["edges"] = std::move(edges);
        nlohmann::json claims = nlohmann::json::array();
        for (const auto& claim : entry.claims)
            claims.push_back({{"alg", claim.algorithm}, {"distinguishes", claim.distinguishes}});
        record["claims"] = std::move(claims);
        doc.push_back(std::move(record));
    }
    return doc.dump(2) + "\n";
}

std::vector<ClaimResult> verify_catalog(const std::vector<CatalogEntry>& entries,
                                        int jobs) {
    struct Job {
        size_t entry;
        size_t claim;
    };
    std::vector<Job> queue;
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.reserve(entries.size());
    for (size_t e = 0; e < entries.size(); ++e) {
        pairs.push_back(make_pair(entries[e].base));
        for (size_t c = 0; c < entries[e].claims.size(); ++c) queue.push_back({e, c});
    }

    std::vector<ClaimResult> results(queue.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < queue.size(); i = next.fetch_add(1)) {
            const auto [e, c] = queue[i];
            const auto& entry = entries[e];
            const auto& claim = entry.claims[c];
            const auto spec = AlgorithmSpec::preset(claim.algorithm);
            const auto start = std::chrono::steady_clock::now();
            const Verdict verdict = distinguish(pairs[e].first, pairs[e].second, spec);
            const auto stop = std::chrono::steady_clock::now();
            ClaimResult& r = results[i];
            r.entry = entry.name;
            r.lemma = entry.lemma;
            r.algorithm = claim.algorithm;
            r.expected = claim.distinguishes;
            r.actual = verdict.distinguished;
            r.pass = r.expected == r.actual;
            r.rounds = verdict.rounds;
            r.wall_seconds = std::chrono::duration<double>(stop - start).count();
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace swl
