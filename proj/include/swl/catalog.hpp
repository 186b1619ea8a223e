#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swl/algorithm.hpp"
#include "swl/graph.hpp"

namespace swl {

struct CatalogClaim {
    std::string algorithm;  // preset name
    bool distinguishes = false;
};

// One counterexample record: a proper base graph together with the expected
// verdict of each listed algorithm on the augmented pair built from it.
struct CatalogEntry {
    std::string name;
    std::string lemma;  // which separation this entry certifies
    std::string note;   // provenance: transcribed / reconstructed / searched
    Graph base;
    std::vector<CatalogClaim> claims;
};

std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

struct ClaimResult {
    std::string entry;
    std::string lemma;
    std::string algorithm;
    bool expected = false;
    bool actual = false;
    bool pass = false;
    int rounds = 0;
    double wall_seconds = 0.0;
};

// Builds each entry's augmented pair and runs every claimed algorithm.
// `jobs` > 1 parallelizes over (entry x claim).
std::vector<ClaimResult> verify_catalog(const std::vector<CatalogEntry>& entries,
                                        int jobs = 1);

}  // namespace swl
