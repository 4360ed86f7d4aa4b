#ifndef LEGAL_SEARCH_HPP
#define LEGAL_SEARCH_HPP

#include "legal/moves.hpp"

namespace legal {

enum class SearchMode { Exhaustive, ColoringDriven };

struct SystemSearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    int threshold = 24;            // max n for the bitmap-backed engine
    int max_colors = 8;            // coloring mode: largest class count tried
    uint64_t partition_budget = 1000000; // coloring mode above threshold
    uint64_t sample_seed = 1;      // seeding for legal-state sampling (big n)
};

struct SystemSearchResult {
    enum Status { Found, None, Inconclusive } status = None;
    MoveSystem sys;      // when Found: m_v = class containing v
    Bitset start;        // when Found: a state whose orbit is fully legal
    std::vector<Bitset> classes;
    uint64_t partitions_tested = 0;
};

// Search for a system whose moves are the classes of a partition of V into
// independent sets ("colored system"). Exhaustive mode enumerates every such
// partition (requires n <= threshold) against a precomputed legality bitmap
// and certifies absence. Coloring mode sweeps class counts upward from 2 and
// is complete up to max_colors when n <= threshold; above the threshold it
// tests heuristic seed states only and may return Inconclusive.
SystemSearchResult search_partition_system(const Graph& g, const SystemSearchOptions& opts = {});

} // namespace legal

#endif
