#ifndef LEGAL_MATCHING_HPP
#define LEGAL_MATCHING_HPP

#include "legal/graph.hpp"
#include <array>
#include <functional>

namespace legal {

// Maximum matching in a general graph given by an adjacency predicate
// (blossom contraction); returns mate[] with -1 for exposed vertices.
std::vector<int> max_matching(int n, const std::function<bool(int, int)>& adjacent);

// Perfect matching of the complement graph: partition of V into nonadjacent
// pairs. The complement is never materialized.
struct Antimatching {
    bool ok = false;
    std::string reason;                  // "odd order" | "no perfect antimatching"
    std::vector<std::array<int, 2>> pairs;
};
Antimatching perfect_antimatching(const Graph& g);

} // namespace legal

#endif
