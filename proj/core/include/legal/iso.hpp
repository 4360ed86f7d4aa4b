#ifndef LEGAL_ISO_HPP
#define LEGAL_ISO_HPP

#include "legal/graph.hpp"

namespace legal {

// Graph isomorphism a -> b by backtracking with degree/neighborhood
// refinement; returns the image of each a-vertex, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace legal

#endif
