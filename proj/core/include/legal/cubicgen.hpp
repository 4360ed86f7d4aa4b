#ifndef LEGAL_CUBICGEN_HPP
#define LEGAL_CUBICGEN_HPP

#include "legal/embedding.hpp"

namespace legal {

// Deterministic family of 3-valent 2-connected planar graphs with rotation
// systems: K4 plus repeated face expansions (subdivide two distinct edges of
// a face and join the new vertices inside it), deduplicated up to
// isomorphism, capped per vertex count.
std::vector<EmbeddedGraph> cubic_planar_graphs(int max_n, size_t cap_per_n = 25);

} // namespace legal

#endif
