#ifndef LEGAL_CHECKS_HPP
#define LEGAL_CHECKS_HPP

#include "legal/embedding.hpp"

namespace legal {

// Condition-by-condition verdict for the reflection-group checkers.
struct ReflectionVerdict {
    struct Condition {
        std::string name;
        bool pass = false;
        std::vector<int> witness; // offending cycle / region / tuple, if any
    };
    std::vector<Condition> conditions;
    bool pass() const {
        for (auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
};

// Compact reflection-group conditions: every region a triangle; every cycle of
// length <= 4 bounds a triangle or two triangles meeting along an edge; the
// graph is neither a triangle nor a 4-clique.
ReflectionVerdict pogorelov_check(const EmbeddedGraph& e);

// Finite-covolume conditions. A quad is a full (chordless) 4-cycle bounding a
// region. Conditions: every region is bounded by a quad or a triangle; two
// distinct quads meet in nothing, a vertex, or an edge; every cycle of length
// <= 4 bounds a region or the union of two triangular regions; the graph is
// not a triangle, 4-clique, 4-cycle, or cone on a 4-cycle.
ReflectionVerdict cusped_check(const EmbeddedGraph& e);

// True iff no induced join of a nonadjacent pair with a non-clique triple
// exists; on failure *witness receives the offending 5 vertices.
bool relhyp_quads_check(const Graph& g, std::vector<int>* witness = nullptr);

// Two-by-two split check on a bipartite graph with sides A = a1|a2 and
// B = b1|b2: (1) each A_i lies in one component of the subgraph induced by
// A_i u B_j; (2) every vertex of B_j has a neighbor in A_i. On success the
// four states A_i u B_j form a legal orbit of the emitted two-move system.
struct TbwsResult {
    bool ok = false;
    std::string reason;
    MoveSystem sys;  // m_v = A for v in A, B for v in B
    Bitset start;    // A1 u B1
};
TbwsResult tbws_check(const Graph& g, const Bitset& a1, const Bitset& a2,
                      const Bitset& b1, const Bitset& b2);

} // namespace legal

#endif
