#ifndef LEGAL_MOVES_HPP
#define LEGAL_MOVES_HPP

#include "legal/graph.hpp"
#include <array>
#include <optional>

namespace legal {

// Per-vertex move assignment v -> m_v. Moves act on states by symmetric
// difference; together they generate a subgroup M <= Z_2^V.
struct MoveSystem {
    std::vector<Bitset> moves; // moves[v] = m_v
    int n() const { return (int)moves.size(); }
};

struct Violation {
    int property; // 1: v not in m_v; 2: m_v contains a neighbor of v
    int v, u;     // offending vertex pair (u = -1 for property 1)
};
std::vector<Violation> validate_system(const Graph& g, const MoveSystem& m);

// Row echelon basis of span{m_v} over GF(2); pivots ascending vertex index.
struct GF2Basis {
    std::vector<Bitset> rows;      // pivot of rows[i] < pivot of rows[i+1]
    std::vector<int> pivots;
    std::vector<int> provenance;   // a vertex whose move contributed the row
    int rank() const { return (int)rows.size(); }
    // Reduce s to its coset leader (zero out pivot positions).
    Bitset reduce(Bitset s) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (s.test(pivots[i])) s ^= rows[i];
        return s;
    }
};
GF2Basis move_span(const MoveSystem& m);

struct OrbitOptions {
    bool exhaustive = false;   // keep scanning past the first illegal state
    int threads = 1;
    int rank_cap = 30;         // refuse above without override
    bool override_cap = false;
};

struct OrbitReport {
    int rank = 0;
    uint64_t orbit_size = 0;
    bool legal = false;
    std::optional<Bitset> witness;          // first illegal state in orbit order
    uint64_t witness_coeffs = 0;            // GF(2) coords over basis rows
    int min_size = 0, max_size = 0;         // over states inspected
    bool all_strongly_legal = false;        // meaningful when legal
    uint64_t states_checked = 0;
};

OrbitReport verify_legal_orbit(const Graph& g, const MoveSystem& m, const Bitset& s0,
                               const OrbitOptions& opts = {});

// First legal state containing vertex 0, ordered by (size, lexicographic);
// nullopt = certified none. Throws for n above the threshold. With strong set,
// searches strongly legal states instead.
std::optional<Bitset> exists_legal_state(const Graph& g, int threshold = 28,
                                         bool strong = false);

// Sound certificate that no legal system exists (true = certified).
// Two facts combine: (a) if some vertex of an orbit state lies on one side
// together with all its neighbors, applying its move forces a singleton or
// co-singleton state into the orbit; (b) a singleton or co-singleton state
// {x} / V-{x} in a legal orbit forces the move of every vertex u nonadjacent
// to x to be the pair {u, x}, and two such vertices then produce the illegal
// state {u1, u2, x} (or its complement). So when every vertex is nonadjacent
// to at least two others, every state of a legal orbit is strongly legal, and
// the exhaustive absence of strongly legal states rules out legal systems.
// (Without the degree condition, legal orbits with no strongly legal state
// exist: the path a-b-c with moves {a,c}, {b}, {a,c}.)
bool certify_no_legal_system(const Graph& g, int threshold = 28);

// All 2^k transversals of a pairing legal? Pairs must be nonadjacent.
bool verify_lawful_antimatching(const Graph& g,
                                const std::vector<std::array<int, 2>>& am,
                                int threshold = 24);

// Fraction of orbit states containing the clique k.
Rat clique_orbit_frequency(const Graph& g, const MoveSystem& m, const Bitset& s0,
                           const Bitset& k);

// Do all orbit states induce forests?
bool all_states_trees(const Graph& g, const MoveSystem& m, const Bitset& s0);

// Remove a cone vertex v (its neighborhood must be a 4-cycle) and restrict the
// optional system/state to the smaller graph. Indices above v shift down by 1.
struct ConeReduction {
    Graph g;
    std::optional<MoveSystem> sys;
    std::optional<Bitset> start;
};
ConeReduction restrict_cone_system(const Graph& g, int v,
                                   const std::optional<MoveSystem>& m = std::nullopt,
                                   const std::optional<Bitset>& s0 = std::nullopt);

} // namespace legal

#endif
