#ifndef LEGAL_FAMILIES_HPP
#define LEGAL_FAMILIES_HPP

#include "legal/embedding.hpp"
#include "legal/moves.hpp"

namespace legal {

// A named graph together with whatever canonical extras it carries: a planar
// rotation system, and/or a move system with a start state whose orbit is
// (claimed) legal.
struct FamilyBundle {
    std::string name;
    Graph g;
    std::optional<EmbeddedGraph> emb;
    std::optional<MoveSystem> sys;
    std::optional<Bitset> start;
    std::string note;
};

// d-cube skeleton; system = bipartition classes. For d = 1 the bundled state
// {0} is the convention, but no state of K2 has a fully legal orbit.
FamilyBundle hypercube(int d);

// 8-cycle plus the four long chords; hand-picked 4-move system, orbit of 8.
FamilyBundle wagner();

// 4-cycle 1-2-3-4 with chord 1-3; three-part system, start {4}.
FamilyBundle example_2_3();

// Icosahedron with 6 antipodal color pairs; m_v pairs v's colors with the one
// color absent from its neighborhood. Start = first one-per-color state (in
// lexicographic sign order) whose orbit is legal.
FamilyBundle icosahedron();

// 4-cube plus one apex per 3-face (24 vertices, 96 edges); three-class system.
FamilyBundle cell24();

// 600-cell skeleton: 10x10 torus grid with diagonals and skip edges plus 20
// hovering vertices; 20 color-class moves, start = alternate rows + alternate
// hovering vertices.
FamilyBundle cell600();

// Brinkmann graph (21 vertices, 42 edges, girth 5); graph only, systems are
// found by search.
FamilyBundle brinkmann();

// Dual Loebell graph of degree n (n-antiprism with both n-gons centrally
// subdivided): 2n+2 vertices. Bundles the pair-class system for n >= 6, the
// icosahedron system transported along an isomorphism for n = 5, and the
// graph alone for n = 4. Ships a planar rotation system.
FamilyBundle dual_lobell(int n);

// Bipartite cone: vertices 1..m plus all k-subsets (lexicographic order),
// r ~ S iff r in S. Bundles the bipartition system with its start state
// exactly when 3 < k < m < 2k-1.
FamilyBundle bipartite_cone(int m, int k);

// Tutte's non-hamiltonian cubic planar graph (46/69), with rotations from the
// standard three-sector drawing.
FamilyBundle tutte();

// Bipartite 6+6 example whose sides split as A1|A2, B1|B2 (three each, in
// vertex order) so that every A_i u B_j is legal; bundles the {A, B} system.
FamilyBundle tbws_example();

FamilyBundle house();            // square with a roof triangle, embedded
FamilyBundle triangular_prism(); // embedded
FamilyBundle antiprism(int n);   // 2n vertices, 4n edges, embedded

// Cube-of-fibers blowup: each vertex of the d-cube becomes an n-fiber; edges
// in the distinguished direction (bit 0) become linear trees, all others
// become shifted matchings u_i ~ v_{i+k}. offsets: one k per non-distinguished
// cube edge (direction 1..d-1 outer, base vertices ascending), or empty for
// the built-in alternating 0/3 pattern. For d = 3 the offset constraint
// (parallel edges of a square differ by >= 3) and girth >= 6 are enforced and
// the preimage system is bundled; for d >= 4 no offset family satisfies the
// constraint on every square, so supplied offsets are rejected, the default
// build skips the girth guarantee, and no system is bundled.
FamilyBundle blowup_cube(int d, int n, const std::vector<int>& offsets = {});

} // namespace legal

#endif
