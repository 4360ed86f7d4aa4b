#ifndef LEGAL_EMBEDDING_HPP
#define LEGAL_EMBEDDING_HPP

#include "legal/graph.hpp"
#include "legal/moves.hpp"

namespace legal {

// Graph plus rotation system (cyclic neighbor order per vertex).
struct EmbeddedGraph {
    Graph g;
    std::vector<std::vector<int>> rot;
};

struct FaceTrace {
    std::vector<std::vector<int>> faces;  // each face as a cyclic vertex sequence
    // face index of the directed edge u->v, keyed by (u, position of v in rot[u])
    std::vector<std::vector<int>> dedge_face;
    int face_of(const EmbeddedGraph& e, int u, int v) const;
};

// Face tracing; validates the rotation and asserts Euler's formula for
// connected input. Throws with the offending vertex on inconsistency.
FaceTrace trace_faces(const EmbeddedGraph& e);

// Bipartite vertex-face incidence graph with its derived (quadrangulation)
// embedding. V-part keeps source ids 0..n-1; face j becomes vertex n+j.
struct VFGraph {
    Graph g;
    int nv = 0, nf = 0;
    EmbeddedGraph emb;
    std::vector<std::vector<int>> source_faces;
};
VFGraph vf_graph(const EmbeddedGraph& e); // requires 2-connected input

// Hamiltonicity <-> strongly legal VF-state, both constructive directions.
Bitset hamilton_to_state(const EmbeddedGraph& e, const std::vector<int>& cycle);
std::vector<int> state_to_hamilton(const EmbeddedGraph& e, const Bitset& s);

// 1-skeleton of the barycentric subdivision of the cell structure:
// vertices V (ids 0..n-1), then one per edge (lexicographic order), then one
// per traced face; edges are all vertex-edge, edge-face, vertex-face incidences.
Graph barycentric_skeleton(const EmbeddedGraph& e);

} // namespace legal

#endif
