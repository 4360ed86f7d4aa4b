#include "legal/embedding.hpp"
#include <algorithm>
#include <map>
#include <stdexcept>

namespace legal {

int FaceTrace::face_of(const EmbeddedGraph& e, int u, int v) const {
    const auto& r = e.rot[u];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == v) return dedge_face[u][i];
    throw std::invalid_argument("not a directed edge: " + std::to_string(u) + "->" +
                                std::to_string(v));
}

FaceTrace trace_faces(const EmbeddedGraph& e) {
    const Graph& g = e.g;
    if ((int)e.rot.size() != g.n)
        throw std::invalid_argument("rotation table size mismatch");
    std::vector<std::vector<int>> pos(g.n); // pos[v][u-index]: index of u in rot[v]
    for (int v = 0; v < g.n; ++v) {
        if ((int)e.rot[v].size() != g.degree(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " does not list each incident edge once");
        Bitset seen(g.n);
        for (int u : e.rot[v]) {
            if (u < 0 || u >= g.n || !g.has_edge(v, u) || seen.test(u))
                throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                            " does not list each incident edge once");
            seen.set(u);
        }
        pos[v].assign(g.n, -1);
        for (size_t i = 0; i < e.rot[v].size(); ++i) pos[v][e.rot[v][i]] = (int)i;
    }

    FaceTrace ft;
    ft.dedge_face.resize(g.n);
    for (int v = 0; v < g.n; ++v) ft.dedge_face[v].assign(e.rot[v].size(), -1);

    // Trace the face left of each directed edge: the successor of u->v is
    // v->w where w follows u in the rotation at v.
    for (int v0 = 0; v0 < g.n; ++v0) {
        for (size_t i0 = 0; i0 < e.rot[v0].size(); ++i0) {
            if (ft.dedge_face[v0][i0] != -1) continue;
            int f = (int)ft.faces.size();
            ft.faces.push_back({});
            int u = v0, i = (int)i0;
            do {
                ft.dedge_face[u][i] = f;
                ft.faces[f].push_back(u);
                int v = e.rot[u][i];
                int j = pos[v][u];
                i = (int)((j + 1) % e.rot[v].size());
                u = v;
            } while (u != v0 || i != (int)i0);
        }
    }

    if (connected(g) && g.n >= 1) {
        int euler = g.n - g.edge_count() + (int)ft.faces.size();
        if (euler != 2)
            throw std::runtime_error("rotation system is not spherical: V-E+F = " +
                                     std::to_string(euler));
    }
    return ft;
}

VFGraph vf_graph(const EmbeddedGraph& e) {
    if (!two_connected(e.g))
        throw std::invalid_argument("vertex-face incidence graph requires a 2-connected graph");
    FaceTrace ft = trace_faces(e);
    int nv = e.g.n, nf = (int)ft.faces.size();

    VFGraph out;
    out.nv = nv;
    out.nf = nf;
    out.source_faces = ft.faces;
    out.g = Graph(nv + nf);
    for (int f = 0; f < nf; ++f)
        for (int v : ft.faces[f])
            if (!out.g.has_edge(v, nv + f)) out.g.add_edge(v, nv + f);

    // Derived embedding: around v the incident faces in rotation order; around
    // a face its boundary vertices. Boundary order is flipped if the first
    // attempt does not quadrangulate (orientation mismatch between the two).
    for (int flip = 0; flip < 2; ++flip) {
        EmbeddedGraph emb;
        emb.g = out.g;
        emb.rot.resize(nv + nf);
        for (int v = 0; v < nv; ++v) {
            emb.rot[v].clear();
            for (size_t i = 0; i < e.rot[v].size(); ++i)
                emb.rot[v].push_back(nv + ft.dedge_face[v][i]);
        }
        for (int f = 0; f < nf; ++f) {
            emb.rot[nv + f] = ft.faces[f];
            if (flip) std::reverse(emb.rot[nv + f].begin(), emb.rot[nv + f].end());
        }
        try {
            FaceTrace ft2 = trace_faces(emb);
            bool quads = true;
            for (auto& f : ft2.faces)
                if (f.size() != 4) { quads = false; break; }
            if (!quads) continue;
            out.emb = emb;
            // Sanity: the derived quadrangulation has zero curvature.
            if (!(curvature(out.g, 2) == Rat(0)))
                throw std::runtime_error("vertex-face incidence graph has nonzero curvature");
            return out;
        } catch (const std::runtime_error&) {
            continue;
        }
    }
    throw std::runtime_error("could not derive a quadrangulated embedding");
}

Bitset hamilton_to_state(const EmbeddedGraph& e, const std::vector<int>& cycle) {
    const Graph& g = e.g;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 3)
            throw std::invalid_argument("graph has a vertex of valence > 3");
    if ((int)cycle.size() != g.n)
        throw std::invalid_argument("cycle does not visit every vertex exactly once");
    Bitset seen(g.n);
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (u < 0 || u >= g.n || seen.test(u) || !g.has_edge(u, v))
            throw std::invalid_argument("not a hamiltonian cycle");
        seen.set(u);
    }

    VFGraph vf = vf_graph(e);
    FaceTrace ft = trace_faces(e);

    std::vector<std::vector<bool>> on_cycle(g.n);
    for (int v = 0; v < g.n; ++v) on_cycle[v].assign(e.rot[v].size(), false);
    auto mark = [&](int u, int v) {
        for (size_t i = 0; i < e.rot[u].size(); ++i)
            if (e.rot[u][i] == v) on_cycle[u][i] = true;
    };
    for (size_t i = 0; i < cycle.size(); ++i) {
        mark(cycle[i], cycle[(i + 1) % cycle.size()]);
        mark(cycle[(i + 1) % cycle.size()], cycle[i]);
    }

    // Faces on the root side of the cycle: flood fill across non-cycle edges.
    int nf = (int)ft.faces.size();
    std::vector<char> side(nf, -1);
    int root = ft.face_of(e, cycle[0], cycle[1]);
    std::vector<int> stack{root};
    side[root] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.n; ++u)
            for (size_t i = 0; i < e.rot[u].size(); ++i) {
                if (ft.dedge_face[u][i] != f || on_cycle[u][i]) continue;
                int v = e.rot[u][i];
                int f2 = ft.face_of(e, v, u);
                if (side[f2] == -1) { side[f2] = 0; stack.push_back(f2); }
            }
    }

    // Initial vertices of chords directed low -> high; chordless (valence-2)
    // vertices land on the terminal side.
    Bitset s(vf.g.n);
    for (int f = 0; f < nf; ++f)
        if (side[f] == 0) s.set(vf.nv + f);
    for (int u = 0; u < g.n; ++u)
        for (size_t i = 0; i < e.rot[u].size(); ++i) {
            int v = e.rot[u][i];
            if (!on_cycle[u][i] && u < v) s.set(u);
        }

    if (!is_strongly_legal_state(vf.g, s))
        throw std::runtime_error("constructed vertex-face state is not strongly legal");
    return s;
}

std::vector<int> state_to_hamilton(const EmbeddedGraph& e, const Bitset& s) {
    const Graph& g = e.g;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("graph is not 3-valent");
    VFGraph vf = vf_graph(e);
    if (s.size() != vf.g.n)
        throw std::invalid_argument("state width does not match the vertex-face graph");
    if (!is_strongly_legal_state(vf.g, s))
        throw std::invalid_argument("state is not strongly legal");
    FaceTrace ft = trace_faces(e);

    // Keep the edges whose two incident faces lie in different parts.
    std::vector<std::vector<int>> next(g.n);
    for (auto [u, v] : g.edges()) {
        int f1 = ft.face_of(e, u, v), f2 = ft.face_of(e, v, u);
        if (s.test(vf.nv + f1) != s.test(vf.nv + f2)) {
            next[u].push_back(v);
            next[v].push_back(u);
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (next[v].size() != 2)
            throw std::runtime_error("selected edges do not form a 2-regular subgraph");
    std::vector<int> cyc;
    cyc.push_back(0);
    int prev = -1, cur = 0;
    do {
        int a = next[cur][0], b = next[cur][1];
        if (a > b) std::swap(a, b);
        int nxt = (a != prev) ? a : b;
        prev = cur;
        cur = nxt;
        if (cur != 0) cyc.push_back(cur);
    } while (cur != 0);
    if ((int)cyc.size() != g.n)
        throw std::runtime_error("selected edges form more than one cycle");
    return cyc;
}

Graph barycentric_skeleton(const EmbeddedGraph& e) {
    if (!two_connected(e.g))
        throw std::invalid_argument("barycentric skeleton requires a 2-connected graph");
    FaceTrace ft = trace_faces(e);
    auto es = e.g.edges();
    int nv = e.g.n, ne = (int)es.size(), nf = (int)ft.faces.size();
    std::map<std::pair<int, int>, int> eid;
    for (int i = 0; i < ne; ++i) eid[es[i]] = nv + i;

    Graph out(nv + ne + nf);
    for (int i = 0; i < ne; ++i) {
        out.add_edge(es[i].first, nv + i);
        out.add_edge(es[i].second, nv + i);
    }
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = ft.faces[f];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            out.add_edge(u, nv + ne + f);
            int ev = eid.at({std::min(u, v), std::max(u, v)});
            if (!out.has_edge(ev, nv + ne + f)) out.add_edge(ev, nv + ne + f);
        }
    }
    return out;
}

} // namespace legal
