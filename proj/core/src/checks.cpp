#include "legal/checks.hpp"
#include <algorithm>
#include <map>

namespace legal {

namespace {

std::vector<int> sorted_vec(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Faces keyed by sorted boundary vertex set (simple boundaries only).
std::map<std::vector<int>, int> face_index(const FaceTrace& ft) {
    std::map<std::vector<int>, int> idx;
    for (size_t f = 0; f < ft.faces.size(); ++f) {
        auto key = sorted_vec(ft.faces[f]);
        if (std::adjacent_find(key.begin(), key.end()) == key.end())
            idx.emplace(std::move(key), (int)f);
    }
    return idx;
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(u); v >= 0; v = g.adj[u].next(v)) {
            Bitset common = g.adj[u] & g.adj[v];
            for (int w = common.next(v); w >= 0; w = common.next(w))
                out.push_back({u, v, w});
        }
    return out;
}

// Simple 4-cycles a-p-c-q, each listed once with a the smallest vertex;
// {a,c} and {p,q} are the diagonals.
std::vector<std::array<int, 4>> all_four_cycles(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    for (int p = 0; p < g.n; ++p)
        for (int q = p + 1; q < g.n; ++q) {
            Bitset common = g.adj[p] & g.adj[q];
            for (int a = common.first(); a >= 0 && a < p; a = common.next(a))
                for (int c = common.next(a); c >= 0; c = common.next(c))
                    out.push_back({a, p, c, q});
        }
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// Does the 4-cycle a-p-c-q split into two triangular regions along a chord?
bool splits_into_face_triangles(const Graph& g, const std::map<std::vector<int>, int>& faces,
                                int a, int p, int c, int q) {
    if (g.has_edge(a, c) && faces.count(sorted_vec({a, p, c})) &&
        faces.count(sorted_vec({a, c, q})))
        return true;
    if (g.has_edge(p, q) && faces.count(sorted_vec({a, p, q})) &&
        faces.count(sorted_vec({p, c, q})))
        return true;
    return false;
}

bool graph_is_cycle(const Graph& g, int len) {
    if (g.n != len || g.edge_count() != len) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return connected(g);
}

} // namespace

ReflectionVerdict pogorelov_check(const EmbeddedGraph& e) {
    FaceTrace ft = trace_faces(e);
    auto faces = face_index(ft);
    ReflectionVerdict v;

    ReflectionVerdict::Condition c1{"regions are triangles", true, {}};
    for (size_t f = 0; f < ft.faces.size(); ++f)
        if (ft.faces[f].size() != 3) {
            c1.pass = false;
            c1.witness = ft.faces[f];
            break;
        }
    v.conditions.push_back(c1);

    ReflectionVerdict::Condition c2{"short cycles bound one or two triangles", true, {}};
    for (auto& t : all_triangles(e.g))
        if (!faces.count({t[0], t[1], t[2]})) {
            c2.pass = false;
            c2.witness = {t[0], t[1], t[2]};
            break;
        }
    if (c2.pass)
        for (auto& q : all_four_cycles(e.g))
            if (!splits_into_face_triangles(e.g, faces, q[0], q[1], q[2], q[3])) {
                c2.pass = false;
                c2.witness = {q[0], q[1], q[2], q[3]};
                break;
            }
    v.conditions.push_back(c2);

    bool tri = e.g.n == 3 && e.g.edge_count() == 3;
    bool k4 = e.g.n == 4 && e.g.edge_count() == 6;
    v.conditions.push_back({"graph is not a triangle or a 4-clique", !(tri || k4), {}});
    return v;
}

ReflectionVerdict cusped_check(const EmbeddedGraph& e) {
    const Graph& g = e.g;
    FaceTrace ft = trace_faces(e);
    auto faces = face_index(ft);
    ReflectionVerdict v;

    // Quads: chordless 4-cycles bounding a region.
    std::vector<std::vector<int>> quads;
    ReflectionVerdict::Condition c1{"regions are quads or triangles", true, {}};
    for (size_t f = 0; f < ft.faces.size(); ++f) {
        const auto& b = ft.faces[f];
        if (b.size() == 3) continue;
        bool quad = false;
        if (b.size() == 4) {
            auto key = sorted_vec(b);
            bool simple = std::adjacent_find(key.begin(), key.end()) == key.end();
            quad = simple && !g.has_edge(b[0], b[2]) && !g.has_edge(b[1], b[3]);
            if (quad) quads.push_back(key);
        }
        if (!quad) {
            c1.pass = false;
            c1.witness = b;
            break;
        }
    }
    v.conditions.push_back(c1);

    ReflectionVerdict::Condition c2{"distinct quads meet in at most an edge", true, {}};
    for (size_t i = 0; i < quads.size() && c2.pass; ++i)
        for (size_t j = i + 1; j < quads.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(quads[i].begin(), quads[i].end(), quads[j].begin(),
                                  quads[j].end(), std::back_inserter(inter));
            bool ok = inter.size() <= 1 ||
                      (inter.size() == 2 && g.has_edge(inter[0], inter[1]));
            if (!ok) {
                c2.pass = false;
                c2.witness = inter;
                break;
            }
        }
    v.conditions.push_back(c2);

    ReflectionVerdict::Condition c3{"short cycles bound a region or two triangular regions",
                                    true, {}};
    for (auto& t : all_triangles(g))
        if (!faces.count({t[0], t[1], t[2]})) {
            c3.pass = false;
            c3.witness = {t[0], t[1], t[2]};
            break;
        }
    if (c3.pass)
        for (auto& q : all_four_cycles(g)) {
            bool ok = faces.count(sorted_vec({q[0], q[1], q[2], q[3]})) ||
                      splits_into_face_triangles(g, faces, q[0], q[1], q[2], q[3]);
            if (!ok) {
                c3.pass = false;
                c3.witness = {q[0], q[1], q[2], q[3]};
                break;
            }
        }
    v.conditions.push_back(c3);

    bool tri = g.n == 3 && g.edge_count() == 3;
    bool k4 = g.n == 4 && g.edge_count() == 6;
    bool c4 = graph_is_cycle(g, 4);
    bool cone = false;
    if (g.n == 5 && g.edge_count() == 8) {
        for (int apex = 0; apex < 5 && !cone; ++apex) {
            if (g.degree(apex) != 4) continue;
            Bitset rest(g.n);
            rest.set_all();
            rest.reset(apex);
            bool ring = true;
            for (int u = rest.first(); u >= 0; u = rest.next(u))
                if ((g.adj[u] & rest).count() != 2) ring = false;
            cone = ring && induced_connected(g, rest);
        }
    }
    v.conditions.push_back({"graph is not a triangle, 4-clique, 4-cycle, or cone on a 4-cycle",
                            !(tri || k4 || c4 || cone), {}});
    return v;
}

bool relhyp_quads_check(const Graph& g, std::vector<int>* witness) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            Bitset common = g.adj[u] & g.adj[v];
            if (common.count() < 3) continue;
            // a non-clique triple exists iff some pair of common neighbors
            // is nonadjacent
            for (int x = common.first(); x >= 0; x = common.next(x))
                for (int y = common.next(x); y >= 0; y = common.next(y)) {
                    if (g.has_edge(x, y)) continue;
                    int z = -1;
                    for (int w = common.first(); w >= 0; w = common.next(w))
                        if (w != x && w != y) { z = w; break; }
                    if (witness) *witness = {u, v, x, y, z};
                    return false;
                }
        }
    return true;
}

TbwsResult tbws_check(const Graph& g, const Bitset& a1, const Bitset& a2,
                      const Bitset& b1, const Bitset& b2) {
    Bitset a = a1 | a2, b = b1 | b2;
    if (a.intersects(b) || a1.intersects(a2) || b1.intersects(b2) || !(a | b).all())
        throw std::invalid_argument("a1,a2,b1,b2 do not partition the vertex set");
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.adj[v].intersects(a))
            throw std::invalid_argument("side A is not independent");
    for (int v = b.first(); v >= 0; v = b.next(v))
        if (g.adj[v].intersects(b))
            throw std::invalid_argument("side B is not independent");

    TbwsResult res;
    res.sys.moves.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.sys.moves[v] = a.test(v) ? a : b;
    res.start = a1 | b1;

    const Bitset* as[2] = {&a1, &a2};
    const Bitset* bs[2] = {&b1, &b2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Bitset& ai = *as[i];
            const Bitset& bj = *bs[j];
            Bitset both = ai | bj;
            // (1) all of A_i in one component of the induced subgraph
            if (ai.count() >= 2) {
                Bitset seed(g.n);
                seed.set(ai.first());
                Bitset reach = seed;
                while (true) {
                    Bitset nx(g.n);
                    for (int v = reach.first(); v >= 0; v = reach.next(v)) nx |= g.adj[v];
                    nx &= both;
                    nx.andnot(reach);
                    if (nx.none()) break;
                    reach |= nx;
                }
                if (!ai.subset_of(reach)) {
                    res.reason = "A" + std::to_string(i + 1) +
                                 " is disconnected within A" + std::to_string(i + 1) +
                                 " u B" + std::to_string(j + 1);
                    return res;
                }
            }
            // (2) every vertex of B_j has a neighbor in A_i
            for (int v = bj.first(); v >= 0; v = bj.next(v))
                if (!g.adj[v].intersects(ai)) {
                    res.reason = "vertex " + std::to_string(v) + " of B" +
                                 std::to_string(j + 1) + " has no neighbor in A" +
                                 std::to_string(i + 1);
                    return res;
                }
        }
    res.ok = true;
    return res;
}

} // namespace legal
