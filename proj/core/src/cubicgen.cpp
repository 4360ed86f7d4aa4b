#include "legal/cubicgen.hpp"
#include "legal/iso.hpp"
#include <algorithm>

namespace legal {

namespace {

EmbeddedGraph k4() {
    EmbeddedGraph e;
    e.g = Graph(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) e.g.add_edge(u, v);
    e.rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    return e;
}

bool spherical(const EmbeddedGraph& e) {
    try {
        trace_faces(e);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// Subdivide the undirected edges (u1,v1) and (u2,v2) with new vertices x and
// y, join x-y, and fix the rotations. The cyclic position of the new vertex
// at x and y depends on which side of each edge the other one lies, so all
// four insertion orders are tried and the (unique) spherical one is kept.
std::optional<EmbeddedGraph> expand(const EmbeddedGraph& e, int u1, int v1, int u2, int v2) {
    int n = e.g.n, x = n, y = n + 1;
    Graph g(n + 2);
    for (auto [a, b] : e.g.edges())
        if (!((a == u1 && b == v1) || (a == v1 && b == u1) || (a == u2 && b == v2) ||
              (a == v2 && b == u2)))
            g.add_edge(a, b);
    g.add_edge(u1, x);
    g.add_edge(v1, x);
    g.add_edge(u2, y);
    g.add_edge(v2, y);
    g.add_edge(x, y);

    std::vector<std::vector<int>> rot = e.rot;
    rot.resize(n + 2);
    auto subst = [&](int at, int from, int to) {
        for (int& w : rot[at])
            if (w == from) w = to;
    };
    subst(u1, v1, x);
    subst(v1, u1, x);
    subst(u2, v2, y);
    subst(v2, u2, y);
    for (int fx = 0; fx < 2; ++fx)
        for (int fy = 0; fy < 2; ++fy) {
            rot[x] = fx ? std::vector<int>{u1, y, v1} : std::vector<int>{u1, v1, y};
            rot[y] = fy ? std::vector<int>{u2, x, v2} : std::vector<int>{u2, v2, x};
            EmbeddedGraph out{g, rot};
            if (spherical(out)) return out;
        }
    return std::nullopt;
}

} // namespace

std::vector<EmbeddedGraph> cubic_planar_graphs(int max_n, size_t cap_per_n) {
    std::vector<EmbeddedGraph> all;
    if (max_n < 4) return all;
    all.push_back(k4());
    size_t level_begin = 0;
    for (int n = 4; n + 2 <= max_n; n += 2) {
        size_t level_end = all.size();
        std::vector<EmbeddedGraph> next;
        for (size_t idx = level_begin; idx < level_end; ++idx) {
            // Copy: growing `all` may reallocate while we expand.
            EmbeddedGraph base = all[idx];
            FaceTrace ft = trace_faces(base);
            for (auto& face : ft.faces) {
                int len = (int)face.size();
                for (int i = 0; i < len && next.size() < cap_per_n; ++i)
                    for (int j = i + 1; j < len; ++j) {
                        int u1 = face[i], v1 = face[(i + 1) % len];
                        int u2 = face[j], v2 = face[(j + 1) % len];
                        if ((std::min(u1, v1) == std::min(u2, v2)) &&
                            (std::max(u1, v1) == std::max(u2, v2)))
                            continue; // same undirected edge
                        auto out = expand(base, u1, v1, u2, v2);
                        if (!out) continue;
                        bool dup = false;
                        for (auto& seen : next)
                            if (isomorphic(seen.g, out->g)) {
                                dup = true;
                                break;
                            }
                        if (!dup) next.push_back(*out);
                    }
            }
        }
        level_begin = all.size();
        for (auto& e : next) all.push_back(std::move(e));
        if (next.empty()) break;
    }
    return all;
}

} // namespace legal
