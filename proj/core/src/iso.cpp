#include "legal/iso.hpp"
#include <algorithm>
#include <numeric>

namespace legal {

namespace {

// Iterated neighbor-degree-multiset colors; cheap invariant per vertex.
std::vector<uint64_t> refine_colors(const Graph& g) {
    std::vector<uint64_t> col(g.n);
    for (int v = 0; v < g.n; ++v) col[v] = g.degree(v);
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> nxt(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<uint64_t> ns;
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u))
                ns.push_back(col[u]);
            std::sort(ns.begin(), ns.end());
            uint64_t h = col[v] * 0x9e3779b97f4a7c15ull;
            for (uint64_t x : ns) h = (h ^ x) * 0x100000001b3ull;
            nxt[v] = h;
        }
        col = nxt;
    }
    return col;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<uint64_t> ca, cb;
    std::vector<int> map;   // a -> b, -1 unset
    std::vector<int> used;  // b-vertex taken
    std::vector<int> order; // a-vertices, most-constrained first

    IsoSearch(const Graph& a_, const Graph& b_) : a(a_), b(b_) {
        ca = refine_colors(a);
        cb = refine_colors(b);
        map.assign(a.n, -1);
        used.assign(b.n, 0);
        // BFS-ish order: highest degree first, then prefer vertices with many
        // already-ordered neighbors so adjacency constraints bind early.
        std::vector<int> placed(a.n, 0);
        Bitset in_order(a.n);
        for (int step = 0; step < a.n; ++step) {
            int best = -1;
            for (int v = 0; v < a.n; ++v) {
                if (in_order.test(v)) continue;
                if (best == -1 || placed[v] > placed[best] ||
                    (placed[v] == placed[best] && a.degree(v) > a.degree(best)))
                    best = v;
            }
            order.push_back(best);
            in_order.set(best);
            for (int u = a.adj[best].first(); u >= 0; u = a.adj[best].next(u)) ++placed[u];
        }
    }

    bool rec(int depth) {
        if (depth == a.n) return true;
        int v = order[depth];
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || ca[v] != cb[w]) continue;
            bool ok = true;
            for (int u = a.adj[v].first(); u >= 0 && ok; u = a.adj[v].next(u))
                if (map[u] >= 0 && !b.has_edge(map[u], w)) ok = false;
            for (int u = 0; u < a.n && ok; ++u)
                if (map[u] >= 0 && !a.has_edge(v, u) && b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (rec(depth + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    auto ca = refine_colors(a), cb = refine_colors(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    IsoSearch s(a, b);
    if (s.rec(0)) return s.map;
    return std::nullopt;
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

} // namespace legal
