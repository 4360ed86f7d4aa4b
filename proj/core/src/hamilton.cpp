#include "legal/graph.hpp"
#include <algorithm>

namespace legal {

namespace {

struct HamSearch {
    const Graph& g;
    uint64_t budget, nodes = 0;
    std::vector<int> path;
    Bitset onpath;
    Bitset scratch_vis, scratch_fr, scratch_nx;
    bool budget_hit = false;

    explicit HamSearch(const Graph& g_, uint64_t b)
        : g(g_), budget(b), onpath(g_.n),
          scratch_vis(g_.n), scratch_fr(g_.n), scratch_nx(g_.n) {}

    // All not-yet-visited vertices plus the current endpoint must stay
    // connected, and every unvisited vertex needs >= 2 available neighbors
    // (start counts as available for closing the cycle).
    bool prune(int cur) {
        Bitset avail = ~onpath;
        avail.set(cur);
        avail.set(path[0]);
        for (int v = avail.first(); v >= 0; v = avail.next(v)) {
            if (v == cur || v == path[0]) continue;
            if ((g.adj[v] & avail).count() < 2) return true;
        }
        // connectivity of avail from cur
        scratch_vis.clear();
        scratch_fr.clear();
        scratch_vis.set(cur);
        scratch_fr.set(cur);
        int want = avail.count(), seen = 1;
        while (seen < want) {
            scratch_nx.clear();
            for (int v = scratch_fr.first(); v >= 0; v = scratch_fr.next(v))
                scratch_nx |= g.adj[v];
            scratch_nx &= avail;
            scratch_nx.andnot(scratch_vis);
            if (scratch_nx.none()) return true;
            scratch_vis |= scratch_nx;
            seen += scratch_nx.count();
            scratch_fr = scratch_nx;
        }
        return false;
    }

    bool dfs(int cur) {
        if (++nodes > budget) { budget_hit = true; return false; }
        if ((int)path.size() == g.n)
            return g.has_edge(cur, path[0]);
        if (prune(cur)) return false;
        for (int v = g.adj[cur].first(); v >= 0; v = g.adj[cur].next(v)) {
            if (onpath.test(v)) continue;
            onpath.set(v);
            path.push_back(v);
            if (dfs(v)) return true;
            path.pop_back();
            onpath.reset(v);
            if (budget_hit) return false;
        }
        return false;
    }
};

} // namespace

HamiltonResult find_hamiltonian_cycle(const Graph& g, uint64_t budget) {
    HamiltonResult r{HamiltonResult::None, {}, 0};
    if (g.n == 0) return r;
    if (g.n == 1) { r.status = HamiltonResult::None; return r; }
    if (g.n == 2) { r.status = HamiltonResult::None; return r; } // simple graph: no 2-cycle
    if (!connected(g)) return r;
    HamSearch hs(g, budget);
    hs.path.push_back(0);
    hs.onpath.set(0);
    bool found = hs.dfs(0);
    r.nodes = hs.nodes;
    if (found) {
        r.status = HamiltonResult::Found;
        r.cycle = hs.path;
    } else if (hs.budget_hit) {
        r.status = HamiltonResult::Budget;
    }
    return r;
}

} // namespace legal
