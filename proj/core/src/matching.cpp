#include "legal/matching.hpp"
#include <algorithm>
#include <queue>

namespace legal {

// Standard O(V^3) blossom algorithm (Edmonds) over an adjacency predicate.
std::vector<int> max_matching(int n, const std::function<bool(int, int)>& adjacent) {
    std::vector<int> mate(n, -1), p(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<bool> mark(n, false);
        while (true) {
            a = base[a];
            mark[a] = true;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        while (true) {
            b = base[b];
            if (mark[b]) return b;
            b = p[mate[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = 0; to < n; ++to) {
                if (!adjacent(v, to)) continue;
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = true;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        int u = find_path(v);
        if (u == -1) continue;
        while (u != -1) {
            int pv = p[u], ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
    return mate;
}

Antimatching perfect_antimatching(const Graph& g) {
    Antimatching r;
    if (g.n % 2 != 0) {
        r.reason = "odd order";
        return r;
    }
    auto mate = max_matching(g.n, [&](int u, int v) {
        return u != v && !g.has_edge(u, v);
    });
    for (int v = 0; v < g.n; ++v)
        if (mate[v] == -1) {
            r.reason = "no perfect antimatching";
            return r;
        }
    r.ok = true;
    for (int v = 0; v < g.n; ++v)
        if (v < mate[v]) r.pairs.push_back({v, mate[v]});
    return r;
}

} // namespace legal
