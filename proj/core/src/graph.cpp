#include "legal/graph.hpp"
#include <numeric>
#include <functional>
#include <algorithm>

namespace legal {

bool induced_connected(const Graph& g, const Bitset& s) {
    if (s.none()) throw std::invalid_argument("empty set has no connectivity verdict");
    LegalityChecker chk(g);
    return chk.induced_connected(s);
}

bool is_legal_state(const Graph& g, const Bitset& s) {
    LegalityChecker chk(g);
    return chk.is_legal(s);
}

bool is_strongly_legal_state(const Graph& g, const Bitset& s) {
    LegalityChecker chk(g);
    return chk.is_strongly_legal(s);
}

bool connected(const Graph& g) {
    if (g.n == 0) return true;
    Bitset all(g.n);
    all.set_all();
    return induced_connected(g, all);
}

bool two_connected(const Graph& g) {
    if (g.n < 3 || !connected(g)) return false;
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
    int timer = 0;
    bool art = false;
    std::function<void(int)> dfs = [&](int u) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v = g.adj[u].first(); v >= 0; v = g.adj[u].next(v)) {
            if (disc[v] == -1) {
                ++children;
                parent[v] = u;
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (parent[u] == -1 && children > 1) art = true;
                if (parent[u] != -1 && low[v] >= disc[u]) art = true;
            } else if (v != parent[u]) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0);
    return !art;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at depths d(u), d(v) closes a
    // cycle of length d(u)+d(v)+1 through the root. Min over roots is exact.
    int best = -1;
    std::vector<int> dist(g.n), par(g.n), q(g.n);
    for (int r = 0; r < g.n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        par[r] = -1;
        int h = 0, t = 0;
        q[t++] = r;
        while (h < t) {
            int u = q[h++];
            for (int v = g.adj[u].first(); v >= 0; v = g.adj[u].next(v)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q[t++] = v;
                } else if (v != par[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

static void clique_extend(const Graph& g, int last, const Bitset& cand, int depth,
                          int max_depth, std::vector<long long>& counts) {
    if (depth + 1 < (int)counts.size()) {
        for (int v = cand.next(last); v >= 0; v = cand.next(v)) {
            ++counts[depth + 1];
            if (depth + 1 < max_depth) {
                Bitset c2 = cand & g.adj[v];
                clique_extend(g, v, c2, depth + 1, max_depth, counts);
            }
        }
    }
}

CliqueCensus clique_census(const Graph& g, int i_max) {
    int kmax = i_max + 1; // clique size in vertices
    CliqueCensus cc;
    cc.counts.assign(kmax + 1, 0);
    cc.counts[0] = 1;
    if (kmax >= 1) {
        for (int v = 0; v < g.n; ++v) {
            ++cc.counts[1];
            if (kmax >= 2) clique_extend(g, v, g.adj[v], 1, kmax, cc.counts);
        }
    }
    return cc;
}

Rat::Rat(long long p, long long q) : num(p), den(q) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long d = std::gcd(num < 0 ? -num : num, den);
    if (d > 1) { num /= d; den /= d; }
}
Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }

Rat curvature(const Graph& g, int n) {
    // kappa_n truncates at cliques on n vertices: kappa_2 = 1 - V/2 + E/4.
    int i_max = n < 0 ? g.n : n - 1;
    CliqueCensus cc = clique_census(g, i_max);
    // Largest i with K_i != 0 bounds the sum; weights are (-1/2)^{i+1}.
    Rat k(0);
    long long sign = 1, denom = 1;
    for (int i = -1; i <= i_max; ++i) {
        if (cc.K(i)) k = k + Rat(sign * cc.K(i), denom);
        sign = -sign;
        denom *= 2;
        if (denom > (1ll << 60)) break; // deeper cliques would be absent anyway
    }
    return k;
}

std::optional<std::pair<Bitset, Bitset>> bipartition(const Graph& g) {
    std::vector<int> color(g.n, -1), q(g.n);
    Bitset a(g.n), b(g.n);
    for (int r = 0; r < g.n; ++r) {
        if (color[r] != -1) continue;
        color[r] = 0;
        a.set(r);
        int h = 0, t = 0;
        q[t++] = r;
        while (h < t) {
            int u = q[h++];
            for (int v = g.adj[u].first(); v >= 0; v = g.adj[u].next(v)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    (color[v] ? b : a).set(v);
                    q[t++] = v;
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(a, b);
}

} // namespace legal
