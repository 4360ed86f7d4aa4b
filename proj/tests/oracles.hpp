#ifndef TEST_ORACLES_HPP
#define TEST_ORACLES_HPP

// Deliberately naive reference implementations, independent of the library's
// algorithms. Slow is fine; these only run on small inputs.

#include "legal/graph.hpp"
#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using legal::Bitset;
using legal::Graph;

// Union-find connectivity of the subgraph induced by a vertex list.
inline bool connected_set(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::vector<int> par(g.n);
    for (int v : vs) par[v] = v;
    auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    for (int u : vs)
        for (int v : vs)
            if (u < v && g.has_edge(u, v)) par[find(u)] = find(v);
    for (int v : vs)
        if (find(v) != find(vs[0])) return false;
    return true;
}

inline std::vector<int> members(const Bitset& s) { return s.to_vector(); }

inline std::vector<int> complement_members(const Graph& g, const Bitset& s) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (!s.test(v)) out.push_back(v);
    return out;
}

inline bool legal(const Graph& g, const Bitset& s) {
    auto in = members(s), out = complement_members(g, s);
    return !in.empty() && !out.empty() && connected_set(g, in) && connected_set(g, out);
}

inline bool strongly_legal(const Graph& g, const Bitset& s) {
    if (!legal(g, s)) return false;
    for (int v = 0; v < g.n; ++v) {
        bool side = s.test(v), ok = false;
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(u, v) && s.test(u) != side) ok = true;
        if (!ok) return false;
    }
    return true;
}

// First legal subset containing 0 by (size, lexicographic vertex list) order,
// scanning every mask; mirrors the library's canonical order independently.
inline std::optional<Bitset> first_legal(const Graph& g, bool strong) {
    for (int k = 1; k < g.n; ++k) {
        std::vector<std::vector<int>> candidates;
        for (uint32_t m = 1; m < (1u << g.n); ++m) {
            if (!(m & 1) || __builtin_popcount(m) != k) continue;
            std::vector<int> vs;
            for (int v = 0; v < g.n; ++v)
                if (m >> v & 1) vs.push_back(v);
            candidates.push_back(vs);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto& vs : candidates) {
            Bitset s = Bitset::of(g.n, vs);
            if (strong ? strongly_legal(g, s) : legal(g, s)) return s;
        }
    }
    return std::nullopt;
}

// Hamiltonicity by trying all vertex permutations starting at 0.
inline bool hamiltonian(const Graph& g) {
    if (g.n < 3) return false;
    std::vector<int> p(g.n - 1);
    for (int i = 0; i < g.n - 1; ++i) p[i] = i + 1;
    do {
        bool ok = g.has_edge(0, p.front()) && g.has_edge(p.back(), 0);
        for (size_t i = 0; ok && i + 1 < p.size(); ++i) ok = g.has_edge(p[i], p[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// All subsets of the orbit s0 + span(moves), as a set of masks (n <= 32).
inline std::set<uint32_t> orbit_masks(const Graph& g, const std::vector<Bitset>& moves,
                                      const Bitset& s0) {
    auto mask = [&](const Bitset& b) {
        uint32_t m = 0;
        for (int v = 0; v < g.n; ++v)
            if (b.test(v)) m |= 1u << v;
        return m;
    };
    std::set<uint32_t> orb{mask(s0)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (uint32_t s : std::set<uint32_t>(orb))
            for (auto& mv : moves)
                if (orb.insert(s ^ mask(mv)).second) grew = true;
    }
    return orb;
}

} // namespace oracle

#endif
