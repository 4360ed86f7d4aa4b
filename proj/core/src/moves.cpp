#include "legal/moves.hpp"
#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace legal {

std::vector<Violation> validate_system(const Graph& g, const MoveSystem& m) {
    std::vector<Violation> out;
    if (m.n() != g.n) throw std::invalid_argument("system width != graph order");
    for (int v = 0; v < g.n; ++v) {
        if (!m.moves[v].test(v)) out.push_back({1, v, -1});
        Bitset bad = m.moves[v] & g.adj[v];
        for (int u = bad.first(); u >= 0; u = bad.next(u)) out.push_back({2, v, u});
    }
    return out;
}

GF2Basis move_span(const MoveSystem& m) {
    GF2Basis b;
    // Deduplicate, keep first owner, process in ascending vertex order.
    std::vector<std::pair<Bitset, int>> uniq;
    for (int v = 0; v < m.n(); ++v) {
        bool dup = false;
        for (auto& [mv, owner] : uniq)
            if (mv == m.moves[v]) { dup = true; break; }
        if (!dup) uniq.push_back({m.moves[v], v});
    }
    for (auto& [mv, owner] : uniq) {
        Bitset r = mv;
        for (size_t i = 0; i < b.rows.size(); ++i)
            if (r.test(b.pivots[i])) r ^= b.rows[i];
        if (r.none()) continue;
        int p = r.first();
        // back-substitute to keep rows reduced
        for (size_t i = 0; i < b.rows.size(); ++i)
            if (b.rows[i].test(p)) b.rows[i] ^= r;
        size_t pos = 0;
        while (pos < b.pivots.size() && b.pivots[pos] < p) ++pos;
        b.rows.insert(b.rows.begin() + pos, r);
        b.pivots.insert(b.pivots.begin() + pos, p);
        b.provenance.insert(b.provenance.begin() + pos, owner);
    }
    return b;
}

namespace {

// Scan orbit indices [lo,hi) in Gray order; states_checked/min/max over the
// slice; records the lowest-index illegal state in the slice.
struct SliceResult {
    uint64_t first_fail = UINT64_MAX;
    Bitset fail_state;
    int min_size = INT32_MAX, max_size = 0;
    bool all_strong = true;
    uint64_t checked = 0;
};

SliceResult scan_slice(const Graph& g, const GF2Basis& b, const Bitset& s0,
                       uint64_t lo, uint64_t hi, bool exhaustive,
                       const std::atomic<uint64_t>* global_best) {
    SliceResult res;
    LegalityChecker chk(g);
    Bitset s = s0;
    uint64_t glo = lo ^ (lo >> 1);
    for (int bit = 0; bit < b.rank(); ++bit)
        if ((glo >> bit) & 1) s ^= b.rows[bit];
    for (uint64_t i = lo; i < hi; ++i) {
        if (i != lo) s ^= b.rows[std::countr_zero(i)]; // Gray step
        ++res.checked;
        int sz = s.count();
        res.min_size = std::min(res.min_size, sz);
        res.max_size = std::max(res.max_size, sz);
        if (!chk.is_legal(s)) {
            res.first_fail = i;
            res.fail_state = s;
            res.all_strong = false;
            if (!exhaustive) return res;
        } else if (!chk.is_strongly_legal(s)) {
            res.all_strong = false;
        }
        if (!exhaustive && global_best && (i & 0x3ff) == 0 &&
            global_best->load(std::memory_order_relaxed) < lo)
            return res; // an earlier slice already failed
    }
    return res;
}

} // namespace

OrbitReport verify_legal_orbit(const Graph& g, const MoveSystem& m, const Bitset& s0,
                               const OrbitOptions& opts) {
    auto viol = validate_system(g, m);
    if (!viol.empty()) throw std::invalid_argument("move system violates move properties");
    GF2Basis b = move_span(m);
    if (b.rank() > opts.rank_cap && !opts.override_cap)
        throw std::length_error("orbit rank " + std::to_string(b.rank()) +
                                 " exceeds cap " + std::to_string(opts.rank_cap));
    OrbitReport rep;
    rep.rank = b.rank();
    rep.orbit_size = 1ull << b.rank();

    int nthreads = std::max(1, opts.threads);
    uint64_t total = rep.orbit_size;
    if ((uint64_t)nthreads > total) nthreads = (int)total;

    std::vector<SliceResult> results(nthreads);
    std::atomic<uint64_t> best(UINT64_MAX);
    if (nthreads == 1) {
        results[0] = scan_slice(g, b, s0, 0, total, opts.exhaustive, nullptr);
    } else {
        std::vector<std::thread> ws;
        uint64_t chunk = (total + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            uint64_t lo = chunk * t, hi = std::min(total, lo + chunk);
            ws.emplace_back([&, t, lo, hi] {
                results[t] = scan_slice(g, b, s0, lo, hi, opts.exhaustive, &best);
                if (results[t].first_fail != UINT64_MAX) {
                    uint64_t cur = best.load();
                    while (results[t].first_fail < cur &&
                           !best.compare_exchange_weak(cur, results[t].first_fail)) {}
                }
            });
        }
        for (auto& w : ws) w.join();
    }

    rep.legal = true;
    rep.all_strongly_legal = true;
    rep.min_size = INT32_MAX;
    uint64_t best_fail = UINT64_MAX;
    Bitset best_state;
    for (auto& r : results) {
        rep.states_checked += r.checked;
        if (r.checked) {
            rep.min_size = std::min(rep.min_size, r.min_size);
            rep.max_size = std::max(rep.max_size, r.max_size);
        }
        if (!r.all_strong) rep.all_strongly_legal = false;
        if (r.first_fail < best_fail) {
            best_fail = r.first_fail;
            best_state = r.fail_state;
        }
    }
    if (rep.min_size == INT32_MAX) rep.min_size = 0;
    if (best_fail != UINT64_MAX) {
        rep.legal = false;
        rep.witness = best_state;
        rep.witness_coeffs = best_fail ^ (best_fail >> 1);
    }
    return rep;
}

std::optional<Bitset> exists_legal_state(const Graph& g, int threshold, bool strong) {
    if (g.n > threshold)
        throw std::length_error("exhaustive state search refused: n=" + std::to_string(g.n) +
                                 " exceeds threshold " + std::to_string(threshold));
    if (g.n == 0) return std::nullopt;
    LegalityChecker chk(g);
    // Subsets containing vertex 0, by increasing size then lexicographic.
    for (int k = 1; k < g.n; ++k) {
        std::vector<int> c(k - 1);
        for (int i = 0; i < k - 1; ++i) c[i] = i + 1;
        while (true) {
            Bitset s(g.n);
            s.set(0);
            for (int x : c) s.set(x);
            if (strong ? chk.is_strongly_legal(s) : chk.is_legal(s)) return s;
            // next (k-1)-combination of {1..n-1}
            int i = k - 2;
            while (i >= 0 && c[i] == g.n - 1 - (k - 2 - i)) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k - 1; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool certify_no_legal_system(const Graph& g, int threshold) {
    // Degree condition: every vertex nonadjacent to >= 2 others; this bars
    // singleton and co-singleton states from legal orbits (see header).
    for (int v = 0; v < g.n; ++v)
        if (g.n - 1 - g.degree(v) < 2) return false;
    return !exists_legal_state(g, threshold, /*strong=*/true).has_value();
}

bool verify_lawful_antimatching(const Graph& g, const std::vector<std::array<int, 2>>& am,
                                int threshold) {
    int k = (int)am.size();
    if (k > threshold)
        throw std::length_error("antimatching verification refused: k=" + std::to_string(k) +
                                 " exceeds threshold " + std::to_string(threshold));
    Bitset cover(g.n);
    for (auto& [a, b] : am) {
        if (cover.test(a) || cover.test(b) || a == b)
            throw std::invalid_argument("antimatching is not a partition");
        if (g.has_edge(a, b))
            throw std::invalid_argument("antimatching pair is adjacent");
        cover.set(a);
        cover.set(b);
    }
    if (!cover.all()) throw std::invalid_argument("antimatching does not cover V");

    std::vector<Bitset> swaps(k, Bitset(g.n));
    Bitset s(g.n);
    for (int i = 0; i < k; ++i) {
        swaps[i].set(am[i][0]);
        swaps[i].set(am[i][1]);
        s.set(am[i][0]);
    }
    LegalityChecker chk(g);
    uint64_t total = 1ull << k;
    for (uint64_t i = 0; i < total; ++i) {
        if (i) s ^= swaps[std::countr_zero(i)];
        if (!chk.is_legal(s)) return false;
    }
    return true;
}

Rat clique_orbit_frequency(const Graph& g, const MoveSystem& m, const Bitset& s0,
                           const Bitset& k) {
    for (int u = k.first(); u >= 0; u = k.next(u))
        for (int v = k.next(u); v >= 0; v = k.next(v))
            if (!g.has_edge(u, v)) throw std::invalid_argument("k is not a clique");
    if (!validate_system(g, m).empty())
        throw std::invalid_argument("invalid move system");
    GF2Basis b = move_span(m);
    uint64_t total = 1ull << b.rank(), hits = 0;
    Bitset s = s0;
    for (uint64_t i = 0; i < total; ++i) {
        if (i) s ^= b.rows[std::countr_zero(i)];
        if (k.subset_of(s)) ++hits;
    }
    return Rat((long long)hits, (long long)total);
}

namespace {

// edges(S) == |S| - components(S)  <=>  induced forest
bool induces_forest(const Graph& g, const Bitset& s, LegalityChecker& chk) {
    int edges = 0;
    for (int v = s.first(); v >= 0; v = s.next(v))
        edges += (g.adj[v] & s).count();
    edges /= 2;
    int comps = 0;
    Bitset rest = s;
    while (rest.any()) {
        ++comps;
        // peel one component
        Bitset comp(g.n), fr(g.n);
        int r = rest.first();
        comp.set(r);
        fr.set(r);
        while (fr.any()) {
            Bitset nx(g.n);
            for (int v = fr.first(); v >= 0; v = fr.next(v)) nx |= g.adj[v];
            nx &= rest;
            nx.andnot(comp);
            comp |= nx;
            fr = nx;
        }
        rest.andnot(comp);
    }
    (void)chk;
    return edges == s.count() - comps;
}

} // namespace

bool all_states_trees(const Graph& g, const MoveSystem& m, const Bitset& s0) {
    GF2Basis b = move_span(m);
    LegalityChecker chk(g);
    uint64_t total = 1ull << b.rank();
    Bitset s = s0;
    for (uint64_t i = 0; i < total; ++i) {
        if (i) s ^= b.rows[std::countr_zero(i)];
        if (!induces_forest(g, s, chk)) return false;
    }
    return true;
}

ConeReduction restrict_cone_system(const Graph& g, int v,
                                   const std::optional<MoveSystem>& m,
                                   const std::optional<Bitset>& s0) {
    Bitset nb = g.adj[v];
    if (nb.count() != 4)
        throw std::invalid_argument("cone vertex must have exactly 4 neighbors");
    // the 4 neighbors must induce a 4-cycle
    auto ns = nb.to_vector();
    int deg2 = 0;
    for (int u : ns) {
        int d = (g.adj[u] & nb).count();
        if (d != 2) throw std::invalid_argument("cone neighborhood is not a 4-cycle");
        ++deg2;
    }
    if (!induced_connected(g, nb))
        throw std::invalid_argument("cone neighborhood is not a 4-cycle");

    auto drop = [&](const Bitset& s) {
        Bitset r(g.n - 1);
        for (int u = s.first(); u >= 0; u = s.next(u)) {
            if (u == v) continue;
            r.set(u < v ? u : u - 1);
        }
        return r;
    };

    ConeReduction out;
    out.g = Graph(g.n - 1);
    if (!g.labels.empty()) {
        for (int u = 0; u < g.n; ++u)
            if (u != v) out.g.labels.push_back(g.labels[u]);
    }
    for (auto [a, c] : g.edges()) {
        if (a == v || c == v) continue;
        out.g.add_edge(a < v ? a : a - 1, c < v ? c : c - 1);
    }
    if (m) {
        MoveSystem ms;
        for (int u = 0; u < g.n; ++u)
            if (u != v) ms.moves.push_back(drop(m->moves[u]));
        out.sys = ms;
    }
    if (s0) out.start = drop(*s0);
    return out;
}

} // namespace legal
