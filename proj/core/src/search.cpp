#include "legal/search.hpp"
#include "legal/rng.hpp"
#include <algorithm>
#include <bit>
#include <stdexcept>

namespace legal {

namespace {

// Apply the index permutation j -> j ^ lo (lo < 64) to the bits of a word.
inline uint64_t xor_permute(uint64_t x, unsigned lo) {
    static constexpr uint64_t M[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                      0x0f0f0f0f0f0f0f0full, 0x00ff00ff00ff00ffull,
                                      0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (unsigned b = 0; b < 6; ++b)
        if (lo >> b & 1u) {
            unsigned d = 1u << b;
            x = ((x >> d) & M[b]) | ((x & M[b]) << d);
        }
    return x;
}

// One level of the fold tree: the set of states s whose whole coset
// s + span(classes so far) is legal, as a bitmap over 2^n states, with a
// sorted index list mirror once the set is small.
struct Level {
    std::vector<uint64_t> words;
    std::vector<uint32_t> list;
    std::vector<uint32_t> dirty; // words touched by the last sparse fill
    uint64_t count = 0;
    bool sparse = false;
    bool dirty_all = false;
};

constexpr uint64_t SPARSE_CAP = 1u << 15;

struct FoldEngine {
    const Graph& g;
    int n;
    uint32_t full;
    size_t nwords;
    std::vector<uint32_t> nbr; // neighbor masks
    std::vector<Level> levels;
    std::vector<uint32_t> classes;
    int exact_k = -1; // -1: any class count
    uint64_t nodes = 0;
    uint32_t found_state = 0;
    bool found = false;

    explicit FoldEngine(const Graph& graph) : g(graph), n(graph.n) {
        full = n == 32 ? ~0u : (1u << n) - 1;
        nwords = n >= 6 ? (size_t)1 << (n - 6) : 1;
        nbr.resize(n);
        for (int v = 0; v < n; ++v)
            nbr[v] = (uint32_t)g.adj[v].word(0);
        levels.resize(n + 1);
        Level& root = levels[0];
        root.words.assign(nwords, 0);
        LegalityChecker chk(g);
        Bitset s(n);
        uint64_t cnt = 0;
        for (uint32_t m = 1; m < full; ++m) {
            uint32_t c = full & ~m;
            if (c < m) break; // legality is complement-symmetric
            s = Bitset::from_mask(n, m);
            if (!chk.is_legal(s)) continue;
            root.words[m >> 6] |= 1ull << (m & 63);
            root.words[c >> 6] |= 1ull << (c & 63);
            cnt += (c == m) ? 1 : 2;
        }
        root.count = cnt;
    }

    bool test(const std::vector<uint64_t>& w, uint32_t s) const {
        return w[s >> 6] >> (s & 63) & 1;
    }

    void fold(const Level& p, Level& c, uint32_t m) {
        unsigned hi = m >> 6, lo = m & 63u;
        if (c.words.size() != nwords) c.words.assign(nwords, 0);
        if (p.sparse) {
            if (c.dirty_all) {
                std::fill(c.words.begin(), c.words.end(), 0);
                c.dirty_all = false;
            } else {
                for (uint32_t w : c.dirty) c.words[w] = 0;
            }
            c.dirty.clear();
            c.list.clear();
            for (uint32_t s : p.list)
                if (test(p.words, s ^ m)) {
                    if (!(c.words[s >> 6])) c.dirty.push_back(s >> 6);
                    c.words[s >> 6] |= 1ull << (s & 63);
                    c.list.push_back(s);
                }
            c.count = c.list.size();
            c.sparse = true;
            return;
        }
        uint64_t cnt = 0;
        for (size_t w = 0; w < nwords; ++w) {
            uint64_t x = p.words[w] & xor_permute(p.words[w ^ hi], lo);
            c.words[w] = x;
            cnt += std::popcount(x);
        }
        c.count = cnt;
        c.dirty_all = true;
        c.dirty.clear();
        c.sparse = false;
        if (cnt <= SPARSE_CAP) {
            c.list.clear();
            for (size_t w = 0; w < nwords; ++w)
                for (uint64_t x = c.words[w]; x; x &= x - 1)
                    c.list.push_back((uint32_t)(w * 64 + std::countr_zero(x)));
            c.sparse = true;
        }
    }

    bool independent(uint32_t m) const {
        for (uint32_t t = m; t; t &= t - 1)
            if (nbr[std::countr_zero(t)] & m) return false;
        return true;
    }

    bool try_class(int depth, uint32_t assigned, uint32_t cls) {
        ++nodes;
        fold(levels[depth], levels[depth + 1], cls);
        if (levels[depth + 1].count == 0) return false;
        classes.push_back(cls);
        if (rec(depth + 1, assigned | cls)) return true;
        classes.pop_back();
        return false;
    }

    // Grow the class containing its lowest vertex: close it first (smaller
    // classes first), then add each admissible vertex in ascending order.
    bool extend(int depth, uint32_t assigned, uint32_t cls, uint32_t avail) {
        if (try_class(depth, assigned, cls)) return true;
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            if (extend(depth, assigned, cls | (1u << v), avail & ~nbr[v])) return true;
        }
        return false;
    }

    bool rec(int depth, uint32_t assigned) {
        if (assigned == full) {
            if (exact_k >= 0 && depth != exact_k) return false;
            const Level& l = levels[depth];
            if (l.sparse) {
                found_state = l.list.front();
            } else {
                for (size_t w = 0;; ++w)
                    if (l.words[w]) {
                        found_state = (uint32_t)(w * 64 + std::countr_zero(l.words[w]));
                        break;
                    }
            }
            found = true;
            return true;
        }
        if (exact_k >= 0 && depth == exact_k) return false;
        uint32_t unassigned = full & ~assigned;
        int low = std::countr_zero(unassigned);
        if (exact_k >= 0 && depth == exact_k - 1) {
            // Last class must absorb everything left.
            if (!independent(unassigned)) return false;
            return try_class(depth, assigned, unassigned);
        }
        return extend(depth, assigned, 1u << low, unassigned & ~(1u << low) & ~nbr[low]);
    }
};

std::vector<Bitset> sample_legal_states(const Graph& g, uint64_t seed, int want) {
    LegalityChecker chk(g);
    std::vector<Bitset> out;
    Rng rng(seed, 0xa11ull);
    for (int t = 0; t < 20000 && (int)out.size() < want; ++t) {
        Bitset s(g.n);
        for (int v = 0; v < g.n; ++v)
            if (rng.next() & 1) s.set(v);
        if (chk.is_legal(s)) out.push_back(s);
    }
    return out;
}

// Verify the whole coset s0 + span(classes) is legal by a Gray-code walk.
bool coset_legal(LegalityChecker& chk, const std::vector<Bitset>& classes, Bitset s) {
    int k = (int)classes.size();
    if (k > 26) return false; // refuse silently oversized cosets
    if (!chk.is_legal(s)) return false;
    uint64_t total = 1ull << k;
    for (uint64_t i = 1; i < total; ++i) {
        s ^= classes[std::countr_zero(i)];
        if (!chk.is_legal(s)) return false;
    }
    return true;
}

struct BigEngine {
    const Graph& g;
    int n, exact_k;
    uint64_t budget;
    const std::vector<Bitset>& seeds;
    LegalityChecker chk;
    std::vector<Bitset> classes;
    std::vector<int> assigned_count{0};
    Bitset assigned;
    uint64_t nodes = 0;
    bool over_budget = false;
    bool found = false;
    Bitset found_start;

    BigEngine(const Graph& graph, int k, uint64_t b, const std::vector<Bitset>& sds)
        : g(graph), n(graph.n), exact_k(k), budget(b), seeds(sds), chk(graph),
          assigned(graph.n), found_start(graph.n) {}

    bool rec(int depth) {
        if (over_budget) return false;
        if ((int)assigned.count() == n) {
            if (depth != exact_k) return false;
            if (++nodes > budget) { over_budget = true; return false; }
            for (const Bitset& s : seeds)
                if (coset_legal(chk, classes, s)) {
                    found = true;
                    found_start = s;
                    return true;
                }
            return false;
        }
        if (depth == exact_k) return false;
        int low = (~assigned).first();
        Bitset cls(n);
        cls.set(low);
        Bitset avail = ~assigned;
        avail.reset(low);
        avail.andnot(g.adj[low]);
        return extend(depth, cls, avail);
    }

    bool extend(int depth, Bitset cls, const Bitset& avail) {
        if (over_budget) return false;
        if (++nodes > budget) { over_budget = true; return false; }
        classes.push_back(cls);
        Bitset saved = assigned;
        assigned |= cls;
        if (rec(depth + 1)) return true;
        assigned = saved;
        classes.pop_back();
        for (int v = avail.first(); v >= 0; v = avail.next(v)) {
            Bitset c2 = cls;
            c2.set(v);
            Bitset a2 = avail;
            // keep ascending order: drop candidates <= v and neighbors of v
            for (int u = a2.first(); u >= 0 && u <= v; u = a2.next(u)) a2.reset(u);
            a2.andnot(g.adj[v]);
            if (extend(depth, c2, a2)) return true;
        }
        return false;
    }
};

SystemSearchResult pack(const Graph& g, const std::vector<uint32_t>& classes,
                        uint32_t state, uint64_t nodes) {
    SystemSearchResult r;
    r.status = SystemSearchResult::Found;
    r.partitions_tested = nodes;
    for (uint32_t c : classes) r.classes.push_back(Bitset::from_mask(g.n, c));
    r.sys.moves.resize(g.n);
    for (const Bitset& c : r.classes)
        for (int v = c.first(); v >= 0; v = c.next(v)) r.sys.moves[v] = c;
    r.start = Bitset::from_mask(g.n, state);
    return r;
}

} // namespace

SystemSearchResult search_partition_system(const Graph& g, const SystemSearchOptions& opts) {
    if (g.n <= 0) throw std::invalid_argument("empty graph");
    if (g.n <= opts.threshold && g.n <= 32) {
        FoldEngine eng(g);
        SystemSearchResult r;
        if (opts.mode == SearchMode::Exhaustive) {
            eng.exact_k = -1;
            if (eng.rec(0, 0)) return pack(g, eng.classes, eng.found_state, eng.nodes);
            r.status = SystemSearchResult::None;
            r.partitions_tested = eng.nodes;
            return r;
        }
        int lb = g.edge_count() > 0 ? 2 : 1;
        for (int k = lb; k <= std::min(opts.max_colors, g.n); ++k) {
            eng.exact_k = k;
            eng.classes.clear();
            if (eng.rec(0, 0)) return pack(g, eng.classes, eng.found_state, eng.nodes);
        }
        r.status = SystemSearchResult::None;
        r.partitions_tested = eng.nodes;
        return r;
    }
    if (opts.mode == SearchMode::Exhaustive)
        throw std::length_error("exhaustive system search needs n <= " +
                                    std::to_string(opts.threshold));
    // Large graph: seed states sampled once, shared across all partitions.
    std::vector<Bitset> seeds = sample_legal_states(g, opts.sample_seed, 64);
    SystemSearchResult r;
    uint64_t nodes = 0;
    bool over = false;
    int lb = g.edge_count() > 0 ? 2 : 1;
    for (int k = lb; k <= std::min(opts.max_colors, g.n); ++k) {
        BigEngine eng(g, k, opts.partition_budget, seeds);
        bool ok = eng.rec(0);
        nodes += eng.nodes;
        over = over || eng.over_budget;
        if (ok) {
            r.status = SystemSearchResult::Found;
            r.classes = eng.classes;
            r.sys.moves.resize(g.n);
            for (const Bitset& c : eng.classes)
                for (int v = c.first(); v >= 0; v = c.next(v)) r.sys.moves[v] = c;
            r.start = eng.found_start;
            r.partitions_tested = nodes;
            return r;
        }
    }
    r.status = SystemSearchResult::Inconclusive;
    r.partitions_tested = nodes;
    return r;
}

} // namespace legal
