#include "legal/random_lab.hpp"
#include "legal/checks.hpp"
#include "legal/matching.hpp"
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace legal {

Graph sample_gnp(int n, double p, Rng& rng) {
    if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("sample_gnp: bad parameters");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

Graph sample_bipartite(int n1, int n2, double p, Rng& rng) {
    if (n1 < 0 || n2 < 0 || p < 0 || p > 1)
        throw std::invalid_argument("sample_bipartite: bad parameters");
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (rng.uniform() < p) g.add_edge(u, n1 + v);
    return g;
}

namespace {

Graph induced(const Graph& g, const std::vector<int>& vs) {
    Graph h((int)vs.size());
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) h.add_edge((int)i, (int)j);
    return h;
}

// Pair-incidence auxiliary graph: side vertices vs opposite-part pairs, joined
// when the vertex sees both elements of the pair. Must be connected (and
// nonempty of edges) for the antimatching argument.
bool aux_connected(const Graph& g, const std::vector<int>& side,
                   const std::vector<std::array<int, 2>>& pairs) {
    int ns = (int)side.size(), np = (int)pairs.size();
    if (ns == 0 || np == 0) return false;
    Graph aux(ns + np);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < np; ++j)
            if (g.has_edge(side[i], pairs[j][0]) && g.has_edge(side[i], pairs[j][1]))
                aux.add_edge(i, ns + j);
    return connected(aux);
}

// 500 random orbit states: one vertex per pair plus an arbitrary subset of the
// free vertices; every one must be legal.
bool spot_check(const Graph& g, const std::vector<std::array<int, 2>>& pairs,
                const std::vector<int>& free_vertices, Rng& rng) {
    LegalityChecker chk(g);
    for (int it = 0; it < 500; ++it) {
        Bitset s(g.n);
        for (auto& pr : pairs) s.set(pr[rng.next() & 1]);
        for (int v : free_vertices)
            if (rng.next() & 1) s.set(v);
        if (!chk.is_legal(s)) return false;
    }
    return true;
}

MoveSystem pair_system(int n, const std::vector<std::array<int, 2>>& pairs,
                       const std::vector<int>& singletons) {
    MoveSystem sys;
    sys.moves.assign(n, Bitset(n));
    for (auto& pr : pairs) {
        Bitset m = Bitset::of(n, {pr[0], pr[1]});
        sys.moves[pr[0]] = sys.moves[pr[1]] = m;
    }
    for (int v : singletons) sys.moves[v] = Bitset::of(n, {v});
    return sys;
}

} // namespace

PipelineResult intermediate_pipeline(const Graph& g, uint64_t seed) {
    PipelineResult r;
    r.method = "intermediate";
    int n = g.n;
    if (n < 4) {
        r.fail_reason = "graph too small";
        return r;
    }
    for (int attempt = 0; attempt < 5; ++attempt) {
        r.attempts = attempt + 1;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        if (attempt > 0) {
            Rng rng(seed, (uint64_t)attempt);
            for (int i = n - 1; i > 0; --i)
                std::swap(order[i], order[rng.below((uint64_t)i + 1)]);
        }
        int nn = n - n % 2;
        int leftover = n % 2 ? order[n - 1] : -1;
        int na = nn / 2 + (nn / 2) % 2; // both parts even, sizes <= n/2 + 1
        std::vector<int> A(order.begin(), order.begin() + na);
        std::vector<int> B(order.begin() + na, order.begin() + nn);

        Antimatching amA = perfect_antimatching(induced(g, A));
        if (!amA.ok) {
            r.fail_reason = "no antimatching in part A";
            continue;
        }
        Antimatching amB = perfect_antimatching(induced(g, B));
        if (!amB.ok) {
            r.fail_reason = "no antimatching in part B";
            continue;
        }
        std::vector<std::array<int, 2>> pairs;
        std::vector<std::array<int, 2>> pairsA, pairsB;
        for (auto& pr : amA.pairs) pairsA.push_back({A[pr[0]], A[pr[1]]});
        for (auto& pr : amB.pairs) pairsB.push_back({B[pr[0]], B[pr[1]]});

        if (!aux_connected(g, A, pairsB)) {
            r.fail_reason = "auxiliary graph on part A disconnected";
            continue;
        }
        if (!aux_connected(g, B, pairsA)) {
            r.fail_reason = "auxiliary graph on part B disconnected";
            continue;
        }
        pairs = pairsA;
        pairs.insert(pairs.end(), pairsB.begin(), pairsB.end());

        std::vector<int> singles;
        if (leftover >= 0) {
            bool attached = false;
            for (auto& pr : pairs)
                if (g.has_edge(leftover, pr[0]) && g.has_edge(leftover, pr[1]))
                    attached = true;
            if (!attached) {
                r.fail_reason = "leftover vertex not adjacent to both elements of any pair";
                continue;
            }
            singles.push_back(leftover);
        }

        r.sys = pair_system(n, pairs, singles);
        Bitset s(n);
        for (auto& pr : pairs) s.set(std::min(pr[0], pr[1]));
        if (leftover >= 0) s.set(leftover);
        r.start = s;
        r.pairs = pairs;

        Rng rng(seed, 0x5b0dull + attempt);
        if (!spot_check(g, pairs, singles, rng)) {
            r.fail_reason = "spot-check found an illegal transversal";
            return r;
        }
        if ((int)pairs.size() <= 24) {
            if (!verify_lawful_antimatching(g, pairs)) {
                r.fail_reason = "antimatching is not lawful";
                return r;
            }
            r.verification = "exhaustive";
        } else {
            r.verification = "spot-check";
        }
        r.ok = true;
        r.fail_reason.clear();
        return r;
    }
    return r;
}

PipelineResult high_density_pipeline(const Graph& g, uint64_t seed) {
    PipelineResult r;
    int n = g.n;
    long long hedges = (long long)n * (n - 1) / 2 - g.edge_count();
    if (hedges == 0) {
        r.fail_reason = "complete graph";
        return r;
    }
    if (hedges == 1) {
        int v = -1, w = -1;
        for (int u = 0; u < n && v < 0; ++u)
            for (int x = u + 1; x < n; ++x)
                if (!g.has_edge(u, x)) {
                    v = u;
                    w = x;
                    break;
                }
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
            if (u != v && u != w) rest.push_back(u);
        r.sys = pair_system(n, {{v, w}}, rest);
        r.start = Bitset::of(n, {v});
        r.pairs = {{v, w}};
        r.method = "case1";
        r.verification = "exhaustive"; // every other vertex sees both v and w
        r.ok = true;
        return r;
    }

    // greedy maximal matching of the complement, ascending edge order
    std::vector<int> mate(n, -1);
    std::vector<std::array<int, 2>> pairs;
    for (int u = 0; u < n; ++u) {
        if (mate[u] >= 0) continue;
        for (int v = u + 1; v < n; ++v)
            if (mate[v] < 0 && !g.has_edge(u, v)) {
                mate[u] = v;
                mate[v] = u;
                pairs.push_back({u, v});
                break;
            }
    }
    std::vector<int> D;
    for (int v = 0; v < n; ++v)
        if (mate[v] < 0) D.push_back(v);

    r.sys = pair_system(n, pairs, D);
    Bitset s0(n);
    for (auto& pr : pairs) s0.set(pr[0]);
    r.start = s0;
    r.pairs = pairs;
    r.method = "case2";

    int k = (int)pairs.size();
    if (k <= 20) {
        // all transversals connected and dominating the leftover clique
        LegalityChecker chk(g);
        Bitset s = s0;
        for (uint64_t i = 0;; ++i) {
            if (!chk.induced_connected(s)) {
                r.fail_reason = "disconnected transversal";
                return r;
            }
            for (int d : D)
                if (!g.adj[d].intersects(s)) {
                    r.fail_reason = "leftover vertex not dominated by a transversal";
                    return r;
                }
            if (i + 1 >= (1ull << k)) break;
            int b = std::countr_zero(i + 1);
            s ^= r.sys.moves[pairs[b][0]];
        }
        r.verification = "exhaustive";
    } else {
        Rng rng(seed, 0x41adull);
        if (!spot_check(g, pairs, D, rng)) {
            r.fail_reason = "spot-check found an illegal state";
            return r;
        }
        r.verification = "probabilistic";
    }
    r.ok = true;
    return r;
}

PipelineResult bipartite_pipeline(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.intersects(b) || !(a | b).all())
        throw std::invalid_argument("bipartite_pipeline: sides do not partition V");
    PipelineResult r;
    r.method = "bipartite";
    std::vector<int> la = a.to_vector(), lb = b.to_vector();
    if (la.size() < 2 || lb.size() < 2) {
        r.fail_reason = "side too small";
        return r;
    }
    int lefta = la.size() % 2 ? la.back() : -1;
    int leftb = lb.size() % 2 ? lb.back() : -1;
    if (lefta >= 0) la.pop_back();
    if (leftb >= 0) lb.pop_back();

    std::vector<int> sub = la;
    sub.insert(sub.end(), lb.begin(), lb.end());
    std::sort(sub.begin(), sub.end());
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = (int)i;
    Graph h = induced(g, sub);
    int m = (int)sub.size();
    Bitset a1(m), a2(m), b1(m), b2(m);
    for (size_t i = 0; i < la.size(); ++i)
        (i < la.size() / 2 ? a1 : a2).set(pos[la[i]]);
    for (size_t i = 0; i < lb.size(); ++i)
        (i < lb.size() / 2 ? b1 : b2).set(pos[lb[i]]);

    TbwsResult tb = tbws_check(h, a1, a2, b1, b2);
    if (!tb.ok) {
        r.fail_reason = tb.reason;
        return r;
    }
    auto sees_both = [&](int v, const Bitset& h1, const Bitset& h2) {
        bool s1 = false, s2 = false;
        for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) {
            if (pos[u] < 0) continue;
            if (h1.test(pos[u])) s1 = true;
            if (h2.test(pos[u])) s2 = true;
        }
        return s1 && s2;
    };
    if (lefta >= 0 && !sees_both(lefta, b1, b2)) {
        r.fail_reason = "leftover vertex sees only one half of the opposite side";
        return r;
    }
    if (leftb >= 0 && !sees_both(leftb, a1, a2)) {
        r.fail_reason = "leftover vertex sees only one half of the opposite side";
        return r;
    }

    MoveSystem sys;
    sys.moves.resize(g.n);
    for (int v = 0; v < g.n; ++v) sys.moves[v] = a.test(v) ? a : b;
    r.sys = sys;
    Bitset s(g.n);
    for (size_t i = 0; i < la.size() / 2; ++i) s.set(la[i]);
    for (size_t i = 0; i < lb.size() / 2; ++i) s.set(lb[i]);
    if (lefta >= 0) s.set(lefta);
    if (leftb >= 0) s.set(leftb);
    r.start = s;

    if (!verify_legal_orbit(g, sys, s).legal) {
        r.fail_reason = "orbit verification failed";
        return r;
    }
    r.verification = "exhaustive";
    r.ok = true;
    return r;
}

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string json_tally(const std::map<std::string, int>& m) {
    std::string s = "{";
    bool first = true;
    for (auto& [k, v] : m) {
        if (!first) s += ",";
        first = false;
        s += "\"" + k + "\":" + std::to_string(v);
    }
    return s + "}";
}

} // namespace

std::string experiment_csv_header() {
    return "model,n1,n2,p,trials,successes,case1,case2,intermediate,fail_reasons,seed\n";
}

std::string experiment_csv_row(const ExperimentRow& r) {
    std::string json = json_tally(r.fail_reasons);
    std::string esc = "\"";
    for (char c : json) {
        if (c == '"') esc += "\"\"";
        else esc += c;
    }
    esc += "\"";
    return r.model + "," + std::to_string(r.n1) + "," + std::to_string(r.n2) + "," +
           fmt_double(r.p) + "," + std::to_string(r.trials) + "," +
           std::to_string(r.successes) + "," + std::to_string(r.case1) + "," +
           std::to_string(r.case2) + "," + std::to_string(r.intermediate) + "," + esc +
           "," + std::to_string(r.seed) + "\n";
}

ExperimentRow monte_carlo(const std::string& model, int n1, int n2, double p, int trials,
                          uint64_t seed, int threads) {
    if (model != "gnp" && model != "bip")
        throw std::invalid_argument("monte_carlo: model must be gnp or bip");
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials >= 1");
    auto t0 = std::chrono::steady_clock::now();

    struct TrialOut {
        bool ok = false;
        std::string method;
        std::string reason;
    };
    std::vector<TrialOut> out(trials);
    threads = std::max(1, threads);

    auto worker = [&](int tid) {
        for (int t = tid; t < trials; t += threads) {
            Rng rng(seed, (uint64_t)t);
            TrialOut& o = out[t];
            if (model == "gnp") {
                Graph g = sample_gnp(n1, p, rng);
                uint64_t s1 = rng.next(), s2 = rng.next();
                PipelineResult pr = intermediate_pipeline(g, s1);
                if (pr.ok) {
                    o = {true, "intermediate", ""};
                    continue;
                }
                PipelineResult hd = high_density_pipeline(g, s2);
                if (hd.ok)
                    o = {true, hd.method, ""};
                else
                    o = {false, "", hd.fail_reason};
            } else {
                Graph g = sample_bipartite(n1, n2, p, rng);
                Bitset a(g.n), b(g.n);
                for (int v = 0; v < n1; ++v) a.set(v);
                for (int v = n1; v < g.n; ++v) b.set(v);
                PipelineResult pr = bipartite_pipeline(g, a, b);
                o = {pr.ok, pr.method, pr.ok ? "" : pr.fail_reason};
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    ExperimentRow row;
    row.model = model;
    row.n1 = n1;
    row.n2 = model == "bip" ? n2 : 0;
    row.p = p;
    row.trials = trials;
    row.seed = seed;
    for (auto& o : out) {
        if (o.ok) {
            ++row.successes;
            if (o.method == "case1") ++row.case1;
            else if (o.method == "case2") ++row.case2;
            else if (o.method == "intermediate") ++row.intermediate;
        } else {
            ++row.fail_reasons[o.reason];
        }
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

} // namespace legal
