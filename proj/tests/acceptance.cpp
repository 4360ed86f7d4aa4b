// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion recomputes its claim from scratch.
#include "legal/checks.hpp"
#include "legal/cubicgen.hpp"
#include "legal/families.hpp"
#include "legal/iso.hpp"
#include "legal/random_lab.hpp"
#include "legal/search.hpp"
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace legal;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string what;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

// Orbit frequency of a clique via the affine-rank identity: states of the
// orbit containing clique c are solutions x of  sum_i x_i b_i[v] = 1 - s0[v]
// for each v in c. Frequency is 0 if inconsistent, else 2^-(rank of the
// c-rows). Independent of orbit enumeration.
Rat affine_clique_frequency(const GF2Basis& b, const Bitset& s0, const std::vector<int>& c) {
    int k = (int)c.size(), r = b.rank();
    // rows: one per clique vertex, r coefficient bits + 1 rhs bit
    std::vector<uint64_t> rows;
    for (int v : c) {
        uint64_t row = 0;
        for (int i = 0; i < r; ++i)
            if (b.rows[i].test(v)) row |= 1ull << i;
        if (!s0.test(v)) row |= 1ull << r; // rhs = 1 - s0[v]
        rows.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < r && rank < k; ++col) {
        int piv = -1;
        for (int i = rank; i < k; ++i)
            if (rows[i] >> col & 1) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < k; ++i)
            if (i != rank && (rows[i] >> col & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    for (int i = rank; i < k; ++i)
        if (rows[i]) return Rat(0); // 0 = ... = 1: inconsistent
    long long den = 1;
    for (int i = 0; i < rank; ++i) den *= 2;
    return Rat(1, den);
}

std::vector<std::vector<int>> cliques_up_to_3(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.n; ++v) out.push_back({v});
    for (auto [u, v] : g.edges()) {
        out.push_back({u, v});
        Bitset common = g.adj[u] & g.adj[v];
        for (int w = common.next(v); w >= 0; w = common.next(w)) out.push_back({u, v, w});
    }
    return out;
}

bool c01_example23(std::string& why) {
    auto t0 = Clock::now();
    auto fb = example_2_3();
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    bool ok = expect(rep.legal && rep.orbit_size == 8, why, "bundled orbit not legal of size 8");
    Bitset sp = Bitset::of(4, {0, 1, 3}); // S' = {1,2,4} in 1-based labels
    auto bad = verify_legal_orbit(fb.g, *fb.sys, sp);
    ok &= expect(!bad.legal, why, "S' verdict not illegal");
    ok &= expect(bad.witness && bad.witness->to_vector() == std::vector<int>{1, 3}, why,
                 "witness is not {2,4}");
    ok &= expect((sp ^ fb.sys->moves[0]) == *bad.witness, why,
                 "witness not reached by the move at vertex 0");
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    ok &= expect(ms < 1.0, why, "exceeded 1 ms");
    return ok;
}

bool c02_cube(std::string& why) {
    auto fb = hypercube(3);
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    return expect(rep.legal, why, "bipartition system not legal") &
           expect(rep.orbit_size == 4, why, "orbit size != 4") &
           expect(curvature(fb.g) == Rat(0), why, "curvature != 0") &
           expect(girth(fb.g) == 4, why, "girth != 4");
}

bool c03_wagner(std::string& why) {
    auto t0 = Clock::now();
    auto fb = wagner();
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    bool ok = expect(rep.legal && rep.orbit_size == 8, why, "bundled system not legal orbit 8");
    auto r = search_partition_system(fb.g); // exhaustive over independent partitions
    ok &= expect(r.status == SystemSearchResult::None, why,
                 "exhaustive search did not certify none");
    ok &= expect(curvature(fb.g, 2) == Rat(0), why, "kappa_2 != 0");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 60, why,
                 "exceeded 1 minute");
    return ok;
}

bool c04_tbws(std::string& why) {
    auto fb = tbws_example();
    auto r = tbws_check(fb.g, Bitset::of(12, {0, 1, 2}), Bitset::of(12, {3, 4, 5}),
                        Bitset::of(12, {6, 7, 8}), Bitset::of(12, {9, 10, 11}));
    bool ok = expect(r.ok, why, "tbws_check failed: " + r.reason);
    if (!r.ok) return false;
    auto rep = verify_legal_orbit(fb.g, r.sys, r.start);
    return ok & expect(rep.legal, why, "emitted {A,B} system not legal");
}

bool c05_cell24(std::string& why) {
    auto t0 = Clock::now();
    auto fb = cell24();
    bool ok = expect(fb.g.n == 24 && fb.g.edge_count() == 96, why, "wrong vertex/edge counts");
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    ok &= expect(rep.legal && rep.rank == 3, why, "3-class system not legal");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 1, why,
                 "exceeded 1 second");
    return ok;
}

bool c06_icosahedron(std::string& why) {
    auto fb = icosahedron();
    int pairs[6][2] = {{0, 5}, {2, 9}, {1, 10}, {3, 4}, {7, 8}, {6, 11}};
    GF2Basis b = move_span(*fb.sys);
    LegalityChecker chk(fb.g);
    auto two_triangles = [&](const Bitset& side) {
        if (side.count() != 6) return false;
        int edges = 0;
        for (int v = side.first(); v >= 0; v = side.next(v))
            edges += (fb.g.adj[v] & side).count();
        if (edges != 12) return false; // 6 induced edges
        // Two components of size 3 with 3 edges each = two disjoint triangles.
        Bitset comp(fb.g.n), fr(fb.g.n);
        int r = side.first();
        comp.set(r);
        fr.set(r);
        while (fr.any()) {
            Bitset nx(fb.g.n);
            for (int v = fr.first(); v >= 0; v = fr.next(v)) nx |= fb.g.adj[v];
            nx &= side;
            nx.andnot(comp);
            comp |= nx;
            fr = nx;
        }
        return comp.count() == 3;
    };
    int legal_states = 0, illegal = 0;
    bool some_legal_orbit = false, single_coset = true, triangles_ok = true;
    std::optional<Bitset> leader;
    for (int p = 0; p < 64; ++p) {
        Bitset s(12);
        for (int c = 0; c < 6; ++c) s.set(pairs[c][p >> c & 1]);
        if (chk.is_legal(s)) {
            ++legal_states;
            if (verify_legal_orbit(fb.g, *fb.sys, s).legal) some_legal_orbit = true;
        } else {
            ++illegal;
            Bitset lead = b.reduce(s);
            if (!leader) leader = lead;
            else if (*leader != lead) single_coset = false;
            if (!two_triangles(s) && !two_triangles(~s)) triangles_ok = false;
        }
    }
    bool ok = expect(some_legal_orbit, why, "no one-per-color state has a legal orbit");
    ok &= expect(illegal > 0, why, "expected some illegal one-per-color states");
    ok &= expect(single_coset, why, "illegal states span more than one M-orbit");
    ok &= expect(triangles_ok, why, "an illegal state does not split into two triangles");
    return ok;
}

bool c07_cell600(std::string& why) {
    auto t0 = Clock::now();
    auto fb = cell600();
    bool ok = expect(fb.g.n == 120 && fb.g.edge_count() == 720, why, "wrong counts");
    Graph ico = icosahedron().g;
    for (int v = 0; v < 100 && ok; ++v) {
        auto nb = fb.g.adj[v].to_vector();
        Graph link((int)nb.size());
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (fb.g.has_edge(nb[i], nb[j])) link.add_edge((int)i, (int)j);
        ok &= expect(isomorphic(link, ico), why,
                     "link of vertex " + std::to_string(v) + " is not icosahedral");
    }
    OrbitOptions single;
    single.threads = 1;
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start, single);
    ok &= expect(rep.legal, why, "orbit not legal");
    ok &= expect(rep.orbit_size == (1ull << 20), why, "orbit size != 2^20");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 600, why,
                 "exceeded 10 minutes");
    return ok;
}

bool c08_brinkmann(std::string& why) {
    auto t0 = Clock::now();
    auto fb = brinkmann();
    bool ok = expect(fb.g.n == 21 && fb.g.edge_count() == 42, why, "wrong counts");
    ok &= expect(girth(fb.g) == 5, why, "girth != 5");
    ok &= expect(curvature(fb.g, 2) == Rat(1), why, "kappa_2 != 1");
    SystemSearchOptions opts;
    opts.mode = SearchMode::ColoringDriven;
    auto r = search_partition_system(fb.g, opts);
    ok &= expect(r.status == SystemSearchResult::Found, why, "no colored system found");
    if (r.status == SystemSearchResult::Found) {
        ok &= expect(r.classes.size() == 4, why, "not a 4-class system");
        auto rep = verify_legal_orbit(fb.g, r.sys, r.start);
        ok &= expect(rep.legal && rep.orbit_size == 16, why, "found system not legal orbit 16");
    }
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 300, why,
                 "exceeded 5 minutes");
    return ok;
}

bool c09_dual_lobell(std::string& why) {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 5; n <= 12; ++n) {
        auto fb = dual_lobell(n);
        auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
        ok &= expect(rep.legal, why, "dual lobell " + std::to_string(n) + " system not legal");
        ok &= expect(pogorelov_check(*fb.emb).pass(), why,
                     "pogorelov fails for n = " + std::to_string(n));
    }
    ok &= expect(isomorphic(dual_lobell(5).g, icosahedron().g), why,
                 "dual lobell 5 is not the icosahedron");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 10, why,
                 "exceeded 10 seconds");
    return ok;
}

bool c10_blowup(std::string& why) {
    auto t0 = Clock::now();
    auto fb = blowup_cube(3, 7);
    bool ok = expect(girth(fb.g).value_or(0) >= 6, why, "girth < 6");
    ok &= expect(curvature(fb.g, 2) == Rat(0), why, "kappa_2 != 0");
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    ok &= expect(rep.legal, why, "preimage system not legal");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 10, why,
                 "exceeded 10 seconds");
    return ok;
}

bool c11_lambda(std::string& why) {
    auto t0 = Clock::now();
    // Lambda(5,3): plain legal states exist (e.g. a single natural), so the
    // no-legal-system claim needs the certificate (degree condition plus the
    // exhaustive absence of strongly legal states).
    auto l53 = bipartite_cone(5, 3);
    bool ok = expect(exists_legal_state(l53.g).has_value(), why,
                     "Lambda(5,3) unexpectedly has no plain legal state");
    ok &= expect(certify_no_legal_system(l53.g), why, "Lambda(5,3) not certified system-free");
    auto l65 = bipartite_cone(6, 5);
    auto rep = verify_legal_orbit(l65.g, *l65.sys, *l65.start);
    ok &= expect(rep.legal, why, "Lambda(6,5) bipartition system not legal");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 5, why,
                 "exceeded 5 seconds");
    return ok;
}

bool c12_equivalence(std::string& why) {
    auto t0 = Clock::now();
    auto gs = cubic_planar_graphs(12);
    bool ok = expect(gs.size() >= 20, why, "harness generated too few graphs");
    for (auto& e : gs) {
        auto ham = find_hamiltonian_cycle(e.g);
        bool is_ham = ham.status == HamiltonResult::Found;
        VFGraph vf = vf_graph(e);
        auto s = exists_legal_state(vf.g, 28, /*strong=*/true);
        ok &= expect(is_ham == s.has_value(), why,
                     "hamiltonicity/VF-state mismatch at n = " + std::to_string(e.g.n));
        if (is_ham) {
            Bitset st = hamilton_to_state(e, ham.cycle);
            auto cyc = state_to_hamilton(e, st);
            Bitset again = hamilton_to_state(e, cyc);
            ok &= expect(again == st, why, "round-trip did not close");
        }
    }
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 600, why,
                 "exceeded 10 minutes");
    return ok;
}

bool c13_tutte(std::string& why) {
    auto t0 = Clock::now();
    auto fb = tutte();
    auto ham = find_hamiltonian_cycle(fb.g, 1ull << 40);
    bool ok = expect(ham.status == HamiltonResult::None, why,
                     "tutte search did not certify non-hamiltonicity");
    VFGraph vf = vf_graph(*fb.emb);
    // By the equivalence theorem, non-hamiltonicity rules out strongly legal
    // VF states; the degree condition (every vertex nonadjacent to >= 2
    // others) then rules out legal systems outright.
    for (int v = 0; v < vf.g.n; ++v)
        ok &= expect(vf.g.n - 1 - vf.g.degree(v) >= 2, why, "degree condition fails on VF");
    ok &= expect(cusped_check(vf.emb).pass(), why, "cusped conditions fail on VF(tutte)");
    ok &= expect(curvature(vf.g, 2) == Rat(0), why, "kappa_2(VF) != 0");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 1800, why,
                 "exceeded 30 minutes");
    return ok;
}

bool c14_cone_chain(std::string& why) {
    auto fb = tutte();
    Graph bary = barycentric_skeleton(*fb.emb);
    bool ok = expect(bary.n == 46 + 69 + 25, why, "barycentric skeleton has wrong order");
    // Edge-vertices occupy ids 46..114; remove them descending so lower ids
    // keep their meaning. Each is a cone over the 4-cycle endpoint-face-
    // endpoint-face.
    Graph cur = bary;
    int applied = 0;
    try {
        for (int v = 114; v >= 46; --v) {
            cur = restrict_cone_system(cur, v).g;
            ++applied;
        }
    } catch (const std::exception& e) {
        return expect(false, why, std::string("cone reduction failed: ") + e.what());
    }
    ok &= expect(applied == 69, why, "did not apply 69 reductions");
    VFGraph vf = vf_graph(*fb.emb);
    ok &= expect(isomorphic(cur, vf.g), why, "reduced graph is not VF(tutte)");
    return ok;
}

bool c15_suite(std::string& why) {
    std::vector<FamilyBundle> suite;
    suite.push_back(example_2_3());
    for (int d = 2; d <= 4; ++d) suite.push_back(hypercube(d));
    suite.push_back(wagner());
    suite.push_back(icosahedron());
    suite.push_back(cell24());
    for (int n = 5; n <= 8; ++n) suite.push_back(dual_lobell(n));
    suite.push_back(bipartite_cone(6, 5));
    suite.push_back(blowup_cube(3, 7));
    suite.push_back(tbws_example());
    suite.push_back(cell600());
    bool ok = true;
    for (auto& fb : suite) {
        OrbitOptions opts;
        opts.threads = 4;
        auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start, opts);
        ok &= expect(rep.legal, why, fb.name + ": not legal");
        if (!rep.legal) continue;
        Rat k2 = curvature(fb.g, 2);
        ok &= expect(k2.num >= 0, why, fb.name + ": kappa_2 < 0");
        // Strong legality of orbit states, with the one sound exception: a
        // state whose bad vertex forces a singleton or co-singleton into the
        // orbit (example-2-3's orbit contains such states).
        GF2Basis b = move_span(*fb.sys);
        if (!rep.all_strongly_legal) {
            LegalityChecker chk(fb.g);
            Bitset s = *fb.start;
            uint64_t total = 1ull << b.rank();
            for (uint64_t i = 0; i < total; ++i) {
                if (i) s ^= b.rows[std::countr_zero(i)];
                if (chk.is_strongly_legal(s)) continue;
                for (int v = 0; v < fb.g.n; ++v) {
                    bool inside = s.test(v);
                    bool bad = inside ? !(fb.g.adj[v] & ~s).any() : !(fb.g.adj[v] & s).any();
                    if (!bad) continue;
                    Bitset forced = s ^ fb.sys->moves[v];
                    if ((int)forced.count() != (inside ? fb.g.n - 1 : 1) ||
                        forced.test(v) == inside)
                        ok &= expect(false, why, fb.name + ": bad vertex without forced state");
                }
            }
        }
        for (auto& c : cliques_up_to_3(fb.g)) {
            Rat want(1, 1ll << c.size());
            Rat got = affine_clique_frequency(b, *fb.start, c);
            if (!(got == want)) {
                ok &= expect(false, why, fb.name + ": clique frequency != 2^-d");
                break;
            }
        }
        // Cross-check the affine identity against direct orbit enumeration on
        // small instances.
        if (fb.g.n <= 24) {
            for (auto& c : cliques_up_to_3(fb.g)) {
                Bitset cb(fb.g.n);
                for (int v : c) cb.set(v);
                Rat enumerated = clique_orbit_frequency(fb.g, *fb.sys, *fb.start, cb);
                if (!(enumerated == affine_clique_frequency(b, *fb.start, c))) {
                    ok &= expect(false, why, fb.name + ": affine/enumeration mismatch");
                    break;
                }
            }
        }
        if (k2 == Rat(0))
            ok &= expect(all_states_trees(fb.g, *fb.sys, *fb.start), why,
                         fb.name + ": kappa_2 = 0 but a state is not a forest");
    }
    return ok;
}

bool c16_random(std::string& why) {
    auto t0 = Clock::now();
    const uint64_t seed = 42;
    auto row1 = monte_carlo("gnp", 50, 50, 0.5, 200, seed, 1);
    auto row8 = monte_carlo("gnp", 50, 50, 0.5, 200, seed, 8);
    bool ok = expect(experiment_csv_row(row1) == experiment_csv_row(row8), why,
                     "rows differ across thread counts");
    ok &= expect(row1.successes >= 190, why,
                 "success rate below 0.95: " + std::to_string(row1.successes) + "/200");
    // Re-verify every success by replaying its trial substream.
    int reverified = 0;
    for (int t = 0; t < 200; ++t) {
        Rng rng(seed, (uint64_t)t);
        Graph g = sample_gnp(50, 0.5, rng);
        uint64_t s1 = rng.next(), s2 = rng.next();
        PipelineResult pr = intermediate_pipeline(g, s1);
        if (!pr.ok) pr = high_density_pipeline(g, s2);
        if (!pr.ok) continue;
        if (!validate_system(g, pr.sys).empty() || !is_legal_state(g, pr.start)) {
            ok &= expect(false, why, "a success does not re-verify");
            continue;
        }
        // Spot-check transversals when the pipeline emitted pairs.
        if (!pr.pairs.empty()) {
            Rng sc(seed ^ 0x5eed, (uint64_t)t);
            LegalityChecker chk(g);
            for (int i = 0; i < 100; ++i) {
                Bitset s(g.n);
                for (auto& [x, y] : pr.pairs) s.set(sc.below(2) ? x : y);
                if (!chk.is_legal(s)) {
                    ok &= expect(false, why, "spot-check transversal illegal");
                    break;
                }
            }
        }
        ++reverified;
    }
    ok &= expect(reverified == row1.successes, why, "replay count disagrees with the row");
    ok &= expect(std::chrono::duration<double>(Clock::now() - t0).count() < 300, why,
                 "exceeded 5 minutes");
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "example 2.3 verdicts and witness", c01_example23},
        {2, "cube: legal bipartition, curvature 0, girth 4", c02_cube},
        {3, "wagner: legal orbit 8, no colored system, kappa_2 = 0", c03_wagner},
        {4, "bipartite example graph: tbws criterion and {A,B} system", c04_tbws},
        {5, "24-cell: 24/96, 3-class system legal", c05_cell24},
        {6, "icosahedron: one-per-color census", c06_icosahedron},
        {7, "600-cell: counts, icosahedral links, full-orbit verification", c07_cell600},
        {8, "brinkmann: invariants and 4-class search", c08_brinkmann},
        {9, "dual lobell 5..12: legal systems and pogorelov", c09_dual_lobell},
        {10, "blowup(3,7): girth, curvature, preimage system", c10_blowup},
        {11, "bipartite cones: Lambda(5,3) none, Lambda(6,5) legal", c11_lambda},
        {12, "hamiltonicity <-> strongly legal VF state on <= 12 vertices", c12_equivalence},
        {13, "tutte: certified non-hamiltonian, cusped VF, kappa_2 = 0", c13_tutte},
        {14, "69 cone reductions: barycentric skeleton -> VF(tutte)", c14_cone_chain},
        {15, "suite-wide invariants on every verified system", c15_suite},
        {16, "random graphs: success rate, determinism, re-verification", c16_random},
    };
    int failures = 0;
    for (auto& c : cs) {
        std::string why;
        bool pass = false;
        try {
            pass = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::printf("criterion %2d: %s - %s%s%s\n", c.id, pass ? "pass" : "FAIL",
                    c.what.c_str(), why.empty() ? "" : " | ", why.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
