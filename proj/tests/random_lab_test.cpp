#include "legal/matching.hpp"
#include "legal/random_lab.hpp"
#include "oracles.hpp"
#include <doctest.h>

using namespace legal;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("samplers are deterministic in the seed") {
    Rng a(42), b(42), c(43);
    Graph g1 = sample_gnp(20, 0.4, a), g2 = sample_gnp(20, 0.4, b), g3 = sample_gnp(20, 0.4, c);
    CHECK(g1.edges() == g2.edges());
    CHECK(g1.edges() != g3.edges());
    // Edge count near expectation (190 * 0.4 = 76); loose sanity band.
    int e = g1.edge_count();
    CHECK(e > 40);
    CHECK(e < 115);
    Rng d(1), e2(1);
    CHECK(sample_bipartite(8, 9, 0.5, d).edges() == sample_bipartite(8, 9, 0.5, e2).edges());
    Rng f(5);
    Graph bip = sample_bipartite(8, 9, 0.5, f);
    CHECK(bipartition(bip).has_value());
}

TEST_CASE("maximum matching on small graphs matches brute force") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(seed);
        int n = 6 + (int)(seed % 4);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < 40) g.add_edge(u, v);
        auto mate = max_matching(n, [&](int u, int v) { return g.has_edge(u, v); });
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (mate[v] >= 0) {
                CHECK(mate[mate[v]] == v);
                CHECK(g.has_edge(v, mate[v]));
                ++size;
            }
        size /= 2;
        // Brute force maximum matching by edge-subset search.
        auto es = g.edges();
        int best = 0;
        for (uint32_t m = 0; m < (1u << es.size()); ++m) {
            if (__builtin_popcount(m) <= best) continue;
            uint32_t used = 0;
            bool ok = true;
            for (size_t i = 0; ok && i < es.size(); ++i)
                if (m >> i & 1) {
                    uint32_t bits = (1u << es[i].first) | (1u << es[i].second);
                    if (used & bits) ok = false;
                    used |= bits;
                }
            if (ok) best = __builtin_popcount(m);
        }
        CAPTURE(seed);
        CHECK(size == best);
    }
}

TEST_CASE("perfect antimatching") {
    // K4 minus a perfect matching: complement is that matching.
    Graph g = complete(4);
    // remove edges 0-1 and 2-3 by rebuilding
    Graph h(4);
    h.add_edge(0, 2);
    h.add_edge(0, 3);
    h.add_edge(1, 2);
    h.add_edge(1, 3);
    auto am = perfect_antimatching(h);
    REQUIRE(am.ok);
    REQUIRE(am.pairs.size() == 2);
    for (auto& [x, y] : am.pairs) CHECK(!h.has_edge(x, y));
    CHECK(!perfect_antimatching(complete(4)).ok);
    CHECK(!perfect_antimatching(Graph(3)).ok);
    CHECK(perfect_antimatching(Graph(3)).reason == "odd order");
}

TEST_CASE("high density pipeline cases") {
    // K_n minus one edge: Case 1.
    Graph g = complete(6);
    Graph h(6);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 1)) h.add_edge(u, v);
    auto r = high_density_pipeline(h, 1);
    REQUIRE(r.ok);
    CHECK(r.method == "case1");
    CHECK(r.verification == "exhaustive");
    CHECK(validate_system(h, r.sys).empty());
    auto rep = verify_legal_orbit(h, r.sys, r.start);
    CHECK(rep.legal);

    // K8 minus a perfect matching: Case 2 with k = 4, exhaustive.
    Graph k8(8);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (v != u + 4 || u >= 4) k8.add_edge(u, v);
    auto r2 = high_density_pipeline(k8, 1);
    REQUIRE(r2.ok);
    CHECK(r2.method == "case2");
    CHECK(r2.verification == "exhaustive");
    CHECK(r2.pairs.size() == 4);
    CHECK(validate_system(k8, r2.sys).empty());

    // Complete graph: the designated failure.
    auto r3 = high_density_pipeline(complete(6), 1);
    CHECK(!r3.ok);
    CHECK(r3.fail_reason == "complete graph");
}

TEST_CASE("intermediate pipeline on a seeded dense graph") {
    Rng rng(2024);
    Graph g = sample_gnp(30, 0.6, rng);
    auto r = intermediate_pipeline(g, 99);
    if (r.ok) {
        CHECK(validate_system(g, r.sys).empty());
        CHECK(is_legal_state(g, r.start));
        // Every emitted pair is nonadjacent (it is an antimatching).
        for (auto& [x, y] : r.pairs) CHECK(!g.has_edge(x, y));
        // Random transversals of the pairs stay legal.
        Rng check(7);
        for (int t = 0; t < 200; ++t) {
            Bitset s(g.n);
            for (auto& [x, y] : r.pairs) s.set(check.below(2) ? x : y);
            CHECK(oracle::legal(g, s));
        }
    } else {
        CHECK(!r.fail_reason.empty());
    }
}

TEST_CASE("bipartite pipeline") {
    // Complete bipartite: succeeds.
    Graph kb(8);
    Bitset a = Bitset::of(8, {0, 1, 2, 3}), b = Bitset::of(8, {4, 5, 6, 7});
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) kb.add_edge(u, v);
    auto r = bipartite_pipeline(kb, a, b);
    REQUIRE(r.ok);
    auto rep = verify_legal_orbit(kb, r.sys, r.start);
    CHECK(rep.legal);
    CHECK(rep.rank == 2);
    // Empty bipartite graph: fails.
    auto r2 = bipartite_pipeline(Graph(8), a, b);
    CHECK(!r2.ok);
}

TEST_CASE("monte carlo rows are deterministic and thread-independent") {
    auto r1 = monte_carlo("gnp", 24, 24, 0.5, 40, 11, 1);
    auto r4 = monte_carlo("gnp", 24, 24, 0.5, 40, 11, 4);
    CHECK(r1.successes == r4.successes);
    CHECK(r1.case1 == r4.case1);
    CHECK(r1.case2 == r4.case2);
    CHECK(r1.intermediate == r4.intermediate);
    CHECK(r1.fail_reasons == r4.fail_reasons);
    CHECK(experiment_csv_row(r1) == experiment_csv_row(r4));
    CHECK(experiment_csv_header().substr(0, 5) == "model");
    CHECK(r1.successes + (int)[&] {
        int f = 0;
        for (auto& [k, v] : r1.fail_reasons) f += v;
        return f;
    }() == r1.trials);
    // The complete graph never succeeds.
    auto rc = monte_carlo("gnp", 10, 10, 1.0, 5, 3, 1);
    CHECK(rc.successes == 0);
    CHECK(rc.fail_reasons.at("complete graph") == 5);
}
