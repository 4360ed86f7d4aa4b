#include "legal/families.hpp"
#include "legal/rng.hpp"
#include "legal/search.hpp"
#include "oracles.hpp"
#include <doctest.h>
#include <functional>

using namespace legal;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void check_found(const Graph& g, const SystemSearchResult& r) {
    REQUIRE(r.status == SystemSearchResult::Found);
    // Classes partition V into independent sets.
    Bitset cover(g.n);
    for (auto& c : r.classes) {
        CHECK(!c.intersects(cover));
        cover |= c;
        for (int u = c.first(); u >= 0; u = c.next(u))
            for (int v = c.next(u); v >= 0; v = c.next(v)) CHECK(!g.has_edge(u, v));
    }
    CHECK(cover.all());
    CHECK(validate_system(g, r.sys).empty());
    auto rep = verify_legal_orbit(g, r.sys, r.start);
    CHECK(rep.legal);
}

} // namespace

TEST_CASE("exhaustive search finds the cube system") {
    Graph g = hypercube(3).g;
    auto r = search_partition_system(g);
    check_found(g, r);
}

TEST_CASE("exhaustive search certifies none on wagner and complete graphs") {
    auto r = search_partition_system(wagner().g);
    CHECK(r.status == SystemSearchResult::None);
    CHECK(r.partitions_tested > 0);
    auto rk = search_partition_system(complete(5));
    CHECK(rk.status == SystemSearchResult::None);
}

TEST_CASE("search verdict matches brute force on small graphs") {
    // Brute force: all partitions into independent classes via recursive
    // assignment, all start states, closure oracle for the orbit.
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        Rng rng(seed);
        Graph g(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (rng.below(100) < 45) g.add_edge(u, v);
        bool want = false;
        std::vector<int> cls(6, -1);
        std::function<void(int, int)> rec = [&](int v, int used) {
            if (want) return;
            if (v == 6) {
                std::vector<Bitset> classes(used, Bitset(6));
                for (int u = 0; u < 6; ++u) classes[cls[u]].set(u);
                std::vector<Bitset> moves(6, Bitset(6));
                for (int u = 0; u < 6; ++u) moves[u] = classes[cls[u]];
                MoveSystem m{moves};
                if (!validate_system(g, m).empty()) return;
                // Any state whose whole orbit is legal makes the system legal;
                // the start need not be a union of classes.
                for (uint32_t pick = 1; pick < (1u << 6) - 1; ++pick) {
                    Bitset s0(6);
                    for (int u = 0; u < 6; ++u)
                        if (pick >> u & 1) s0.set(u);
                    auto orb = oracle::orbit_masks(g, moves, s0);
                    bool all = true;
                    for (uint32_t msk : orb) {
                        Bitset s(6);
                        for (int u = 0; u < 6; ++u)
                            if (msk >> u & 1) s.set(u);
                        if (!oracle::legal(g, s)) { all = false; break; }
                    }
                    if (all) { want = true; return; }
                }
                return;
            }
            for (int c = 0; c <= used && !want; ++c) {
                bool ok = true;
                for (int u = 0; u < v; ++u)
                    if (cls[u] == c && g.has_edge(u, v)) ok = false;
                if (!ok) continue;
                cls[v] = c;
                rec(v + 1, std::max(used, c + 1));
                cls[v] = -1;
            }
        };
        rec(0, 0);
        auto r = search_partition_system(g);
        CAPTURE(seed);
        CHECK((r.status == SystemSearchResult::Found) == want);
        if (r.status == SystemSearchResult::Found) check_found(g, r);
    }
}

TEST_CASE("coloring-driven search on a small graph agrees with exhaustive") {
    Graph g = hypercube(3).g;
    SystemSearchOptions opts;
    opts.mode = SearchMode::ColoringDriven;
    auto r = search_partition_system(g, opts);
    check_found(g, r);
}

TEST_CASE("exhaustive search above the threshold is refused") {
    SystemSearchOptions opts;
    opts.threshold = 5;
    CHECK_THROWS_AS(search_partition_system(wagner().g, opts), std::length_error);
}
