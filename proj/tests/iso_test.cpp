#include "legal/families.hpp"
#include "legal/iso.hpp"
#include "legal/rng.hpp"
#include <doctest.h>
#include <numeric>

using namespace legal;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

} // namespace

TEST_CASE("isomorphism found for relabeled graphs and certified valid") {
    for (auto fb : {wagner(), icosahedron(), tutte(), brinkmann()}) {
        Rng rng(7);
        std::vector<int> perm(fb.g.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = fb.g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        Graph h = permuted(fb.g, perm);
        auto phi = find_isomorphism(fb.g, h);
        CAPTURE(fb.name);
        REQUIRE(phi.has_value());
        for (int u = 0; u < fb.g.n; ++u)
            for (int v = u + 1; v < fb.g.n; ++v)
                CHECK(fb.g.has_edge(u, v) == h.has_edge((*phi)[u], (*phi)[v]));
    }
}

TEST_CASE("non-isomorphic graphs with equal degree sequences") {
    Graph c6(6), cc(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    for (int i = 0; i < 3; ++i) {
        cc.add_edge(i, (i + 1) % 3);
        cc.add_edge(3 + i, 3 + (i + 1) % 3);
    }
    CHECK(!isomorphic(c6, cc));
    CHECK(!isomorphic(c6, Graph(6)));
    // Wagner vs the cube: both 3-regular on 8 vertices.
    CHECK(!isomorphic(wagner().g, hypercube(3).g));
    CHECK(isomorphic(Graph(0), Graph(0)));
}
