#include "legal/families.hpp"
#include "legal/iso.hpp"
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace legal {

namespace {

constexpr double PI = 3.14159265358979323846;

// Rotation system of a planar straight-line drawing: neighbors in
// counterclockwise order around each vertex.
EmbeddedGraph embed_by_angles(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
    EmbeddedGraph e;
    e.g = g;
    e.rot.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) e.rot[v].push_back(u);
        auto& [vx, vy] = xy[v];
        std::sort(e.rot[v].begin(), e.rot[v].end(), [&](int a, int b) {
            return std::atan2(xy[a].second - vy, xy[a].first - vx) <
                   std::atan2(xy[b].second - vy, xy[b].first - vx);
        });
    }
    return e;
}

// Rotation system of a triangulation (every vertex link a cycle): each
// rotation is its link cycle, oriented consistently by flood fill from 0.
// Two rotations agree across an edge uv iff next(rot[v], u) == prev(rot[u], v).
EmbeddedGraph triangulation_rotations(const Graph& g) {
    auto link = [&](int v) {
        std::vector<int> nb;
        for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) nb.push_back(u);
        if (nb.size() < 3) throw std::runtime_error("triangulation_rotations: degree < 3");
        std::vector<int> cyc{nb[0]};
        int prev = -1;
        while (cyc.size() < nb.size()) {
            int cur = cyc.back(), nxt = -1;
            for (int u : nb)
                if (u != prev && u != cur && g.has_edge(cur, u) &&
                    std::find(cyc.begin(), cyc.end(), u) == cyc.end()) {
                    nxt = u;
                    break;
                }
            if (nxt < 0) throw std::runtime_error("triangulation_rotations: link is not a cycle");
            prev = cur;
            cyc.push_back(nxt);
        }
        if (!g.has_edge(cyc.back(), cyc.front()))
            throw std::runtime_error("triangulation_rotations: link is not a cycle");
        return cyc;
    };
    auto at = [](const std::vector<int>& r, int u, int step) {
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return r[(i + step + r.size()) % r.size()];
        throw std::runtime_error("triangulation_rotations: missing neighbor");
    };
    EmbeddedGraph e;
    e.g = g;
    e.rot.resize(g.n);
    std::vector<char> done(g.n, 0);
    e.rot[0] = link(0);
    done[0] = 1;
    std::vector<int> bfs{0};
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
        int u = bfs[qi];
        for (int v : e.rot[u]) {
            if (done[v]) continue;
            auto c = link(v);
            if (at(c, u, 1) != at(e.rot[u], v, -1)) std::reverse(c.begin(), c.end());
            e.rot[v] = c;
            done[v] = 1;
            bfs.push_back(v);
        }
    }
    trace_faces(e); // asserts Euler
    return e;
}

std::pair<double, double> polar(double deg, double r) {
    return {r * std::cos(deg * PI / 180.0), r * std::sin(deg * PI / 180.0)};
}

std::string bits_label(int v, int d) {
    std::string s;
    for (int b = d - 1; b >= 0; --b) s += char('0' + (v >> b & 1));
    return s;
}

Bitset hypercube_start(int d) {
    int n = 1 << d;
    Bitset s(n);
    if (d == 1) { s.set(0); return s; }
    if (d == 2) return Bitset::of(n, {0, 1});
    if (d == 3) return Bitset::of(n, {0, 2, 3, 7});
    // d >= 4: the zig-zag state of the 4-cube, then doubled up: the top copy
    // is the bottom state with the even-parity class flipped.
    std::vector<char> in(1 << 4, 0);
    for (int v : {0, 2, 3, 7, 8, 12, 13, 15}) in[v] = 1;
    for (int dd = 5; dd <= d; ++dd) {
        int half = 1 << (dd - 1);
        in.resize(2 * half);
        for (int v = 0; v < half; ++v)
            in[half + v] = in[v] ^ (std::popcount((unsigned)v) % 2 == 0);
    }
    for (int v = 0; v < n; ++v)
        if (in[v]) s.set(v);
    return s;
}

} // namespace

FamilyBundle hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube: d >= 1 required");
    if (d > 13) throw std::length_error("hypercube: d > 13 is too large");
    int n = 1 << d;
    FamilyBundle fb;
    fb.name = "hypercube-" + std::to_string(d);
    fb.g = Graph(n);
    for (int v = 0; v < n; ++v) {
        fb.g.labels.push_back(bits_label(v, d));
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) fb.g.add_edge(v, v | (1 << b));
    }
    Bitset even(n), odd(n);
    for (int v = 0; v < n; ++v)
        (std::popcount((unsigned)v) % 2 == 0 ? even : odd).set(v);
    MoveSystem sys;
    sys.moves.resize(n);
    for (int v = 0; v < n; ++v) sys.moves[v] = even.test(v) ? even : odd;
    fb.sys = sys;
    fb.start = hypercube_start(d);
    fb.note = "d-cube with the bipartition system; the d = 1 state is the "
              "conventional {0} even though K2 admits no fully legal orbit";
    return fb;
}

FamilyBundle wagner() {
    FamilyBundle fb;
    fb.name = "wagner";
    fb.g = Graph(8);
    for (int v = 0; v < 8; ++v) {
        fb.g.labels.push_back(std::to_string(v + 1));
        fb.g.add_edge(v, (v + 1) % 8);
    }
    for (int v = 0; v < 4; ++v) fb.g.add_edge(v, v + 4);
    Bitset m03 = Bitset::of(8, {0, 3, 5, 6});
    Bitset m47 = Bitset::of(8, {1, 2, 4, 7});
    Bitset m16 = Bitset::of(8, {1, 3, 4, 6});
    Bitset m25 = Bitset::of(8, {0, 2, 5, 7});
    MoveSystem sys;
    sys.moves = {m03, m16, m25, m03, m47, m25, m16, m47};
    fb.sys = sys;
    fb.start = Bitset::of(8, {0, 1, 3, 7});
    fb.note = "8-cycle with four long chords; four hand-picked moves, orbit of 8";
    return fb;
}

FamilyBundle example_2_3() {
    FamilyBundle fb;
    fb.name = "example-2-3";
    fb.g = Graph(4);
    for (int v = 0; v < 4; ++v) fb.g.labels.push_back(std::to_string(v + 1));
    fb.g.add_edge(0, 1);
    fb.g.add_edge(1, 2);
    fb.g.add_edge(2, 3);
    fb.g.add_edge(3, 0);
    fb.g.add_edge(0, 2);
    MoveSystem sys;
    Bitset m13 = Bitset::of(4, {1, 3});
    sys.moves = {Bitset::of(4, {0}), m13, Bitset::of(4, {2}), m13};
    fb.sys = sys;
    fb.start = Bitset::of(4, {3});
    fb.note = "4-cycle 1-2-3-4 with chord 1-3; three-part system, start {4}";
    return fb;
}

FamilyBundle icosahedron() {
    FamilyBundle fb;
    fb.name = "icosahedron";
    fb.g = Graph(12);
    fb.g.labels = {"i90", "i210", "i330", "m30",  "m150", "m270",
                   "r90", "r210", "r330", "o30",  "o150", "o270"};
    int E[30][2] = {{0, 1}, {1, 2},  {2, 0},  {3, 0},  {0, 4},  {4, 1},  {1, 5},  {5, 2},
                    {2, 3}, {6, 3},  {3, 8},  {8, 5},  {5, 7},  {7, 4},  {4, 6},  {6, 0},
                    {8, 2}, {7, 1},  {9, 6},  {6, 10}, {10, 7}, {7, 11}, {11, 8}, {8, 9},
                    {9, 3}, {10, 4}, {11, 5}, {9, 10}, {10, 11}, {11, 9}};
    for (auto& e : E) fb.g.add_edge(e[0], e[1]);

    int pairs[6][2] = {{0, 5}, {2, 9}, {1, 10}, {3, 4}, {7, 8}, {6, 11}};
    int color[12];
    for (int c = 0; c < 6; ++c) color[pairs[c][0]] = color[pairs[c][1]] = c;

    MoveSystem sys;
    sys.moves.resize(12);
    for (int v = 0; v < 12; ++v) {
        bool seen[6] = {};
        for (int u = fb.g.adj[v].first(); u >= 0; u = fb.g.adj[v].next(u))
            seen[color[u]] = true;
        int missing = -1;
        for (int c = 0; c < 6; ++c)
            if (c != color[v] && !seen[c]) missing = c;
        Bitset m(12);
        m.set(pairs[color[v]][0]);
        m.set(pairs[color[v]][1]);
        m.set(pairs[missing][0]);
        m.set(pairs[missing][1]);
        sys.moves[v] = m;
    }
    fb.sys = sys;

    // First one-per-color state (by sign pattern) whose whole orbit is legal.
    for (int p = 0; p < 64 && !fb.start; ++p) {
        Bitset s(12);
        for (int c = 0; c < 6; ++c) s.set(pairs[c][p >> c & 1]);
        if (verify_legal_orbit(fb.g, sys, s).legal) fb.start = s;
    }

    fb.emb = triangulation_rotations(fb.g);
    fb.note = "six antipodal color pairs; each move joins a vertex's pair with "
              "the pair of the color missing from its neighborhood";
    return fb;
}

FamilyBundle cell24() {
    FamilyBundle fb;
    fb.name = "cell24";
    fb.g = Graph(24);
    for (int v = 0; v < 16; ++v) {
        fb.g.labels.push_back(bits_label(v, 4));
        for (int b = 0; b < 4; ++b)
            if (!(v >> b & 1)) fb.g.add_edge(v, v | (1 << b));
    }
    // one apex per 3-face: e(t,b) is joined to the 8 cube vertices with bit t = b
    for (int t = 0; t < 4; ++t)
        for (int b = 0; b < 2; ++b) {
            int id = 16 + 2 * t + b;
            fb.g.labels.push_back("e" + std::to_string(t) + std::to_string(b));
            for (int v = 0; v < 16; ++v)
                if ((v >> t & 1) == b) fb.g.add_edge(v, id);
        }
    Bitset even(24), odd(24), extra(24);
    for (int v = 0; v < 16; ++v)
        (std::popcount((unsigned)v) % 2 == 0 ? even : odd).set(v);
    for (int v = 16; v < 24; ++v) extra.set(v);
    MoveSystem sys;
    sys.moves.resize(24);
    for (int v = 0; v < 24; ++v)
        sys.moves[v] = v >= 16 ? extra : (even.test(v) ? even : odd);
    fb.sys = sys;
    fb.start = Bitset::of(24, {0, 2, 3, 7, 8, 12, 13, 15});
    fb.note = "4-cube plus one apex per 3-face; three classes (cube parity "
              "classes and the apexes), start = the 4-cube zig-zag state";
    return fb;
}

FamilyBundle cell600() {
    FamilyBundle fb;
    fb.name = "cell600";
    fb.g = Graph(120);
    auto gid = [](int r, int c) { return 10 * ((r % 10 + 10) % 10) + (c % 10 + 10) % 10; };
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c)
            fb.g.labels.push_back("g" + std::to_string(r) + std::to_string(c));
    for (int c = 0; c < 10; ++c) fb.g.labels.push_back("he" + std::to_string(c));
    for (int r = 0; r < 10; ++r) fb.g.labels.push_back("ho" + std::to_string(r));

    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c) {
            int v = gid(r, c);
            fb.g.add_edge(v, gid(r + 1, c));     // south
            fb.g.add_edge(v, gid(r, c + 1));     // east
            fb.g.add_edge(v, gid(r + 1, c + 1)); // both diagonals of each square
            fb.g.add_edge(v, gid(r + 1, c - 1));
            if ((r + c) % 2 == 0)
                fb.g.add_edge(v, gid(r + 2, c)); // even: skip edges in the column
            else
                fb.g.add_edge(v, gid(r, c + 2)); // odd: skip edges in the row
        }
    for (int c = 0; c < 10; ++c) { // even hovering vertex over columns c, c+1
        int h = 100 + c;
        for (int cc : {c, (c + 1) % 10})
            for (int r = 0; r < 10; ++r)
                if ((r + cc) % 2 == 0) fb.g.add_edge(h, gid(r, cc));
        fb.g.add_edge(h, 100 + (c + 1) % 10);
    }
    for (int r = 0; r < 10; ++r) { // odd hovering vertex over rows r, r+1
        int h = 110 + r;
        for (int rr : {r, (r + 1) % 10})
            for (int c = 0; c < 10; ++c)
                if ((rr + c) % 2 == 1) fb.g.add_edge(h, gid(rr, c));
        fb.g.add_edge(h, 110 + (r + 1) % 10);
    }

    // 20 colors: even grid vertices (r-3c) mod 10, odd (r+3c) mod 10; hovering
    // vertices take the primed colors 10..19.
    std::vector<int> color(120);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c)
            color[gid(r, c)] =
                (r + c) % 2 == 0 ? ((r - 3 * c) % 10 + 10) % 10 : (r + 3 * c) % 10;
    for (int c = 0; c < 10; ++c) color[100 + c] = 10 + (2 * c) % 10;
    for (int r = 0; r < 10; ++r) color[110 + r] = 10 + (2 * r + 1) % 10;

    std::vector<Bitset> classes(20, Bitset(120));
    for (int v = 0; v < 120; ++v) classes[color[v]].set(v);
    MoveSystem sys;
    sys.moves.resize(120);
    for (int v = 0; v < 120; ++v) sys.moves[v] = classes[color[v]];
    fb.sys = sys;

    Bitset s(120);
    for (int r = 0; r < 10; r += 2)
        for (int c = 0; c < 10; ++c) s.set(gid(r, c)); // alternate row-cycles
    for (int c = 0; c < 10; c += 2) s.set(100 + c);    // alternate hovering
    for (int r = 0; r < 10; r += 2) s.set(110 + r);
    fb.start = s;
    fb.note = "10x10 torus grid with diagonals and parity skip edges plus 20 "
              "hovering vertices; 20 color-class moves";
    return fb;
}

FamilyBundle brinkmann() {
    FamilyBundle fb;
    fb.name = "brinkmann";
    fb.g = Graph(21);
    auto u = [](int i) { return (i % 7 + 7) % 7; };
    for (int i = 0; i < 7; ++i) fb.g.labels.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < 7; ++i) fb.g.labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < 7; ++i) fb.g.labels.push_back("w" + std::to_string(i + 1));
    for (int i = 0; i < 7; ++i) {
        fb.g.add_edge(u(i), u(i + 1));            // outer 7-cycle
        fb.g.add_edge(14 + u(i), 14 + u(i + 2));  // inner 7-cycle, step 2
        fb.g.add_edge(u(i), 7 + u(i));
        fb.g.add_edge(u(i), 7 + u(i + 3));
        fb.g.add_edge(7 + u(i), 14 + u(i));
        fb.g.add_edge(7 + u(i), 14 + u(i + 1));
    }
    fb.note = "21 vertices, 42 edges, girth 5; no bundled system - colored "
              "systems for it are found by search";
    return fb;
}

FamilyBundle dual_lobell(int n) {
    if (n < 4) throw std::invalid_argument("dual_lobell: n >= 4 required");
    FamilyBundle fb;
    fb.name = "dual-lobell-" + std::to_string(n);
    int vs = 0, ws = 1;
    auto V = [n](int i) { return 2 + ((i - 1) % n + n) % n; };
    auto W = [n](int i) { return 2 + n + ((i - 1) % n + n) % n; };
    fb.g = Graph(2 * n + 2);
    fb.g.labels = {"v*", "w*"};
    for (int i = 1; i <= n; ++i) fb.g.labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= n; ++i) fb.g.labels.push_back("w" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        fb.g.add_edge(vs, V(i));
        fb.g.add_edge(ws, W(i));
        fb.g.add_edge(V(i), V(i + 1));
        fb.g.add_edge(W(i), W(i + 1));
        fb.g.add_edge(W(i), V(i - 2));
        fb.g.add_edge(W(i), V(i - 1));
    }

    fb.emb = triangulation_rotations(fb.g);

    if (n == 5) {
        FamilyBundle ico = icosahedron();
        auto phi = find_isomorphism(ico.g, fb.g);
        if (!phi || !ico.sys || !ico.start)
            throw std::runtime_error("dual_lobell(5): icosahedron transport failed");
        MoveSystem sys;
        sys.moves.assign(fb.g.n, Bitset(fb.g.n));
        Bitset s(fb.g.n);
        for (int v = 0; v < 12; ++v) {
            for (int u = ico.sys->moves[v].first(); u >= 0; u = ico.sys->moves[v].next(u))
                sys.moves[(*phi)[v]].set((*phi)[u]);
            if (ico.start->test(v)) s.set((*phi)[v]);
        }
        fb.sys = sys;
        fb.start = s;
    } else if (n >= 6) {
        int j = n == 6 ? 4 : (n + 1) / 2;
        MoveSystem sys;
        sys.moves.resize(fb.g.n);
        Bitset cstar = Bitset::of(fb.g.n, {vs, ws});
        sys.moves[vs] = sys.moves[ws] = cstar;
        Bitset comb = Bitset::of(fb.g.n, {V(1), W(1), V(j), W(j)});
        for (int i = 1; i <= n; ++i) {
            Bitset m = (i == 1 || i == j) ? comb : Bitset::of(fb.g.n, {V(i), W(i)});
            sys.moves[V(i)] = sys.moves[W(i)] = m;
        }
        fb.sys = sys;
    }
    if (n >= 5 && !fb.start) {
        Bitset s(fb.g.n);
        s.set(vs);
        s.set(W(1));
        for (int i = 2; i <= n; ++i) s.set(V(i));
        fb.start = s;
    }
    fb.note = "n-antiprism with both n-gons centrally subdivided; pair-class "
              "moves with one combined class for n >= 6, icosahedron transport "
              "for n = 5, graph only for n = 4";
    return fb;
}

FamilyBundle bipartite_cone(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("bipartite_cone: need 1 <= k <= m");
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
    if (m + binom > 100000) throw std::length_error("bipartite_cone: too many subsets");
    int nc = (int)binom;

    FamilyBundle fb;
    fb.name = "lambda-" + std::to_string(m) + "-" + std::to_string(k);
    fb.g = Graph(m + nc);
    for (int r = 0; r < m; ++r) fb.g.labels.push_back(std::to_string(r + 1));

    std::map<std::vector<int>, int> index;
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    for (int j = 0; j < nc; ++j) {
        std::string lab = "{";
        for (int i = 0; i < k; ++i) lab += (i ? "," : "") + std::to_string(combo[i] + 1);
        fb.g.labels.push_back(lab + "}");
        index[combo] = j;
        for (int r : combo) fb.g.add_edge(r, m + j);
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && combo[i] == m - k + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
    }

    if (3 < k && k < m && m < 2 * k - 1) {
        Bitset nat(m + nc), sub(m + nc);
        for (int r = 0; r < m; ++r) nat.set(r);
        for (int j = 0; j < nc; ++j) sub.set(m + j);
        MoveSystem sys;
        sys.moves.resize(m + nc);
        for (int v = 0; v < m + nc; ++v) sys.moves[v] = v < m ? nat : sub;
        fb.sys = sys;

        int h = (m + 1) / 2;
        auto fill = [&](std::vector<int> t) { // lex-least k-subset containing t
            Bitset have(m);
            for (int x : t) have.set(x);
            for (int x = 0; (int)t.size() < k; ++x)
                if (!have.test(x)) t.push_back(x);
            std::sort(t.begin(), t.end());
            return index.at(t);
        };
        std::vector<int> low, high;
        for (int r = 0; r < h; ++r) low.push_back(r);
        for (int r = h; r < m; ++r) high.push_back(r);
        Bitset s(m + nc);
        for (int r = 0; r < h; ++r) s.set(r);
        s.set(m + fill(low));
        s.set(m + fill(high));
        fb.start = s;
    }
    fb.note = "naturals 1..m plus all k-subsets in lexicographic order, r ~ S "
              "iff r in S; bipartition system bundled when 3 < k < m < 2k-1";
    return fb;
}

FamilyBundle tutte() {
    FamilyBundle fb;
    fb.name = "tutte";
    fb.g = Graph(46);
    std::vector<std::pair<double, double>> xy(46);
    xy[0] = {0, 0};
    fb.g.labels.assign(46, "");
    fb.g.labels[0] = "hub";
    const char* sec = "abc";
    // polar placement of each sector's 15 fragment vertices
    double ang[15] = {0, -20, 20, 0, -25, -10, 0, 10, 25, -25, -10, -20, 20, 0, 0};
    double rad[15] = {1,   1.3, 1.3, 1.4, 1.7, 1.9, 1.7, 2,
                      2.1, 2.2, 2.3, 2.9, 2.9, 3.0, 2.4};
    for (int s = 0; s < 3; ++s) {
        double x = 30 + 120 * s;
        auto P = [&](int i) { return 15 * s + i; }; // fragment vertex i = 1..15
        for (int i = 1; i <= 15; ++i) {
            xy[P(i)] = polar(x + ang[i - 1], rad[i - 1]);
            fb.g.labels[P(i)] = std::string(1, sec[s]) + std::to_string(i);
        }
        int frag[22][2] = {{1, 2},  {1, 3},   {3, 4},   {4, 2},   {2, 5},  {5, 6},
                           {6, 7},  {7, 8},   {8, 9},   {9, 3},   {7, 4},  {5, 10},
                           {10, 11}, {11, 6}, {10, 12}, {9, 13},  {13, 14}, {14, 12},
                           {11, 15}, {15, 14}, {15, 8},  {0, 0}};
        fb.g.add_edge(0, P(1));
        for (int e = 0; e < 21; ++e) fb.g.add_edge(P(frag[e][0]), P(frag[e][1]));
        fb.g.add_edge(P(13), 15 * ((s + 1) % 3) + 12); // bridge to the next sector
    }
    fb.emb = embed_by_angles(fb.g, xy);
    fb.note = "non-hamiltonian cubic planar graph: three fragments around a "
              "hub; rotations from the standard drawing";
    return fb;
}

FamilyBundle house() {
    FamilyBundle fb;
    fb.name = "house";
    fb.g = Graph(5);
    for (int v = 0; v < 5; ++v) fb.g.labels.push_back(std::to_string(v + 1));
    fb.g.add_edge(0, 1);
    fb.g.add_edge(1, 2);
    fb.g.add_edge(2, 3);
    fb.g.add_edge(3, 0);
    fb.g.add_edge(2, 4);
    fb.g.add_edge(3, 4);
    fb.emb = embed_by_angles(fb.g, {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 3.41}});
    fb.note = "square with a roof triangle: 5 vertices, 6 edges, 3 regions";
    return fb;
}

FamilyBundle triangular_prism() {
    FamilyBundle fb;
    fb.name = "triangular-prism";
    fb.g = Graph(6);
    for (int v = 0; v < 6; ++v) fb.g.labels.push_back(std::to_string(v + 1));
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < 3; ++i) {
        fb.g.add_edge(i, (i + 1) % 3);
        fb.g.add_edge(3 + i, 3 + (i + 1) % 3);
        fb.g.add_edge(i, 3 + i);
    }
    for (int i = 0; i < 3; ++i) xy.push_back(polar(90 + 120 * i, 2));
    for (int i = 0; i < 3; ++i) xy.push_back(polar(90 + 120 * i, 1));
    fb.emb = embed_by_angles(fb.g, xy);
    fb.note = "two triangles joined by a matching";
    return fb;
}

FamilyBundle tbws_example() {
    FamilyBundle fb;
    fb.name = "tbws";
    fb.g = Graph(12);
    for (int i = 0; i < 6; ++i) fb.g.labels.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < 6; ++i) fb.g.labels.push_back("b" + std::to_string(i + 1));
    int E[20][2] = {{0, 6},  {1, 6},  {1, 7},  {2, 7},  {0, 10}, {1, 10}, {1, 11},
                    {2, 11}, {2, 9},  {3, 9},  {3, 10}, {4, 10}, {4, 11}, {5, 11},
                    {5, 8},  {4, 8},  {4, 7},  {3, 7},  {3, 6},  {1, 8}};
    for (auto& e : E) fb.g.add_edge(e[0], e[1]);
    MoveSystem sys;
    Bitset a = Bitset::of(12, {0, 1, 2, 3, 4, 5}), b = ~a;
    for (int v = 0; v < 12; ++v) sys.moves.push_back(v < 6 ? a : b);
    fb.sys = sys;
    fb.start = Bitset::of(12, {0, 1, 2, 6, 7, 8}); // A1 u B1
    fb.note = "bipartite 6+6 graph whose A/B system has the legal orbit "
              "{A_i u B_j}; sides split 3|3 in vertex order";
    return fb;
}

FamilyBundle antiprism(int n) {
    if (n < 3) throw std::invalid_argument("antiprism: n >= 3 required");
    FamilyBundle fb;
    fb.name = "antiprism-" + std::to_string(n);
    fb.g = Graph(2 * n);
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        fb.g.labels.push_back("o" + std::to_string(i + 1));
        fb.g.add_edge(i, (i + 1) % n);
        fb.g.add_edge(i, n + i);
        fb.g.add_edge(i, n + (i + 1) % n);
        xy.push_back(polar(360.0 * i / n, 2));
    }
    for (int i = 0; i < n; ++i) {
        fb.g.labels.push_back("i" + std::to_string(i + 1));
        fb.g.add_edge(n + i, n + (i + 1) % n);
        xy.push_back(polar(360.0 * (i - 0.5) / n, 1));
    }
    // n = 3 (the octahedron) degenerates in this drawing: an inner vertex is
    // collinear with two outer ones; it is a triangulation, so use link cycles.
    fb.emb = n == 3 ? triangulation_rotations(fb.g) : embed_by_angles(fb.g, xy);
    fb.note = "two n-cycles joined by an alternating band of triangles";
    return fb;
}

FamilyBundle blowup_cube(int d, int n, const std::vector<int>& offsets) {
    if (d < 2) throw std::invalid_argument("blowup_cube: d >= 2 required");
    if (n < 2) throw std::invalid_argument("blowup_cube: n >= 2 required");
    int cube = 1 << d;
    if ((long long)cube * n > 8192) throw std::length_error("blowup_cube: too large");
    int per_dir = cube / 2;
    if (!offsets.empty() && (int)offsets.size() != (d - 1) * per_dir)
        throw std::invalid_argument("blowup_cube: need one offset per non-distinguished "
                                    "cube edge (" + std::to_string((d - 1) * per_dir) + ")");
    // offset of the cube edge in direction t >= 1 with base vertex 'base'
    // (bit t of base is 0); bases are ranked in ascending order.
    auto offset = [&](int base, int t) {
        if (offsets.empty()) return 3 * ((std::popcount((unsigned)base) + t - 1) % 2);
        int rank = 0;
        for (int v = 0; v < base; ++v)
            if (!(v >> t & 1)) ++rank;
        return offsets[(t - 1) * per_dir + rank];
    };
    // Offsets are validated (range, and parallel edges of every square
    // differing by >= 3) when explicitly supplied, and for the default
    // pattern when d <= 3; no offset family can satisfy the square
    // constraint in every direction pair once d >= 4.
    if (!offsets.empty() || d <= 3) {
        for (int t = 1; t < d; ++t)
            for (int base = 0; base < cube; ++base) {
                if (base >> t & 1) continue;
                int k = offset(base, t);
                if (k < 0 || 2 * k >= n)
                    throw std::invalid_argument("blowup_cube: offset out of range [0, n/2)");
                for (int s = 0; s < d; ++s) {
                    if (s == t || (base >> s & 1)) continue;
                    if (std::abs(k - offset(base | (1 << s), t)) < 3)
                        throw std::invalid_argument(
                            "blowup_cube: parallel offsets differ by less than 3");
                }
            }
    }

    FamilyBundle fb;
    fb.name = "blowup-" + std::to_string(d) + "-" + std::to_string(n);
    fb.g = Graph(cube * n);
    for (int v = 0; v < cube; ++v)
        for (int i = 0; i < n; ++i)
            fb.g.labels.push_back(bits_label(v, d) + ":" + std::to_string(i + 1));
    for (int base = 0; base < cube; ++base)
        for (int t = 0; t < d; ++t) {
            if (base >> t & 1) continue;
            int other = base | (1 << t);
            if (t == 0) { // distinguished direction: a linear tree over the edge
                for (int i = 0; i < n; ++i) {
                    fb.g.add_edge(base * n + i, other * n + i);
                    if (i + 1 < n) fb.g.add_edge(other * n + i, base * n + i + 1);
                }
            } else { // shifted matching
                int k = offset(base, t);
                for (int i = 0; i < n; ++i)
                    fb.g.add_edge(base * n + i, other * n + (i + k) % n);
            }
        }

    if (d == 3) {
        auto gir = girth(fb.g);
        if (!gir || *gir < 6)
            throw std::runtime_error("blowup_cube: girth below 6");
        FamilyBundle cube3 = hypercube(3);
        MoveSystem sys;
        sys.moves.resize(fb.g.n);
        Bitset even(fb.g.n), odd(fb.g.n), s(fb.g.n);
        for (int v = 0; v < cube; ++v)
            for (int i = 0; i < n; ++i) {
                (std::popcount((unsigned)v) % 2 == 0 ? even : odd).set(v * n + i);
                if (cube3.start->test(v)) s.set(v * n + i);
            }
        for (int v = 0; v < fb.g.n; ++v) sys.moves[v] = even.test(v / n * n) ? even : odd;
        fb.sys = sys;
        fb.start = s;
    }
    fb.note = "one n-fiber per d-cube vertex; distinguished edges become "
              "linear trees, others shifted matchings; for d = 3 girth >= 6 is "
              "asserted and the fiberwise cube system is bundled";
    return fb;
}

} // namespace legal
