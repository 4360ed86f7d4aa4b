#include "legal/families.hpp"
#include "legal/io.hpp"
#include <doctest.h>
#include <json.hpp>

using namespace legal;

TEST_CASE("graph serialization round-trips byte-stably") {
    for (auto fb : {example_2_3(), wagner(), icosahedron(), cell600(), tutte()}) {
        CAPTURE(fb.name);
        std::string text = fb.emb ? write_embedded(*fb.emb) : write_graph(fb.g);
        GraphFile back = parse_graph_file(text);
        CHECK(back.g.n == fb.g.n);
        CHECK(back.g.edges() == fb.g.edges());
        for (int v = 0; v < fb.g.n; ++v) CHECK(back.g.label(v) == fb.g.label(v));
        CHECK(back.emb.has_value() == fb.emb.has_value());
        if (fb.emb) CHECK(back.emb->rot == fb.emb->rot);
        std::string again = back.emb ? write_embedded(*back.emb) : write_graph(back.g);
        CHECK(again == text);
    }
}

TEST_CASE("system serialization round-trips byte-stably") {
    for (auto fb : {example_2_3(), wagner(), cell24(), tbws_example()}) {
        CAPTURE(fb.name);
        std::string text = write_system(*fb.sys, fb.start);
        SystemFile back = parse_system(text);
        CHECK(back.sys.moves == fb.sys->moves);
        REQUIRE(back.start.has_value());
        CHECK(*back.start == *fb.start);
        CHECK(write_system(back.sys, back.start) == text);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph_file(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("graph x") == 1);
    CHECK(line_of("graph 3\ne 0 1\ne 1 5") == 3);
    CHECK(line_of("graph 3\ne 0 0") == 2);
    CHECK(line_of("graph 3\ne 0 1\ne 0 1") == 3);
    CHECK(line_of("graph 3\n# comment\n\nfrob 1") == 4);
    CHECK(line_of("graph 3\ne 0 1\nrot 0 1") > 0); // missing rotations
    CHECK(line_of("graph 2\ne 0 1\nrot 0 1\nrot 1 0") == -1);

    auto sys_line = [](const std::string& text) {
        try {
            parse_system(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(sys_line("system 2\nm 0 0") == 2); // missing move for 1
    CHECK(sys_line("system 2\nm 0 0\nm 0 0\nm 1 1") == 3);
    CHECK(sys_line("system 2\nm 0 0\nm 1 1\nstate 0\nstate 1") == 5);
    CHECK(sys_line("system 2\nm 0 0\nm 1 1\nstate 1") == -1);
}

TEST_CASE("comments and blank lines are ignored") {
    GraphFile gf = parse_graph_file("# header\ngraph 3 # trailing\n\ne 0 1 # edge\ne 1 2\n");
    CHECK(gf.g.n == 3);
    CHECK(gf.g.edge_count() == 2);
}

TEST_CASE("graph hash is label- and edge-sensitive") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    b.add_edge(0, 2);
    CHECK(graph_hash(a) != graph_hash(b));
    CHECK(graph_hash(a) == graph_hash(a));
    Graph c = a;
    c.labels = {"x", "y", "z"};
    CHECK(graph_hash(a) != graph_hash(c));
}

TEST_CASE("certificates carry the schema's required fields") {
    auto fb = example_2_3();
    auto rep = verify_legal_orbit(fb.g, *fb.sys, *fb.start);
    auto j = nlohmann::json::parse(certificate_json(fb.g, *fb.sys, *fb.start, rep));
    for (const char* f : {"graph", "system", "state", "rank", "orbit_size", "verdict", "version"})
        CHECK(j.contains(f));
    CHECK(j["verdict"] == "legal");
    CHECK(j["rank"] == 3);
    CHECK(j["orbit_size"] == 8);
    CHECK(j["graph"]["n"] == 4);
    CHECK(j["graph"]["hash"].get<std::string>().size() == 16);
    CHECK(!j.contains("witness"));
    // Illegal verdict gains a witness object.
    auto bad = verify_legal_orbit(fb.g, *fb.sys, Bitset::of(4, {0, 1, 3}));
    auto jb = nlohmann::json::parse(certificate_json(fb.g, *fb.sys, Bitset::of(4, {0, 1, 3}), bad));
    CHECK(jb["verdict"] == "illegal");
    REQUIRE(jb.contains("witness"));
    CHECK(jb["witness"]["state"] == nlohmann::json::array({1, 3}));
}
