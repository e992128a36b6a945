#include <doctest.h>

#include "plumb/canonical.hpp"
#include "plumb/io.hpp"

using namespace plumb;

TEST_CASE("text format") {
    SUBCASE("parse with comments and loose whitespace") {
        PlumbingGraph g = parse_graph(
            "# Sigma(2,3,7) star\n"
            "vertices: -1 -2 -3 -7   # weights\n"
            "edges: 0-1 0-2\n"
            "  0-3\n");
        CHECK(g.size() == 4);
        CHECK(g.weight(0) == -1);
        CHECK(g.has_edge(0, 3));
    }
    SUBCASE("empty graph") {
        PlumbingGraph g = parse_graph("vertices:\nedges:\n");
        CHECK(g.empty());
        CHECK(parse_graph("vertices:\n").empty());
    }
    SUBCASE("round trip") {
        PlumbingGraph g = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
        PlumbingGraph back = parse_graph(serialize_graph_text(g));
        CHECK(isomorphic(g, back));
        for (VertexId v : g.vertices()) CHECK(back.weight(v) == g.weight(v));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_graph("edges: 0-1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("vertices: -2 x\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("vertices: -2 -2\nedges: 0+1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("vertices: -2 -2\nedges: 0-5\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("vertices: -2 -2 -2\nedges: 0-1 1-2 2-0\n"),
                        ParseError);  // cycle
        CHECK_THROWS_AS(parse_graph("stuff\n"), ParseError);
    }
}

TEST_CASE("json format") {
    SUBCASE("parse") {
        PlumbingGraph g = parse_graph(R"({"weights": [-2, -2], "edges": [[0, 1]]})");
        CHECK(g.size() == 2);
        CHECK(g.has_edge(0, 1));
    }
    SUBCASE("round trip") {
        PlumbingGraph g = build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}});
        PlumbingGraph back = parse_graph(serialize_graph_json(g));
        CHECK(isomorphic(g, back));
    }
    SUBCASE("sniffing picks JSON on '{'") {
        CHECK(parse_graph("  \n {\"weights\": [], \"edges\": []}").empty());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_graph("{\"weights\": [1]"), ParseError);
        CHECK_THROWS_AS(parse_graph("{\"weights\": [1]}"), ParseError);
        CHECK_THROWS_AS(parse_graph(R"({"weights": [1], "edges": [[0]]})"), ParseError);
        CHECK_THROWS_AS(parse_graph(R"({"weights": [-2,-2], "edges": [[0,1],[1,0]]})"),
                        ParseError);
    }
}

// Serialization round trip preserves ids after compaction: serialize uses
// index order, so a graph with gaps in its ids still round-trips isomorphically.
TEST_CASE("round trip after vertex removal") {
    PlumbingGraph g = build_graph({-2, -1, -3, -4}, {{0, 1}, {1, 2}, {2, 3}});
    g.remove_vertex(1);
    g.add_edge(0, 2);
    PlumbingGraph back = parse_graph(serialize_graph_json(g));
    CHECK(back.size() == 3);
    CHECK(isomorphic(g, back));
    back = parse_graph(serialize_graph_text(g));
    CHECK(isomorphic(g, back));
}
