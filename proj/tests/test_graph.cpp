#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rpm/errors.hpp"
#include "rpm/graph.hpp"

using namespace rpm;

TEST_CASE("basic construction") {
    const Graph g = build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}, {"x"});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges()[0].kind == EdgeKind::Interior);
    CHECK(g.edges()[1].kind == EdgeKind::Interior);
    CHECK(g.edges()[2].kind == EdgeKind::Boundary);
    CHECK(g.edges()[2].u == "x");
    CHECK(g.edges()[2].v == kExternal);
    CHECK(g.has_boundary());
    CHECK_FALSE(g.has_ghosts());
    CHECK(g.vertex_index("y") == 1);
    CHECK_THROWS_AS(g.vertex_index("w"), UnknownVertex);
    CHECK(g.incident(0) == std::vector<int>{0, 2});
    CHECK(g.incident(1) == std::vector<int>{0, 1});
    CHECK(g.incident(2) == std::vector<int>{1});
    CHECK(g.endpoint_multiplicity(0, 0) == 1);
    CHECK(g.endpoint_multiplicity(0, 2) == 0);
    CHECK(g.endpoint_multiplicity(2, 0) == 1);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(build_graph({"x"}, {{"x", "x"}}), SelfLoop);
    CHECK_THROWS_AS(build_graph({"x", "y"}, {{"x", "y"}, {"y", "x"}}), DuplicateEdge);
    CHECK_THROWS_AS(build_graph({"x"}, {{"x", "y"}}), UnknownVertex);
    CHECK_THROWS_AS(build_graph({"x"}, {}, {"y"}), BadBoundaryEdge);
    CHECK_THROWS_AS(build_graph({"x"}, {}, {"x", "x"}), BadBoundaryEdge);
    CHECK_THROWS_AS(build_graph({"x", "x"}, {}), BadInput);
    CHECK_THROWS_AS(build_graph({"g1"}, {}), BadInput);
    CHECK_THROWS_AS(build_graph({"EXT"}, {}), BadInput);
    CHECK_THROWS_AS(build_graph({""}, {}), BadInput);
    CHECK_NOTHROW(build_graph({"gamma", "g"}, {{"gamma", "g"}}));
}

TEST_CASE("ghost extension") {
    const Graph base = build_graph({"x", "y"}, {{"x", "y"}});
    const Graph g = attach_ghosts(base, 2);
    CHECK(g.ghost_colours() == 2);
    CHECK(g.has_ghosts());
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 5);
    CHECK(g.edges()[1].u == "x");
    CHECK(g.edges()[1].v == "g1");
    CHECK(g.edges()[1].kind == EdgeKind::Ghost);
    CHECK(g.edges()[1].ghost_colour == 1);
    CHECK(g.edges()[2].u == "y");
    CHECK(g.edges()[2].ghost_colour == 1);
    CHECK(g.edges()[3].u == "x");
    CHECK(g.edges()[3].v == "g2");
    CHECK(g.edges()[3].ghost_colour == 2);
    CHECK(g.edges()[4].u == "y");
    CHECK(g.incident(0) == std::vector<int>{0, 1, 3});
    CHECK_THROWS_AS(attach_ghosts(g, 2), BadInput);
    CHECK(ghost_name(1) == "g1");
    CHECK(ghost_name(3) == "g3");
}
