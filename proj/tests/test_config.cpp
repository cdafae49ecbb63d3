#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rpm/config.hpp"
#include "rpm/errors.hpp"
#include "rpm/graph.hpp"

#include <vector>

using namespace rpm;

namespace {

int count_configs(const Graph& g, int colours, int cap, const ParitySpec& spec) {
    int n = 0;
    enumerate_configs(g, colours, cap, spec, [&](const LinkConfig&) {
        ++n;
        return true;
    });
    return n;
}

} // namespace

TEST_CASE("counts and local times") {
    const Graph g = build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    LinkConfig m(&g, 2);
    m.set_count(0, 1, 3);
    m.set_count(1, 2, 2);
    CHECK(m.count(0, 1) == 3);
    CHECK(m.count(0, 2) == 0);
    CHECK(m.edge_total(0) == 3);
    CHECK(m.vertex_count(1, 1) == 3);
    CHECK(m.vertex_count(1, 2) == 2);
    CHECK(m.vertex_total(1) == 5);
    CHECK(m.total_links() == 5);
    CHECK(local_time(m, 0, 1) == 2);
    CHECK(local_time(m, 0, 2) == 0);
    CHECK(local_time_total(m, 1, {}) == 3);
    CHECK(local_time_total(m, 1, {1}) == 4);
    CHECK_THROWS_AS(m.set_count(0, 1, -1), BadInput);
}

TEST_CASE("arithmetic") {
    const Graph g = build_graph({"x", "y"}, {{"x", "y"}});
    LinkConfig a(&g, 1);
    LinkConfig b(&g, 1);
    a.set_count(0, 1, 3);
    b.set_count(0, 1, 1);
    CHECK(add(a, b).count(0, 1) == 4);
    CHECK(sub(a, b).count(0, 1) == 2);
    CHECK(leq(b, a));
    CHECK_FALSE(leq(a, b));
    CHECK_THROWS_AS(sub(b, a), NotDominated);
    const Graph h = build_graph({"x", "y"}, {{"x", "y"}});
    LinkConfig c(&h, 1);
    CHECK_THROWS_AS(add(a, c), GraphMismatch);
    LinkConfig d(&g, 2);
    CHECK_THROWS_AS(add(a, d), GraphMismatch);
}

TEST_CASE("parity spec sets") {
    ParitySpec pair{{"a", "b"}, std::nullopt};
    CHECK(pair.odd_set() == std::set<std::string>{"a", "b"});
    CHECK(pair.overlap_set().empty());
    ParitySpec two{{"a", "b"}, std::set<std::string>{"b", "c"}};
    CHECK(two.odd_set() == std::set<std::string>{"a", "c"});
    CHECK(two.overlap_set() == std::set<std::string>{"b"});
    ParitySpec empty{{}, std::set<std::string>{}};
    CHECK(empty.odd_set().empty());
    CHECK(empty.overlap_set().empty());
}

TEST_CASE("class membership") {
    const Graph g = build_graph({"x", "y"}, {{"x", "y"}});
    LinkConfig m(&g, 2);
    m.set_count(0, 1, 1);
    CHECK(in_parity_class(m, ParitySpec{{"x", "y"}, std::nullopt}));
    CHECK_FALSE(in_parity_class(m, ParitySpec{}));
    m.set_count(0, 2, 1);
    CHECK_FALSE(in_parity_class(m, ParitySpec{{"x", "y"}, std::nullopt}));
    m.set_count(0, 2, 2);
    CHECK(in_parity_class(m, ParitySpec{{"x", "y"}, std::nullopt}));

    const Graph b = build_graph({"x", "y"}, {{"x", "y"}}, {"x"});
    LinkConfig mb(&b, 2);
    mb.set_count(1, 2, 2);
    CHECK_FALSE(in_parity_class(mb, ParitySpec{}));
    mb.set_count(1, 2, 0);
    mb.set_count(1, 1, 2);
    CHECK(in_parity_class(mb, ParitySpec{}));

    const Graph gg = attach_ghosts(g, 2);
    LinkConfig mg(&gg, 2);
    mg.set_count(1, 2, 2);
    CHECK_FALSE(in_parity_class(mg, ParitySpec{}));
    mg.set_count(1, 2, 0);
    mg.set_count(3, 2, 2);
    CHECK(in_parity_class(mg, ParitySpec{}));
}

TEST_CASE("enumeration counts") {
    const Graph e1 = build_graph({"x", "y"}, {{"x", "y"}});
    CHECK(count_configs(e1, 2, 2, ParitySpec{}) == 4);
    CHECK(count_configs(e1, 2, 2, ParitySpec{{"x", "y"}, std::nullopt}) == 2);
    CHECK(count_configs(e1, 1, 2, ParitySpec{{"x"}, std::nullopt}) == 0);

    const Graph path = build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK(count_configs(path, 1, 1, ParitySpec{{"x", "z"}, std::nullopt}) == 1);
    CHECK(count_configs(path, 1, 1, ParitySpec{}) == 1);

    const Graph tri = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(count_configs(tri, 1, 1, ParitySpec{}) == 2);

    const Graph lone = build_graph({"x"}, {});
    CHECK(count_configs(lone, 1, 3, ParitySpec{{"x"}, std::nullopt}) == 0);
    CHECK(count_configs(lone, 1, 3, ParitySpec{}) == 1);
}

TEST_CASE("enumeration order, caps, early stop") {
    const Graph g = build_graph({"x", "y"}, {{"x", "y"}});
    std::vector<std::vector<int>> seen;
    enumerate_configs(g, 1, 4, ParitySpec{}, [&](const LinkConfig& m) {
        seen.push_back(m.raw());
        return true;
    });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == std::vector<int>{0});
    CHECK(seen[1] == std::vector<int>{2});
    CHECK(seen[2] == std::vector<int>{4});

    int stopped = 0;
    enumerate_configs(g, 1, 4, ParitySpec{}, [&](const LinkConfig&) {
        ++stopped;
        return false;
    });
    CHECK(stopped == 1);

    int restricted = 0;
    enumerate_configs(g, 2, std::vector<int>{2, 0}, ParitySpec{}, [&](const LinkConfig&) {
        ++restricted;
        return true;
    });
    CHECK(restricted == 2);
}

TEST_CASE("components") {
    const Graph path = build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    LinkConfig m(&path, 1);
    m.set_count(0, 1, 2);
    const auto comps = components(m);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices == std::vector<int>{0, 1});
    CHECK_FALSE(comps[0].touches_boundary);
    CHECK_FALSE(comps[0].touches_ghost_1);

    const Graph b = build_graph({"x", "y"}, {{"x", "y"}}, {"x"});
    LinkConfig mb(&b, 1);
    mb.set_count(1, 1, 1);
    const auto bc = components(mb);
    REQUIRE(bc.size() == 1);
    CHECK(bc[0].vertices == std::vector<int>{0});
    CHECK(bc[0].touches_boundary);

    const Graph gg = attach_ghosts(build_graph({"x", "y"}, {{"x", "y"}}), 2);
    LinkConfig mg(&gg, 2);
    mg.set_count(1, 1, 1);
    mg.set_count(2, 1, 1);
    const auto gc = components(mg);
    REQUIRE(gc.size() == 1);
    CHECK(gc[0].vertices == std::vector<int>{0, 1});
    CHECK(gc[0].touches_ghost_1);

    LinkConfig mg2(&gg, 2);
    mg2.set_count(3, 2, 2);
    const auto gc2 = components(mg2);
    REQUIRE(gc2.size() == 1);
    CHECK(gc2[0].vertices == std::vector<int>{0});
    CHECK_FALSE(gc2[0].touches_ghost_1);
}

TEST_CASE("component parity indicator") {
    const Graph g = build_graph({"x", "y"}, {{"x", "y"}});
    LinkConfig m(&g, 1);
    CHECK(in_F(m, {}, false));
    CHECK_FALSE(in_F(m, {"x"}, false));
    m.set_count(0, 1, 2);
    CHECK_FALSE(in_F(m, {"x"}, false));
    CHECK(in_F(m, {"x", "y"}, false));
    CHECK(in_F(m, {"x"}, false, {"x"}));
    CHECK_FALSE(in_F(m, {"x", "y"}, false, {"x"}));
    LinkConfig empty(&g, 1);
    CHECK_FALSE(in_F(empty, {}, false, {"x"}));

    const Graph b = build_graph({"x", "y"}, {{"x", "y"}}, {"x"});
    LinkConfig mb(&b, 1);
    mb.set_count(0, 1, 1);
    mb.set_count(1, 1, 1);
    CHECK(in_F(mb, {"x"}, true));
    CHECK_FALSE(in_F(mb, {"x"}, false));
    LinkConfig mb2(&b, 1);
    mb2.set_count(0, 1, 2);
    CHECK_FALSE(in_F(mb2, {"x"}, true));

    const Graph gg = attach_ghosts(build_graph({"x", "y"}, {{"x", "y"}}), 2);
    LinkConfig mg(&gg, 2);
    mg.set_count(0, 1, 2);
    mg.set_count(1, 1, 1);
    CHECK(in_F(mg, {"x"}, false));
    LinkConfig mg2(&gg, 2);
    mg2.set_count(0, 2, 2);
    mg2.set_count(3, 2, 1);
    CHECK_FALSE(in_F(mg2, {"x"}, false));
}
