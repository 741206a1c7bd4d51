#include <doctest.h>

#include "core/graph.hpp"

using namespace bccst;

TEST_SUITE("graph") {

TEST_CASE("edge list parsing with comments and merging") {
    auto g = WeightedGraph::parse_edge_list("# header\n0 1 2\n1 0 3\n 1 2 1 \n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.edges()[0].w == 5);  // parallel edges merged by weight sum
    CHECK(g.edges()[1].w == 1);
    CHECK(g.max_weight() == 5);
    CHECK(g.connected());
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(WeightedGraph::parse_edge_list("0 1\n"), Error);
    CHECK_THROWS_AS(WeightedGraph::parse_edge_list("0 1 0\n"), Error);
    CHECK_THROWS_AS(WeightedGraph::parse_edge_list("0 1 2 3\n"), Error);
    CHECK_THROWS_AS(WeightedGraph::parse_edge_list("# only comments\n"), Error);
    CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{0, 0, 1}}), Error);
}

TEST_CASE("round trip through the text format") {
    auto g = generate_graph("random:7:12:9", "uniform:6", 9);
    auto h = WeightedGraph::parse_edge_list(g.to_edge_list());
    CHECK(g.n() == h.n());
    REQUIRE(g.m() == h.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        CHECK(g.edges()[e].u == h.edges()[e].u);
        CHECK(g.edges()[e].v == h.edges()[e].v);
        CHECK(g.edges()[e].w == h.edges()[e].w);
    }
}

TEST_CASE("generator shapes") {
    CHECK(generate_graph("complete:4", "unit", 0).m() == 6);
    CHECK(generate_graph("path:5", "unit", 0).m() == 4);
    CHECK(generate_graph("cycle:6", "unit", 0).m() == 6);
    auto ppc = generate_graph("path-plus-clique:16", "unit", 0);
    CHECK(ppc.m() == 16 + 6);
    CHECK(ppc.n() == 20);
    auto house = generate_graph("house", "unit", 0);
    CHECK(house.n() == 5);
    CHECK(house.m() == 6);
    CHECK_THROWS_AS(generate_graph("path-plus-clique:15", "unit", 0), Error);
    CHECK_THROWS_AS(generate_graph("midsomer:4", "unit", 0), Error);
}

TEST_CASE("random generator is deterministic and connected") {
    auto a = generate_graph("random:9:14:42", "unit", 0);
    auto b = generate_graph("random:9:14:42", "unit", 0);
    CHECK(a.to_edge_list() == b.to_edge_list());
    CHECK(a.connected());
    CHECK(a.m() == 14);
}

TEST_CASE("spanning tree predicate") {
    auto g = generate_graph("cycle:4", "unit", 0);
    CHECK(is_spanning_tree(g, {0, 1, 2}));
    CHECK(!is_spanning_tree(g, {0, 1}));
    CHECK(!is_spanning_tree(g, {0, 1, 2, 3}));
}

}  // TEST_SUITE
