#include <doctest.h>

#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/stats.hpp"

using namespace bccst;

namespace {

WeightedGraph triangle(uint64_t w01 = 1, uint64_t w02 = 1, uint64_t w12 = 1) {
    return WeightedGraph::from_edges(3, {{0, 1, w01}, {0, 2, w02}, {1, 2, w12}});
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("laplacian of a single edge") {
    auto g = WeightedGraph::from_edges(2, {{0, 1, 1}});
    auto l = build_laplacian(g);
    CHECK(l[0][0] == 1);
    CHECK(l[0][1] == -1);
    CHECK(l[1][0] == -1);
    CHECK(l[1][1] == 1);
}

TEST_CASE("laplacian of the unit triangle") {
    auto l = build_laplacian(triangle());
    for (int i = 0; i < 3; ++i) {
        CHECK(l[i][i] == 2);
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(l[i][j] == -1);
    }
}

TEST_CASE("laplacian with no edges is zero") {
    WeightedGraph g = WeightedGraph::from_edges(3, {});
    auto l = build_laplacian(g);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l[i][j] == 0);
}

TEST_CASE("effective resistance on bridges is 1") {
    auto g = generate_graph("path:5", "unit", 0);
    for (EdgeId e = 0; e < g.m(); ++e) CHECK(effective_resistance(g, e) == 1);
}

TEST_CASE("effective resistance on the triangle is 2/3") {
    auto g = triangle();
    for (EdgeId e = 0; e < 3; ++e) CHECK(effective_resistance(g, e) == Rat(2, 3));
}

TEST_CASE("effective resistance on cycles is (n-1)/n") {
    for (uint32_t n : {3u, 5u, 8u}) {
        auto g = generate_graph("cycle:" + std::to_string(n), "unit", 0);
        for (EdgeId e = 0; e < g.m(); ++e)
            CHECK(effective_resistance(g, e) == Rat(n - 1, n));
    }
}

TEST_CASE("edge marginals: bridge, triangle, weighted triangle") {
    auto path = generate_graph("path:4", "unit", 0);
    CHECK(edge_marginal_exact(path, 0) == 1);

    auto tri = triangle();
    CHECK(edge_marginal_exact(tri, 0) == Rat(2, 3));

    auto wtri = triangle(1, 1, 2);
    // trees: {01,02} weight 1, {01,12} weight 2, {02,12} weight 2
    CHECK(edge_marginal_exact(wtri, *wtri.edge_index(1, 2)) == Rat(4, 5));
}

TEST_CASE("disconnected graphs are rejected") {
    auto g = WeightedGraph::from_edges(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK(!g.connected());
    CHECK_THROWS_AS(effective_resistance(g, 0), Error);
}

TEST_CASE("tree counts: Cayley and weighted enumeration") {
    CHECK(tree_count(generate_graph("complete:4", "unit", 0)) == 16);
    CHECK(tree_count(generate_graph("complete:5", "unit", 0)) == 125);
    CHECK(tree_count(triangle(1, 1, 2)) == 5);
    CHECK(tree_count(WeightedGraph::from_edges(4, {{0, 1, 1}, {2, 3, 1}})) == 0);
}

TEST_CASE("enumeration: unique tree, uniform triangle, weighted triangle") {
    auto path = generate_graph("path:4", "unit", 0);
    auto td = enumerate_tree_distribution(path);
    REQUIRE(td.trees.size() == 1);
    CHECK(td.prob[0] == 1);
    CHECK(td.trees[0] == std::vector<EdgeId>{0, 1, 2});

    auto tri = enumerate_tree_distribution(triangle());
    REQUIRE(tri.trees.size() == 3);
    for (const auto& p : tri.prob) CHECK(p == Rat(1, 3));

    auto wtri = enumerate_tree_distribution(triangle(1, 1, 2));
    REQUIRE(wtri.trees.size() == 3);
    std::multiset<Rat> probs(wtri.prob.begin(), wtri.prob.end());
    CHECK(probs == std::multiset<Rat>{Rat(1, 5), Rat(2, 5), Rat(2, 5)});
}

TEST_CASE("enumeration cap guard") {
    auto g = generate_graph("complete:8", "unit", 0);  // 8^6 = 262144 trees
    CHECK_THROWS_AS(enumerate_tree_distribution(g, {}, 1000), Error);
}

TEST_CASE("foster identity on random graphs") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        uint32_t n = 4 + seed % 9;
        uint64_t m = (n - 1) + seed % n;
        auto g = generate_graph("random:" + std::to_string(n) + ":" + std::to_string(m) + ":" +
                                    std::to_string(seed),
                                seed % 3 ? "unit" : "uniform:7", seed);
        ResistanceOracle oracle(g);
        Rat sum(0);
        for (EdgeId e = 0; e < g.m(); ++e)
            sum += Rat(static_cast<long>(g.edges()[e].w)) * oracle.edge_resistance(e);
        CHECK(sum == Rat(static_cast<long>(g.n() - 1)));
    }
}

TEST_CASE("marginals agree with enumeration exactly") {
    std::vector<WeightedGraph> graphs = {
        triangle(), triangle(1, 1, 2), generate_graph("complete:4", "unit", 0),
        generate_graph("house", "unit", 0), generate_graph("random:6:9:3", "uniform:5", 3)};
    for (const auto& g : graphs) {
        auto td = enumerate_tree_distribution(g, {}, 10000);
        ResistanceOracle oracle(g);
        for (EdgeId e = 0; e < g.m(); ++e) {
            Rat from_enum(0);
            for (size_t i = 0; i < td.trees.size(); ++i)
                if (std::find(td.trees[i].begin(), td.trees[i].end(), e) != td.trees[i].end())
                    from_enum += td.prob[i];
            CHECK(oracle.edge_marginal(e) == from_enum);
        }
        // weighted count equals the enumeration normalizer
        CHECK(Rat(tree_count(g)) == td.total_weight);
    }
}

TEST_CASE("marginals lie in [0,1]") {
    auto g = generate_graph("random:10:20:5", "uniform:9", 5);
    ResistanceOracle oracle(g);
    for (EdgeId e = 0; e < g.m(); ++e) {
        Rat q = oracle.edge_marginal(e);
        CHECK(q > 0);
        CHECK(q <= 1);
    }
}

TEST_CASE("rational resistance helper matches the integer oracle") {
    auto g = triangle(2, 3, 5);
    std::vector<std::tuple<VertexId, VertexId, Rat>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v, Rat(static_cast<long>(e.w)));
    RationalResistance rr(3, edges);
    ResistanceOracle oracle(g);
    for (EdgeId e = 0; e < 3; ++e)
        CHECK(rr.resistance(g.edges()[e].u, g.edges()[e].v) == oracle.edge_resistance(e));
    CHECK_THROWS_AS(RationalResistance(3, {{0, 1, Rat(1)}}), Error);
}

}  // TEST_SUITE
