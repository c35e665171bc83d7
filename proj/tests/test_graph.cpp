#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "domideal/errors.hpp"
#include "domideal/graph.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace domideal;
using namespace fixtures;

TEST_CASE("parse_edge_list reads the whiskered path") {
    Graph g = parse_edge_list("6\n1 2\n2 3\n1 4\n2 5\n3 6");
    CHECK(g == graph1());
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
}

TEST_CASE("parse_edge_list handles comments, blanks, and duplicates") {
    Graph g = parse_edge_list("# a graph\n4\n\n1 2\n2 3\n 2 1 \n3 4\n");
    CHECK(g == path_graph(4));

    CHECK(parse_edge_list("1") == edgeless(1));
    CHECK(parse_edge_list("4\n1 2\n2 3\n3 4") == path_graph(4));
}

TEST_CASE("parse_edge_list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("abc"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 4"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n2 2"), ParseError);
}

TEST_CASE("edge-list round trip is canonical") {
    Graph g = graph2();
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(to_edge_list(parse_edge_list(to_edge_list(g))) == to_edge_list(g));
}

TEST_CASE("closed_neighborhood contains the vertex and its neighbors") {
    CHECK(closed_neighborhood(graph1(), 1) == VertexSet::of(6, {0, 1, 2, 4}));
    CHECK(closed_neighborhood(edgeless(1), 0) == VertexSet::of(1, {0}));
    CHECK(closed_neighborhood(graph2(), 0) == VertexSet::of(6, {0, 1, 2, 3}));
    for (int v = 0; v < 6; ++v) {
        CHECK(closed_neighborhood(graph1(), v).test(v));
    }
    CHECK_THROWS_AS(closed_neighborhood(graph1(), 6), std::out_of_range);
}

TEST_CASE("is_dominating matches the worked example") {
    Graph g = graph1();
    CHECK(is_dominating(g, VertexSet::of(6, {2, 3, 4, 5})));
    CHECK(is_dominating(g, VertexSet::of(6, {3, 4, 5})));
    CHECK_FALSE(is_dominating(g, VertexSet(6)));
    CHECK_FALSE(is_dominating(edgeless(1), VertexSet(1)));
    CHECK_THROWS_AS(is_dominating(g, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("is_vertex_cover separates covers from dominating sets") {
    Graph g = graph1();
    CHECK_FALSE(is_vertex_cover(g, VertexSet::of(6, {3, 4, 5})));
    CHECK(is_vertex_cover(g, VertexSet::of(6, {0, 1, 2})));
    CHECK(is_vertex_cover(edgeless(3), VertexSet(3)));
}

TEST_CASE("vertex covers dominate when no vertex is isolated") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(8)), rng.next());
        if (has_isolated_vertex(g)) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
            VertexSet s = VertexSet::from_mask(g.vertex_count(), mask);
            if (is_vertex_cover(g, s)) CHECK(is_dominating(g, s));
        }
    }
}

TEST_CASE("maximum_matching on the worked example has size 3") {
    Matching m = maximum_matching(graph1());
    CHECK(m.size() == 3);
    CHECK(is_valid_matching(graph1(), m));
}

TEST_CASE("maximum_matching edge cases") {
    CHECK(maximum_matching(edgeless(4)).size() == 0);
    CHECK(maximum_matching(path_graph(3)).size() == 1);
    CHECK(maximum_matching(cycle_graph(3)).size() == 1);
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
}

TEST_CASE("maximum_matching agrees with the edge-subset oracle") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 80; ++iter) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(7)), rng.next());
        if (g.edge_count() > 20) continue;
        CAPTURE(to_edge_list(g));
        CHECK(maximum_matching(g).size() == oracles::max_matching_size_by_edge_subsets(g));
        CHECK(is_valid_matching(g, maximum_matching(g)));
    }
    for (int n = 1; n <= 8; ++n) {
        Graph t = random_tree(n, 1000 + static_cast<std::uint64_t>(n));
        CHECK(maximum_matching(t).size() == oracles::max_matching_size_by_edge_subsets(t));
    }
}

TEST_CASE("maximum_matching is deterministic") {
    Graph g = random_graph(9, 99);
    CHECK(maximum_matching(g) == maximum_matching(g));
}

TEST_CASE("bipartition produces the canonical coloring") {
    auto p4 = bipartition(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->first == VertexSet::of(4, {0, 2}));
    CHECK(p4->second == VertexSet::of(4, {1, 3}));

    CHECK_FALSE(bipartition(cycle_graph(3)).has_value());

    auto g1 = bipartition(graph1());
    REQUIRE(g1.has_value());
    CHECK(g1->first == VertexSet::of(6, {0, 2, 4}));
    CHECK(g1->second == VertexSet::of(6, {1, 3, 5}));
}

TEST_CASE("bipartition agrees with the coloring oracle") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(8)), rng.next());
        CHECK(bipartition(g).has_value() == oracles::is_bipartite_by_colorings(g));
    }
}

TEST_CASE("bipartition sides dominate when no vertex is isolated") {
    for (int n = 2; n <= 9; ++n) {
        Graph t = random_tree(n, 77 + static_cast<std::uint64_t>(n));
        auto sides = bipartition(t);
        REQUIRE(sides.has_value());
        if (n >= 2) {
            CHECK(is_dominating(t, sides->first));
            CHECK(is_dominating(t, sides->second));
        }
    }
}

TEST_CASE("is_tree") {
    CHECK(is_tree(graph1()));
    CHECK_FALSE(is_tree(graph2()));
    CHECK(is_tree(edgeless(1)));
    CHECK_FALSE(is_tree(edgeless(2)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
}

TEST_CASE("corona reproduces the worked examples") {
    CHECK(corona(path_graph(3)) == graph1());
    CHECK(corona(cycle_graph(3)) == graph2());
    CHECK(corona(edgeless(1)) == path_graph(2));
}

TEST_CASE("corona structure and recognition round trip") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(6)), rng.next());
        Graph h = corona(g);
        CHECK(h.vertex_count() == 2 * g.vertex_count());
        CHECK(h.edge_count() == g.edge_count() + g.vertex_count());
        auto pairing = recognize_corona(h);
        REQUIRE(pairing.has_value());
        CHECK(is_valid_matching(h, *pairing));
        CHECK(pairing->size() == g.vertex_count());
    }
}

TEST_CASE("recognize_corona on fixed cases") {
    auto g1 = recognize_corona(graph1());
    REQUIRE(g1.has_value());
    CHECK(g1->pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});

    CHECK_FALSE(recognize_corona(path_graph(3)).has_value());

    auto p4 = recognize_corona(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    CHECK_FALSE(recognize_corona(edgeless(2)).has_value());
    CHECK_FALSE(recognize_corona(complete_graph(4)).has_value());
}

TEST_CASE("recognize_corona agrees with perfect-matching brute force") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 120; ++iter) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(10)), rng.next());
        CAPTURE(to_edge_list(g));
        CHECK(recognize_corona(g).has_value() == oracles::has_perfect_whisker_matching(g));
    }
    for (int n = 1; n <= 8; ++n) {
        TreeEnumerator trees(n);
        while (auto t = trees.next()) {
            CHECK(recognize_corona(*t).has_value() == oracles::has_perfect_whisker_matching(*t));
        }
    }
}

TEST_CASE("random_tree produces trees deterministically") {
    CHECK(random_tree(1, 9) == edgeless(1));
    CHECK(random_tree(2, 9) == path_graph(2));
    Graph t = random_tree(8, 42);
    CHECK(is_tree(t));
    CHECK(t.edge_count() == 7);
    CHECK(random_tree(8, 42) == t);
    CHECK_THROWS_AS(random_tree(0, 1), std::invalid_argument);
}

TEST_CASE("tree enumeration is complete and duplicate-free") {
    CHECK(TreeEnumerator::tree_count(1) == 1);
    CHECK(TreeEnumerator::tree_count(3) == 3);
    CHECK(TreeEnumerator::tree_count(5) == 125);

    for (int n : {1, 2, 3, 4, 5}) {
        TreeEnumerator trees(n);
        std::set<std::string> seen;
        while (auto t = trees.next()) {
            CHECK(is_tree(*t));
            seen.insert(to_edge_list(*t));
        }
        CHECK(seen.size() == TreeEnumerator::tree_count(n));
    }

    CHECK_THROWS_AS(TreeEnumerator(11), ScaleLimitError);
}

TEST_CASE("graph constructor validates") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK(Graph(3, {{1, 0}, {0, 1}}).edge_count() == 1);
}
