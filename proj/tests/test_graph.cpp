#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "rainbowdom/rainbowdom.hpp"

using namespace rainbowdom;

TEST_CASE("edges canonicalize and reject loops")
{
    Edge e = canonical_edge(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK_THROWS_AS(canonical_edge(3, 3), DomainError);
}

TEST_CASE("graph construction validates and sorts")
{
    Graph g(4, {{2, 1}, {0, 3}, {0, 1}});
    REQUIRE(g.order() == 4);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 3});
    CHECK(g.edges()[2] == Edge{1, 2});
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.edge_index(1, 2).value() == 2);
    CHECK(g.edge_index(2, 1).value() == 2);
    CHECK_FALSE(g.edge_index(2, 3).has_value());

    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError); // duplicate
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);         // out of range
    CHECK_THROWS_AS(Graph(-1, {}), DomainError);
}

TEST_CASE("named generators have the right shape")
{
    SECTION("path")
    {
        Graph p = path_graph(5);
        CHECK(p.order() == 5);
        CHECK(p.edge_count() == 4);
        CHECK(p.degree(0) == 1);
        CHECK(p.degree(2) == 2);
        CHECK(path_graph(1).edge_count() == 0);
        CHECK_THROWS_AS(path_graph(0), DomainError);
    }
    SECTION("cycle")
    {
        Graph c = cycle_graph(6);
        CHECK(c.order() == 6);
        CHECK(c.edge_count() == 6);
        for (int v = 0; v < 6; ++v)
            CHECK(c.degree(v) == 2);
        CHECK(c.adjacent(0, 5));
        CHECK_THROWS_AS(cycle_graph(2), DomainError);
    }
    SECTION("complete")
    {
        Graph k = complete_graph(5);
        CHECK(k.edge_count() == 10);
        CHECK(k.min_degree() == 4);
    }
    SECTION("empty")
    {
        CHECK(empty_graph(4).edge_count() == 0);
        CHECK(empty_graph(0).order() == 0);
    }
    SECTION("star")
    {
        Graph s = star_graph(4);
        CHECK(s.order() == 5);
        CHECK(s.degree(0) == 4);
        CHECK(s.max_degree() == 4);
        CHECK(is_tree(s));
        CHECK_THROWS_AS(star_graph(1), DomainError);
    }
    SECTION("double star")
    {
        Graph d = double_star_graph(2, 3);
        CHECK(d.order() == 7);
        CHECK(d.adjacent(0, 1));
        CHECK(d.degree(0) == 3);
        CHECK(d.degree(1) == 4);
        CHECK(is_tree(d));
        CHECK_THROWS_AS(double_star_graph(0, 2), DomainError);
    }
    SECTION("spider")
    {
        Graph sp = spider_graph(3, 2);
        CHECK(sp.order() == 1 + 3 + 2);
        CHECK(sp.degree(0) == 3);
        CHECK(is_tree(sp));
        Graph none = spider_graph(3, 0);
        CHECK(none == star_graph(3));
        CHECK_THROWS_AS(spider_graph(2, 3), DomainError);
    }
}

TEST_CASE("generate dispatches by name and validates")
{
    CHECK(generate("path", {4}) == path_graph(4));
    CHECK(generate("double_star", {2, 2}) == double_star_graph(2, 2));
    CHECK_THROWS_WITH(generate("cycle", {2}), "cycle requires n >= 3");
    CHECK_THROWS_WITH(generate("empty", {0}), "empty requires n >= 1");
    CHECK_THROWS_AS(generate("blob", {3}), DomainError);
    CHECK_THROWS_AS(generate("path", {3, 4}), DomainError);
    CHECK_THROWS_AS(generate("random_tree", {5}), DomainError); // no seed
}

TEST_CASE("prufer decode matches a slow independent decode")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        std::vector<int> seq;
        for (int i = 0; i + 2 < n; ++i)
            seq.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        Graph t = prufer_decode(n, seq);
        auto slow = oracles::prufer_decode_slow(n, seq);
        REQUIRE(t.edge_count() == static_cast<int>(slow.size()));
        for (std::size_t i = 0; i < slow.size(); ++i) {
            CHECK(t.edges()[i].u == slow[i].first);
            CHECK(t.edges()[i].v == slow[i].second);
        }
        CHECK(is_tree(t));
    }
}

TEST_CASE("random_tree is deterministic with frozen values")
{
    // literals produced by an independent O(n^2) decode of the raw
    // mt19937_64 stream
    Graph t9 = random_tree(9, 7);
    std::vector<Edge> want9 = {{0, 1}, {0, 6}, {2, 6}, {3, 4}, {3, 7}, {5, 6}, {6, 7}, {6, 8}};
    CHECK(t9.edges() == want9);

    Graph t5 = random_tree(5, 1);
    std::vector<Edge> want5 = {{0, 2}, {0, 4}, {1, 3}, {2, 3}};
    CHECK(t5.edges() == want5);

    Graph t12 = random_tree(12, 42);
    std::vector<Edge> want12 = {{0, 4},  {0, 10}, {1, 10}, {1, 11}, {2, 6}, {3, 8},
                                {4, 8},  {5, 6},  {5, 8},  {6, 9},  {7, 10}};
    CHECK(t12.edges() == want12);

    CHECK(random_tree(9, 7) == t9);
    CHECK(random_tree(1, 3).order() == 1);
    CHECK(random_tree(2, 3).edge_count() == 1);
}

TEST_CASE("random_tree reaches every labeled tree")
{
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 600; ++seed)
        seen.insert(random_tree(4, seed).edges());
    CHECK(seen.size() == 16); // 4^(4-2)
}

TEST_CASE("complement is an involution")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.push_back({u, v});
        Graph g(n, edges);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    }
    CHECK(complement(complete_graph(4)) == empty_graph(4));
}

TEST_CASE("edge and vertex editing")
{
    Graph p = path_graph(4);
    Graph c = with_edge(p, 0, 3);
    CHECK(c == cycle_graph(4));
    CHECK(without_edge(c, 0, 3) == p);
    CHECK_THROWS_AS(with_edge(p, 0, 1), DomainError);    // already present
    CHECK_THROWS_AS(without_edge(p, 0, 2), DomainError); // absent

    Graph q = without_vertex(path_graph(5), 2);
    CHECK(q.order() == 4);
    CHECK(q.edge_count() == 2);
    CHECK(q.adjacent(0, 1));
    CHECK(q.adjacent(2, 3)); // old 3-4 reindexed down
}

TEST_CASE("connectivity and forest predicates")
{
    CHECK(is_connected(path_graph(6)));
    CHECK(is_tree(path_graph(6)));
    CHECK_FALSE(is_tree(cycle_graph(5)));
    CHECK(is_forest(empty_graph(3)));
    CHECK_FALSE(is_connected(empty_graph(3)));
    CHECK(component_count(empty_graph(3)) == 3);
    Graph two(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(component_count(two) == 3);
    CHECK(is_forest(two));
}

TEST_CASE("matching number agrees with an exhaustive oracle")
{
    SECTION("forests via 100 random trees")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            int n = 2 + static_cast<int>(seed % 11); // 2..12
            Graph t = random_tree(n, seed);
            CHECK(matching_number(t) == oracles::matching_number_slow(t));
        }
    }
    SECTION("small general graphs")
    {
        CHECK(matching_number(cycle_graph(5)) == 2);
        CHECK(matching_number(cycle_graph(6)) == 3);
        CHECK(matching_number(complete_graph(5)) == 2);
        CHECK(matching_number(star_graph(4)) == 1);
        for (const Graph & g : all_labeled_graphs(4))
            CHECK(matching_number(g) == oracles::matching_number_slow(g));
    }
    SECTION("matched edges form a valid matching")
    {
        Matching m = maximum_matching(random_tree(12, 3));
        std::set<int> touched;
        for (const Edge & e : m.edges) {
            CHECK(touched.insert(e.u).second);
            CHECK(touched.insert(e.v).second);
        }
        CHECK(static_cast<int>(m.edges.size()) == m.size);
    }
    SECTION("capacity")
    {
        // non-forest with too many edges for the exhaustive route
        CHECK_THROWS_AS(maximum_matching(complete_graph(7)), CapacityError);
        CHECK(matching_number(random_tree(40, 11)) >= 1); // forests stay exact
    }
}

TEST_CASE("labeled enumerations have the right cardinalities")
{
    CHECK(all_labeled_graphs(2).size() == 2);
    CHECK(all_labeled_graphs(3).size() == 8);
    CHECK(all_labeled_graphs(4).size() == 64);
    CHECK(all_labeled_trees(2).size() == 1);
    CHECK(all_labeled_trees(3).size() == 3);
    CHECK(all_labeled_trees(4).size() == 16);
    CHECK(all_labeled_trees(5).size() == 125);
    for (const Graph & t : all_labeled_trees(5))
        CHECK(is_tree(t));
    CHECK_THROWS_AS(all_labeled_graphs(6), CapacityError);
    CHECK_THROWS_AS(all_labeled_trees(8), CapacityError);
}
