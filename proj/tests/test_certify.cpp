#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rainbowdom/rainbowdom.hpp"

using namespace rainbowdom;

TEST_CASE("closed forms hit the published small values")
{
    // paths 2..7
    long long paths[] = {3, 4, 5, 7, 8, 9};
    for (int n = 2; n <= 7; ++n)
        CHECK(gamma_star_r3_path(n) == paths[n - 2]);
    // cycles 3..7
    long long cycles[] = {4, 6, 7, 8, 10};
    for (int n = 3; n <= 7; ++n)
        CHECK(gamma_star_r3_cycle(n) == cycles[n - 3]);
    // complete graphs 2..6
    long long completes[] = {3, 4, 6, 7, 9};
    for (int n = 2; n <= 6; ++n)
        CHECK(gamma_star_r3_complete(n) == completes[n - 2]);
    // stars and double stars
    CHECK(gamma_star_r3_star(2) == 4);
    CHECK(gamma_star_r3_star(5) == 7);
    CHECK(gamma_star_r3_double_star(1, 1) == 5);
    CHECK(gamma_star_r3_double_star(2, 3) == 8);

    CHECK_THROWS_AS(gamma_star_r3_path(1), DomainError);
    CHECK_THROWS_AS(gamma_star_r3_cycle(2), DomainError);
    CHECK_THROWS_AS(gamma_star_r3_complete(1), DomainError);
    CHECK_THROWS_AS(gamma_star_r3_star(1), DomainError);
    CHECK_THROWS_AS(gamma_star_r3_double_star(0, 1), DomainError);
}

TEST_CASE("formula dispatcher")
{
    CHECK(formula_gamma_star_r3("path", {5}) == 7);
    CHECK(formula_gamma_star_r3("cycle", {6}) == 8);
    CHECK(formula_gamma_star_r3("complete", {6}) == 9);
    CHECK(formula_gamma_star_r3("star", {4}) == 6);
    CHECK(formula_gamma_star_r3("double_star", {2, 3}) == 8);
    CHECK_THROWS_AS(formula_gamma_star_r3("blob", {3}), DomainError);
    CHECK_THROWS_AS(formula_gamma_star_r3("path", {1, 2}), DomainError);
}

TEST_CASE("closed forms match the solver where it reaches")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(gamma_star_r3_path(n) == solve_middle(path_graph(n), 3, 64).value);
    for (int n = 3; n <= 7; ++n)
        CHECK(gamma_star_r3_cycle(n) == solve_middle(cycle_graph(n), 3, 64).value);
    for (int n = 2; n <= 6; ++n)
        CHECK(gamma_star_r3_complete(n) == solve_middle(complete_graph(n), 3, 64).value);
    for (int t = 2; t <= 5; ++t)
        CHECK(gamma_star_r3_star(t) == solve_middle(star_graph(t), 3, 64).value);
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}})
        CHECK(gamma_star_r3_double_star(p, q) ==
              solve_middle(double_star_graph(p, q), 3, 64).value);
}

TEST_CASE("path construction is valid and optimal for every residue")
{
    for (int n = 2; n <= 40; ++n) {
        RainbowAssignment f = construct_m3rdf_path(n);
        INFO("n=" << n);
        CHECK(f.domain == AssignmentDomain::middle);
        CHECK(weight(f) == gamma_star_r3_path(n));
        CHECK(verify_assignment(path_graph(n), f).valid);
    }
    CHECK_THROWS_AS(construct_m3rdf_path(1), DomainError);
}

TEST_CASE("cycle construction is valid and optimal for every residue")
{
    for (int n = 3; n <= 40; ++n) {
        RainbowAssignment f = construct_m3rdf_cycle(n);
        INFO("n=" << n);
        CHECK(weight(f) == gamma_star_r3_cycle(n));
        CHECK(verify_assignment(cycle_graph(n), f).valid);
    }
    CHECK_THROWS_AS(construct_m3rdf_cycle(2), DomainError);
}

TEST_CASE("complete construction is valid and optimal for both parities")
{
    for (int n = 2; n <= 12; ++n) {
        RainbowAssignment f = construct_m3rdf_complete(n);
        INFO("n=" << n);
        CHECK(weight(f) == gamma_star_r3_complete(n));
        CHECK(verify_assignment(complete_graph(n), f).valid);
    }
    CHECK_THROWS_AS(construct_m3rdf_complete(1), DomainError);
}

TEST_CASE("construction dispatcher")
{
    CHECK(weight(construct_m3rdf("cycle", 6)) == 8);
    CHECK(weight(construct_m3rdf("path", 10)) == gamma_star_r3_path(10));
    CHECK(weight(construct_m3rdf("complete", 7)) == 10);
    CHECK_THROWS_AS(construct_m3rdf("star", 3), DomainError);
}

TEST_CASE("tree construction pairs matched edges with full palettes")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int n = 2 + static_cast<int>(seed % 13); // 2..14
        Graph t = random_tree(n, seed);
        RainbowAssignment f = construct_tree_matching(t);
        INFO("seed=" << seed << " n=" << n);
        CHECK(weight(f) == n + matching_number(t));
        CHECK(verify_assignment(t, f).valid);
        // structure: every matched edge holds all three colors
        Matching m = maximum_matching(t);
        for (const Edge & e : m.edges) {
            int idx = t.order() + t.edge_index(e.u, e.v).value();
            CHECK(f.values[static_cast<std::size_t>(idx)] == ColorSet::all(3));
        }
    }
    SECTION("stars and double stars")
    {
        // on a star the matching certificate is optimal
        for (int t = 2; t <= 6; ++t)
            CHECK(weight(construct_tree_matching(star_graph(t))) == gamma_star_r3_star(t));
        // on a double star it exceeds the true value by exactly one
        for (auto [p, q] : {std::pair{1, 1}, {2, 3}})
            CHECK(weight(construct_tree_matching(double_star_graph(p, q))) ==
                  gamma_star_r3_double_star(p, q) + 1);
    }
    SECTION("rejects non-trees")
    {
        CHECK_THROWS_AS(construct_tree_matching(cycle_graph(4)), DomainError);
        CHECK_THROWS_AS(construct_tree_matching(empty_graph(2)), DomainError);
    }
}

TEST_CASE("no color can be removed from an optimal certificate")
{
    std::vector<std::pair<Graph, RainbowAssignment>> certs;
    certs.push_back({path_graph(7), construct_m3rdf_path(7)});
    certs.push_back({cycle_graph(8), construct_m3rdf_cycle(8)});
    certs.push_back({complete_graph(5), construct_m3rdf_complete(5)});
    certs.push_back({path_graph(5), solve_middle(path_graph(5), 3).certificate});
    certs.push_back({star_graph(3), solve_middle(star_graph(3), 3).certificate});
    for (auto & [g, f] : certs) {
        REQUIRE(verify_assignment(g, f).valid);
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            ColorSet original = f.values[i];
            for (int color = 1; color <= 3; ++color) {
                if (!original.contains(color))
                    continue;
                f.values[i] = original.minus(ColorSet::single(color));
                CHECK_FALSE(verify_assignment(g, f).valid);
                f.values[i] = original;
            }
        }
    }
}
