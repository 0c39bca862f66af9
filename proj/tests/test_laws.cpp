#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rainbowdom/rainbowdom.hpp"

using namespace rainbowdom;

TEST_CASE("gamma star never drops below the color count")
{
    for (int n = 1; n <= 3; ++n)
        for (const Graph & g : all_labeled_graphs(n))
            for (int k = 1; k <= 3; ++k) {
                if (element_count(g) < k)
                    continue;
                LawReport r = check_observation_lower(g, k);
                INFO(r.instance);
                CHECK(r.law == "lowerbound");
                CHECK(r.holds);
            }
    CHECK_THROWS_AS(check_observation_lower(empty_graph(2), 3), DomainError);
}

TEST_CASE("weight three is attained exactly twice")
{
    SECTION("full scan to n=4")
    {
        LawReport r = characterize_weight_three(4);
        CHECK(r.law == "prop22");
        CHECK(r.holds);
        CHECK(r.lhs == "classes attaining 3: 2");
        CHECK(r.witness == "(n=2,m=1) x1; (n=3,m=0) x1");
    }
    SECTION("scan limited to n=2 sees only the one-edge graph")
    {
        LawReport r = characterize_weight_three(2);
        CHECK(r.holds);
        CHECK(r.lhs == "classes attaining 3: 1");
    }
    SECTION("bounds")
    {
        CHECK_THROWS_AS(characterize_weight_three(1), DomainError);
        CHECK_THROWS_AS(characterize_weight_three(6), CapacityError);
    }
}

TEST_CASE("vertex deletion stays in its window")
{
    for (int n = 2; n <= 4; ++n)
        for (const Graph & g : all_labeled_graphs(n))
            for (int v = 0; v < n; ++v)
                for (int k = 1; k <= 3; ++k) {
                    LawReport r = check_vertex_deletion(g, v, k);
                    INFO(r.instance << " -> " << r.lhs << " in " << r.rhs);
                    CHECK(r.holds);
                }
    SECTION("the two-vertex edge and k=3")
    {
        LawReport r = check_vertex_deletion(path_graph(2), 1, 3);
        CHECK(r.holds);
        CHECK(r.lhs == "gamma_star(G-v)=1");
        CHECK(r.witness == "gamma_star(G)=3");
    }
    CHECK_THROWS_AS(check_vertex_deletion(path_graph(2), 5, 3), DomainError);
}

TEST_CASE("edge perturbation stays in its window")
{
    for (int n = 2; n <= 4; ++n)
        for (const Graph & g : all_labeled_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    PerturbMode mode =
                        g.adjacent(u, v) ? PerturbMode::erase : PerturbMode::add;
                    // keep the perturbed instance inside the solver's world:
                    // deleting may isolate vertices, which is fine
                    LawReport r = check_edge_perturbation(g, u, v, 3, mode);
                    INFO(r.instance << " -> " << r.lhs << " in " << r.rhs);
                    CHECK(r.holds);
                }
    SECTION("paths and cycles pair up")
    {
        for (int n = 3; n <= 6; ++n) {
            LawReport grow = check_edge_perturbation(path_graph(n), 0, n - 1, 3,
                                                     PerturbMode::add);
            CHECK(grow.holds);
            LawReport cut = check_edge_perturbation(cycle_graph(n), 0, n - 1, 3,
                                                    PerturbMode::erase);
            CHECK(cut.holds);
        }
    }
    SECTION("preconditions")
    {
        CHECK_THROWS_AS(check_edge_perturbation(path_graph(3), 0, 1, 3, PerturbMode::add),
                        DomainError);
        CHECK_THROWS_AS(check_edge_perturbation(path_graph(3), 0, 2, 3, PerturbMode::erase),
                        DomainError);
    }
}

TEST_CASE("tree sandwich bounds hold on random trees")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 7); // 2..8
        Graph t = random_tree(n, seed);
        LawReport r = check_tree_bounds(t);
        INFO("seed=" << seed << " " << r.instance << " " << r.lhs << " " << r.rhs);
        CHECK(r.law == "treebounds");
        CHECK(r.holds);
    }
    SECTION("a precomputed gamma hint matches the solved route")
    {
        Graph t = random_tree(7, 5);
        int gamma = solve_middle(t, 3).value;
        LawReport solved = check_tree_bounds(t);
        LawReport hinted = check_tree_bounds(t, -1, gamma);
        CHECK(solved.holds == hinted.holds);
        CHECK(solved.lhs == hinted.lhs);
    }
    CHECK_THROWS_AS(check_tree_bounds(cycle_graph(4)), DomainError);
}

TEST_CASE("pendant paths carry weight three in optimal certificates")
{
    SECTION("solver certificates on paths and random trees")
    {
        for (int n = 3; n <= 7; ++n) {
            SolveResult res = solve_middle(path_graph(n), 3);
            LawReport r = check_pendant_path_lemma(path_graph(n), res.certificate, -1,
                                                   res.value);
            INFO("n=" << n << " " << r.lhs);
            CHECK(r.holds);
        }
        for (std::uint64_t seed = 10; seed < 30; ++seed) {
            Graph t = random_tree(2 + static_cast<int>(seed % 6), seed);
            SolveResult res = solve_middle(t, 3);
            LawReport r = check_pendant_path_lemma(t, res.certificate, -1, res.value);
            INFO("seed=" << seed << " " << r.instance);
            CHECK(r.holds);
        }
    }
    SECTION("every optimum of small trees, not just the first")
    {
        for (int n = 2; n <= 5; ++n)
            for (const Graph & t : all_labeled_trees(n)) {
                Graph host = middle_graph(t).host();
                for (const RainbowAssignment & f : enumerate_optimal_krdf(host, 3)) {
                    LawReport r = check_pendant_path_lemma(t, as_middle(f), -1, weight(f));
                    CHECK(r.holds);
                }
            }
    }
    SECTION("rejects invalid or suboptimal certificates")
    {
        Graph p4 = path_graph(4);
        RainbowAssignment junk = make_assignment(3, AssignmentDomain::middle,
                                                 element_count(p4));
        CHECK_THROWS_AS(check_pendant_path_lemma(p4, junk), DomainError);
        RainbowAssignment ones = junk;
        for (ColorSet & c : ones.values)
            c = ColorSet::single(1);
        // valid but suboptimal: weight 7 against gamma_star = 5
        CHECK_THROWS_AS(check_pendant_path_lemma(p4, ones), DomainError);
        CHECK_THROWS_AS(check_pendant_path_lemma(cycle_graph(4), junk), DomainError);
    }
    SECTION("trees without pendant paths hold vacuously")
    {
        SolveResult res = solve_middle(star_graph(3), 3);
        // star legs are pendant edges from the center, no degree-2 vertex
        LawReport r = check_pendant_path_lemma(star_graph(3), res.certificate, -1,
                                               res.value);
        CHECK(r.holds);
        CHECK(r.lhs == "no pendant paths");
    }
}

TEST_CASE("law reports render line by line")
{
    LawReport r = check_observation_lower(path_graph(2), 3);
    std::string text = law_report_text(r);
    CHECK(text == "law lowerbound\n"
                  "instance n=2 m=1 k=3\n"
                  "lhs gamma_star=3\n"
                  "rhs k=3\n"
                  "holds true\n");
    LawReport v = check_vertex_deletion(path_graph(2), 1, 3);
    CHECK(law_report_text(v) == "law vdel\n"
                                "instance n=2 m=1 v=1 k=3\n"
                                "lhs gamma_star(G-v)=1\n"
                                "rhs [1, 3]\n"
                                "holds true\n"
                                "witness gamma_star(G)=3\n");
}
