#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rainbowdom/rainbowdom.hpp"

using namespace rainbowdom;

TEST_CASE("path families are valid and saturate capacity")
{
    for (int n = 4; n <= 20; n += 2) {
        RainbowFamily fam = construct_family(LinearKind::path, n);
        INFO("n=" << n);
        REQUIRE(fam.members.size() == 4);
        CHECK(verify_family(fam).valid);
        // every host vertex carries exactly k colors across the family
        for (int v = 0; v < fam.host.order(); ++v) {
            int total = 0;
            for (const RainbowAssignment & f : fam.members)
                total += f.values[static_cast<std::size_t>(v)].size();
            CHECK(total == 3);
        }
    }
    CHECK_THROWS_AS(construct_family(LinearKind::path, 5), DomainError);
    CHECK_THROWS_AS(construct_family(LinearKind::path, 2), DomainError);
}

TEST_CASE("cycle families are valid for both parities")
{
    for (int n = 4; n <= 20; ++n) {
        RainbowFamily fam = construct_family(LinearKind::cycle, n);
        INFO("n=" << n);
        REQUIRE(fam.members.size() == 4);
        CHECK(verify_family(fam).valid);
        for (int v = 0; v < fam.host.order(); ++v) {
            int total = 0;
            for (const RainbowAssignment & f : fam.members)
                total += f.values[static_cast<std::size_t>(v)].size();
            CHECK(total <= 3);
        }
    }
    CHECK_THROWS_AS(construct_family(LinearKind::cycle, 3), DomainError);
}

TEST_CASE("family verification reports member and capacity violations")
{
    RainbowFamily fam = construct_family(LinearKind::path, 4);
    SECTION("tampered member goes invalid with a prefixed key")
    {
        for (ColorSet & c : fam.members[0].values)
            c = ColorSet();
        VerificationReport r = verify_family(fam);
        CHECK_FALSE(r.valid);
        REQUIRE(!r.violations.empty());
        CHECK(r.violations[0].key.rfind("member 1 ", 0) == 0);
    }
    SECTION("capacity overflow is flagged")
    {
        fam.members[0].values[0] = ColorSet::all(3);
        fam.members[1].values[0] = ColorSet::all(3);
        VerificationReport r = verify_family(fam);
        CHECK_FALSE(r.valid);
        bool saw_capacity = false;
        for (const Violation & v : r.violations)
            if (v.key.rfind("capacity v0 ", 0) == 0)
                saw_capacity = true;
        CHECK(saw_capacity);
    }
    SECTION("member sized for a different host is rejected")
    {
        fam.members[2].values.pop_back();
        CHECK_THROWS_AS(verify_family(fam), DomainError);
    }
}

TEST_CASE("domatic bounds pin the published values")
{
    SECTION("even path")
    {
        RainbowFamily fam = construct_family(LinearKind::path, 4);
        DomaticBounds b = domatic_bounds(fam.host, 3, &fam, gamma_star_r3_path(4));
        CHECK(b.lower == 4);
        CHECK(b.upper == 4);
        CHECK(b.upper_source == "degree+product");
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == 4);
    }
    SECTION("even cycle")
    {
        RainbowFamily fam = construct_family(LinearKind::cycle, 6);
        DomaticBounds b = domatic_bounds(fam.host, 3, &fam, gamma_star_r3_cycle(6));
        CHECK(b.lower == 4);
        CHECK(b.upper == 4);
        CHECK(b.upper_source == "product");
        CHECK(b.exact.value() == 4);
    }
    SECTION("odd cycle")
    {
        RainbowFamily fam = construct_family(LinearKind::cycle, 7);
        DomaticBounds b = domatic_bounds(fam.host, 3, &fam, gamma_star_r3_cycle(7));
        CHECK(b.lower == 4);
        CHECK(b.upper == 4); // min(5, floor(42/10))
        CHECK(b.exact.value() == 4);
    }
    SECTION("no family: lower falls back to k")
    {
        Graph host = middle_graph(path_graph(3)).host();
        DomaticBounds b = domatic_bounds(host, 3, nullptr, gamma_star_r3_path(3));
        CHECK(b.lower == 3);
        CHECK(b.upper == 3); // floor(3*5/4)
        CHECK(b.upper_source == "product");
        CHECK(b.exact.value() == 3);
    }
    SECTION("without a hint the solver fills in gamma")
    {
        Graph host = middle_graph(path_graph(4)).host();
        RainbowFamily fam = construct_family(LinearKind::path, 4);
        DomaticBounds hinted = domatic_bounds(fam.host, 3, &fam, gamma_star_r3_path(4));
        DomaticBounds solved = domatic_bounds(host, 3, &fam);
        CHECK(hinted.lower == solved.lower);
        CHECK(hinted.upper == solved.upper);
    }
    SECTION("an invalid family cannot raise the lower bound")
    {
        RainbowFamily fam = construct_family(LinearKind::path, 4);
        for (ColorSet & c : fam.members[3].values)
            c = ColorSet();
        CHECK_THROWS_AS(domatic_bounds(fam.host, 3, &fam, gamma_star_r3_path(4)),
                        DomainError);
    }
}

TEST_CASE("tiny exhaustive domatic search")
{
    CHECK(domatic_exact_tiny(middle_graph(path_graph(2)).host(), 3) == 3);
    CHECK(domatic_exact_tiny(middle_graph(path_graph(3)).host(), 3) == 3);
    CHECK(domatic_exact_tiny(complete_graph(4), 3) == 4);
    CHECK(domatic_exact_tiny(complete_graph(2), 2) == 2);
    CHECK_THROWS_AS(domatic_exact_tiny(complete_graph(9), 3), CapacityError);

    SECTION("search result sits inside the bound window")
    {
        for (int n = 2; n <= 4; ++n) {
            Graph host = middle_graph(path_graph(n)).host();
            if (host.order() > 8)
                continue;
            int d = domatic_exact_tiny(host, 3);
            DomaticBounds b = domatic_bounds(host, 3);
            CHECK(b.lower <= d);
            CHECK(d <= b.upper);
        }
    }
}

TEST_CASE("families serialize into assignment blocks")
{
    RainbowFamily fam = construct_family(LinearKind::path, 4);
    std::string text = serialize_family(fam);
    CHECK(text.rfind("family k 3 size 4\n", 0) == 0);
    // four blocks separated by ---
    int separators = 0;
    std::size_t pos = 0;
    while ((pos = text.find("---\n", pos)) != std::string::npos) {
        ++separators;
        pos += 4;
    }
    CHECK(separators == 3);
    // each block parses back against the host
    std::vector<std::string> blocks;
    std::string rest = text.substr(text.find('\n') + 1);
    std::size_t start = 0;
    while (true) {
        std::size_t sep = rest.find("---\n", start);
        blocks.push_back(rest.substr(start, sep == std::string::npos ? std::string::npos
                                                                     : sep - start));
        if (sep == std::string::npos)
            break;
        start = sep + 4;
    }
    REQUIRE(blocks.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        RainbowAssignment f = parse_assignment(blocks[i], fam.host);
        CHECK(f.domain == AssignmentDomain::plain);
        CHECK(f.values == fam.members[i].values);
    }
}
