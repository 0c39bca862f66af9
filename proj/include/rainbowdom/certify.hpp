#pragma once

#include <string>
#include <string_view>

#include "rainbowdom/assignment.hpp"

namespace rainbowdom {

// Closed forms for the minimum MkRDF weight with three colors.

inline long long gamma_star_r3_path(long long n)
{
    if (n < 2)
        throw DomainError("path formula requires n >= 2");
    switch (n % 3) {
    case 1:
        return (4 * n - 1) / 3;
    case 2:
        return (4 * n + 1) / 3;
    default:
        return 4 * n / 3;
    }
}

inline long long gamma_star_r3_cycle(long long n)
{
    if (n < 3)
        throw DomainError("cycle formula requires n >= 3");
    switch (n % 3) {
    case 1:
        return (4 * n + 2) / 3;
    case 2:
        return (4 * n + 1) / 3;
    default:
        return 4 * n / 3;
    }
}

inline long long gamma_star_r3_complete(long long n)
{
    if (n < 2)
        throw DomainError("complete formula requires n >= 2");
    return n % 2 == 0 ? 3 * n / 2 : (3 * n - 1) / 2;
}

inline long long gamma_star_r3_star(long long t)
{
    if (t < 2)
        throw DomainError("star formula requires t >= 2");
    return t + 2;
}

inline long long gamma_star_r3_double_star(long long p, long long q)
{
    if (p < 1 || q < 1)
        throw DomainError("double star formula requires p, q >= 1");
    return p + q + 3;
}

inline long long formula_gamma_star_r3(std::string_view kind, const std::vector<long long> & params)
{
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw DomainError(std::string(kind) + " formula expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (kind == "path") {
        want(1);
        return gamma_star_r3_path(params[0]);
    }
    if (kind == "cycle") {
        want(1);
        return gamma_star_r3_cycle(params[0]);
    }
    if (kind == "complete") {
        want(1);
        return gamma_star_r3_complete(params[0]);
    }
    if (kind == "star") {
        want(1);
        return gamma_star_r3_star(params[0]);
    }
    if (kind == "double_star") {
        want(2);
        return gamma_star_r3_double_star(params[0], params[1]);
    }
    throw DomainError("no formula for kind: " + std::string(kind));
}

namespace detail {

inline void put_vertex(RainbowAssignment & f, int v, ColorSet c)
{
    f.values[static_cast<std::size_t>(v)] = c;
}

inline void put_edge(RainbowAssignment & f, const Graph & g, int u, int v, ColorSet c)
{
    auto idx = g.edge_index(u, v);
    if (!idx)
        throw DomainError("construction asked for a missing edge");
    f.values[static_cast<std::size_t>(g.order() + *idx)] = c;
}

// Repeating pattern {1}, _, _ on vertices plus a full edge inside each empty
// stretch. The three residues only differ in how the tail is finished.
inline RainbowAssignment path_pattern(const Graph & g, int n)
{
    RainbowAssignment f = make_assignment(3, AssignmentDomain::middle, element_count(g));
    ColorSet one = ColorSet::single(1);
    ColorSet full = ColorSet::all(3);
    int r = static_cast<int>(n % 3);
    int last_single = r == 1 ? (n - 1) / 3 : (r == 2 ? (n - 2) / 3 : n / 3 - 1);
    int last_full = r == 1 ? (n - 4) / 3 : (r == 2 ? (n - 5) / 3 : n / 3 - 1);
    for (int i = 0; i <= last_single; ++i)
        put_vertex(f, 3 * i, one);
    for (int i = 0; i <= last_full; ++i)
        put_edge(f, g, 1 + 3 * i, 2 + 3 * i, full);
    if (r == 2)
        put_vertex(f, n - 1, ColorSet::single(2).united(ColorSet::single(3)));
    return f;
}

} // namespace detail

// Minimum-weight witnesses matching the closed forms, as middle assignments
// on the corresponding generated graph.

inline RainbowAssignment construct_m3rdf_path(int n)
{
    if (n < 2)
        throw DomainError("path construction requires n >= 2");
    return detail::path_pattern(path_graph(n), n);
}

inline RainbowAssignment construct_m3rdf_cycle(int n)
{
    if (n < 3)
        throw DomainError("cycle construction requires n >= 3");
    Graph g = cycle_graph(n);
    if (n % 3 == 0) {
        RainbowAssignment f = make_assignment(3, AssignmentDomain::middle, element_count(g));
        for (int i = 0; i < n / 3; ++i) {
            detail::put_vertex(f, 3 * i, ColorSet::single(1));
            detail::put_edge(f, g, 1 + 3 * i, 2 + 3 * i, ColorSet::all(3));
        }
        return f;
    }
    RainbowAssignment f = detail::path_pattern(g, n);
    if (n % 3 == 1)
        detail::put_edge(f, g, 0, n - 1, ColorSet::single(1));
    return f;
}

inline RainbowAssignment construct_m3rdf_complete(int n)
{
    if (n < 2)
        throw DomainError("complete construction requires n >= 2");
    Graph g = complete_graph(n);
    RainbowAssignment f = make_assignment(3, AssignmentDomain::middle, element_count(g));
    ColorSet full = ColorSet::all(3);
    if (n % 2 == 0) {
        for (int i = 0; i < n / 2; ++i)
            detail::put_edge(f, g, 2 * i, 2 * i + 1, full);
    } else {
        detail::put_vertex(f, 0, ColorSet::single(1));
        for (int i = 0; i < (n - 1) / 2; ++i)
            detail::put_edge(f, g, 2 * i + 1, 2 * i + 2, full);
    }
    return f;
}

inline RainbowAssignment construct_m3rdf(std::string_view kind, int n)
{
    if (kind == "path")
        return construct_m3rdf_path(n);
    if (kind == "cycle")
        return construct_m3rdf_cycle(n);
    if (kind == "complete")
        return construct_m3rdf_complete(n);
    throw DomainError("no construction for kind: " + std::string(kind));
}

// MkRDF on a tree built from a maximum matching: matched edges carry the
// full palette, unsaturated vertices carry {1}. Weight n + matching number.
inline RainbowAssignment construct_tree_matching(const Graph & tree)
{
    if (!is_tree(tree))
        throw DomainError("matching construction requires a tree");
    Matching m = maximum_matching(tree);
    RainbowAssignment f = make_assignment(3, AssignmentDomain::middle, element_count(tree));
    std::vector<char> saturated(static_cast<std::size_t>(tree.order()), 0);
    for (const Edge & e : m.edges) {
        detail::put_edge(f, tree, e.u, e.v, ColorSet::all(3));
        saturated[static_cast<std::size_t>(e.u)] = 1;
        saturated[static_cast<std::size_t>(e.v)] = 1;
    }
    for (int v = 0; v < tree.order(); ++v)
        if (!saturated[static_cast<std::size_t>(v)])
            detail::put_vertex(f, v, ColorSet::single(1));
    return f;
}

} // namespace rainbowdom
