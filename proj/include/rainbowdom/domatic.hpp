#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbowdom/certify.hpp"
#include "rainbowdom/dp.hpp"
#include "rainbowdom/solver.hpp"

namespace rainbowdom {

// Ordered family of plain k-rainbow dominating functions on one host graph,
// subject to the per-vertex budget: the cardinalities a vertex receives
// across all members sum to at most k.
struct RainbowFamily {
    Graph host;
    int k = 3;
    std::vector<RainbowAssignment> members;
};

inline VerificationReport verify_family(const RainbowFamily & fam)
{
    require_color_count(fam.k);
    VerificationReport report;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const RainbowAssignment & f = fam.members[i];
        if (f.domain != AssignmentDomain::plain || f.k != fam.k ||
            static_cast<int>(f.values.size()) != fam.host.order())
            throw DomainError("family member " + std::to_string(i + 1) +
                              " does not match the host");
        VerificationReport vr = verify_krdf(fam.host, f);
        for (const Violation & violation : vr.violations) {
            report.valid = false;
            report.violations.push_back(
                {"member " + std::to_string(i + 1) + " " + violation.key, violation.seen});
        }
    }
    for (int v = 0; v < fam.host.order(); ++v) {
        int total = 0;
        for (const RainbowAssignment & f : fam.members)
            total += f.values[static_cast<std::size_t>(v)].size();
        if (total > fam.k) {
            report.valid = false;
            report.violations.push_back(
                {"capacity v" + std::to_string(v) + " total " + std::to_string(total),
                 ColorSet()});
        }
    }
    return report;
}

namespace detail {

// The four-member family on M(P_n) for even n: one member saturates the
// odd-position edges with the full palette; the other three rotate single
// colors over odd vertices / even vertices / even-position edges.
inline std::vector<RainbowAssignment> path_family_members(const Graph & path, int n)
{
    std::vector<RainbowAssignment> members;
    int total = element_count(path);
    {
        RainbowAssignment f = make_assignment(3, AssignmentDomain::plain, total);
        for (int i = 0; 2 * i + 1 < n; ++i)
            put_edge(f, path, 2 * i, 2 * i + 1, ColorSet::all(3));
        members.push_back(std::move(f));
    }
    for (int rot = 0; rot < 3; ++rot) {
        auto color = [rot](int offset) { return ColorSet::single((rot + offset) % 3 + 1); };
        RainbowAssignment f = make_assignment(3, AssignmentDomain::plain, total);
        for (int v = 0; v < n; ++v)
            put_vertex(f, v, color(v % 2));
        for (int i = 0; 2 * i + 2 < n; ++i)
            put_edge(f, path, 2 * i + 1, 2 * i + 2, color(2));
        members.push_back(std::move(f));
    }
    return members;
}

} // namespace detail

// The witness families behind d_r3(M(P_n)) = 4 (even n) and
// d_r3(M(C_n)) = 4 (n >= 4). Members are plain assignments on the host of
// the middle graph.
inline RainbowFamily construct_family(LinearKind kind, int n)
{
    if (kind == LinearKind::path) {
        if (n < 4 || n % 2 != 0)
            throw DomainError("path family requires even n >= 4");
        Graph path = path_graph(n);
        RainbowFamily fam{middle_graph(path).host(), 3, detail::path_family_members(path, n)};
        return fam;
    }
    if (n < 4)
        throw DomainError("cycle family requires n >= 4");
    Graph cyc = cycle_graph(n);
    MiddleGraph mg(cyc);
    RainbowFamily fam{mg.host(), 3, {}};
    if (n % 2 == 0) {
        // Even cycle: reuse the path family and settle the closing edge,
        // empty in the first member and {1} in the rest.
        fam.members = detail::path_family_members(cyc, n);
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            detail::put_edge(fam.members[i], cyc, 0, n - 1,
                             i == 0 ? ColorSet() : ColorSet::single(1));
        return fam;
    }
    // Odd cycle: the path family on the first n-1 vertices, extended over
    // the last vertex and its two incident edges.
    fam.members = detail::path_family_members(cyc, n - 1);
    struct Extension {
        ColorSet last_path_edge; // e(v_{n-2}, v_{n-1})
        ColorSet last_vertex;    // v_{n-1}
        ColorSet closing_edge;   // e(v_0, v_{n-1})
    };
    const Extension ext[4] = {
        {ColorSet(), ColorSet::single(1), ColorSet()},
        {ColorSet::single(3), ColorSet::single(2), ColorSet()},
        {ColorSet::single(1), ColorSet::single(3), ColorSet()},
        {ColorSet(), ColorSet(), ColorSet::all(3)},
    };
    for (int i = 0; i < 4; ++i) {
        detail::put_edge(fam.members[static_cast<std::size_t>(i)], cyc, n - 2, n - 1,
                         ext[i].last_path_edge);
        detail::put_vertex(fam.members[static_cast<std::size_t>(i)], n - 1, ext[i].last_vertex);
        detail::put_edge(fam.members[static_cast<std::size_t>(i)], cyc, 0, n - 1,
                         ext[i].closing_edge);
    }
    return fam;
}

// Sandwich bounds on the k-rainbow domatic number of a host graph.
struct DomaticBounds {
    int lower = 0;
    int upper = 0;
    std::string upper_source; // "degree", "product", or both
    std::optional<int> exact;
};

// lower: k always works (constant singleton members), improved by a
// supplied witness family. upper: min of the degree bound delta + k and the
// product bound floor(k n / gamma). gamma may be passed in when a formula
// or DP value is available; otherwise the exact solver runs under the cap.
inline DomaticBounds domatic_bounds(const Graph & host, int k,
                                    const RainbowFamily * family = nullptr,
                                    std::optional<long long> gamma = std::nullopt, int cap = -1)
{
    require_color_count(k);
    if (host.order() < 1)
        throw DomainError("domatic bounds require a non-empty host");
    int lower = k;
    if (family) {
        if (!(family->host == host) || family->k != k)
            throw DomainError("family host mismatch");
        if (!verify_family(*family).valid)
            throw DomainError("invalid family supplied");
        lower = std::max(lower, static_cast<int>(family->members.size()));
    }
    long long g = gamma ? *gamma : solve_krdf(host, k, cap).value;
    if (g < 1)
        throw DomainError("gamma must be positive");
    long long product = static_cast<long long>(k) * host.order() / g;
    long long degree = host.min_degree() + k;
    DomaticBounds bounds;
    bounds.lower = lower;
    bounds.upper = static_cast<int>(std::min(product, degree));
    if (degree < product)
        bounds.upper_source = "degree";
    else if (product < degree)
        bounds.upper_source = "product";
    else
        bounds.upper_source = "degree+product";
    if (bounds.lower > bounds.upper)
        throw DomainError("witnessed lower bound " + std::to_string(bounds.lower) +
                          " exceeds upper bound " + std::to_string(bounds.upper));
    if (bounds.lower == bounds.upper)
        bounds.exact = bounds.lower;
    return bounds;
}

// Exact d_rk by backtracking over all valid kRDFs of a tiny host, packing
// members in increasing candidate order under the capacity budget.
inline int domatic_exact_tiny(const Graph & host, int k)
{
    require_color_count(k);
    int n = host.order();
    if (n < 1)
        throw DomainError("domatic search requires a non-empty host");
    if (n > 8)
        throw CapacityError("domatic search supports at most 8 vertices, got " +
                            std::to_string(n));
    std::uint8_t full = static_cast<std::uint8_t>((1u << k) - 1u);
    // Every valid kRDF, packed one byte per vertex into a word.
    std::vector<std::uint64_t> candidates;
    std::vector<int> weights;
    std::vector<std::uint8_t> val(static_cast<std::size_t>(n), 0);
    int min_weight = -1;
    while (true) {
        bool valid = true;
        int w = 0;
        for (int v = 0; v < n && valid; ++v) {
            w += std::popcount(val[static_cast<std::size_t>(v)]);
            if (val[static_cast<std::size_t>(v)] != 0)
                continue;
            std::uint8_t seen = 0;
            for (int u : host.neighbors(v))
                seen |= val[static_cast<std::size_t>(u)];
            valid = seen == full;
        }
        if (valid) {
            std::uint64_t packed = 0;
            for (int v = 0; v < n; ++v)
                packed |= static_cast<std::uint64_t>(val[static_cast<std::size_t>(v)]) << (8 * v);
            candidates.push_back(packed);
            weights.push_back(w);
            if (min_weight < 0 || w < min_weight)
                min_weight = w;
        }
        int pos = 0;
        while (pos < n && val[static_cast<std::size_t>(pos)] == full)
            val[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
        ++val[static_cast<std::size_t>(pos)];
    }
    // min_weight >= 1 since the all-empty assignment is never valid on a
    // non-empty host.
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    int best = 0;
    int cap_left = k * n;
    auto dfs = [&](auto && self, std::size_t start, int count) -> void {
        best = std::max(best, count);
        for (std::size_t j = start; j < candidates.size(); ++j) {
            if (count + 1 + (cap_left - weights[j]) / min_weight <= best)
                continue;
            std::uint64_t packed = candidates[j];
            bool fits = true;
            for (int v = 0; v < n && fits; ++v)
                fits = used[static_cast<std::size_t>(v)] +
                           std::popcount(static_cast<unsigned>((packed >> (8 * v)) & 0xff)) <=
                       k;
            if (!fits)
                continue;
            for (int v = 0; v < n; ++v)
                used[static_cast<std::size_t>(v)] +=
                    std::popcount(static_cast<unsigned>((packed >> (8 * v)) & 0xff));
            cap_left -= weights[j];
            self(self, j + 1, count + 1);
            cap_left += weights[j];
            for (int v = 0; v < n; ++v)
                used[static_cast<std::size_t>(v)] -=
                    std::popcount(static_cast<unsigned>((packed >> (8 * v)) & 0xff));
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

inline std::string serialize_family(const RainbowFamily & fam)
{
    std::string out = "family k " + std::to_string(fam.k) + " size " +
                      std::to_string(fam.members.size()) + "\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (i > 0)
            out += "---\n";
        out += serialize_assignment(fam.members[i], fam.host);
    }
    return out;
}

} // namespace rainbowdom
