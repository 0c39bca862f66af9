#pragma once

#include <string>
#include <vector>

#include "rainbowdom/assignment.hpp"

namespace rainbowdom {

// One unsatisfied element: it received the empty set but its neighborhood
// union misses part of the palette.
struct Violation {
    std::string key;
    ColorSet seen;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Rainbow domination on a plain graph: every vertex with f(v) = {} must see
// all k colors across its neighbors.
inline VerificationReport verify_krdf(const Graph & g, const RainbowAssignment & f)
{
    if (f.domain != AssignmentDomain::plain)
        throw DomainError("expected a plain assignment");
    if (static_cast<int>(f.values.size()) != g.order())
        throw DomainError("assignment size " + std::to_string(f.values.size()) +
                          " does not match graph order " + std::to_string(g.order()));
    ColorSet full = ColorSet::all(f.k);
    VerificationReport report;
    for (int v = 0; v < g.order(); ++v) {
        if (!f.values[static_cast<std::size_t>(v)].empty())
            continue;
        ColorSet seen;
        for (int w : g.neighbors(v))
            seen |= f.values[static_cast<std::size_t>(w)];
        if (!(seen == full)) {
            report.valid = false;
            report.violations.push_back({"v" + std::to_string(v), seen});
        }
    }
    return report;
}

// Rainbow domination on M(G), checked directly from the element-adjacency
// definition rather than through a host graph. Keeping this route separate
// from verify_krdf lets tests confirm the two views agree.
inline VerificationReport verify_mkrdf(const Graph & g, const RainbowAssignment & f)
{
    if (f.domain != AssignmentDomain::middle)
        throw DomainError("expected a middle assignment");
    if (static_cast<int>(f.values.size()) != element_count(g))
        throw DomainError("assignment size " + std::to_string(f.values.size()) +
                          " does not match element count " + std::to_string(element_count(g)));
    ColorSet full = ColorSet::all(f.k);
    VerificationReport report;
    auto labels = elements_of(g);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!f.values[i].empty())
            continue;
        ColorSet seen;
        for (const Element & y : middle_neighborhood(g, labels[i]))
            seen |= f.values[static_cast<std::size_t>(element_index(g, y))];
        if (!(seen == full)) {
            report.valid = false;
            report.violations.push_back({labels[i].key(), seen});
        }
    }
    return report;
}

// Dispatch on the assignment's own domain. For middle assignments g is the
// source graph; for plain assignments g is the graph itself.
inline VerificationReport verify_assignment(const Graph & g, const RainbowAssignment & f)
{
    return f.domain == AssignmentDomain::middle ? verify_mkrdf(g, f) : verify_krdf(g, f);
}

} // namespace rainbowdom
