#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowdom/colorset.hpp"
#include "rainbowdom/middle.hpp"

namespace rainbowdom {

// Where an assignment lives: on the elements of a source graph (middle), or
// directly on the vertices of a plain graph.
enum class AssignmentDomain { middle, plain };

// Color-set assignment in element order (middle) or vertex order (plain).
struct RainbowAssignment {
    int k = 3;
    AssignmentDomain domain = AssignmentDomain::plain;
    std::vector<ColorSet> values;
};

inline RainbowAssignment make_assignment(int k, AssignmentDomain domain, int size)
{
    require_color_count(k);
    if (size < 0)
        throw DomainError("assignment size must be non-negative");
    return {k, domain, std::vector<ColorSet>(static_cast<std::size_t>(size))};
}

inline int weight(const RainbowAssignment & f)
{
    int w = 0;
    for (ColorSet c : f.values)
        w += c.size();
    return w;
}

// Element order of M(G)'s source equals vertex order of M(G)'s host, so the
// two views of a middle assignment share one values vector.
inline RainbowAssignment as_plain(const RainbowAssignment & f)
{
    return {f.k, AssignmentDomain::plain, f.values};
}

inline RainbowAssignment as_middle(const RainbowAssignment & f)
{
    return {f.k, AssignmentDomain::middle, f.values};
}

namespace detail {

inline ColorSet parse_colorset(std::string_view text, int k, int line_no)
{
    if (text == "-")
        return ColorSet();
    ColorSet out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                                  : comma - pos);
        if (token.empty())
            throw ParseError("empty color in list", line_no);
        int color = 0;
        for (char ch : token) {
            if (ch < '0' || ch > '9')
                throw ParseError("bad color token: " + std::string(token), line_no);
            color = color * 10 + (ch - '0');
            if (color > kMaxColors)
                break;
        }
        if (color < 1 || color > k)
            throw ParseError("color out of range 1.." + std::to_string(k) + ": " +
                                 std::string(token),
                             line_no);
        if (out.contains(color))
            throw ParseError("repeated color: " + std::string(token), line_no);
        out |= ColorSet::single(color);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// Text format. Header "k <k> <middle|plain>", then one line per keyed
// element, "v<i> <colors>" or "e<u>-<v> <colors>" where <colors> is a
// comma-separated ascending list or "-" for the empty set. Keys may be
// omitted (treated as empty) but must not repeat. serialize_assignment
// always writes every key in element order. An optional leading line
// "value <w>" (as written by the solver) is accepted and checked against
// the assignment weight.
inline std::string serialize_assignment(const RainbowAssignment & f, const Graph & context)
{
    std::string out = "k " + std::to_string(f.k) + " " +
                      (f.domain == AssignmentDomain::middle ? "middle" : "plain") + "\n";
    std::size_t expected = f.domain == AssignmentDomain::middle
                               ? static_cast<std::size_t>(element_count(context))
                               : static_cast<std::size_t>(context.order());
    if (f.values.size() != expected)
        throw DomainError("assignment has " + std::to_string(f.values.size()) +
                          " values, context expects " + std::to_string(expected));
    if (f.domain == AssignmentDomain::middle) {
        auto labels = elements_of(context);
        for (std::size_t i = 0; i < labels.size(); ++i)
            out += labels[i].key() + " " + f.values[i].to_string() + "\n";
    } else {
        for (int v = 0; v < context.order(); ++v)
            out += "v" + std::to_string(v) + " " + f.values[static_cast<std::size_t>(v)].to_string() +
                   "\n";
    }
    return out;
}

inline RainbowAssignment parse_assignment(std::string_view text, const Graph & context)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::optional<int> declared_value;
    RainbowAssignment f;
    std::vector<char> seen;
    auto strip = [](std::string s) {
        auto hash = s.find('#');
        if (hash != std::string::npos)
            s.erase(hash);
        auto begin = s.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            return std::string();
        auto end = s.find_last_not_of(" \t\r");
        return s.substr(begin, end - begin + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip(line);
        if (body.empty())
            continue;
        std::istringstream fields(body);
        std::string head;
        fields >> head;
        if (!have_header) {
            if (head == "value") {
                if (declared_value)
                    throw ParseError("repeated value line", line_no);
                int w = 0;
                std::string extra;
                if (!(fields >> w) || (fields >> extra))
                    throw ParseError("expected \"value <w>\"", line_no);
                declared_value = w;
                continue;
            }
            if (head != "k")
                throw ParseError("expected header \"k <k> <middle|plain>\"", line_no);
            int k = 0;
            std::string domain;
            std::string extra;
            if (!(fields >> k >> domain) || (fields >> extra))
                throw ParseError("expected header \"k <k> <middle|plain>\"", line_no);
            if (k < 1 || k > kMaxColors)
                throw ParseError("k out of range 1.." + std::to_string(kMaxColors), line_no);
            if (domain != "middle" && domain != "plain")
                throw ParseError("domain must be middle or plain", line_no);
            f.k = k;
            f.domain = domain == "middle" ? AssignmentDomain::middle : AssignmentDomain::plain;
            int size = f.domain == AssignmentDomain::middle ? element_count(context)
                                                            : context.order();
            f.values.assign(static_cast<std::size_t>(size), ColorSet());
            seen.assign(static_cast<std::size_t>(size), 0);
            have_header = true;
            continue;
        }
        std::string colors;
        std::string extra;
        if (!(fields >> colors) || (fields >> extra))
            throw ParseError("expected \"<key> <colors>\"", line_no);
        int index = -1;
        if (head.size() >= 2 && head[0] == 'v') {
            int v = -1;
            try {
                std::size_t used = 0;
                v = std::stoi(head.substr(1), &used);
                if (used != head.size() - 1)
                    v = -1;
            } catch (const std::exception &) {
                v = -1;
            }
            if (v < 0 || v >= context.order())
                throw ParseError("unknown vertex key: " + head, line_no);
            index = v;
        } else if (head.size() >= 4 && head[0] == 'e' &&
                   f.domain == AssignmentDomain::middle) {
            auto dash = head.find('-', 1);
            int u = -1;
            int v = -1;
            try {
                std::size_t used = 0;
                u = std::stoi(head.substr(1, dash - 1), &used);
                if (dash == std::string::npos || used != dash - 1)
                    u = -1;
                else {
                    v = std::stoi(head.substr(dash + 1), &used);
                    if (used != head.size() - dash - 1)
                        v = -1;
                }
            } catch (const std::exception &) {
                u = -1;
            }
            if (u < 0 || v < 0 || u >= context.order() || v >= context.order())
                throw ParseError("unknown edge key: " + head, line_no);
            auto idx = context.edge_index(u, v);
            if (!idx)
                throw ParseError("unknown edge key: " + head, line_no);
            index = context.order() + *idx;
        } else {
            throw ParseError("bad key: " + head, line_no);
        }
        if (seen[static_cast<std::size_t>(index)])
            throw ParseError("repeated key: " + head, line_no);
        seen[static_cast<std::size_t>(index)] = 1;
        f.values[static_cast<std::size_t>(index)] = detail::parse_colorset(colors, f.k, line_no);
    }
    if (!have_header)
        throw ParseError("missing header \"k <k> <middle|plain>\"", line_no + 1);
    if (declared_value && *declared_value != weight(f))
        throw ParseError("declared value " + std::to_string(*declared_value) +
                             " does not match assignment weight " + std::to_string(weight(f)),
                         line_no + 1);
    return f;
}

} // namespace rainbowdom
