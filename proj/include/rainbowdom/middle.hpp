#pragma once

#include <string>
#include <vector>

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

// An element of M(G): either an original vertex or an original edge of G.
struct Element {
    enum class Kind { vertex, edge };

    Kind kind = Kind::vertex;
    int u = 0;
    int v = -1; // second endpoint for edge elements

    static Element vertex(int i) { return {Kind::vertex, i, -1}; }
    static Element edge(int a, int b)
    {
        Edge e = canonical_edge(a, b);
        return {Kind::edge, e.u, e.v};
    }

    friend bool operator==(const Element &, const Element &) = default;

    // Stable text key: "v<i>" or "e<u>-<v>" with u < v.
    std::string key() const
    {
        if (kind == Kind::vertex)
            return "v" + std::to_string(u);
        return "e" + std::to_string(u) + "-" + std::to_string(v);
    }
};

// Element order of a graph: vertices 0..n-1 first, then canonical edges.
inline int element_count(const Graph & g)
{
    return g.order() + g.edge_count();
}

inline std::vector<Element> elements_of(const Graph & g)
{
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(element_count(g)));
    for (int v = 0; v < g.order(); ++v)
        out.push_back(Element::vertex(v));
    for (const Edge & e : g.edges())
        out.push_back(Element::edge(e.u, e.v));
    return out;
}

inline int element_index(const Graph & g, const Element & x)
{
    if (x.kind == Element::Kind::vertex) {
        g.check_vertex(x.u);
        return x.u;
    }
    auto idx = g.edge_index(x.u, x.v);
    if (!idx)
        throw DomainError("no such edge element: " + x.key());
    return g.order() + *idx;
}

// Neighborhood of an element inside M(G), computed from the definition:
// vertex elements see their incident edges; edge elements see their two
// endpoints and every edge sharing an endpoint. Returned in element order.
inline std::vector<Element> middle_neighborhood(const Graph & g, const Element & x)
{
    std::vector<Element> out;
    if (x.kind == Element::Kind::vertex) {
        for (int w : g.neighbors(x.u))
            out.push_back(Element::edge(x.u, w));
    } else {
        if (!g.adjacent(x.u, x.v))
            throw DomainError("no such edge element: " + x.key());
        out.push_back(Element::vertex(x.u));
        out.push_back(Element::vertex(x.v));
        for (int w : g.neighbors(x.u))
            if (w != x.v)
                out.push_back(Element::edge(x.u, w));
        for (int w : g.neighbors(x.v))
            if (w != x.u)
                out.push_back(Element::edge(x.v, w));
    }
    std::sort(out.begin(), out.end(), [&g](const Element & a, const Element & b) {
        return element_index(g, a) < element_index(g, b);
    });
    return out;
}

// Middle graph M(G): one host vertex per element of G, in element order.
// Host vertex i therefore refers to the same object as element i of the
// source, which keeps assignments on the two views index-compatible.
class MiddleGraph {
public:
    explicit MiddleGraph(Graph source) : source_(std::move(source)), labels_(elements_of(source_))
    {
        int n = source_.order();
        std::vector<Edge> host_edges;
        // vertex-edge incidences
        for (int ei = 0; ei < source_.edge_count(); ++ei) {
            const Edge & e = source_.edges()[static_cast<std::size_t>(ei)];
            host_edges.push_back(canonical_edge(e.u, n + ei));
            host_edges.push_back(canonical_edge(e.v, n + ei));
        }
        // edge-edge adjacencies (shared endpoint)
        for (int a = 0; a < source_.edge_count(); ++a) {
            for (int b = a + 1; b < source_.edge_count(); ++b) {
                const Edge & ea = source_.edges()[static_cast<std::size_t>(a)];
                const Edge & eb = source_.edges()[static_cast<std::size_t>(b)];
                if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
                    host_edges.push_back({n + a, n + b});
            }
        }
        host_ = Graph(element_count(source_), std::move(host_edges));
    }

    const Graph & source() const { return source_; }
    const Graph & host() const { return host_; }
    const std::vector<Element> & labels() const { return labels_; }

    const Element & label(int host_vertex) const
    {
        host_.check_vertex(host_vertex);
        return labels_[static_cast<std::size_t>(host_vertex)];
    }

    int index_of(const Element & x) const { return element_index(source_, x); }

private:
    Graph source_;
    std::vector<Element> labels_;
    Graph host_;
};

inline MiddleGraph middle_graph(const Graph & g)
{
    return MiddleGraph(g);
}

} // namespace rainbowdom
