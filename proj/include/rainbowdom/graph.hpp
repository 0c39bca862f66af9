#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend constexpr bool operator==(const Edge &, const Edge &) = default;
    friend constexpr bool operator<(const Edge & a, const Edge & b)
    {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge canonical_edge(int a, int b)
{
    if (a == b)
        throw DomainError("loop edge at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph with vertices 0..n-1 and a canonical edge order
// (edges stored with u < v, sorted lexicographically). Immutable after
// construction, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    Graph(int order, std::vector<Edge> edges) : order_(order)
    {
        if (order < 0)
            throw DomainError("graph order must be non-negative");
        for (auto & e : edges) {
            Edge c = canonical_edge(e.u, e.v);
            if (c.u < 0 || c.v >= order_)
                throw DomainError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
            e = c;
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw DomainError("duplicate edge in edge list");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(order_), {});
        for (const Edge & e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto & nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> & edges() const { return edges_; }

    const std::vector<int> & neighbors(int v) const
    {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const
    {
        if (u == v)
            return false;
        const auto & nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Position of {u,v} in the canonical edge order.
    std::optional<int> edge_index(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            return std::nullopt;
        Edge e = canonical_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e))
            return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    int min_degree() const
    {
        if (order_ == 0)
            throw DomainError("min degree of the empty graph is undefined");
        int d = degree(0);
        for (int v = 1; v < order_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const
    {
        if (order_ == 0)
            throw DomainError("max degree of the empty graph is undefined");
        int d = degree(0);
        for (int v = 1; v < order_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= order_)
            throw DomainError("vertex out of range: " + std::to_string(v));
    }

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- generators ---

inline Graph path_graph(int n)
{
    if (n < 1)
        throw DomainError("path requires n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw DomainError("cycle requires n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n)
{
    if (n < 1)
        throw DomainError("complete requires n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return Graph(n, std::move(e));
}

inline Graph empty_graph(int n)
{
    if (n < 0)
        throw DomainError("empty graph requires n >= 0");
    return Graph(n, {});
}

// Star K_{1,t}: center 0, leaves 1..t.
inline Graph star_graph(int t)
{
    if (t < 2)
        throw DomainError("star requires t >= 2");
    std::vector<Edge> e;
    for (int i = 1; i <= t; ++i)
        e.push_back({0, i});
    return Graph(t + 1, std::move(e));
}

// Double star DS_{p,q}: centers 0 and 1, p leaves on 0, q leaves on 1.
inline Graph double_star_graph(int p, int q)
{
    if (p < 1 || q < 1)
        throw DomainError("double star requires p, q >= 1");
    std::vector<Edge> e;
    e.push_back({0, 1});
    for (int i = 0; i < p; ++i)
        e.push_back({0, 2 + i});
    for (int i = 0; i < q; ++i)
        e.push_back({1, 2 + p + i});
    return Graph(2 + p + q, std::move(e));
}

// Wounded spider: K_{1,t} with r of the t edges subdivided once.
// Center 0, spine vertices 1..t, subdivision vertices t+1..t+r attached so
// that leg i (1 <= i <= r) becomes 0 - (t+i) - i.
inline Graph spider_graph(int t, int r)
{
    if (t < 1)
        throw DomainError("spider requires t >= 1");
    if (r < 0 || r > t)
        throw DomainError("spider requires 0 <= r <= t");
    std::vector<Edge> e;
    for (int i = 1; i <= t; ++i) {
        if (i <= r) {
            e.push_back({0, t + i});
            e.push_back({i, t + i});
        } else {
            e.push_back({0, i});
        }
    }
    return Graph(t + r + 1, std::move(e));
}

// Decode a Pruefer sequence (values in 0..n-1, length n-2) into the labeled
// tree it encodes. Standard smallest-leaf decoding.
inline Graph prufer_decode(int n, const std::vector<int> & seq)
{
    if (n < 1)
        throw DomainError("tree requires n >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw DomainError("pruefer sequence must have length n-2");
    if (n == 1)
        return empty_graph(1);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int a : seq) {
        if (a < 0 || a >= n)
            throw DomainError("pruefer value out of range: " + std::to_string(a));
        ++degree[static_cast<std::size_t>(a)];
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    // Min-heap of current leaves.
    std::vector<int> heap;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            heap.push_back(v);
    std::make_heap(heap.begin(), heap.end(), std::greater<>());
    auto pop_min = [&heap]() {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>());
        int v = heap.back();
        heap.pop_back();
        return v;
    };
    for (int a : seq) {
        int leaf = pop_min();
        edges.push_back(canonical_edge(leaf, a));
        if (--degree[static_cast<std::size_t>(a)] == 1) {
            heap.push_back(a);
            std::push_heap(heap.begin(), heap.end(), std::greater<>());
        }
    }
    int x = pop_min();
    int y = pop_min();
    edges.push_back(canonical_edge(x, y));
    return Graph(n, std::move(edges));
}

// Uniformly random labeled tree: seed a 64-bit Mersenne twister, draw the
// n-2 sequence values by reduction mod n, decode. Same seed, same tree.
inline Graph random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw DomainError("random tree requires n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(std::max(0, n - 2)));
    for (int i = 0; i < n - 2; ++i)
        seq.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    return prufer_decode(n, seq);
}

// Named-family dispatcher used by the CLI. Parameter conventions:
//   path/cycle/complete/empty: {n}; star: {t}; double_star: {p,q};
//   spider: {t,r}; random_tree: {n} plus a required seed.
inline Graph generate(std::string_view kind, const std::vector<int> & params,
                      std::optional<std::uint64_t> seed = std::nullopt)
{
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw DomainError(std::string(kind) + " expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (kind == "path") {
        want(1);
        return path_graph(params[0]);
    }
    if (kind == "cycle") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (kind == "complete") {
        want(1);
        return complete_graph(params[0]);
    }
    if (kind == "empty") {
        want(1);
        if (params[0] < 1)
            throw DomainError("empty requires n >= 1");
        return empty_graph(params[0]);
    }
    if (kind == "star") {
        want(1);
        return star_graph(params[0]);
    }
    if (kind == "double_star") {
        want(2);
        return double_star_graph(params[0], params[1]);
    }
    if (kind == "spider") {
        want(2);
        return spider_graph(params[0], params[1]);
    }
    if (kind == "random_tree") {
        want(1);
        if (!seed)
            throw DomainError("random_tree requires a seed");
        return random_tree(params[0], *seed);
    }
    throw DomainError("unknown graph kind: " + std::string(kind));
}

// --- operations ---

inline Graph complement(const Graph & g)
{
    std::vector<Edge> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                e.push_back({u, v});
    return Graph(g.order(), std::move(e));
}

inline Graph with_edge(const Graph & g, int u, int v)
{
    g.check_vertex(u);
    g.check_vertex(v);
    if (g.adjacent(u, v))
        throw DomainError("edge already present: " + std::to_string(u) + " " + std::to_string(v));
    std::vector<Edge> e = g.edges();
    e.push_back(canonical_edge(u, v));
    return Graph(g.order(), std::move(e));
}

inline Graph without_edge(const Graph & g, int u, int v)
{
    if (!g.adjacent(u, v))
        throw DomainError("edge not present: " + std::to_string(u) + " " + std::to_string(v));
    Edge target = canonical_edge(u, v);
    std::vector<Edge> e;
    for (const Edge & f : g.edges())
        if (!(f == target))
            e.push_back(f);
    return Graph(g.order(), std::move(e));
}

// Remove a vertex and relabel the remaining vertices to stay contiguous
// (vertices above v shift down by one).
inline Graph without_vertex(const Graph & g, int v)
{
    g.check_vertex(v);
    std::vector<Edge> e;
    for (const Edge & f : g.edges()) {
        if (f.u == v || f.v == v)
            continue;
        e.push_back({f.u > v ? f.u - 1 : f.u, f.v > v ? f.v - 1 : f.v});
    }
    return Graph(g.order() - 1, std::move(e));
}

inline int component_count(const Graph & g)
{
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        ++components;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

inline bool is_connected(const Graph & g)
{
    return g.order() > 0 && component_count(g) == 1;
}

inline bool is_forest(const Graph & g)
{
    // Acyclic iff every component has exactly order-1 edges.
    return g.edge_count() == g.order() - component_count(g);
}

inline bool is_tree(const Graph & g)
{
    return is_connected(g) && g.edge_count() == g.order() - 1;
}

// --- maximum matching ---

struct Matching {
    int size = 0;
    std::vector<Edge> edges;
};

namespace detail {

// Leaf-first greedy on a forest: process each component in DFS post-order
// from its smallest root and match a vertex to its parent when both are
// still free. On forests this attains the maximum matching.
inline Matching forest_matching(const Graph & g)
{
    int n = g.order();
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    Matching result;
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<std::size_t>(root)])
            continue;
        // Iterative DFS collecting post-order.
        std::vector<int> order;
        std::vector<int> stack{root};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    stack.push_back(w);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            int p = parent[static_cast<std::size_t>(v)];
            if (p >= 0 && !matched[static_cast<std::size_t>(v)] &&
                !matched[static_cast<std::size_t>(p)]) {
                matched[static_cast<std::size_t>(v)] = 1;
                matched[static_cast<std::size_t>(p)] = 1;
                result.edges.push_back(canonical_edge(v, p));
            }
        }
    }
    std::sort(result.edges.begin(), result.edges.end());
    result.size = static_cast<int>(result.edges.size());
    return result;
}

} // namespace detail

// Exhaustive maximum matching over edge subsets; only for small edge counts.
inline Matching exhaustive_matching(const Graph & g)
{
    int m = g.edge_count();
    if (m > 16)
        throw CapacityError("exhaustive matching supports at most 16 edges, got " +
                            std::to_string(m));
    Matching best;
    const auto & edges = g.edges();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) <= best.size)
            continue;
        std::fill(used.begin(), used.end(), 0);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!((mask >> i) & 1u))
                continue;
            const Edge & e = edges[static_cast<std::size_t>(i)];
            if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
                ok = false;
            used[static_cast<std::size_t>(e.u)] = 1;
            used[static_cast<std::size_t>(e.v)] = 1;
        }
        if (!ok)
            continue;
        best.size = std::popcount(mask);
        best.edges.clear();
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u)
                best.edges.push_back(edges[static_cast<std::size_t>(i)]);
    }
    return best;
}

inline Matching maximum_matching(const Graph & g)
{
    if (is_forest(g))
        return detail::forest_matching(g);
    if (g.edge_count() <= 16)
        return exhaustive_matching(g);
    throw CapacityError("maximum matching needs a forest or at most 16 edges, got " +
                        std::to_string(g.edge_count()));
}

inline int matching_number(const Graph & g)
{
    return maximum_matching(g).size;
}

// --- serialization ---

// Text format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment; blank lines are ignored.
inline Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    int m = -1;
    std::vector<Edge> edges;
    std::vector<char> have; // duplicate detection with line numbers
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
        if (n < 0) {
            if (!(fields >> n >> m))
                throw ParseError("expected header \"n m\"", line_no);
            std::string extra;
            if (fields >> extra)
                throw ParseError("trailing data after header", line_no);
            if (n < 0 || m < 0)
                throw ParseError("negative counts in header", line_no);
            have.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
            continue;
        }
        int u = 0;
        int v = 0;
        if (!(fields >> u >> v))
            throw ParseError("expected edge \"u v\"", line_no);
        std::string extra;
        if (fields >> extra)
            throw ParseError("trailing data after edge", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", line_no);
        if (u == v)
            throw ParseError("loop edge is not allowed", line_no);
        Edge e = canonical_edge(u, v);
        std::size_t slot =
            static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v);
        if (have[slot])
            throw ParseError("duplicate edge", line_no);
        have[slot] = 1;
        edges.push_back(e);
    }
    if (n < 0)
        throw ParseError("missing header \"n m\"", line_no + 1);
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         line_no + 1);
    return Graph(n, std::move(edges));
}

inline std::string serialize_graph(const Graph & g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge & e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// --- exhaustive enumeration helpers ---

// All 2^(n(n-1)/2) labeled graphs on n vertices, edge subsets in mask order.
inline std::vector<Graph> all_labeled_graphs(int n)
{
    if (n < 0 || n > 5)
        throw CapacityError("labeled graph enumeration supports n <= 5");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::vector<Graph> out;
    out.reserve(1u << slots.size());
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u)
                e.push_back(slots[i]);
        out.push_back(Graph(n, std::move(e)));
    }
    return out;
}

// All n^(n-2) labeled trees on n vertices via Pruefer sequences.
inline std::vector<Graph> all_labeled_trees(int n)
{
    if (n < 1)
        throw DomainError("tree enumeration requires n >= 1");
    if (n > 7)
        throw CapacityError("labeled tree enumeration supports n <= 7");
    if (n <= 2)
        return {n == 1 ? empty_graph(1) : path_graph(2)};
    std::vector<Graph> out;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        out.push_back(prufer_decode(n, seq));
        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1)
            seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return out;
}

} // namespace rainbowdom
