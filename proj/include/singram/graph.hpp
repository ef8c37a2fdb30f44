#pragma once

#include "singram/bitset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singram {

inline constexpr int max_order = 256;

using VertexSet = BitSet<max_order>;

class OrderOverflow : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Undirected simple graph on vertices 0..n-1, adjacency held as one bitset row per vertex.
class Graph
{
public:
    Graph() = default;

    explicit Graph(int n) :
        rows_(check_order(n))
    {
    }

    auto order() const -> int { return static_cast<int>(rows_.size()); }

    auto adjacent(int u, int v) const -> bool { return rows_[u].test(v); }

    auto neighbours(int v) const -> const VertexSet & { return rows_[v]; }

    auto degree(int v) const -> int { return rows_[v].count(); }

    auto add_edge(int u, int v) -> void
    {
        check_pair(u, v);
        rows_[u].set(v);
        rows_[v].set(u);
    }

    auto remove_edge(int u, int v) -> void
    {
        check_pair(u, v);
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    auto set_edge(int u, int v, bool present) -> void
    {
        if (present)
            add_edge(u, v);
        else
            remove_edge(u, v);
    }

    auto edge_count() const -> int
    {
        int twice = 0;
        for (const auto & r : rows_)
            twice += r.count();
        return twice / 2;
    }

    auto edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < order(); ++u)
            rows_[u].for_each([&](int v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto all_vertices() const -> VertexSet { return VertexSet::prefix(order()); }

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    static auto check_order(int n) -> std::size_t
    {
        if (n < 0 || n > max_order)
            throw OrderOverflow("graph order " + std::to_string(n) + " outside [0, " + std::to_string(max_order) + "]");
        return static_cast<std::size_t>(n);
    }

    auto check_pair(int u, int v) const -> void
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw std::out_of_range("vertex out of range");
        if (u == v)
            throw std::invalid_argument("loops are not allowed");
    }

    std::vector<VertexSet> rows_;
};

inline auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline auto complement(const Graph & g) -> Graph
{
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (! g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

/// Subgraph induced by the given vertices, relabelled by ascending original index.
inline auto induced(const Graph & g, std::vector<int> vertices) -> Graph
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("induced: vertex out of range");
    const int m = static_cast<int>(vertices.size());
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                h.add_edge(i, j);
    return h;
}

inline auto induced(const Graph & g, const VertexSet & s) -> Graph
{
    std::vector<int> vs;
    s.for_each([&](int v) { vs.push_back(v); });
    return induced(g, std::move(vs));
}

/// Graph with vertex v renamed to perm[v].
inline auto permute(const Graph & g, std::span<const int> perm) -> Graph
{
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

inline auto delete_vertex(const Graph & g, int v) -> Graph
{
    std::vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced(g, keep);
}

inline auto degrees(const Graph & g) -> std::vector<int>
{
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    return d;
}

struct DegreeClass
{
    int degree = 0;
    std::vector<int> vertices;

    friend auto operator==(const DegreeClass &, const DegreeClass &) -> bool = default;
};

/// Vertices grouped by degree, ascending by degree; vertex lists sorted.
using DegreeClassPartition = std::vector<DegreeClass>;

inline auto degree_classes(const Graph & g) -> DegreeClassPartition
{
    auto d = degrees(g);
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    DegreeClassPartition classes;
    for (int v : order) {
        if (classes.empty() || classes.back().degree != d[v])
            classes.push_back(DegreeClass{d[v], {}});
        classes.back().vertices.push_back(v);
    }
    return classes;
}

inline auto is_regular(const Graph & g) -> bool { return degree_classes(g).size() <= 1; }

inline auto is_connected(const Graph & g) -> bool
{
    const int n = g.order();
    if (n <= 1)
        return true;
    VertexSet seen, frontier;
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbours(v); });
        next.remove(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == n;
}

inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

inline auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline auto empty_graph(int n) -> Graph { return Graph(n); }

/// Path 0-1-...-(n-1).
inline auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

/// Cycle 0-1-...-(n-1)-0, n >= 3.
inline auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    auto g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Complete multipartite graph; parts are consecutive vertex ranges in the given order.
inline auto complete_multipartite(std::span<const int> part_sizes) -> Graph
{
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 0)
            throw std::invalid_argument("negative part size");
        for (int i = 0; i < part_sizes[p]; ++i)
            part_of.push_back(static_cast<int>(p));
        n += part_sizes[p];
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

inline auto complete_bipartite(int p, int q) -> Graph
{
    const int sizes[] = {p, q};
    return complete_multipartite(sizes);
}

/// K_{1,s}: centre 0, leaves 1..s.
inline auto star_graph(int s) -> Graph { return complete_bipartite(1, s); }

/// m disjoint edges (2i, 2i+1).
inline auto matching_graph(int m) -> Graph
{
    Graph g(2 * m);
    for (int i = 0; i < m; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

/// Triangle 0,1,2 with pendant vertex 3 attached to 0.
inline auto paw_graph() -> Graph
{
    const std::pair<int, int> e[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
    return from_edges(4, e);
}

/// Triangle 0,1,2 with pendant vertices 3 (on 0) and 4 (on 2).
inline auto bull_graph() -> Graph
{
    const std::pair<int, int> e[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 4}};
    return from_edges(5, e);
}

/// Smallest q such that g has a proper q-colouring (0 for the null graph).
inline auto chromatic_number(const Graph & g) -> int
{
    const int n = g.order();
    if (n == 0)
        return 0;
    std::vector<int> colour(n, -1);
    for (int q = 1; q <= n; ++q) {
        auto rec = [&](auto && self, int v) -> bool {
            if (v == n)
                return true;
            int used_max = -1;
            for (int u = 0; u < v; ++u)
                used_max = std::max(used_max, colour[u]);
            for (int c = 0; c < q && c <= used_max + 1; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    ok = ! (g.adjacent(u, v) && colour[u] == c);
                if (ok) {
                    colour[v] = c;
                    if (self(self, v + 1))
                        return true;
                }
            }
            colour[v] = -1;
            return false;
        };
        if (rec(rec, 0))
            return q;
    }
    return n;
}

} // namespace singram
