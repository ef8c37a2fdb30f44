#pragma once

// Compact graphs on at most 16 vertices with a matching canonical labeller.
// These back the enumeration hot loops; Graph remains the general type.

#include "singram/graph.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace singram {

using u128 = unsigned __int128;

inline constexpr int small_max_order = 16;

struct SmallGraph
{
    int n = 0;
    std::array<std::uint16_t, small_max_order> adj{};

    auto adjacent(int u, int v) const -> bool { return (adj[u] >> v) & 1U; }
    auto degree(int v) const -> int { return std::popcount(adj[v]); }
    auto all() const -> std::uint16_t { return static_cast<std::uint16_t>((1U << n) - 1); }

    auto edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < n; ++v)
            twice += degree(v);
        return twice / 2;
    }

    auto add_edge(int u, int v) -> void
    {
        adj[u] |= static_cast<std::uint16_t>(1U << v);
        adj[v] |= static_cast<std::uint16_t>(1U << u);
    }

    auto complement() const -> SmallGraph
    {
        SmallGraph c;
        c.n = n;
        for (int v = 0; v < n; ++v)
            c.adj[v] = static_cast<std::uint16_t>(all() & ~adj[v] & ~(1U << v));
        return c;
    }

    friend auto operator==(const SmallGraph &, const SmallGraph &) -> bool = default;
};

inline auto to_small(const Graph & g) -> SmallGraph
{
    if (g.order() > small_max_order)
        throw OrderOverflow("small graph holds at most 16 vertices");
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.edges())
        s.add_edge(u, v);
    return s;
}

inline auto to_graph(const SmallGraph & s) -> Graph
{
    Graph g(s.n);
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (s.adjacent(u, v))
                g.add_edge(u, v);
    return g;
}

namespace detail {

    struct SmallPartition
    {
        int count = 0;
        std::array<std::uint16_t, small_max_order> cells{};
    };

    inline auto small_refine(const SmallGraph & g, SmallPartition & p) -> void
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < p.count && ! changed; ++s) {
                const std::uint16_t w = p.cells[s];
                for (int c = 0; c < p.count; ++c) {
                    const std::uint16_t x = p.cells[c];
                    if (std::popcount(x) < 2)
                        continue;
                    int lo = 17, hi = -1;
                    std::array<int, small_max_order> cnt{};
                    for (std::uint16_t r = x; r; r &= r - 1) {
                        int v = std::countr_zero(r);
                        cnt[v] = std::popcount(static_cast<std::uint16_t>(g.adj[v] & w));
                        lo = std::min(lo, cnt[v]);
                        hi = std::max(hi, cnt[v]);
                    }
                    if (lo == hi)
                        continue;
                    std::array<std::uint16_t, small_max_order + 1> parts{};
                    int made = 0;
                    for (int value = lo; value <= hi; ++value) {
                        std::uint16_t part = 0;
                        for (std::uint16_t r = x; r; r &= r - 1) {
                            int v = std::countr_zero(r);
                            if (cnt[v] == value)
                                part |= static_cast<std::uint16_t>(1U << v);
                        }
                        if (part)
                            parts[made++] = part;
                    }
                    for (int t = p.count - 1; t > c; --t)
                        p.cells[t + made - 1] = p.cells[t];
                    for (int t = 0; t < made; ++t)
                        p.cells[c + t] = parts[t];
                    p.count += made - 1;
                    changed = true;
                    break;
                }
            }
        }
    }

    inline auto small_leaf_key(const SmallGraph & g, const SmallPartition & p) -> u128
    {
        std::array<int, small_max_order> at{};
        for (int i = 0; i < g.n; ++i)
            at[i] = std::countr_zero(p.cells[i]);
        u128 key = 0;
        int pos = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j, ++pos)
                if (g.adjacent(at[i], at[j]))
                    key |= u128{1} << (127 - pos);
        return key;
    }

    struct SmallCanon
    {
        const SmallGraph & g;
        bool have = false;
        u128 best = 0;
        SmallPartition best_leaf;

        auto run(SmallPartition p) -> void
        {
            small_refine(g, p);
            if (p.count == g.n) {
                auto key = small_leaf_key(g, p);
                if (! have || key < best) {
                    have = true;
                    best = key;
                    best_leaf = p;
                }
                return;
            }
            int target = -1, size = 99;
            for (int c = 0; c < p.count; ++c) {
                int s = std::popcount(p.cells[c]);
                if (s > 1 && s < size) {
                    size = s;
                    target = c;
                }
            }
            const std::uint16_t cell = p.cells[target];
            std::uint16_t tried = 0;
            for (std::uint16_t r = cell; r; r &= r - 1) {
                int v = std::countr_zero(r);
                bool twin = false;
                for (std::uint16_t t = tried; t; t &= t - 1) {
                    int u = std::countr_zero(t);
                    auto mu = static_cast<std::uint16_t>(g.adj[u] & ~(1U << v));
                    auto mv = static_cast<std::uint16_t>(g.adj[v] & ~(1U << u));
                    if (mu == mv) {
                        twin = true;
                        break;
                    }
                }
                if (twin)
                    continue;
                tried |= static_cast<std::uint16_t>(1U << v);
                SmallPartition next;
                next.count = p.count + 1;
                for (int c = 0, o = 0; c < p.count; ++c) {
                    if (c == target) {
                        next.cells[o++] = static_cast<std::uint16_t>(1U << v);
                        next.cells[o++] = static_cast<std::uint16_t>(cell & ~(1U << v));
                    }
                    else
                        next.cells[o++] = p.cells[c];
                }
                run(next);
            }
        }
    };

    inline auto small_unit(const SmallGraph & g) -> SmallPartition
    {
        SmallPartition p;
        if (g.n > 0) {
            p.count = 1;
            p.cells[0] = g.all();
        }
        return p;
    }

} // namespace detail

/// Canonical key of g; equal keys iff isomorphic (for graphs of equal order).
inline auto small_canonical_key(const SmallGraph & g) -> u128
{
    if (g.n == 0)
        return 0;
    detail::SmallCanon c{g, false, 0, {}};
    c.run(detail::small_unit(g));
    return c.best;
}

/// Canonical key of g with vertex x individualized (the pair (g, x) up to isomorphism).
inline auto small_rooted_key(const SmallGraph & g, int x) -> u128
{
    detail::SmallPartition p;
    p.cells[0] = static_cast<std::uint16_t>(1U << x);
    p.count = 1;
    if (auto rest = static_cast<std::uint16_t>(g.all() & ~(1U << x)))
        p.cells[p.count++] = rest;
    detail::SmallCanon c{g, false, 0, {}};
    c.run(p);
    return c.best;
}

inline auto small_canonical_graph(const SmallGraph & g) -> SmallGraph
{
    if (g.n == 0)
        return g;
    detail::SmallCanon c{g, false, 0, {}};
    c.run(detail::small_unit(g));
    std::array<int, small_max_order> pos{};
    for (int i = 0; i < g.n; ++i)
        pos[std::countr_zero(c.best_leaf.cells[i])] = i;
    SmallGraph h;
    h.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v))
                h.add_edge(pos[u], pos[v]);
    return h;
}

/// Subgraph (not necessarily induced) embedding of `pattern` into `host`.
/// When `through` >= 0 the copy must use that host vertex.
inline auto small_contains(const SmallGraph & host, const SmallGraph & pattern, int through = -1) -> bool
{
    const int p = pattern.n;
    if (p > host.n)
        return false;
    if (p == 0)
        return through < 0;
    std::array<int, small_max_order> order{}, image{};
    // pattern vertices by descending degree, each preferring a neighbour of those already placed
    std::uint16_t placed = 0;
    for (int i = 0; i < p; ++i) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < p; ++v) {
            if ((placed >> v) & 1U)
                continue;
            int links = std::popcount(static_cast<std::uint16_t>(pattern.adj[v] & placed));
            if (links > best_links || (links == best_links && pattern.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = pattern.degree(v);
            }
        }
        order[i] = best;
        placed |= static_cast<std::uint16_t>(1U << best);
    }
    std::array<int, small_max_order> hdeg{};
    for (int v = 0; v < host.n; ++v)
        hdeg[v] = host.degree(v);

    auto rec = [&](auto && self, int i, std::uint16_t used, bool hit) -> bool {
        if (i == p)
            return through < 0 || hit;
        const int u = order[i];
        std::uint16_t cand = static_cast<std::uint16_t>(host.all() & ~used);
        for (int j = 0; j < i; ++j)
            if (pattern.adjacent(u, order[j]))
                cand &= host.adj[image[order[j]]];
        if (through >= 0 && ! hit && p - i == 1)
            cand &= static_cast<std::uint16_t>(1U << through);
        const int need = pattern.degree(u);
        for (std::uint16_t r = cand; r; r &= r - 1) {
            int v = std::countr_zero(r);
            if (hdeg[v] < need)
                continue;
            image[u] = v;
            if (self(self, i + 1, static_cast<std::uint16_t>(used | (1U << v)), hit || v == through))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0, false);
}

} // namespace singram
