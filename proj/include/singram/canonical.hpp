#pragma once

#include "singram/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace singram {

/// Isomorphism-invariant key: order, optional colour multiset, and the
/// upper-triangle adjacency bits (row-major, most significant first) under the canonical labelling.
struct CanonicalKey
{
    int n = 0;
    std::vector<int> colours;
    std::vector<std::uint64_t> bits;

    friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
    friend auto operator==(const CanonicalKey &, const CanonicalKey &) -> bool = default;
};

namespace detail {

    using Cells = std::vector<std::vector<int>>;

    inline auto refine(const Graph & g, Cells & cells) -> void
    {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<VertexSet> masks(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    masks[c].set(v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2)
                    continue;
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cells[c].size());
                for (int v : cells[c]) {
                    std::vector<int> s(cells.size());
                    for (std::size_t d = 0; d < cells.size(); ++d)
                        s[d] = (g.neighbours(v) & masks[d]).count();
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                if (sig.front().first == sig.back().first)
                    continue;
                Cells split;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first)
                        split.emplace_back();
                    split.back().push_back(sig[i].second);
                }
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                changed = true;
                break;
            }
        }
    }

    inline auto leaf_key(const Graph & g, const Cells & cells) -> std::vector<std::uint64_t>
    {
        const int n = g.order();
        std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if (g.adjacent(cells[i][0], cells[j][0]))
                    bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
        return bits;
    }

    inline auto twins(const Graph & g, int u, int v) -> bool
    {
        auto a = g.neighbours(u);
        auto b = g.neighbours(v);
        a.reset(v);
        b.reset(u);
        return a == b;
    }

    struct CanonSearch
    {
        const Graph & g;
        std::optional<std::vector<std::uint64_t>> best;
        std::vector<int> best_order;

        auto run(Cells cells) -> void
        {
            refine(g, cells);
            std::size_t target = cells.size();
            for (std::size_t c = 0; c < cells.size(); ++c)
                if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                    target = c;
            if (target == cells.size()) {
                auto key = leaf_key(g, cells);
                if (! best || key < *best) {
                    best = std::move(key);
                    best_order.clear();
                    for (auto & c : cells)
                        best_order.push_back(c[0]);
                }
                return;
            }
            std::vector<int> tried;
            for (int v : cells[target]) {
                bool skip = false;
                for (int t : tried)
                    if (twins(g, t, v)) {
                        skip = true;
                        break;
                    }
                if (skip)
                    continue;
                tried.push_back(v);
                Cells next;
                next.reserve(cells.size() + 1);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (c != target) {
                        next.push_back(cells[c]);
                        continue;
                    }
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[c])
                        if (w != v)
                            rest.push_back(w);
                    next.push_back(std::move(rest));
                }
                run(std::move(next));
            }
        }
    };

    inline auto initial_cells(const Graph & g, const std::vector<int> & colours) -> Cells
    {
        const int n = g.order();
        std::vector<std::pair<int, int>> keyed;
        for (int v = 0; v < n; ++v)
            keyed.emplace_back(colours.empty() ? 0 : colours[v], v);
        std::sort(keyed.begin(), keyed.end());
        Cells cells;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                cells.emplace_back();
            cells.back().push_back(keyed[i].second);
        }
        return cells;
    }

} // namespace detail

/// Canonical ordering of the vertices: result[i] is the vertex placed at position i.
/// Vertices are first grouped by colour (ascending) when colours are supplied.
inline auto canonical_order(const Graph & g, const std::vector<int> & colours = {}) -> std::vector<int>
{
    if (g.order() == 0)
        return {};
    detail::CanonSearch search{g, std::nullopt, {}};
    search.run(detail::initial_cells(g, colours));
    return search.best_order;
}

inline auto canonical_form(const Graph & g, const std::vector<int> & colours = {}) -> CanonicalKey
{
    CanonicalKey key;
    key.n = g.order();
    if (! colours.empty()) {
        key.colours = colours;
        std::sort(key.colours.begin(), key.colours.end());
    }
    if (g.order() == 0)
        return key;
    detail::CanonSearch search{g, std::nullopt, {}};
    search.run(detail::initial_cells(g, colours));
    key.bits = std::move(*search.best);
    return key;
}

/// The graph relabelled into canonical order.
inline auto canonical_graph(const Graph & g) -> Graph
{
    auto order = canonical_order(g);
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i)
        perm[order[i]] = i;
    return permute(g, perm);
}

inline auto is_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    auto da = degrees(a), db = degrees(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace singram
