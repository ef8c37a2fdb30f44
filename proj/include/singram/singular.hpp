#pragma once

#include "singram/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace singram {

enum class SingularMode
{
    AllEqual,
    AllGapsAtLeastK
};

struct SingularWitness
{
    std::vector<int> vertices;     // sorted host vertices
    std::vector<int> host_degrees; // degrees of `vertices`, same order
    SingularMode mode = SingularMode::AllEqual;
    std::vector<int> embedding; // embedding[pattern vertex] = host vertex; empty for plain set witnesses
};

inline auto is_k_singular(std::span<const int> values, int k) -> bool
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (values.size() < 2)
        return true;
    std::vector<int> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    if (v.front() == v.back())
        return true;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] - v[i - 1] < k)
            return false;
    return true;
}

struct SingularSubsequence
{
    std::vector<std::size_t> indices;
    std::vector<int> values;
};

/// Pigeonhole extraction: a k-singular subsequence of length n from any k(n-1)^2+1 values.
inline auto extract_singular(std::span<const int> values, int n, int k) -> SingularSubsequence
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("extract_singular: n and k must be positive");
    const long need = static_cast<long>(k) * (n - 1) * (n - 1) + 1;
    if (static_cast<long>(values.size()) < need)
        throw std::invalid_argument("extract_singular: need at least k(n-1)^2+1 values");

    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

    SingularSubsequence out;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]])
            ++j;
        if (j - i >= static_cast<std::size_t>(n)) {
            for (std::size_t t = i; t < i + static_cast<std::size_t>(n); ++t)
                out.indices.push_back(order[t]);
            std::sort(out.indices.begin(), out.indices.end());
            for (auto idx : out.indices)
                out.values.push_back(values[idx]);
            return out;
        }
        i = j;
    }
    // every value repeats at most n-1 times, so there are more than k(n-1) distinct values
    long last = 0;
    bool have = false;
    for (auto idx : order) {
        if (have && values[idx] - last < k)
            continue;
        out.indices.push_back(idx);
        last = values[idx];
        have = true;
        if (static_cast<int>(out.indices.size()) == n)
            break;
    }
    std::sort(out.indices.begin(), out.indices.end());
    for (auto idx : out.indices)
        out.values.push_back(values[idx]);
    return out;
}

/// Calls f(vertices) for every p-subset with k-singular host degrees, stopping early when f returns false.
/// All-equal sets come first, class by class in ascending degree; then transversals in lexicographic order.
inline auto for_each_singular_set(const Graph & g, int p, int k, const std::function<bool(const std::vector<int> &)> & f) -> void
{
    if (p < 1 || k < 1)
        throw std::invalid_argument("singular_sets: p and k must be positive");
    const int n = g.order();
    auto deg = degrees(g);
    std::vector<int> cur;

    for (const auto & cls : degree_classes(g)) {
        const int m = static_cast<int>(cls.vertices.size());
        if (m < p)
            continue;
        std::vector<int> idx(p);
        for (int i = 0; i < p; ++i)
            idx[i] = i;
        while (true) {
            cur.clear();
            for (int i : idx)
                cur.push_back(cls.vertices[i]);
            if (! f(cur))
                return;
            int i = p - 1;
            while (i >= 0 && idx[i] == m - p + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < p; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    if (p < 2)
        return;

    cur.clear();
    bool stop = false;
    auto rec = [&](auto && self, int from) -> void {
        if (static_cast<int>(cur.size()) == p) {
            stop = ! f(cur);
            return;
        }
        for (int v = from; v <= n - (p - static_cast<int>(cur.size())) && ! stop; ++v) {
            bool ok = true;
            for (int u : cur)
                if (std::abs(deg[u] - deg[v]) < k) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

inline auto singular_sets(const Graph & g, int p, int k) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    for_each_singular_set(g, p, k, [&](const std::vector<int> & s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace detail {

    /// Backtracking embedding of `pattern` into `host` with forward checking.
    /// Candidate images start from `allowed`; in spread mode images must have pairwise degree gap >= k.
    class Embedder
    {
    public:
        Embedder(const Graph & host, const Graph & pattern, const std::vector<int> & host_deg, int k) :
            host_(host), pattern_(pattern), deg_(host_deg), k_(k), p_(pattern.order()), image_(p_, -1)
        {
            pdeg_ = degrees(pattern);
            conflict_.resize(static_cast<std::size_t>(host.order()));
            for (int v = 0; v < host.order(); ++v)
                for (int w = 0; w < host.order(); ++w)
                    if (std::abs(deg_[w] - deg_[v]) < k_)
                        conflict_[v].set(w);
        }

        auto run(const VertexSet & allowed, bool spread) -> std::optional<std::vector<int>>
        {
            spread_ = spread;
            std::vector<VertexSet> cand(p_);
            for (int u = 0; u < p_; ++u) {
                allowed.for_each([&](int v) {
                    if (deg_[v] >= pdeg_[u])
                        cand[u].set(v);
                });
                if (cand[u].none())
                    return std::nullopt;
            }
            if (spread_ && ! enough_bands(cand, 0))
                return std::nullopt;
            if (search(cand, 0))
                return image_;
            return std::nullopt;
        }

    private:
        // Largest number of k-spaced degree values present among the candidates of unplaced vertices.
        auto enough_bands(const std::vector<VertexSet> & cand, int placed) const -> bool
        {
            const int need = p_ - placed;
            VertexSet uni;
            for (int u = 0; u < p_; ++u)
                if (image_[u] < 0)
                    uni |= cand[u];
            BitSet<max_order> present;
            uni.for_each([&](int v) { present.set(deg_[v]); });
            int got = 0, last = -max_order;
            for (int d = present.first(); d >= 0; d = present.next(d))
                if (d - last >= k_) {
                    ++got;
                    last = d;
                    if (got >= need)
                        return true;
                }
            return got >= need;
        }

        auto search(std::vector<VertexSet> & cand, int placed) -> bool
        {
            if (placed == p_)
                return true;
            int u = -1, best = max_order + 1;
            for (int w = 0; w < p_; ++w) {
                if (image_[w] >= 0)
                    continue;
                int c = cand[w].count();
                if (u < 0 || c < best || (c == best && pdeg_[w] > pdeg_[u])) {
                    best = c;
                    u = w;
                }
            }
            const auto options = cand[u];
            for (int v = options.first(); v >= 0; v = options.next(v)) {
                std::vector<VertexSet> next = cand;
                image_[u] = v;
                VertexSet blocked;
                if (spread_)
                    blocked = conflict_[v];
                else
                    blocked.set(v);
                bool ok = true;
                for (int w = 0; w < p_ && ok; ++w) {
                    if (image_[w] >= 0)
                        continue;
                    next[w].remove(blocked);
                    if (pattern_.adjacent(u, w))
                        next[w] &= host_.neighbours(v);
                    ok = next[w].any();
                }
                if (ok && spread_)
                    ok = enough_bands(next, placed + 1);
                if (ok && search(next, placed + 1))
                    return true;
                image_[u] = -1;
            }
            return false;
        }

        const Graph & host_;
        const Graph & pattern_;
        const std::vector<int> & deg_;
        int k_;
        int p_;
        bool spread_ = false;
        std::vector<int> pdeg_;
        std::vector<int> image_;
        std::vector<VertexSet> conflict_;
    };

    inline auto make_witness(const std::vector<int> & image, const std::vector<int> & deg, SingularMode mode) -> SingularWitness
    {
        SingularWitness w;
        w.embedding = image;
        w.vertices = image;
        std::sort(w.vertices.begin(), w.vertices.end());
        for (int v : w.vertices)
            w.host_degrees.push_back(deg[v]);
        w.mode = mode;
        return w;
    }

} // namespace detail

/// A pattern copy (not necessarily induced) whose host vertices have k-singular host degrees.
inline auto find_singular_copy(const Graph & host, const Graph & pattern, int k) -> std::optional<SingularWitness>
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    const int p = pattern.order();
    if (p > host.order())
        return std::nullopt;
    if (p == 0)
        return SingularWitness{};
    auto deg = degrees(host);
    detail::Embedder embed(host, pattern, deg, k);

    for (const auto & cls : degree_classes(host)) {
        if (static_cast<int>(cls.vertices.size()) < p)
            continue;
        VertexSet allowed;
        for (int v : cls.vertices)
            allowed.set(v);
        if (auto img = embed.run(allowed, false))
            return detail::make_witness(*img, deg, SingularMode::AllEqual);
    }
    if (p >= 2)
        if (auto img = embed.run(host.all_vertices(), true))
            return detail::make_witness(*img, deg, SingularMode::AllGapsAtLeastK);
    return std::nullopt;
}

/// Plain (not necessarily induced) subgraph containment.
inline auto contains_subgraph(const Graph & host, const Graph & pattern) -> bool
{
    if (pattern.order() > host.order())
        return false;
    if (pattern.order() == 0)
        return true;
    auto deg = degrees(host);
    detail::Embedder embed(host, pattern, deg, 1);
    return embed.run(host.all_vertices(), false).has_value();
}

inline auto has_singular_copy(const Graph & host, const Graph & pattern, int k) -> bool
{
    return find_singular_copy(host, pattern, k).has_value();
}

/// True when neither g contains a k-singular f1 nor its complement a k-singular f2.
inline auto is_sr_graph(const Graph & g, const Graph & f1, const Graph & f2, int k) -> bool
{
    return ! has_singular_copy(g, f1, k) && ! has_singular_copy(complement(g), f2, k);
}

/// Independent re-check of a copy witness.
inline auto verify_witness(const Graph & host, const Graph & pattern, const SingularWitness & w, int k) -> bool
{
    if (static_cast<int>(w.embedding.size()) != pattern.order())
        return false;
    std::vector<int> sorted = w.embedding;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted != w.vertices)
        return false;
    for (int v : sorted)
        if (v < 0 || v >= host.order())
            return false;
    std::vector<int> d;
    for (int v : sorted)
        d.push_back(host.degree(v));
    if (d != w.host_degrees || ! is_k_singular(d, k))
        return false;
    for (auto [a, b] : pattern.edges())
        if (! host.adjacent(w.embedding[a], w.embedding[b]))
            return false;
    return true;
}

struct SingularTree
{
    SingularWitness witness;
    std::vector<std::pair<int, int>> edges;
    bool in_complement = false;
};

/// A k-singular vertex set of size n spanned by a tree lying wholly in g or wholly in its complement.
inline auto find_singular_tree(const Graph & g, int n, int k) -> SingularTree
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("find_singular_tree: n and k must be positive");
    if (static_cast<long>(g.order()) < static_cast<long>(k) * (n - 1) * (n - 1) + 1)
        throw std::invalid_argument("find_singular_tree: order below k(n-1)^2+1");
    auto deg = degrees(g);
    auto sub = extract_singular(deg, n, k);

    SingularTree out;
    for (auto i : sub.indices)
        out.witness.vertices.push_back(static_cast<int>(i));
    out.witness.host_degrees = sub.values;
    out.witness.mode = sub.values.front() == sub.values.back() ? SingularMode::AllEqual : SingularMode::AllGapsAtLeastK;

    // one of G[S] and its complement is always connected
    const auto & s = out.witness.vertices;
    auto side = induced(g, s);
    out.in_complement = ! is_connected(side);
    if (out.in_complement)
        side = complement(side);
    std::vector<bool> seen(s.size(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        side.neighbours(a).for_each([&](int b) {
            if (! seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = true;
                queue.push_back(b);
                out.edges.emplace_back(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
            }
        });
    }
    return out;
}

} // namespace singram
