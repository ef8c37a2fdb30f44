#pragma once

// Shared brute-force helpers for tests. Nothing here calls the library's search code.

#include "singram/canonical.hpp"
#include "singram/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline auto labeled(int n, std::uint64_t mask) -> singram::Graph
{
    singram::Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1)
                g.add_edge(i, j);
    return g;
}

/// One representative per isomorphism class, found by bucketing every labeled graph.
inline auto all_graphs(int n) -> std::vector<singram::Graph>
{
    std::vector<singram::Graph> out;
    std::set<singram::CanonicalKey> keys;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) {
        auto g = labeled(n, m);
        if (keys.insert(singram::canonical_form(g)).second)
            out.push_back(g);
    }
    return out;
}

inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> singram::Graph
{
    std::bernoulli_distribution coin(p);
    singram::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

inline auto singular_values(std::vector<int> v, int k) -> bool
{
    std::sort(v.begin(), v.end());
    if (v.empty() || v.front() == v.back())
        return true;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] - v[i - 1] < k)
            return false;
    return true;
}

/// Every p-subset (bitmask over n <= 20 vertices) whose host degrees are k-singular.
inline auto singular_subsets(const singram::Graph & g, int p, int k) -> std::set<std::vector<int>>
{
    std::set<std::vector<int>> out;
    const int n = g.order();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (std::popcount(m) != p)
            continue;
        std::vector<int> s, d;
        for (int v = 0; v < n; ++v)
            if ((m >> v) & 1) {
                s.push_back(v);
                d.push_back(g.degree(v));
            }
        if (singular_values(d, k))
            out.insert(s);
    }
    return out;
}

/// Tries every singular subset and every bijection onto it.
inline auto has_singular_copy(const singram::Graph & host, const singram::Graph & pattern, int k) -> bool
{
    const int p = pattern.order();
    if (p > host.order())
        return false;
    auto pe = pattern.edges();
    for (const auto & s : singular_subsets(host, p, k)) {
        std::vector<int> perm = s;
        do {
            bool ok = true;
            for (auto [a, b] : pe)
                if (! host.adjacent(perm[a], perm[b])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

} // namespace oracle
