#include "singram/turan.hpp"

#include <gtest/gtest.h>

using namespace singram;

namespace {

// Maximum edge count of a K_s-free graph on n vertices, over every canonical graph.
auto brute_ex(int n, int s) -> long
{
    const Graph ks = complete_graph(s);
    long best = 0;
    for (const auto & g : generate_all(n))
        if (g.edge_count() > best && ! contains_subgraph(g, ks))
            best = g.edge_count();
    return best;
}

// Ts over every labelled graph on n vertices.
auto brute_ts(int n, const Graph & f, int k) -> long
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    long best = -1;
    for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
        const long e = std::popcount(m);
        if (e <= best)
            continue;
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((m >> b) & 1U)
                g.add_edge(pairs[b].first, pairs[b].second);
        if (! has_singular_copy(g, f, k))
            best = e;
    }
    return best;
}

// 8 * the bracket of the triangle proposition for n mod 4 != 2.
auto bracket8(int n) -> std::pair<long, long>
{
    const long sq = 3L * n * n;
    switch (n % 4) {
    case 0: return {sq - 16, sq - 8};
    case 1: return {sq - 2L * n - 1, sq - 11};
    default: return {sq - 2L * n - 13, sq - 11};
    }
}

} // namespace

TEST(Turan, NumberMatchesBruteForce)
{
    for (int s = 2; s <= 5; ++s)
        for (int n = 1; n <= 7; ++n)
            EXPECT_EQ(turan_number(n, s), brute_ex(n, s)) << n << " " << s;
    EXPECT_EQ(turan_number(6, 5), 13);
    EXPECT_EQ(turan_number(8, 5), 24);
    EXPECT_EQ(turan_number(4, 5), 6);
    EXPECT_EQ(turan_number(9, 2), 0);
    EXPECT_EQ(turan_graph(10, 5).edge_count(), turan_number(10, 5));
    EXPECT_THROW(turan_number(5, 1), std::invalid_argument);
}

TEST(Turan, ExactPaperValues)
{
    auto t6 = ts_exact(6, "K3");
    EXPECT_EQ(t6.value, 13);
    ASSERT_FALSE(t6.witnesses.empty());
    EXPECT_TRUE(std::any_of(t6.witnesses.begin(), t6.witnesses.end(), [](const Graph & g) { return contains_subgraph(g, turan_graph(6, 5)); }));
    EXPECT_EQ(ts_exact(4, "K3").value, 5);
    EXPECT_EQ(ts_exact(5, "K3").value, 8);
    EXPECT_EQ(ts_exact(4, "K2+K1").value, 5);
}

TEST(Turan, ExactWitnessesAreExtremal)
{
    auto k3 = parse_pattern("K3");
    for (int n = 4; n <= 7; ++n) {
        auto r = ts_exact(n, "K3");
        for (const auto & g : r.witnesses) {
            EXPECT_EQ(g.edge_count(), r.value);
            EXPECT_FALSE(has_singular_copy(g, k3, 1));
        }
        for (std::size_t i = 0; i < r.witnesses.size(); ++i)
            for (std::size_t j = i + 1; j < r.witnesses.size(); ++j)
                EXPECT_FALSE(is_isomorphic(r.witnesses[i], r.witnesses[j]));
    }
}

TEST(Turan, ExactMatchesLabelledOracle)
{
    for (const char * name : {"K3", "P3", "K2+K1", "C4", "K13", "PAW"})
        for (int k = 1; k <= 2; ++k)
            for (int n = 3; n <= 6; ++n)
                EXPECT_EQ(ts_exact(n, name, k).value, brute_ts(n, parse_pattern(name), k)) << name << " k=" << k << " n=" << n;
}

TEST(Turan, TriangleBrackets)
{
    for (int n = 4; n <= 9; ++n) {
        auto r = ts_exact(n, "K3", 1, 0);
        if (n % 4 == 2) {
            EXPECT_EQ(r.value, turan_number(n, 5)) << n;
            continue;
        }
        auto [lo, hi] = bracket8(n);
        EXPECT_GE(8 * r.value, lo) << n;
        EXPECT_LE(8 * r.value, hi) << n;
        EXPECT_LE(r.value, turan_number(n, 5) - 1) << n;
    }
}

TEST(Turan, LowerConstructions)
{
    EXPECT_EQ(ts_lower(8, "K3").value, 22);
    EXPECT_EQ(ts_lower(7, "K3").value, 15);
    EXPECT_EQ(ts_lower(6, "K3").value, 13);
    EXPECT_EQ(ts_lower(5, "K3").value, 8);
    for (const char * name : {"K3", "P3", "C4", "K13", "PAW", "K4"})
        for (int n = 3; n <= 8; ++n) {
            auto lo = ts_lower(n, name);
            ASSERT_EQ(lo.witnesses.size(), 1U);
            EXPECT_EQ(lo.witnesses[0].edge_count(), lo.value);
            EXPECT_FALSE(has_singular_copy(lo.witnesses[0], parse_pattern(name), 1));
            EXPECT_LE(lo.value, ts_exact(n, name).value) << name << " n=" << n;
        }
}

TEST(Turan, PaddingMonotone)
{
    for (const char * name : {"K3", "C4", "K4", "K13"})
        for (int n = 3; n <= 30; ++n)
            EXPECT_GE(ts_lower(n + 1, name).value, ts_lower(n, name).value) << name << " n=" << n;
}

TEST(Turan, GapReport)
{
    auto rows = ts_gap_report("K3", 6, 26);
    for (const auto & r : rows) {
        EXPECT_EQ(r.ex, turan_number(r.n, 5));
        if (r.n % 4 == 2) {
            EXPECT_EQ(r.gap, 0) << r.n;
        }
        if (r.n == 8) {
            EXPECT_EQ(r.gap, 2);
        }
        EXPECT_EQ(r.status, "ok");
    }
    auto deg = ts_gap_report("K4", 2, 2);
    ASSERT_EQ(deg.size(), 1U);
    EXPECT_EQ(deg[0].status, "construction degenerate");
    EXPECT_THROW(ts_gap_report("K2", 4, 5), std::invalid_argument);
}

TEST(Turan, Csv)
{
    auto r = ts_exact(6, "K3");
    EXPECT_EQ(ts_csv_header(), "n,k,pattern,value,method,witness_count");
    EXPECT_EQ(ts_csv_row(r), "6,1,K3,13,exhaustive," + std::to_string(r.witnesses.size()));
    auto g = ts_gap_report("K3", 8, 8);
    EXPECT_EQ(gap_csv_row("K3", g[0]), "8,K3,24,22,2,81,ok");
}

TEST(Turan, ExactBound)
{
    EXPECT_THROW(ts_exact(12, "K3"), ExhaustionBoundExceeded);
}
