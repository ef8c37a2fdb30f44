#include "oracle_util.hpp"

#include "singram/pattern.hpp"
#include "singram/singular.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace singram;

TEST(KSingular, Examples)
{
    EXPECT_TRUE(is_k_singular(std::vector<int>{3, 3, 3}, 5));
    EXPECT_TRUE(is_k_singular(std::vector<int>{1, 3, 5}, 2));
    EXPECT_FALSE(is_k_singular(std::vector<int>{1, 3, 5}, 3));
    EXPECT_FALSE(is_k_singular(std::vector<int>{1, 2, 2}, 1));
    EXPECT_FALSE(is_k_singular(std::vector<int>{4, 4, 9}, 1));
    EXPECT_TRUE(is_k_singular(std::vector<int>{}, 1));
    EXPECT_TRUE(is_k_singular(std::vector<int>{5, 1, 3}, 2));
    EXPECT_THROW(is_k_singular(std::vector<int>{1}, 0), std::invalid_argument);
}

TEST(KSingular, Monotonicity)
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 5000; ++t) {
        std::vector<int> v(1 + rng() % 5);
        for (auto & x : v)
            x = static_cast<int>(rng() % 15);
        for (int k = 1; k <= 6; ++k)
            if (is_k_singular(v, k)) {
                for (int j = 1; j <= k; ++j)
                    ASSERT_TRUE(is_k_singular(v, j));
            }
    }
}

TEST(Extract, Examples)
{
    std::vector<int> sevens(10, 7);
    auto a = extract_singular(sevens, 4, 1);
    EXPECT_EQ(a.values, (std::vector<int>{7, 7, 7, 7}));
    std::vector<int> ramp{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto b = extract_singular(ramp, 4, 1);
    EXPECT_EQ(b.values.size(), 4u);
    EXPECT_TRUE(is_k_singular(b.values, 1));
    EXPECT_THROW(extract_singular(std::vector<int>(9, 1), 4, 1), std::invalid_argument);
}

TEST(Extract, RandomMultisets)
{
    std::mt19937_64 rng(99);
    int runs = 0;
    for (int rep = 0; rep < 84; ++rep)
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 3; ++k) {
                const int len = k * (n - 1) * (n - 1) + 1;
                std::vector<int> v(len);
                const int spread = 1 + static_cast<int>(rng() % (3 * len));
                for (auto & x : v)
                    x = static_cast<int>(rng() % spread);
                auto r = extract_singular(v, n, k);
                ASSERT_GE(r.values.size(), static_cast<std::size_t>(n));
                ASSERT_TRUE(is_k_singular(r.values, k));
                for (std::size_t i = 0; i < r.indices.size(); ++i)
                    ASSERT_EQ(v[r.indices[i]], r.values[i]);
                ++runs;
            }
    EXPECT_GE(runs, 1000);
}

TEST(SingularSets, Examples)
{
    EXPECT_EQ(singular_sets(complete_graph(4), 3, 1).size(), 4u);
    EXPECT_EQ(singular_sets(paw_graph(), 2, 1).size(), 6u);
    auto triples = singular_sets(paw_graph(), 3, 1);
    ASSERT_EQ(triples.size(), 2u);
    for (const auto & t : triples) {
        std::vector<int> d;
        for (int v : t)
            d.push_back(paw_graph().degree(v));
        std::sort(d.begin(), d.end());
        EXPECT_EQ(d, (std::vector<int>{1, 2, 3}));
    }
}

TEST(SingularSets, OrderAllEqualFirst)
{
    auto g = paw_graph();
    auto sets = singular_sets(g, 2, 1);
    EXPECT_EQ(sets.front(), (std::vector<int>{1, 2}));
    for (std::size_t i = 2; i < sets.size(); ++i)
        EXPECT_LT(sets[i - 1], sets[i]);
}

TEST(SingularSets, MatchOracleAndComplementSymmetry)
{
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 9; ++n)
        for (int t = 0; t < 12; ++t) {
            auto g = oracle::random_graph(rng, n, 0.5);
            auto c = complement(g);
            for (int p = 1; p <= n; ++p)
                for (int k = 1; k <= 3; ++k) {
                    auto got = singular_sets(g, p, k);
                    std::set<std::vector<int>> as_set(got.begin(), got.end());
                    ASSERT_EQ(as_set.size(), got.size());
                    ASSERT_EQ(as_set, oracle::singular_subsets(g, p, k));
                    auto other = singular_sets(c, p, k);
                    ASSERT_EQ(as_set, std::set<std::vector<int>>(other.begin(), other.end()));
                }
        }
}

TEST(SingularCopy, Examples)
{
    auto w = find_singular_copy(complete_graph(4), complete_graph(3), 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->mode, SingularMode::AllEqual);
    EXPECT_TRUE(verify_witness(complete_graph(4), complete_graph(3), *w, 1));
    EXPECT_FALSE(is_sr_graph(complete_graph(4), complete_graph(3), complete_graph(3), 1));
    // isolated pattern vertices still need k-singular host degrees
    EXPECT_FALSE(find_singular_copy(path_graph(4), parse_pattern("K2+K1"), 2));
    EXPECT_TRUE(find_singular_copy(path_graph(4), parse_pattern("K2+K1"), 1) == std::nullopt);
    EXPECT_TRUE(find_singular_copy(path_graph(4), parse_pattern("2K1"), 1));
}

TEST(SingularCopy, AgreesWithBruteForceOracle)
{
    std::vector<Graph> patterns;
    for (int p = 1; p <= 4; ++p)
        for (auto & f : oracle::all_graphs(p))
            patterns.push_back(f);
    ASSERT_EQ(patterns.size(), 18u);
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : oracle::all_graphs(n))
            for (const auto & f : patterns)
                for (int k = 1; k <= 2; ++k) {
                    auto w = find_singular_copy(g, f, k);
                    ASSERT_EQ(w.has_value(), oracle::has_singular_copy(g, f, k));
                    if (w) {
                        ASSERT_TRUE(verify_witness(g, f, *w, k));
                    }
                }
}

TEST(SingularTree, Examples)
{
    auto t = find_singular_tree(complete_graph(10), 4, 1);
    EXPECT_FALSE(t.in_complement);
    EXPECT_EQ(t.edges.size(), 3u);
    auto e = find_singular_tree(empty_graph(10), 4, 1);
    EXPECT_TRUE(e.in_complement);
    EXPECT_THROW(find_singular_tree(complete_graph(9), 4, 1), std::invalid_argument);
}

TEST(SingularTree, RandomGraphs)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 2;
        const int k = 1 + (t / 2) % 2;
        auto g = oracle::random_graph(rng, k * (n - 1) * (n - 1) + 1, 0.5);
        auto tree = find_singular_tree(g, n, k);
        const auto & s = tree.witness.vertices;
        ASSERT_GE(s.size(), static_cast<std::size_t>(n));
        std::vector<int> d;
        for (int v : s)
            d.push_back(g.degree(v));
        ASSERT_TRUE(is_k_singular(d, k));
        ASSERT_EQ(tree.edges.size(), s.size() - 1);
        Graph spanned(g.order());
        for (auto [a, b] : tree.edges) {
            ASSERT_TRUE(std::binary_search(s.begin(), s.end(), a));
            ASSERT_TRUE(std::binary_search(s.begin(), s.end(), b));
            ASSERT_EQ(g.adjacent(a, b), ! tree.in_complement);
            spanned.add_edge(a, b);
        }
        ASSERT_TRUE(is_connected(induced(spanned, s)));
    }
}
