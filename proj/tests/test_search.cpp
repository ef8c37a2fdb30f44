#include "singram/canonical.hpp"
#include "singram/search.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace singram;

namespace {

auto quick_cfg() -> SearchConfig
{
    SearchConfig cfg;
    cfg.time_budget = 120;
    return cfg;
}

auto sizes_of(const Graph & g) -> std::vector<int>
{
    std::vector<int> out;
    for (const auto & c : degree_classes(g))
        out.push_back(static_cast<int>(c.vertices.size()));
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Class-size profiles realised by SR-graphs of order n, found by scanning every graph.
auto realised_profiles(int n, const Graph & f1, const Graph & f2, int k) -> std::set<std::vector<int>>
{
    std::set<std::vector<int>> out;
    for (const auto & g : generate_all(n))
        if (is_sr_graph(g, f1, f2, k))
            out.insert(sizes_of(g));
    return out;
}

auto strip_timing(Certificate c) -> Certificate
{
    for (auto & r : c.sweep)
        r.millis = 0;
    return c;
}

auto same(const Certificate & a, const Certificate & b) -> bool
{
    if (a.claim != b.claim || a.value != b.value || a.upper != b.upper || a.complete != b.complete || a.witness_source != b.witness_source)
        return false;
    if (a.witnesses.size() != b.witnesses.size() || a.sweep.size() != b.sweep.size() || a.hosts.size() != b.hosts.size())
        return false;
    for (std::size_t i = 0; i < a.witnesses.size(); ++i)
        if (g6_encode(a.witnesses[i]) != g6_encode(b.witnesses[i]))
            return false;
    for (std::size_t i = 0; i < a.sweep.size(); ++i) {
        const auto & x = a.sweep[i];
        const auto & y = b.sweep[i];
        if (x.n != y.n || x.method != y.method || x.outcome != y.outcome || x.nodes != y.nodes || x.detail != y.detail)
            return false;
    }
    return true;
}

} // namespace

TEST(Bounds, Quadratic)
{
    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(quadratic_upper_bound(parse_pattern("P3"), parse_pattern("P3"), k), 4 * k + 1);
    EXPECT_EQ(quadratic_upper_bound(parse_pattern("K3"), parse_pattern("K3"), 1), 26);
    EXPECT_EQ(quadratic_upper_bound(parse_pattern("P4"), parse_pattern("P4"), 1), 17);
}

TEST(Bounds, MaxClasses)
{
    EXPECT_EQ(max_classes_bound(22, 9), 4);
    EXPECT_EQ(max_classes_bound(13, 0), 13);
    EXPECT_EQ(max_classes_bound(25, 12), 1);
    EXPECT_THROW(max_classes_bound(10, 5), std::invalid_argument);
    EXPECT_THROW(max_classes_bound(10, -1), std::invalid_argument);
}

TEST(Bounds, ClassProfiles)
{
    auto k3 = parse_pattern("K3");
    auto p22 = class_profiles(22, k3, k3);
    ASSERT_EQ(p22.size(), 3U);
    EXPECT_EQ(p22[0].sizes, (std::vector<int>{5, 5, 5, 5, 2}));
    EXPECT_EQ(p22[1].sizes, (std::vector<int>{5, 5, 5, 4, 3}));
    EXPECT_EQ(p22[2].sizes, (std::vector<int>{5, 5, 4, 4, 4}));
    auto p25 = class_profiles(25, k3, k3);
    ASSERT_EQ(p25.size(), 1U);
    EXPECT_EQ(p25[0].sizes, (std::vector<int>(5, 5)));
    EXPECT_TRUE(class_profiles(26, k3, k3).empty());
    for (const auto & p : class_profiles(17, k3, k3)) {
        EXPECT_EQ(p.order(), 17);
        EXPECT_LE(p.classes(), 5);
        EXPECT_LE(p.sizes.front(), 5);
    }
}

TEST(Bounds, ProfilesCoverRealisedClassSizes)
{
    // every SR-graph's degree-class sizes appear among the profiles
    for (auto [a, b, k] : {std::tuple{"P3", "P3", 2}, {"K3", "K3", 1}, {"P4", "P4", 1}, {"C4", "C4", 1}}) {
        auto f1 = parse_pattern(a), f2 = parse_pattern(b);
        for (int n = 2; n <= 7; ++n) {
            auto profiles = class_profiles(n, f1, f2, k);
            for (const auto & s : realised_profiles(n, f1, f2, k))
                EXPECT_TRUE(std::any_of(profiles.begin(), profiles.end(), [&](const ClassProfile & p) { return p.sizes == s; })) << a << " n=" << n;
        }
    }
}

TEST(Exhaustive, TesterMatchesVerifier)
{
    std::vector<std::tuple<std::string, std::string, int>> pairs = {{"P3", "P3", 1}, {"P3", "P3", 2}, {"K3", "K13", 1}, {"C4", "C4", 1}, {"P3+K1", "P3+K1", 1}, {"K2+K1", "3K1", 1}};
    for (const auto & [a, b, k] : pairs) {
        auto f1 = parse_pattern(a), f2 = parse_pattern(b);
        SmallSrTester tester(f1, f2, k);
        for (int n = 1; n <= 7; ++n)
            for (const auto & s : generate_small(n))
                ASSERT_EQ(tester.is_sr(s), is_sr_graph(to_graph(s), f1, f2, k)) << a << "," << b << " " << g6_encode(to_graph(s));
    }
}

TEST(Exhaustive, Examples)
{
    auto p3 = parse_pattern("P3");
    auto r5 = exhaustive_search(5, p3, p3, 1);
    EXPECT_TRUE(r5.none_exists);
    EXPECT_EQ(r5.graphs, 34);
    auto r4 = exhaustive_search(4, p3, p3, 1);
    EXPECT_FALSE(r4.none_exists);
    ASSERT_TRUE(r4.witness);
    EXPECT_TRUE(is_sr_graph(*r4.witness, p3, p3, 1));
    auto r9 = exhaustive_search(9, p3, p3, 2);
    EXPECT_TRUE(r9.none_exists);
    EXPECT_EQ(r9.graphs, 274668);
    EXPECT_FALSE(exhaustive_no_sr(8, p3, p3, 2));
    EXPECT_THROW(exhaustive_search(11, p3, p3, 1), ExhaustionBoundExceeded);
}

TEST(Exhaustive, DeterministicWitness)
{
    auto c4 = parse_pattern("C4");
    auto a = exhaustive_search(7, c4, c4, 1, 1);
    auto b = exhaustive_search(7, c4, c4, 1, 0);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(g6_encode(*a.witness), g6_encode(*b.witness));
}

TEST(Substitution, P4Closed)
{
    auto p4 = parse_pattern("P4");
    PairContext ctx(p4, p4, 1);
    for (const auto & h : ctx.catalog(4))
        EXPECT_TRUE(ctx.stable(h));
    EXPECT_TRUE(ctx.regular_members(4).empty());
    for (int n = 13; n <= 16; ++n) {
        auto r = substitution_search(ctx, n);
        EXPECT_FALSE(r.witness) << n;
        EXPECT_TRUE(r.valid) << n;
    }
}

TEST(Substitution, K3)
{
    auto k3 = parse_pattern("K3");
    PairContext ctx(k3, k3, 1);
    ASSERT_EQ(ctx.catalog(5).size(), 1U);
    EXPECT_TRUE(is_isomorphic(ctx.catalog(5)[0], parse_pattern("C5")));
    for (int n = 22; n <= 25; ++n) {
        auto r = substitution_search(ctx, n);
        EXPECT_FALSE(r.witness) << n;
        EXPECT_TRUE(r.valid) << n;
    }
    auto r21 = substitution_search(ctx, 21);
    ASSERT_TRUE(r21.witness);
    EXPECT_EQ(r21.witness->order(), 21);
    EXPECT_TRUE(is_sr_graph(*r21.witness, k3, k3, 1));
}

TEST(Substitution, Paw)
{
    auto paw = parse_pattern("PAW");
    PairContext ctx(paw, paw, 1);
    for (int n = 31; n <= 36; ++n) {
        auto r = substitution_search(ctx, n);
        EXPECT_FALSE(r.witness) << n;
        EXPECT_TRUE(r.valid) << n;
    }
}

TEST(Substitution, UnstableHostsReported)
{
    auto k3 = parse_pattern("K3"), k13 = parse_pattern("K13");
    PairContext ctx(k3, k13, 1);
    auto r = substitution_search(ctx, 29);
    EXPECT_FALSE(r.witness);
    EXPECT_FALSE(r.valid);
    bool saw_k23 = false;
    for (const auto & cov : r.coverage)
        for (const auto & h : cov.unstable_hosts)
            saw_k23 = saw_k23 || is_isomorphic(h, parse_pattern("K23"));
    EXPECT_TRUE(saw_k23);
}

TEST(Csp, Examples)
{
    auto cfg = quick_cfg();
    auto k3 = parse_pattern("K3");
    EXPECT_EQ(csp_search({{5, 5, 5, 5, 2}, 5, 5}, k3, k3, 1, cfg).status, CspStatus::NoneExists);
    auto k3k1 = parse_pattern("K3+K1");
    EXPECT_EQ(csp_search({{5, 5, 5, 4, 3}, 5, 5}, k3k1, k3k1, 1, cfg).status, CspStatus::NoneExists);
    auto w = csp_search({{5, 5, 5, 4, 2}, 5, 5}, k3, k3, 1, cfg);
    ASSERT_EQ(w.status, CspStatus::Witness);
    EXPECT_TRUE(is_sr_graph(*w.witness, k3, k3, 1));
    auto p3 = parse_pattern("P3");
    auto p4 = class_profiles(4, p3, p3);
    ASSERT_FALSE(p4.empty());
    for (const auto & prof : p4)
        EXPECT_EQ(csp_search(prof, p3, p3, 1, cfg).status, CspStatus::Witness) << to_string(prof);
}

TEST(Csp, TinyBudgetReportsExceeded)
{
    SearchConfig cfg;
    cfg.node_budget = 5;
    auto k3 = parse_pattern("K3");
    EXPECT_EQ(csp_search({{5, 5, 5, 5, 2}, 5, 5}, k3, k3, 1, cfg).status, CspStatus::BudgetExceeded);
}

TEST(Csp, AgreesWithExhaustion)
{
    auto cfg = quick_cfg();
    std::vector<std::tuple<std::string, std::string, int, int>> pairs = {
        {"P3", "P3", 1, 9}, {"P3", "P3", 2, 9}, {"3K1", "3K1", 1, 9}, {"K2+K1", "K2+K1", 1, 9}, {"K3", "K3", 1, 7}, {"C4", "C4", 1, 7}, {"K3", "K13", 1, 7}, {"PAW", "PAW", 1, 7}, {"P3+K1", "P3+K1", 1, 7}};
    for (const auto & [a, b, k, max_n] : pairs) {
        auto f1 = parse_pattern(a), f2 = parse_pattern(b);
        PairContext ctx(f1, f2, k);
        for (int n = 2; n <= max_n; ++n) {
            std::set<std::vector<int>> realised;
            SmallSrTester tester(f1, f2, k);
            for_each_graph(n, [&](const SmallGraph & s) {
                if (tester.is_sr(s))
                    realised.insert(sizes_of(to_graph(s)));
                return true;
            });
            bool any = false;
            for (const auto & prof : ctx.profiles(n)) {
                auto r = csp_search(prof, f1, f2, k, cfg, ctx.catalog_fn());
                ASSERT_NE(r.status, CspStatus::BudgetExceeded);
                EXPECT_EQ(r.status == CspStatus::Witness, realised.count(prof.sizes) > 0) << a << "," << b << " k=" << k << " " << to_string(prof);
                any = any || r.status == CspStatus::Witness;
            }
            EXPECT_EQ(any, ! exhaustive_no_sr(n, f1, f2, k)) << a << "," << b << " k=" << k << " n=" << n;
        }
    }
}

TEST(Csp, HostRestrictionSound)
{
    // with every transversal unstable, the first-vertex transversal is one of them
    auto cfg = quick_cfg();
    for (auto [a, b] : {std::pair{"K3", "K13"}, {"C4", "C4"}}) {
        auto f1 = parse_pattern(a), f2 = parse_pattern(b);
        PairContext ctx(f1, f2, 1);
        for (int n = 4; n <= 8; ++n)
            for (const auto & prof : ctx.profiles(n)) {
                std::vector<Graph> unstable;
                for (const auto & h : ctx.catalog(prof.classes()))
                    if (! ctx.stable(h))
                        unstable.push_back(h);
                if (unstable.empty())
                    continue;
                auto free = csp_search(prof, f1, f2, 1, cfg, ctx.catalog_fn());
                auto restricted = csp_search(prof, f1, f2, 1, cfg, ctx.catalog_fn(), unstable);
                if (restricted.status == CspStatus::Witness) {
                    EXPECT_EQ(free.status, CspStatus::Witness);
                    auto cls = degree_classes(*restricted.witness);
                    std::vector<int> firsts;
                    for (const auto & c : cls)
                        firsts.push_back(c.vertices.front());
                    auto t = induced(*restricted.witness, firsts);
                    EXPECT_TRUE(std::any_of(unstable.begin(), unstable.end(), [&](const Graph & h) { return is_isomorphic(h, t); }));
                }
            }
    }
}

TEST(Csp, WitnessIndependentOfJobs)
{
    auto cfg = quick_cfg();
    auto k3 = parse_pattern("K3");
    cfg.jobs = 1;
    auto a = csp_search({{5, 5, 5, 4, 2}, 5, 5}, k3, k3, 1, cfg);
    cfg.jobs = 4;
    auto b = csp_search({{5, 5, 5, 4, 2}, 5, 5}, k3, k3, 1, cfg);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(g6_encode(*a.witness), g6_encode(*b.witness));
}

TEST(Certify, P3)
{
    auto cert = certify_rs("P3", "", 1, quick_cfg());
    EXPECT_EQ(cert.value, 5);
    EXPECT_TRUE(cert.complete);
    EXPECT_EQ(cert.quadratic_bound, 5);
    ASSERT_EQ(cert.witnesses.size(), 1U);
    EXPECT_EQ(cert.witnesses[0].order(), 4);
    bool swept = false;
    for (const auto & r : cert.sweep)
        swept = swept || (r.n == 5 && r.method == "exhaustive" && r.outcome == "none" && r.nodes == 34);
    EXPECT_TRUE(swept);
}

TEST(Certify, P4Family)
{
    for (auto [a, b] : {std::pair{"P4", ""}, {"2K2", ""}, {"2K2", "P4"}}) {
        auto cert = certify_rs(a, b, 1, quick_cfg());
        EXPECT_EQ(cert.value, 13) << a << "," << b;
        EXPECT_TRUE(cert.complete);
        std::set<int> closed;
        for (const auto & r : cert.sweep) {
            if (r.n >= 13 && r.n <= 16) {
                EXPECT_EQ(r.method, "substitution");
            }
            if (r.n == 17) {
                EXPECT_EQ(r.method, "profile-infeasible");
            }
            if (r.outcome == "none")
                closed.insert(r.n);
        }
        EXPECT_EQ(closed, (std::set<int>{13, 14, 15, 16, 17}));
    }
}

TEST(Certify, Deterministic)
{
    auto cfg = quick_cfg();
    cfg.jobs = 1;
    auto a = strip_timing(certify_rs("K3", "", 1, cfg));
    cfg.jobs = 0;
    auto b = strip_timing(certify_rs("K3", "", 1, cfg));
    auto c = strip_timing(certify_rs("K3", "", 1, cfg));
    EXPECT_TRUE(same(a, b));
    EXPECT_TRUE(same(b, c));
    EXPECT_EQ(a.value, 22);
}

TEST(Certify, RejectsBadConfig)
{
    SearchConfig cfg;
    cfg.node_budget = 0;
    EXPECT_THROW(certify_rs("P3", "", 1, cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.exhaustive_max_n = 11;
    EXPECT_THROW(certify_rs("P3", "", 1, cfg), std::invalid_argument);
}
