#pragma once

#include "singram/graph.hpp"
#include "singram/pattern.hpp"
#include "singram/singular.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singram {

// ---------------------------------------------------------------- frameworks

/// host[parts]: disjoint union of the parts, joined completely along host edges.
inline auto substitute(const Graph & host, const std::vector<Graph> & parts) -> Graph
{
    if (static_cast<int>(parts.size()) != host.order())
        throw std::invalid_argument("substitute: need one part per host vertex");
    std::vector<int> offset{0};
    for (const auto & p : parts)
        offset.push_back(offset.back() + p.order());
    if (offset.back() > max_order)
        throw OrderOverflow("substitution exceeds the order cap");
    Graph g(offset.back());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges())
            g.add_edge(offset[i] + u, offset[i] + v);
    for (auto [a, b] : host.edges())
        for (int u = offset[a]; u < offset[a + 1]; ++u)
            for (int v = offset[b]; v < offset[b + 1]; ++v)
                g.add_edge(u, v);
    return g;
}

/// A class graph whose vertices are cut into consecutive parts.
struct MixedClass
{
    Graph graph;
    std::vector<int> part_sizes;
};

/// Host vertices correspond to parts, numbered class by class. Parts of distinct
/// classes are completely joined iff their host vertices are adjacent.
struct MixedPlan
{
    Graph host;
    std::vector<MixedClass> classes;
};

inline auto mixed_substitute(const MixedPlan & plan) -> Graph
{
    std::vector<int> part_start, part_end, part_class, class_start;
    int n = 0;
    for (std::size_t c = 0; c < plan.classes.size(); ++c) {
        const auto & mc = plan.classes[c];
        int total = 0;
        for (int s : mc.part_sizes) {
            if (s < 0)
                throw std::invalid_argument("mixed_substitute: negative part size");
            part_start.push_back(n + total);
            total += s;
            part_end.push_back(n + total);
            part_class.push_back(static_cast<int>(c));
        }
        if (total != mc.graph.order())
            throw std::invalid_argument("mixed_substitute: part sizes must add up to the class order");
        class_start.push_back(n);
        n += total;
    }
    if (static_cast<int>(part_start.size()) != plan.host.order())
        throw std::invalid_argument("mixed_substitute: host order must equal the number of parts");
    if (n > max_order)
        throw OrderOverflow("mixed substitution exceeds the order cap");
    Graph g(n);
    for (std::size_t c = 0; c < plan.classes.size(); ++c)
        for (auto [u, v] : plan.classes[c].graph.edges())
            g.add_edge(class_start[c] + u, class_start[c] + v);
    for (auto [a, b] : plan.host.edges()) {
        if (part_class[a] == part_class[b])
            throw std::invalid_argument("mixed_substitute: host edge inside one class");
        for (int u = part_start[a]; u < part_end[a]; ++u)
            for (int v = part_start[b]; v < part_end[b]; ++v)
                g.add_edge(u, v);
    }
    return g;
}

/// Plain substitution expressed as a plan (one part per class).
inline auto substitution_plan(const Graph & host, const std::vector<Graph> & parts) -> MixedPlan
{
    MixedPlan plan{host, {}};
    for (const auto & p : parts)
        plan.classes.push_back({p, {p.order()}});
    return plan;
}

/// Disjoint union of class graphs plus explicit edges between classes (global labels).
inline auto join_classes(const std::vector<Graph> & classes, const std::vector<std::pair<int, int>> & cross) -> Graph
{
    Graph g(0);
    for (const auto & c : classes)
        g = disjoint_union(g, c);
    for (auto [u, v] : cross)
        g.add_edge(u, v);
    return g;
}

/// Circulant d-regular graph on p vertices (antipodal matching added for odd d).
inline auto regular_graph(int p, int d) -> Graph
{
    if (d < 0 || p <= d)
        throw std::invalid_argument("regular_graph: need p > d >= 0");
    if ((p * d) % 2 != 0)
        throw std::invalid_argument("regular_graph: p*d must be even");
    Graph g(p);
    for (int i = 0; i < p; ++i)
        for (int j = 1; j <= d / 2; ++j)
            g.add_edge(i, (i + j) % p);
    if (d % 2 == 1)
        for (int i = 0; i < p / 2; ++i)
            g.add_edge(i, i + p / 2);
    return g;
}

/// d-regular bipartite graph: left i (0..p-1) joined to right p + (i+s) mod p, s < d.
inline auto regular_bipartite(int p, int d) -> Graph
{
    if (d < 0 || d > p)
        throw std::invalid_argument("regular_bipartite: need 0 <= d <= p");
    Graph g(2 * p);
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < d; ++s)
            g.add_edge(i, p + (i + s) % p);
    return g;
}

/// k-th power of the cycle C_m (vertices joined at circular distance <= k).
inline auto cycle_power(int m, int k) -> Graph
{
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != (i + j) % m)
                g.add_edge(i, (i + j) % m);
    return g;
}

/// Edge weights in {1,2,3} on K_m with pairwise distinct weighted degrees; w[i][j] symmetric.
inline auto irregular_weighting(int m) -> std::vector<std::vector<int>>
{
    if (m < 3)
        throw std::invalid_argument("irregular_weighting: need m >= 3");
    if (m > 12)
        throw std::invalid_argument("irregular_weighting: search limited to m <= 12");
    std::vector<std::vector<int>> w(m, std::vector<int>(m, 0));
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            order.emplace_back(i, j);
    std::vector<int> sum(m, 0);
    long nodes = 0;
    auto rec = [&](auto && self, std::size_t e) -> bool {
        if (++nodes > 50'000'000)
            throw std::runtime_error("irregular_weighting: search bound exceeded");
        if (e == order.size())
            return true;
        auto [i, j] = order[e];
        for (int x = 1; x <= 3; ++x) {
            w[i][j] = w[j][i] = x;
            sum[i] += x;
            sum[j] += x;
            bool ok = true;
            // row i is complete once its last edge (i, m-1) is set
            if (j == m - 1) {
                for (int a = 0; a < i && ok; ++a)
                    ok = sum[a] != sum[i];
                if (i == m - 2)
                    for (int a = 0; a < m - 1 && ok; ++a)
                        ok = sum[a] != sum[m - 1];
            }
            if (ok && self(self, e + 1))
                return true;
            sum[i] -= x;
            sum[j] -= x;
        }
        w[i][j] = w[j][i] = 0;
        return false;
    };
    if (! rec(rec, 0))
        throw std::runtime_error("irregular_weighting: no weighting found");
    return w;
}

// ---------------------------------------------------------------- reports

struct ClassSpec
{
    int size = 0;
    int degree = 0;

    friend auto operator==(const ClassSpec &, const ClassSpec &) -> bool = default;
};

struct ConstructionReport
{
    std::string name;
    std::vector<std::pair<std::string, int>> params;
    Graph graph;
    std::vector<ClassSpec> expected_classes; // ascending by degree
    std::vector<ClassSpec> actual_classes;
    bool classes_match = false;
    std::string f1_name, f2_name; // f2_name empty for Turán-type checks (graph side only)
    int k = 1;
    bool verified_sr = false;
    std::optional<MixedPlan> plan;
};

inline auto class_specs(const Graph & g) -> std::vector<ClassSpec>
{
    std::vector<ClassSpec> out;
    for (const auto & c : degree_classes(g))
        out.push_back({static_cast<int>(c.vertices.size()), c.degree});
    return out;
}

/// Fills in actual classes and runs the verifier.
inline auto finish_report(ConstructionReport r) -> ConstructionReport
{
    std::sort(r.expected_classes.begin(), r.expected_classes.end(), [](const ClassSpec & a, const ClassSpec & b) { return a.degree < b.degree; });
    r.actual_classes = class_specs(r.graph);
    r.classes_match = r.actual_classes == r.expected_classes;
    auto f1 = parse_pattern(r.f1_name);
    if (r.f2_name.empty())
        r.verified_sr = ! has_singular_copy(r.graph, f1, r.k);
    else
        r.verified_sr = is_sr_graph(r.graph, f1, parse_pattern(r.f2_name), r.k);
    return r;
}

namespace detail {

    inline auto expected_from_plan(const MixedPlan & plan) -> std::vector<ClassSpec>
    {
        auto g = mixed_substitute(plan);
        std::vector<ClassSpec> out;
        int start = 0;
        for (const auto & mc : plan.classes) {
            if (mc.graph.order() > 0)
                out.push_back({mc.graph.order(), g.degree(start)});
            start += mc.graph.order();
        }
        return out;
    }

    inline auto repeat(const Graph & g, int times) -> std::vector<Graph> { return std::vector<Graph>(static_cast<std::size_t>(times), g); }

} // namespace detail

// ---------------------------------------------------------------- small cases

/// a_1..a_2k (0..2k-1) and b_1..b_2k (2k..4k-1); a_i ~ b_j iff i <= j.
inline auto build_hk(int k) -> ConstructionReport
{
    if (k < 1)
        throw std::invalid_argument("build_hk: k >= 1");
    Graph g(4 * k);
    for (int i = 1; i <= 2 * k; ++i)
        for (int j = i; j <= 2 * k; ++j)
            g.add_edge(i - 1, 2 * k + j - 1);
    ConstructionReport r{"hk", {{"k", k}}, g, {}, {}, false, "P3", "P3", k, false, std::nullopt};
    for (int d = 1; d <= 2 * k; ++d)
        r.expected_classes.push_back({2, d});
    return finish_report(std::move(r));
}

/// Twelve vertices x1,x2,x3,x | y1,y2,y3,y | z1,z2,z3,z; each block induces K3+K1.
inline auto build_sr_2k2() -> ConstructionReport
{
    const int x1 = 0, x2 = 1, x3 = 2, x = 3, y1 = 4, y2 = 5, y3 = 6, y = 7, z1 = 8, z2 = 9, z3 = 10, z = 11;
    const std::vector<std::pair<int, int>> cross = {
        {x1, y1}, {x1, y2}, {x1, y}, {x2, y2}, {x2, y3}, {x2, y}, {x3, y1}, {x3, y3}, {x3, y}, {x, y1}, {x, y2}, {x, y3}, {x, y},
        {x1, z1}, {x1, z}, {x2, z2}, {x2, z}, {x3, z3}, {x3, z}, {x, z1}, {x, z2}, {x, z3},
        {y, z}};
    auto block = parse_pattern("K3+K1");
    auto g = join_classes({block, block, block}, cross);
    ConstructionReport r{"sr2k2", {}, g, {{4, 7}, {4, 5}, {4, 4}}, {}, false, "2K2", "2K2", 1, false, std::nullopt};
    return finish_report(std::move(r));
}

/// C5[C5,C5,C5,2K2,K2], 21 vertices.
inline auto build_k3_21() -> ConstructionReport
{
    auto plan = substitution_plan(cycle_graph(5), {cycle_graph(5), cycle_graph(5), cycle_graph(5), matching_graph(2), complete_graph(2)});
    ConstructionReport r{"k3_21", {}, mixed_substitute(plan), {{5, 9}, {5, 12}, {5, 11}, {4, 8}, {2, 10}}, {}, false, "K3", "K3", 1, false, plan};
    return finish_report(std::move(r));
}

/// Bull[K3,C5,C5,C5,C5], 23 vertices.
inline auto build_c4_bull_23() -> ConstructionReport
{
    auto c5 = cycle_graph(5);
    auto plan = substitution_plan(bull_graph(), {complete_graph(3), c5, c5, c5, c5});
    ConstructionReport r{"c4bull23", {}, mixed_substitute(plan), {{3, 17}, {5, 10}, {5, 15}, {5, 5}, {5, 7}}, {}, false, "C4", "C4", 1, false, plan};
    return finish_report(std::move(r));
}

/// Classes K33, C5, K33, C5, K33 with V5 cut into its first 4 and last 2 vertices.
/// Joins: V1+V2 with V3+V4, V1+V2 with V5', V5'' with V3+V4.
inline auto build_k3_claw_28() -> ConstructionReport
{
    auto k33 = complete_bipartite(3, 3);
    auto c5 = cycle_graph(5);
    // parts: 0=V1, 1=V2, 2=V3, 3=V4, 4=V5', 5=V5''
    const std::pair<int, int> e[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {5, 2}, {5, 3}};
    MixedPlan plan{from_edges(6, e), {{k33, {6}}, {c5, {5}}, {k33, {6}}, {c5, {5}}, {k33, {4, 2}}}};
    ConstructionReport r{"k3claw28", {}, mixed_substitute(plan), {{6, 18}, {5, 17}, {6, 16}, {5, 15}, {6, 14}}, {}, false, "K3", "K13", 1, false, plan};
    return finish_report(std::move(r));
}

/// Classes 2K3, K33, 2K3, K33, 2K3 with V5 cut into its first 2 and last 4 vertices.
/// V1, V2, V5' pairwise complete; V3, V4, V5'' pairwise complete.
inline auto build_paw_30() -> ConstructionReport
{
    auto t2 = parse_pattern("2K3");
    auto k33 = complete_bipartite(3, 3);
    // parts: 0=V1, 1=V2, 2=V3, 3=V4, 4=V5', 5=V5''
    const std::pair<int, int> e[] = {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 5}, {3, 5}};
    MixedPlan plan{from_edges(6, e), {{t2, {6}}, {k33, {6}}, {t2, {6}}, {k33, {6}}, {t2, {2, 4}}}};
    ConstructionReport r{"paw30", {}, mixed_substitute(plan), {{6, 10}, {6, 11}, {6, 12}, {6, 13}, {6, 14}}, {}, false, "PAW", "PAW", 1, false, plan};
    return finish_report(std::move(r));
}

/// (n-1)^2 vertices in n-1 equal classes of distinct degrees: no singular n-set at all.
inline auto build_theorem2(int n) -> ConstructionReport
{
    if (n < 3)
        throw std::invalid_argument("build_theorem2: n >= 3");
    const int m = n - 1;
    if (m * m > max_order)
        throw OrderOverflow("build_theorem2: order exceeds the cap");
    std::vector<int> internal(m);
    std::vector<std::pair<int, int>> matched;
    if (m % 2 == 0) {
        for (int i = 0; i < m; ++i)
            internal[i] = i;
    }
    else {
        int odd_low = 0;
        for (int i = 0; i <= m - 1; ++i)
            odd_low += i % 2;
        if (odd_low % 2 == 0) {
            for (int i = 0; i < m; ++i)
                internal[i] = 2 * (i / 2);
            for (int a = 1; a + 2 <= m - 2; a += 4)
                matched.emplace_back(a, a + 2);
        }
        else {
            for (int i = 0; i < m; ++i)
                internal[i] = 2 * ((i + 1) / 2);
            for (int a = 0; a + 2 <= m - 1; a += 4)
                matched.emplace_back(a, a + 2);
        }
    }
    std::vector<Graph> classes;
    for (int i = 0; i < m; ++i)
        classes.push_back(regular_graph(m, internal[i]));
    std::vector<std::pair<int, int>> cross;
    std::vector<int> bonus(m, 0);
    for (auto [a, b] : matched) {
        for (int t = 0; t < m; ++t)
            cross.emplace_back(a * m + t, b * m + t);
        bonus[a] = bonus[b] = 1;
    }
    auto g = join_classes(classes, cross);
    auto spec = std::to_string(n) + "K1";
    ConstructionReport r{"theorem2", {{"n", n}}, g, {}, {}, false, spec, spec, 1, false, std::nullopt};
    for (int i = 0; i < m; ++i)
        r.expected_classes.push_back({m, internal[i] + bonus[i]});
    return finish_report(std::move(r));
}

// ---------------------------------------------------------------- stars

/// Even s: blocks A_1..A_{s-1}, B_1..B_{s-1} of size 2s-2.
inline auto build_star_even(int s) -> ConstructionReport
{
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("build_star_even: s must be even and >= 2");
    const int b = 2 * s - 2;
    const int blocks = s - 1;
    std::vector<Graph> classes;
    for (int i = 0; i < blocks; ++i)
        classes.push_back(regular_graph(b, s - 2));
    for (int i = 0; i < blocks; ++i)
        classes.push_back(regular_graph(b, s - 1));
    auto a_at = [&](int i, int t) { return (i - 1) * b + t; };
    auto b_at = [&](int i, int t) { return (blocks + i - 1) * b + t; };
    std::vector<std::pair<int, int>> cross;
    for (int i = 1; i <= blocks; ++i)
        for (int j = 1; j <= blocks; ++j) {
            if (i != j) {
                for (int t = 0; t < b; ++t)
                    for (int u = 0; u < b; ++u)
                        cross.emplace_back(a_at(i, t), b_at(j, u));
            }
            else {
                auto bip = regular_bipartite(b, 2 * i);
                for (auto [l, rr] : bip.edges())
                    cross.emplace_back(a_at(i, l), b_at(i, rr - b));
            }
        }
    auto spec = "S" + std::to_string(s);
    ConstructionReport r{"star_even", {{"s", s}}, join_classes(classes, cross), {}, {}, false, spec, spec, 1, false, std::nullopt};
    const int base = (s - 2) * b + (s - 2);
    for (int i = 1; i <= blocks; ++i) {
        r.expected_classes.push_back({b, base + 2 * i});
        r.expected_classes.push_back({b, base + 2 * i + 1});
    }
    return finish_report(std::move(r));
}

struct StarClassLayout
{
    int size = 0;
    int degree = 0; // internal degree of the regular class graph
};

/// Class sizes and internal degrees of the odd-star construction for s = 2t+1, indexed by host vertex 0..4t.
inline auto star_odd_layout(int s) -> std::vector<StarClassLayout>
{
    if (s < 3 || s % 2 == 0)
        throw std::invalid_argument("build_star_odd: s must be odd and >= 3");
    const int t = (s - 1) / 2;
    std::vector<StarClassLayout> v(static_cast<std::size_t>(4 * t + 1));
    v[0] = {2 * t, t};
    for (int i = 1; i <= 2 * t + 1; ++i)
        v[i] = {4 * t + 1, 2 * t};
    for (int i = 2 * t + 2; i <= 3 * t + 1; ++i)
        v[i] = {4 * t, 2 * t - 1};
    for (int i = 3 * t + 2; i <= 4 * t; ++i)
        v[i] = {4 * t, 2 * t};
    return v;
}

/// Class sizes and internal degrees of the alternative construction for s = 4q+1.
inline auto star_odd_alt_layout(int q) -> std::vector<StarClassLayout>
{
    if (q < 1)
        throw std::invalid_argument("build_star_odd_alt: q >= 1");
    const int s = 4 * q + 1;
    const int m = 8 * q + 1;
    std::vector<StarClassLayout> v(static_cast<std::size_t>(m));
    auto at = [&](int i) -> StarClassLayout & { return v[static_cast<std::size_t>(((i % m) + m) % m)]; };
    for (int i = 2 * q; i <= 6 * q; ++i)
        at(i) = {2 * s - 1, s - 1};
    for (int i = 1; i <= q; ++i) {
        at(4 * q + (2 * q + 2 * i)) = {2 * s - 2, s - 2};
        at(4 * q - (2 * q + 2 * i)) = {2 * s - 2, s - 2};
        at(4 * q + (2 * q + 2 * i - 1)) = {2 * s - 4, s - 2};
        at(4 * q - (2 * q + 2 * i - 1)) = {2 * s - 4, s - 2};
    }
    at(8 * q) = {2 * s - 4, s - 3};
    at(2 * q - 1) = {2 * s - 2, s - 1};
    return v;
}

namespace detail {

    inline auto star_from_layout(const std::string & name, std::vector<std::pair<std::string, int>> params, int s, const std::vector<StarClassLayout> & layout) -> ConstructionReport
    {
        const int m = static_cast<int>(layout.size());
        std::vector<Graph> parts;
        for (const auto & c : layout)
            parts.push_back(regular_graph(c.size, c.degree));
        auto plan = substitution_plan(cycle_power(m, (m - 1) / 4), parts);
        auto spec = "S" + std::to_string(s);
        ConstructionReport r{name, std::move(params), mixed_substitute(plan), expected_from_plan(plan), {}, false, spec, spec, 1, false, plan};
        return finish_report(std::move(r));
    }

} // namespace detail

/// Odd s = 2t+1: (C_{4t+1})^t with the four size/degree groups.
inline auto build_star_odd(int s) -> ConstructionReport
{
    return detail::star_from_layout("star_odd", {{"s", s}}, s, star_odd_layout(s));
}

/// s = 4q+1: same host, nearly equal class sizes.
inline auto build_star_odd_alt(int q) -> ConstructionReport
{
    return detail::star_from_layout("star_odd_alt", {{"q", q}}, 4 * q + 1, star_odd_alt_layout(q));
}

// ---------------------------------------------------------------- Turán type

/// Part sizes u_1 < ... < u_{p-1} of the first construction for n = m(q-1).
inline auto turan_c1_sizes(int n, int p, int q) -> std::vector<int>
{
    if (p < 3 || q < 2)
        throw std::invalid_argument("turan c1: need p >= 3 and q >= 2");
    if (n % (q - 1) != 0)
        throw std::invalid_argument("turan c1: q-1 must divide n");
    const int m = n / (q - 1);
    const int c = p - 1;
    const int tri = c * (c - 1) / 2;
    if (m < tri)
        throw std::invalid_argument("turan c1: n too small for strictly increasing classes");
    const int u1 = (m - tri) / c;
    const int extra = m - c * u1 - tri;
    std::vector<int> u(c);
    for (int i = 0; i < c; ++i)
        u[i] = u1 + i + (i >= c - extra ? 1 : 0);
    return u;
}

inline auto build_turan_c1(int n, int p, int q, const std::string & pattern = "") -> ConstructionReport
{
    auto u = turan_c1_sizes(n, p, q);
    std::vector<Graph> classes;
    for (int ui : u)
        classes.push_back(complete_multipartite(std::vector<int>(static_cast<std::size_t>(q - 1), ui)));
    auto plan = substitution_plan(complete_graph(p - 1), classes);
    auto spec = pattern.empty() ? (p == q ? "K(" + std::to_string(p) + ")" : std::string()) : pattern;
    if (spec.empty())
        throw std::invalid_argument("turan c1: a pattern with p vertices and chromatic number q is required");
    ConstructionReport r{"turan_c1", {{"n", n}, {"p", p}, {"q", q}}, mixed_substitute(plan), {}, {}, false, spec, "", 1, false, plan};
    for (int ui : u)
        if (ui > 0)
            r.expected_classes.push_back({(q - 1) * ui, n - ui});
    return finish_report(std::move(r));
}

inline auto build_turan_c2(int n, int p, int q, const std::string & pattern = "") -> ConstructionReport
{
    if (p < 4 || q < 2)
        throw std::invalid_argument("turan c2: need p >= 4 and q >= 2");
    const int c = p - 1;
    if (n % (c * (q - 1)) != 0)
        throw std::invalid_argument("turan c2: (p-1)(q-1) must divide n");
    const int u = n / (c * (q - 1));
    const int vs = n / c;
    auto w = irregular_weighting(c);
    if (vs < 3 && std::any_of(w.begin(), w.end(), [](const auto & row) { return std::count(row.begin(), row.end(), 3) > 0; }))
        throw std::invalid_argument("turan c2: classes too small for a 2-factor");
    std::vector<int> sizes(static_cast<std::size_t>(c * (q - 1)), u);
    auto g = complete_multipartite(sizes);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            for (int t = 0; t < vs; ++t)
                for (int sft = 0; sft < w[a][b] - 1; ++sft)
                    g.remove_edge(a * vs + t, b * vs + (t + sft) % vs);
    auto spec = pattern.empty() ? (p == q ? "K(" + std::to_string(p) + ")" : std::string()) : pattern;
    if (spec.empty())
        throw std::invalid_argument("turan c2: a pattern with p vertices and chromatic number q is required");
    ConstructionReport r{"turan_c2", {{"n", n}, {"p", p}, {"q", q}}, g, {}, {}, false, spec, "", 1, false, std::nullopt};
    for (int a = 0; a < c; ++a) {
        int d = n - u;
        for (int b = 0; b < c; ++b)
            if (b != a)
                d -= w[a][b] - 1;
        r.expected_classes.push_back({vs, d});
    }
    return finish_report(std::move(r));
}

/// Singular-triangle-free constructions by n mod 4.
inline auto build_trian(int n) -> ConstructionReport
{
    if (n < 4)
        throw std::invalid_argument("build_trian: n >= 4");
    const int h = n / 4;
    Graph g;
    std::vector<ClassSpec> expected;
    switch (n % 4) {
    case 0: {
        const int sizes[] = {h - 1, h - 1, h + 1, h + 1};
        g = complete_multipartite(sizes);
        if (h - 1 > 0)
            expected.push_back({2 * (h - 1), n - (h - 1)});
        expected.push_back({2 * (h + 1), n - (h + 1)});
        break;
    }
    case 1: {
        const int sizes[] = {h, h, h, h, 1};
        g = complete_multipartite(sizes);
        // z (last vertex) keeps only the first two classes
        for (int v = 2 * h; v < 4 * h; ++v)
            g.remove_edge(n - 1, v);
        expected = {{1, 2 * h}, {2 * h, 3 * h}, {2 * h, 3 * h + 1}};
        break;
    }
    case 2: {
        const int sizes[] = {h, h, h + 1, h + 1};
        g = complete_multipartite(sizes);
        expected = {{2 * h + 2, 3 * h + 1}, {2 * h, 3 * h + 2}};
        break;
    }
    default: {
        const int sizes[] = {h, h, h + 1, h + 1, 1};
        g = complete_multipartite(sizes);
        for (int v = 2 * h; v < 4 * h + 2; ++v)
            g.remove_edge(n - 1, v);
        expected = {{1, 2 * h}, {2 * h + 2, 3 * h + 1}, {2 * h, 3 * h + 3}};
        break;
    }
    }
    ConstructionReport r{"trian", {{"n", n}}, g, expected, {}, false, "K3", "", 1, false, std::nullopt};
    return finish_report(std::move(r));
}

// ---------------------------------------------------------------- registry

struct BuilderInfo
{
    std::vector<std::string> params;
    std::function<ConstructionReport(const std::map<std::string, int> &)> build;
};

inline auto construction_registry() -> const std::map<std::string, BuilderInfo> &
{
    static const std::map<std::string, BuilderInfo> registry = [] {
        auto get = [](const std::map<std::string, int> & a, const std::string & key) {
            auto it = a.find(key);
            if (it == a.end())
                throw std::invalid_argument("missing parameter " + key);
            return it->second;
        };
        std::map<std::string, BuilderInfo> r;
        r["hk"] = {{"k"}, [get](const auto & a) { return build_hk(get(a, "k")); }};
        r["sr2k2"] = {{}, [](const auto &) { return build_sr_2k2(); }};
        r["k3_21"] = {{}, [](const auto &) { return build_k3_21(); }};
        r["c4bull23"] = {{}, [](const auto &) { return build_c4_bull_23(); }};
        r["k3claw28"] = {{}, [](const auto &) { return build_k3_claw_28(); }};
        r["paw30"] = {{}, [](const auto &) { return build_paw_30(); }};
        r["theorem2"] = {{"n"}, [get](const auto & a) { return build_theorem2(get(a, "n")); }};
        r["star_even"] = {{"s"}, [get](const auto & a) { return build_star_even(get(a, "s")); }};
        r["star_odd"] = {{"s"}, [get](const auto & a) { return build_star_odd(get(a, "s")); }};
        r["star_odd_alt"] = {{"q"}, [get](const auto & a) { return build_star_odd_alt(get(a, "q")); }};
        r["turan_c1"] = {{"n", "p", "q"}, [get](const auto & a) { return build_turan_c1(get(a, "n"), get(a, "p"), get(a, "q")); }};
        r["turan_c2"] = {{"n", "p", "q"}, [get](const auto & a) { return build_turan_c2(get(a, "n"), get(a, "p"), get(a, "q")); }};
        r["trian"] = {{"n"}, [get](const auto & a) { return build_trian(get(a, "n")); }};
        return r;
    }();
    return registry;
}

/// A registry entry tried as a lower-bound witness by the certifier.
struct RegisteredWitness
{
    std::string name;
    std::map<std::string, int> params;
};

inline auto ramsey_witness_candidates() -> std::vector<RegisteredWitness>
{
    return {
        {"hk", {{"k", 1}}}, {"hk", {{"k", 2}}}, {"hk", {{"k", 3}}}, {"sr2k2", {}}, {"k3_21", {}}, {"c4bull23", {}},
        {"k3claw28", {}}, {"paw30", {}}, {"star_even", {{"s", 2}}}, {"star_even", {{"s", 4}}}, {"star_odd", {{"s", 3}}},
        {"star_odd", {{"s", 5}}}, {"theorem2", {{"n", 3}}}, {"theorem2", {{"n", 4}}}, {"theorem2", {{"n", 5}}}};
}

} // namespace singram
