#pragma once

#include "singram/constructions.hpp"
#include "singram/csp.hpp"
#include "singram/enumerate.hpp"
#include "singram/graph6.hpp"
#include "singram/pattern.hpp"
#include "singram/singular.hpp"
#include "singram/small_graph.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace singram {

#ifdef SINGRAM_VERSION
inline constexpr const char * tool_version = "singram " SINGRAM_VERSION;
#else
inline constexpr const char * tool_version = "singram";
#endif

inline auto quadratic_upper_bound_from(int ramsey, int k) -> int { return k * (ramsey - 1) * (ramsey - 1) + 1; }

inline auto quadratic_upper_bound(const Graph & f1, const Graph & f2, int k) -> int
{
    return quadratic_upper_bound_from(ramsey_number(f1, f2), k);
}

/// Number of distinct degrees possible when both the graph and its complement have minimum degree >= delta.
inline auto max_classes_bound(int n, int delta) -> int
{
    if (delta < 0 || 2 * delta > n - 1)
        throw std::invalid_argument("max_classes_bound: need 0 <= delta <= (n-1)/2");
    return n - 2 * delta;
}

/// Partitions of n into at most k(R-1) parts of size at most R-1, descending lexicographic.
inline auto class_profiles_for(int n, int ramsey, int k = 1) -> std::vector<ClassProfile>
{
    const int s_max = ramsey - 1;
    const int c_max = k * (ramsey - 1);
    std::vector<ClassProfile> out;
    std::vector<int> parts;
    auto rec = [&](auto && self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back({parts, c_max, s_max});
            return;
        }
        if (static_cast<int>(parts.size()) == c_max)
            return;
        for (int s = std::min(cap, left); s >= 1; --s) {
            parts.push_back(s);
            self(self, left - s, s);
            parts.pop_back();
        }
    };
    if (n >= 1 && static_cast<long>(c_max) * s_max >= n)
        rec(rec, n, s_max);
    return out;
}

inline auto class_profiles(int n, const Graph & f1, const Graph & f2, int k = 1) -> std::vector<ClassProfile>
{
    return class_profiles_for(n, ramsey_number(f1, f2), k);
}

/// Caches Ramsey number, R-graph catalogs and stability verdicts for one pattern pair.
class PairContext
{
public:
    PairContext(Graph f1, Graph f2, int k, int jobs = 0)
        : f1_(std::move(f1)), f2_(std::move(f2)), k_(k), jobs_(jobs)
    {
        if (k < 1)
            throw std::invalid_argument("k >= 1");
    }

    auto f1() const -> const Graph & { return f1_; }
    auto f2() const -> const Graph & { return f2_; }
    auto k() const -> int { return k_; }

    auto ramsey() -> int
    {
        if (! ramsey_)
            ramsey_ = ramsey_number(f1_, f2_, 12, jobs_);
        return *ramsey_;
    }

    auto quadratic_bound() -> int { return quadratic_upper_bound_from(ramsey(), k_); }

    auto profiles(int n) -> std::vector<ClassProfile> { return class_profiles_for(n, ramsey(), k_); }

    auto catalog(int s) -> const std::vector<Graph> &
    {
        auto it = catalogs_.find(s);
        if (it == catalogs_.end())
            it = catalogs_.emplace(s, enumerate_r_graphs(s, f1_, f2_, jobs_).graphs).first;
        return it->second;
    }

    auto stable(const Graph & h) -> bool
    {
        auto key = g6_encode(h);
        auto it = stable_.find(key);
        if (it == stable_.end())
            it = stable_.emplace(key, is_ramsey_stable(h, f1_, f2_)).first;
        return it->second;
    }

    /// Regular R-graphs of order s, one per degree (ascending).
    auto regular_members(int s) -> const std::vector<Graph> &
    {
        auto it = regular_.find(s);
        if (it == regular_.end()) {
            std::map<int, Graph> by_degree;
            for (const auto & g : catalog(s))
                if (is_regular(g) && ! by_degree.count(s ? g.degree(0) : 0))
                    by_degree.emplace(s ? g.degree(0) : 0, g);
            std::vector<Graph> list;
            for (auto & [d, g] : by_degree)
                list.push_back(g);
            it = regular_.emplace(s, std::move(list)).first;
        }
        return it->second;
    }

    auto catalog_fn() -> std::function<const std::vector<Graph> &(int)>
    {
        return [this](int s) -> const std::vector<Graph> & { return catalog(s); };
    }

private:
    Graph f1_, f2_;
    int k_;
    int jobs_;
    std::optional<int> ramsey_;
    std::map<int, std::vector<Graph>> catalogs_;
    std::map<std::string, bool> stable_;
    std::map<int, std::vector<Graph>> regular_;
};

// ---------------------------------------------------------------- exhaustive

/// SR test on compact graphs with lookup tables for patterns up to six vertices.
class SmallSrTester
{
public:
    SmallSrTester(const Graph & f1, const Graph & f2, int k)
        : k_(k)
    {
        if (k < 1)
            throw std::invalid_argument("k >= 1");
        sides_[0] = make_side(f1, false);
        sides_[1] = make_side(f2, true);
    }

    /// True iff the graph has a k-singular copy of F1 (or the complement one of F2 when `second`).
    auto has_singular(const SmallGraph & g, bool second) const -> bool
    {
        const Side & s = sides_[second ? 1 : 0];
        if (s.p == 0)
            return true;
        if (s.p > g.n)
            return false;
        std::array<int, small_max_order> ord{}, deg{};
        for (int v = 0; v < g.n; ++v) {
            ord[v] = v;
            deg[v] = g.degree(v);
        }
        std::stable_sort(ord.begin(), ord.begin() + g.n, [&](int a, int b) { return deg[a] < deg[b]; });
        std::array<int, small_max_order> pick{};
        auto rec = [&](auto && self, int from, int count, int mode) -> bool {
            if (count == s.p)
                return contains(g, s, pick);
            for (int i = from; i < g.n; ++i) {
                const int v = ord[i];
                int next_mode = mode;
                if (count > 0) {
                    const int gap = deg[v] - deg[pick[count - 1]];
                    if (mode == 1 && gap > 0)
                        break;
                    if (mode == 0)
                        next_mode = gap == 0 ? 1 : gap >= k_ ? 2 : -1;
                    else if (mode == 2 && gap < k_)
                        next_mode = -1;
                    if (next_mode < 0)
                        continue;
                }
                pick[count] = v;
                if (self(self, i + 1, count + 1, count == 0 ? 0 : next_mode))
                    return true;
            }
            return false;
        };
        return rec(rec, 0, 0, 0);
    }

    auto is_sr(const SmallGraph & g) const -> bool { return ! has_singular(g, false) && ! has_singular(g, true); }

private:
    struct Side
    {
        SmallGraph f;
        int p = 0;
        bool complement = false;
        std::vector<std::uint8_t> table;
    };

    int k_;
    std::array<Side, 2> sides_;

    static auto make_side(const Graph & f, bool complement) -> Side
    {
        Side s;
        s.f = to_small(f);
        s.p = f.order();
        s.complement = complement;
        if (s.p <= 6) {
            const int pairs = s.p * (s.p - 1) / 2;
            s.table.resize(std::size_t{1} << pairs);
            for (std::uint32_t m = 0; m < s.table.size(); ++m) {
                SmallGraph h;
                h.n = s.p;
                for (int i = 0, bit = 0; i < s.p; ++i)
                    for (int j = i + 1; j < s.p; ++j, ++bit)
                        if ((m >> bit) & 1U)
                            h.add_edge(i, j);
                s.table[m] = small_contains(h, s.f) ? 1 : 0;
            }
        }
        return s;
    }

    static auto contains(const SmallGraph & g, const Side & s, const std::array<int, small_max_order> & pick) -> bool
    {
        if (! s.table.empty()) {
            std::uint32_t m = 0;
            for (int i = 0, bit = 0; i < s.p; ++i)
                for (int j = i + 1; j < s.p; ++j, ++bit)
                    if (g.adjacent(pick[i], pick[j]) != s.complement)
                        m |= 1U << bit;
            return s.table[m] != 0;
        }
        SmallGraph h;
        h.n = s.p;
        for (int i = 0; i < s.p; ++i)
            for (int j = i + 1; j < s.p; ++j)
                if (g.adjacent(pick[i], pick[j]) != s.complement)
                    h.add_edge(i, j);
        return small_contains(h, s.f);
    }
};

struct ExhaustiveResult
{
    bool none_exists = true;
    long graphs = 0;
    std::optional<Graph> witness;
};

/// Tests every canonical graph of order n; the witness (if any) is the first in generation order.
inline auto exhaustive_search(int n, const Graph & f1, const Graph & f2, int k, int jobs = 0) -> ExhaustiveResult
{
    if (n > 10)
        throw ExhaustionBoundExceeded("exhaustive sweeps are limited to n <= 10");
    SmallSrTester tester(f1, f2, k);
    ExhaustiveResult out;
    if (n <= 1) {
        for (const auto & g : generate_small(std::max(n, 0))) {
            ++out.graphs;
            if (tester.is_sr(g)) {
                out.none_exists = false;
                out.witness = to_graph(g);
                break;
            }
        }
        return out;
    }
    auto parents = generate_small(n - 1, {}, jobs);
    std::atomic<std::size_t> best{parents.size()};
    std::atomic<long> count{0};
    std::vector<std::optional<SmallGraph>> found(parents.size());
    detail::run_indexed(parents.size(), jobs, [&](std::size_t i) {
        if (i > best.load())
            return;
        long local = 0;
        detail::augment(parents[i], {}, [&](const SmallGraph & c) {
            ++local;
            if (! tester.is_sr(c))
                return true;
            found[i] = c;
            return false;
        });
        count += local;
        if (found[i])
            for (std::size_t cur = best.load(); i < cur && ! best.compare_exchange_weak(cur, i);)
                ;
    });
    out.graphs = count.load();
    if (best.load() < parents.size()) {
        out.none_exists = false;
        out.witness = to_graph(*found[best.load()]);
    }
    return out;
}

inline auto exhaustive_no_sr(int n, const Graph & f1, const Graph & f2, int k, int jobs = 0) -> bool
{
    return exhaustive_search(n, f1, f2, k, jobs).none_exists;
}

// ---------------------------------------------------------------- substitution

struct ProfileCoverage
{
    ClassProfile profile;
    std::vector<Graph> stable_hosts;
    std::vector<Graph> unstable_hosts;
};

struct SubstitutionResult
{
    std::optional<Graph> witness;
    std::optional<MixedPlan> plan;
    bool valid = true; // every profile covered by stable hosts
    std::vector<ProfileCoverage> coverage;
    long assignments = 0;
};

/// Regular-substitution reduction (k = 1): an SR-graph whose transversal is a stable
/// host must be host[regular R-graphs]; tries every such assignment.
inline auto substitution_search(PairContext & ctx, int n) -> SubstitutionResult
{
    SubstitutionResult out;
    const auto profiles = ctx.profiles(n);
    for (const auto & prof : profiles) {
        ProfileCoverage cov{prof, {}, {}};
        const int c = prof.classes();
        for (const auto & h : ctx.catalog(c))
            (ctx.k() == 1 && ctx.stable(h) ? cov.stable_hosts : cov.unstable_hosts).push_back(h);
        if (! cov.unstable_hosts.empty())
            out.valid = false;
        if (! out.witness)
            for (const auto & h : cov.stable_hosts) {
                std::vector<int> sizes = prof.sizes;
                std::sort(sizes.begin(), sizes.end());
                do {
                    std::vector<const std::vector<Graph> *> options;
                    bool possible = true;
                    for (int s : sizes) {
                        options.push_back(&ctx.regular_members(s));
                        possible = possible && ! options.back()->empty();
                    }
                    if (! possible)
                        continue;
                    std::vector<int> pick(c, 0);
                    while (true) {
                        ++out.assignments;
                        std::vector<int> deg(c);
                        for (int a = 0; a < c; ++a) {
                            const Graph & q = (*options[a])[pick[a]];
                            deg[a] = q.order() > 0 ? q.degree(0) : 0;
                            for (int b = 0; b < c; ++b)
                                if (h.adjacent(a, b))
                                    deg[a] += sizes[b];
                        }
                        auto sorted = deg;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                            std::vector<Graph> parts;
                            for (int a = 0; a < c; ++a)
                                parts.push_back((*options[a])[pick[a]]);
                            auto plan = substitution_plan(h, parts);
                            auto g = mixed_substitute(plan);
                            for (int a = 0, v = 0; a < c; v += sizes[a], ++a)
                                for (int t = 0; t < sizes[a]; ++t)
                                    if (g.degree(v + t) != deg[a])
                                        throw std::logic_error("substitution degree law violated");
                            if (static_cast<int>(degree_classes(g).size()) != c || ! is_sr_graph(g, ctx.f1(), ctx.f2(), ctx.k()))
                                throw std::logic_error("substituted graph failed the SR check");
                            out.witness = std::move(g);
                            out.plan = std::move(plan);
                            break;
                        }
                        int a = c - 1;
                        while (a >= 0 && ++pick[a] == static_cast<int>(options[a]->size()))
                            pick[a--] = 0;
                        if (a < 0)
                            break;
                    }
                } while (! out.witness && std::next_permutation(sizes.begin(), sizes.end()));
                if (out.witness)
                    break;
            }
        out.coverage.push_back(std::move(cov));
    }
    return out;
}

inline auto substitution_search(int n, const Graph & f1, const Graph & f2) -> SubstitutionResult
{
    PairContext ctx(f1, f2, 1);
    return substitution_search(ctx, n);
}

// ---------------------------------------------------------------- certification

struct SweepRecord
{
    int n = 0;
    std::string method;  // profile-infeasible | exhaustive | substitution | csp
    std::string outcome; // none | witness | budget-exceeded
    long nodes = 0;
    long millis = 0;
    std::string detail;
};

struct HostCheck
{
    int order = 0;
    Graph graph;
    bool stable = false;
};

struct Certificate
{
    std::string claim; // "Rs exact" or "Rs lower"
    std::string f1, f2;
    int k = 1;
    int value = 0;
    int upper = 0;
    int ramsey = 0;
    int quadratic_bound = 0;
    std::vector<Graph> witnesses;
    std::string witness_source;
    std::vector<SweepRecord> sweep;
    std::vector<HostCheck> hosts;
    bool complete = false;
    std::string tool = tool_version;
    std::uint64_t seed = 1;
};

namespace detail {

    inline auto millis_since(std::chrono::steady_clock::time_point t0) -> long
    {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    }

    /// Spanning subgraph test: a singular copy of `big` contains one of `small`.
    inline auto weaker_pattern(const Graph & small, const Graph & big) -> bool
    {
        return small.order() == big.order() && contains_subgraph(big, small);
    }

    struct RegistryWitness
    {
        Graph graph;
        std::string source;
    };

    /// Largest registered construction that is SR for (f1, f2, k).
    inline auto registered_witness(const Graph & f1, const Graph & f2, int k) -> std::optional<RegistryWitness>
    {
        std::optional<RegistryWitness> best;
        const auto & reg = construction_registry();
        for (const auto & cand : ramsey_witness_candidates()) {
            auto r = reg.at(cand.name).build(cand.params);
            if (r.f2_name.empty() || r.k != k)
                continue;
            auto a = parse_pattern(r.f1_name), b = parse_pattern(r.f2_name);
            std::optional<Graph> g;
            if (weaker_pattern(a, f1) && weaker_pattern(b, f2))
                g = r.graph;
            else if (weaker_pattern(a, f2) && weaker_pattern(b, f1))
                g = complement(r.graph);
            if (! g || (best && best->graph.order() >= g->order()))
                continue;
            if (! is_sr_graph(*g, f1, f2, k))
                continue;
            std::string label = cand.name;
            for (auto & [key, val] : cand.params)
                label += " " + key + "=" + std::to_string(val);
            best = RegistryWitness{*g, label};
        }
        return best;
    }

    enum class Closure
    {
        Closed,
        Witness,
        Open
    };

} // namespace detail

/// Certifies Rs(f1, f2, k): a witness below the value and a nonexistence record for every
/// order from the value up to the quadratic bound.
inline auto certify_rs(const std::string & f1_name, const std::string & f2_name, int k, const SearchConfig & cfg) -> Certificate
{
    cfg.validate();
    const Graph f1 = parse_pattern(f1_name);
    const Graph f2 = parse_pattern(f2_name.empty() ? f1_name : f2_name);
    PairContext ctx(f1, f2, k, cfg.jobs);
    Certificate cert;
    cert.f1 = to_string(parse_spec(f1_name));
    cert.f2 = to_string(parse_spec(f2_name.empty() ? f1_name : f2_name));
    cert.k = k;
    cert.seed = cfg.seed;
    cert.ramsey = ctx.ramsey();
    cert.quadratic_bound = ctx.quadratic_bound();

    std::optional<Graph> witness;
    int w = 0;
    if (auto reg = detail::registered_witness(f1, f2, k)) {
        witness = reg->graph;
        w = reg->graph.order();
        cert.witness_source = reg->source;
    }

    std::set<int> host_orders;
    auto close = [&](int n) -> std::pair<detail::Closure, std::optional<Graph>> {
        auto t0 = std::chrono::steady_clock::now();
        const auto profiles = ctx.profiles(n);
        if (profiles.empty()) {
            cert.sweep.push_back({n, "profile-infeasible", "none", 0, detail::millis_since(t0),
                                  "no partition into at most " + std::to_string(k * (cert.ramsey - 1)) + " classes of size at most " + std::to_string(cert.ramsey - 1)});
            if (n <= cfg.corroborate_max_n) {
                auto t1 = std::chrono::steady_clock::now();
                auto ex = exhaustive_search(n, f1, f2, k, cfg.jobs);
                cert.sweep.push_back({n, "exhaustive", ex.none_exists ? "none" : "witness", ex.graphs, detail::millis_since(t1), "corroborating sweep"});
                if (! ex.none_exists)
                    throw std::logic_error("exhaustive sweep contradicts the class-profile bound");
            }
            return {detail::Closure::Closed, std::nullopt};
        }
        if (n <= cfg.exhaustive_max_n) {
            auto ex = exhaustive_search(n, f1, f2, k, cfg.jobs);
            cert.sweep.push_back({n, "exhaustive", ex.none_exists ? "none" : "witness", ex.graphs, detail::millis_since(t0), ""});
            return {ex.none_exists ? detail::Closure::Closed : detail::Closure::Witness, ex.witness};
        }
        bool open = false;
        std::vector<std::pair<ClassProfile, std::vector<Graph>>> csp_jobs;
        if (k == 1) {
            auto sub = substitution_search(ctx, n);
            std::string detail_text;
            for (const auto & cov : sub.coverage) {
                host_orders.insert(cov.profile.classes());
                if (! cov.stable_hosts.empty())
                    detail_text += (detail_text.empty() ? "" : "; ") + to_string(cov.profile) + " stable hosts " + std::to_string(cov.stable_hosts.size());
                if (! cov.unstable_hosts.empty())
                    csp_jobs.emplace_back(cov.profile, cov.unstable_hosts);
            }
            cert.sweep.push_back({n, "substitution", sub.witness ? "witness" : "none", sub.assignments, detail::millis_since(t0), detail_text});
            if (sub.witness)
                return {detail::Closure::Witness, sub.witness};
        }
        else
            for (const auto & prof : profiles)
                csp_jobs.emplace_back(prof, std::vector<Graph>{});
        for (const auto & [prof, hosts] : csp_jobs) {
            auto t1 = std::chrono::steady_clock::now();
            auto r = csp_search(prof, f1, f2, k, cfg, ctx.catalog_fn(), hosts);
            std::string text = to_string(prof);
            for (const auto & h : hosts)
                text += " host " + g6_encode(h);
            cert.sweep.push_back({n, "csp", to_string(r.status), r.nodes, detail::millis_since(t1), text});
            if (r.status == CspStatus::Witness)
                return {detail::Closure::Witness, r.witness};
            if (r.status == CspStatus::BudgetExceeded)
                open = true;
        }
        return {open ? detail::Closure::Open : detail::Closure::Closed, std::nullopt};
    };

    int highest_open = 0;
    for (int n = cert.quadratic_bound; n > w; --n) {
        auto [state, g] = close(n);
        if (state == detail::Closure::Witness) {
            witness = g;
            w = n;
            cert.witness_source = "search at n=" + std::to_string(n);
            break;
        }
        if (state == detail::Closure::Open)
            highest_open = std::max(highest_open, n);
    }
    std::sort(cert.sweep.begin(), cert.sweep.end(), [](const SweepRecord & a, const SweepRecord & b) { return a.n < b.n; });

    if (witness) {
        if (! is_sr_graph(*witness, f1, f2, k))
            throw std::logic_error("certificate witness failed re-verification");
        cert.witnesses.push_back(*witness);
    }
    for (int c : host_orders)
        for (const auto & h : ctx.catalog(c))
            cert.hosts.push_back({c, h, k == 1 && ctx.stable(h)});
    cert.value = w + 1;
    cert.complete = highest_open == 0;
    cert.upper = cert.complete ? cert.value : highest_open + 1;
    cert.claim = cert.complete ? "Rs exact" : "Rs lower";
    return cert;
}

} // namespace singram
