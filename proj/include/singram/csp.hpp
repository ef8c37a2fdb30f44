#pragma once

// Degree-class constraint search: fixes a class partition (profile), picks an
// R-graph inside each class and branches on the edges between classes.

#include "singram/enumerate.hpp"
#include "singram/singular.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace singram {

struct SearchConfig
{
    long node_budget = 20'000'000; // decisions per csp branch
    double time_budget = 600.0;    // seconds per csp call
    int jobs = 0;                  // 0 = all cores
    std::uint64_t seed = 1;
    int exhaustive_max_n = 9;  // exhaustive sweep used as a closing method up to this order
    int corroborate_max_n = 9; // profile-infeasible orders also swept exhaustively up to this order

    auto validate() const -> void
    {
        if (node_budget <= 0 || time_budget <= 0)
            throw std::invalid_argument("search budgets must be positive");
        if (exhaustive_max_n > 10 || corroborate_max_n > 10)
            throw std::invalid_argument("exhaustive sweeps are limited to n <= 10");
    }
};

struct ClassProfile
{
    std::vector<int> sizes; // non-increasing
    int c_max = 0;
    int s_max = 0;

    auto classes() const -> int { return static_cast<int>(sizes.size()); }
    auto order() const -> int { return std::accumulate(sizes.begin(), sizes.end(), 0); }

    friend auto operator==(const ClassProfile &, const ClassProfile &) -> bool = default;
};

inline auto to_string(const ClassProfile & p) -> std::string
{
    std::string out;
    for (int s : p.sizes)
        out += (out.empty() ? "" : "+") + std::to_string(s);
    return out.empty() ? "0" : out;
}

enum class CspStatus
{
    Witness,
    NoneExists,
    BudgetExceeded
};

inline auto to_string(CspStatus s) -> std::string
{
    switch (s) {
    case CspStatus::Witness: return "witness";
    case CspStatus::NoneExists: return "none";
    default: return "budget-exceeded";
    }
}

struct CspOutcome
{
    CspStatus status = CspStatus::NoneExists;
    std::optional<Graph> witness;
    long nodes = 0;
    int branches = 0;
};

namespace detail {

    /// Edge sets (bit (i,j) at pair index) of every labelled copy of f on positions 0..p-1.
    inline auto copy_masks(const Graph & f) -> std::vector<std::uint64_t>
    {
        const int p = f.order();
        if (p > 8)
            throw std::invalid_argument("csp patterns are limited to 8 vertices");
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::uint64_t> masks;
        auto pair = [p](int i, int j) {
            if (i > j)
                std::swap(i, j);
            return i * p - i * (i + 1) / 2 + (j - i - 1);
        };
        do {
            std::uint64_t m = 0;
            for (auto [u, v] : f.edges())
                m |= std::uint64_t{1} << pair(perm[u], perm[v]);
            masks.insert(m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return {masks.begin(), masks.end()};
    }

    struct CspSetup
    {
        std::vector<int> sizes;
        std::vector<const Graph *> intra;
        std::vector<int> degree;                      // fixed class degrees, or empty
        std::vector<std::pair<int, int>> host_edges;  // between first vertices of classes
        bool host_fixed = false;
        int p1 = 0, p2 = 0, k = 1;
        const std::vector<std::uint64_t> * masks1 = nullptr;
        const std::vector<std::uint64_t> * masks2 = nullptr;
    };

    class ClassCsp
    {
    public:
        using Clock = std::chrono::steady_clock;

        ClassCsp(const CspSetup & s, long budget, Clock::time_point deadline, const std::function<bool()> & cancelled)
            : s_(s), budget_(budget), deadline_(deadline), cancelled_(cancelled)
        {
            build();
        }

        auto solve() -> CspStatus
        {
            if (broken_)
                return CspStatus::NoneExists;
            for (auto [a, b] : root_)
                if (! assign(a, b))
                    return CspStatus::NoneExists;
            return search();
        }

        auto nodes() const -> long { return nodes_; }
        auto stopped() const -> bool { return stopped_; }

        auto graph() const -> Graph
        {
            Graph g(n_);
            for (int v = 0; v < n_; ++v)
                for (int u = v + 1; u < n_; ++u) {
                    int x = var_[v * n_ + u];
                    if (x < 0 ? intra_adj(v, u) : value_[x] == 1)
                        g.add_edge(v, u);
                }
            return g;
        }

    private:
        const CspSetup & s_;
        long budget_;
        Clock::time_point deadline_;
        const std::function<bool()> & cancelled_;

        int n_ = 0, c_ = 0;
        std::vector<int> cls_, start_, internal_, var_;
        std::vector<std::pair<int, int>> ends_;
        std::vector<int> lits_, clause_start_;
        std::vector<std::vector<int>> occ_;
        std::vector<std::pair<int, int>> twins_, root_;
        std::vector<signed char> value_;
        std::vector<int> t_, f_, trail_, queue_;
        std::vector<int> lo_, hi_;
        bool broken_ = false, stopped_ = false;
        long nodes_ = 0;

        auto intra_adj(int u, int v) const -> bool { return s_.intra[cls_[u]]->adjacent(u - start_[cls_[u]], v - start_[cls_[u]]); }

        auto build() -> void
        {
            c_ = static_cast<int>(s_.sizes.size());
            for (int i = 0; i < c_; ++i) {
                start_.push_back(n_);
                for (int t = 0; t < s_.sizes[i]; ++t)
                    cls_.push_back(i);
                n_ += s_.sizes[i];
            }
            start_.push_back(n_);
            for (int v = 0; v < n_; ++v)
                internal_.push_back(s_.intra[cls_[v]]->degree(v - start_[cls_[v]]));
            var_.assign(static_cast<std::size_t>(n_ * n_), -1);
            t_.assign(n_, 0);
            f_.assign(n_, 0);
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v)
                    if (cls_[u] != cls_[v]) {
                        var_[u * n_ + v] = var_[v * n_ + u] = static_cast<int>(ends_.size());
                        ends_.emplace_back(u, v);
                        ++f_[u];
                        ++f_[v];
                    }
            value_.assign(ends_.size(), -1);
            occ_.resize(2 * ends_.size());
            clause_start_.push_back(0);
            add_clauses(s_.p1, *s_.masks1, 0);
            add_clauses(s_.p2, *s_.masks2, 1);
            for (int i = 0; i < c_; ++i) {
                const Graph & g = *s_.intra[i];
                int first = s_.host_fixed ? 1 : 0;
                int prev = -1;
                std::vector<bool> grouped(s_.sizes[i], false);
                for (int a = first; a < s_.sizes[i]; ++a) {
                    if (grouped[a])
                        continue;
                    prev = a;
                    for (int b = a + 1; b < s_.sizes[i]; ++b) {
                        if (grouped[b])
                            continue;
                        auto na = g.neighbours(a), nb = g.neighbours(b);
                        na.reset(b);
                        nb.reset(a);
                        if (na == nb) {
                            grouped[b] = true;
                            twins_.emplace_back(start_[i] + prev, start_[i] + b);
                            prev = b;
                        }
                    }
                }
            }
            if (s_.host_fixed) {
                std::set<std::pair<int, int>> he;
                for (auto [a, b] : s_.host_edges)
                    he.insert(std::minmax(a, b));
                for (int a = 0; a < c_; ++a)
                    for (int b = a + 1; b < c_; ++b)
                        root_.emplace_back(var_[start_[a] * n_ + start_[b]], he.count({a, b}) ? 1 : 0);
            }
            lo_.resize(c_);
            hi_.resize(c_);
        }

        // want = 0: forbidden copies of F1 in the graph; want = 1: forbidden copies of F2 in the complement
        auto add_clauses(int p, const std::vector<std::uint64_t> & masks, int want) -> void
        {
            if (p < 2 || p > c_)
                return;
            std::vector<int> combo(p), pick(p);
            auto gaps_ok = [&] {
                if (s_.k == 1 || s_.degree.empty())
                    return true;
                std::vector<int> d;
                for (int a : combo)
                    d.push_back(s_.degree[a]);
                std::sort(d.begin(), d.end());
                for (int i = 1; i < p; ++i)
                    if (d[i] - d[i - 1] < s_.k)
                        return false;
                return true;
            };
            auto emit = [&] {
                for (auto m : masks) {
                    int before = static_cast<int>(lits_.size());
                    for (int i = 0, bit = 0; i < p; ++i)
                        for (int j = i + 1; j < p; ++j, ++bit)
                            if ((m >> bit) & 1U)
                                lits_.push_back(2 * var_[pick[i] * n_ + pick[j]] + want);
                    if (static_cast<int>(lits_.size()) == before)
                        broken_ = true;
                    int id = static_cast<int>(clause_start_.size()) - 1;
                    for (int x = before; x < static_cast<int>(lits_.size()); ++x)
                        occ_[lits_[x]].push_back(id);
                    clause_start_.push_back(static_cast<int>(lits_.size()));
                }
            };
            auto tuples = [&](auto && self, int i) -> void {
                if (i == p) {
                    emit();
                    return;
                }
                for (int v = start_[combo[i]]; v < start_[combo[i] + 1]; ++v) {
                    pick[i] = v;
                    self(self, i + 1);
                }
            };
            auto combos = [&](auto && self, int i, int from) -> void {
                if (i == p) {
                    if (gaps_ok())
                        tuples(tuples, 0);
                    return;
                }
                for (int a = from; a < c_; ++a) {
                    combo[i] = a;
                    self(self, i + 1, a + 1);
                }
            };
            combos(combos, 0, 0);
        }

        auto assign(int x, int b) -> bool
        {
            if (value_[x] >= 0)
                return value_[x] == b;
            value_[x] = static_cast<signed char>(b);
            trail_.push_back(x);
            auto [u, v] = ends_[x];
            --f_[u];
            --f_[v];
            t_[u] += b;
            t_[v] += b;
            queue_.push_back(x);
            return true;
        }

        auto undo(std::size_t mark) -> void
        {
            while (trail_.size() > mark) {
                int x = trail_.back();
                trail_.pop_back();
                auto [u, v] = ends_[x];
                ++f_[u];
                ++f_[v];
                t_[u] -= value_[x];
                t_[v] -= value_[x];
                value_[x] = -1;
            }
            queue_.clear();
        }

        auto unit_pass() -> bool
        {
            for (std::size_t q = 0; q < queue_.size(); ++q) {
                int x = queue_[q];
                int falsified = 2 * x + (1 - value_[x]);
                for (int id : occ_[falsified]) {
                    int free_lit = -1, nfree = 0;
                    bool sat = false;
                    for (int at = clause_start_[id]; at < clause_start_[id + 1]; ++at) {
                        int lit = lits_[at];
                        int val = value_[lit >> 1];
                        if (val < 0) {
                            free_lit = lit;
                            if (++nfree > 1)
                                break;
                        }
                        else if (val == (lit & 1)) {
                            sat = true;
                            break;
                        }
                    }
                    if (sat || nfree > 1)
                        continue;
                    if (nfree == 0 || ! assign(free_lit >> 1, free_lit & 1))
                        return false;
                }
            }
            queue_.clear();
            return true;
        }

        auto degree_pass() -> bool
        {
            for (int i = 0; i < c_; ++i) {
                lo_[i] = INT_MIN;
                hi_[i] = INT_MAX;
                for (int v = start_[i]; v < start_[i + 1]; ++v) {
                    lo_[i] = std::max(lo_[i], internal_[v] + t_[v]);
                    hi_[i] = std::min(hi_[i], internal_[v] + t_[v] + f_[v]);
                }
                if (! s_.degree.empty()) {
                    lo_[i] = std::max(lo_[i], s_.degree[i]);
                    hi_[i] = std::min(hi_[i], s_.degree[i]);
                }
            }
            // classes of equal size are ordered by degree
            for (int i = 1; i < c_; ++i)
                if (s_.sizes[i] == s_.sizes[i - 1])
                    lo_[i] = std::max(lo_[i], lo_[i - 1] + 1);
            for (int i = c_ - 1; i > 0; --i)
                if (s_.sizes[i] == s_.sizes[i - 1])
                    hi_[i - 1] = std::min(hi_[i - 1], hi_[i] - 1);
            std::vector<int> idx(c_);
            for (int i = 0; i < c_; ++i) {
                if (lo_[i] > hi_[i])
                    return false;
                idx[i] = i;
            }
            // distinct class degrees: the intervals need a system of distinct representatives
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return std::pair(hi_[a], lo_[a]) < std::pair(hi_[b], lo_[b]); });
            std::set<int> used;
            for (int i : idx) {
                int d = lo_[i];
                while (used.count(d))
                    ++d;
                if (d > hi_[i])
                    return false;
                used.insert(d);
            }
            for (int v = 0; v < n_; ++v) {
                if (f_[v] == 0)
                    continue;
                const int i = cls_[v];
                const int want = internal_[v] + t_[v] + f_[v] == lo_[i] ? 1 : internal_[v] + t_[v] == hi_[i] ? 0 : -1;
                if (want < 0)
                    continue;
                for (int u = 0; u < n_; ++u) {
                    int x = var_[v * n_ + u];
                    if (x >= 0 && value_[x] < 0 && ! assign(x, want))
                        return false;
                }
            }
            return true;
        }

        // rows of consecutive twins are non-decreasing (first difference: earlier twin has the 0)
        auto twin_pass() -> bool
        {
            for (auto [u, w] : twins_)
                for (int z = 0; z < n_; ++z) {
                    if (cls_[z] == cls_[u])
                        continue;
                    int xu = var_[u * n_ + z], xw = var_[w * n_ + z];
                    int a = value_[xu], b = value_[xw];
                    if (a >= 0 && b >= 0) {
                        if (a == b)
                            continue;
                        if (a < b)
                            break;
                        return false;
                    }
                    if (a == 1) {
                        if (! assign(xw, 1))
                            return false;
                        continue;
                    }
                    if (b == 0) {
                        if (! assign(xu, 0))
                            return false;
                        continue;
                    }
                    break;
                }
            return true;
        }

        auto propagate() -> bool
        {
            while (true) {
                if (! unit_pass())
                    return false;
                std::size_t before = trail_.size();
                if (! degree_pass())
                    return false;
                if (! twin_pass())
                    return false;
                if (trail_.size() == before)
                    return true;
            }
        }

        auto out_of_budget() -> bool
        {
            if (++nodes_ > budget_)
                return true;
            if ((nodes_ & 1023) == 0 && (Clock::now() > deadline_ || cancelled_()))
                return true;
            return false;
        }

        auto choose() const -> int
        {
            int best = -1, best_free = INT_MAX, best_slack = INT_MAX;
            for (int v = 0; v < n_; ++v) {
                if (f_[v] == 0)
                    continue;
                int slack = hi_[cls_[v]] - lo_[cls_[v]];
                if (std::pair(slack, f_[v]) < std::pair(best_slack, best_free)) {
                    best = v;
                    best_free = f_[v];
                    best_slack = slack;
                }
            }
            if (best < 0)
                return -1;
            for (int u = 0; u < n_; ++u) {
                int x = var_[best * n_ + u];
                if (x >= 0 && value_[x] < 0)
                    return x;
            }
            return -1;
        }

        auto search() -> CspStatus
        {
            if (! propagate())
                return CspStatus::NoneExists;
            int x = choose();
            if (x < 0)
                return CspStatus::Witness;
            if (out_of_budget()) {
                stopped_ = true;
                return CspStatus::BudgetExceeded;
            }
            for (int b : {1, 0}) {
                std::size_t mark = trail_.size();
                assign(x, b);
                auto r = search();
                if (r != CspStatus::NoneExists)
                    return r;
                undo(mark);
            }
            return CspStatus::NoneExists;
        }
    };

    /// Labelled copies of each host on class indices 0..c-1 (edge lists, deduplicated).
    inline auto host_labellings(const std::vector<Graph> & hosts) -> std::vector<std::vector<std::pair<int, int>>>
    {
        std::set<std::vector<std::pair<int, int>>> out;
        for (const auto & h : hosts) {
            const int c = h.order();
            std::vector<int> perm(c);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::pair<int, int>> e;
                for (auto [a, b] : h.edges())
                    e.push_back(std::minmax(perm[a], perm[b]));
                std::sort(e.begin(), e.end());
                out.insert(e);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return {out.begin(), out.end()};
    }

    /// Runs body(i) for i < count on up to `jobs` threads, one index at a time.
    template <typename Body>
    auto run_indexed(std::size_t count, int jobs, Body && body) -> void
    {
        jobs = std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<std::size_t>(count, 1)));
        if (jobs <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < count;)
                        body(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mutex);
                    error = std::current_exception();
                    next = count;
                }
            });
        for (auto & th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

} // namespace detail

/// Searches for an SR-graph whose degree classes have exactly the profile's sizes.
/// `catalog(s)` lists the R-graphs of order s. With non-empty `hosts`, the first
/// vertices of the classes must induce one of them.
inline auto csp_search(const ClassProfile & profile, const Graph & f1, const Graph & f2, int k, const SearchConfig & cfg,
                       const std::function<const std::vector<Graph> &(int)> & catalog, const std::vector<Graph> & hosts = {}) -> CspOutcome
{
    cfg.validate();
    if (k < 1)
        throw std::invalid_argument("csp: k >= 1");
    const int c = profile.classes();
    const int n = profile.order();
    for (const auto & h : hosts)
        if (h.order() != c)
            throw std::invalid_argument("csp: host order must equal the class count");
    const auto masks1 = detail::copy_masks(f1);
    const auto masks2 = detail::copy_masks(f2);

    std::vector<std::vector<int>> degree_vectors;
    if (k == 1)
        degree_vectors.emplace_back();
    else {
        std::vector<int> d(c);
        auto rec = [&](auto && self, int i, std::vector<bool> & used) -> void {
            if (i == c) {
                degree_vectors.push_back(d);
                return;
            }
            int from = (i > 0 && profile.sizes[i] == profile.sizes[i - 1]) ? d[i - 1] + 1 : 0;
            for (int x = from; x < n; ++x) {
                if (used[x])
                    continue;
                used[x] = true;
                d[i] = x;
                self(self, i + 1, used);
                used[x] = false;
            }
        };
        std::vector<bool> used(std::max(n, 1), false);
        rec(rec, 0, used);
    }

    std::vector<const std::vector<Graph> *> cats;
    for (int s : profile.sizes)
        cats.push_back(&catalog(s));
    std::vector<std::vector<int>> intra_choices{{}};
    for (int i = 0; i < c; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto & pre : intra_choices)
            for (int g = 0; g < static_cast<int>(cats[i]->size()); ++g) {
                auto x = pre;
                x.push_back(g);
                next.push_back(std::move(x));
            }
        intra_choices = std::move(next);
    }
    auto labellings = detail::host_labellings(hosts);
    const bool restricted = ! hosts.empty();
    const std::size_t host_count = restricted ? labellings.size() : 1;

    const std::size_t total = degree_vectors.size() * intra_choices.size() * host_count;
    CspOutcome out;
    out.branches = static_cast<int>(total);
    if (total == 0)
        return out;

    auto deadline = detail::ClassCsp::Clock::now() + std::chrono::milliseconds(static_cast<long>(cfg.time_budget * 1000));
    std::atomic<std::size_t> best{total};
    std::vector<CspStatus> status(total, CspStatus::NoneExists);
    std::vector<std::optional<Graph>> found(total);
    std::vector<long> nodes(total, 0);

    detail::run_indexed(total, cfg.jobs, [&](std::size_t b) {
        if (b > best.load())
            return;
        std::size_t rest = b;
        const std::size_t hi = rest % host_count;
        rest /= host_count;
        const std::size_t ii = rest % intra_choices.size();
        const std::size_t di = rest / intra_choices.size();
        detail::CspSetup setup;
        setup.sizes = profile.sizes;
        for (int i = 0; i < c; ++i)
            setup.intra.push_back(&(*cats[i])[intra_choices[ii][i]]);
        setup.degree = degree_vectors[di];
        setup.host_fixed = restricted;
        if (restricted)
            setup.host_edges = labellings[hi];
        setup.p1 = f1.order();
        setup.p2 = f2.order();
        setup.k = k;
        setup.masks1 = &masks1;
        setup.masks2 = &masks2;
        std::function<bool()> cancelled = [&] { return best.load() < b; };
        detail::ClassCsp csp(setup, cfg.node_budget, deadline, cancelled);
        auto r = csp.solve();
        nodes[b] = csp.nodes();
        status[b] = r;
        if (r == CspStatus::Witness) {
            auto g = csp.graph();
            if (! is_sr_graph(g, f1, f2, k) || static_cast<int>(degree_classes(g).size()) != c)
                throw std::logic_error("csp produced an invalid witness");
            found[b] = std::move(g);
            for (std::size_t cur = best.load(); b < cur && ! best.compare_exchange_weak(cur, b);)
                ;
        }
    });

    for (std::size_t b = 0; b < total; ++b)
        out.nodes += nodes[b];
    if (best.load() < total) {
        out.status = CspStatus::Witness;
        out.witness = found[best.load()];
        return out;
    }
    out.status = std::any_of(status.begin(), status.end(), [](CspStatus s) { return s == CspStatus::BudgetExceeded; }) ? CspStatus::BudgetExceeded
                                                                                                                      : CspStatus::NoneExists;
    return out;
}

/// Convenience form that enumerates the class catalogs itself.
inline auto csp_search(const ClassProfile & profile, const Graph & f1, const Graph & f2, int k, const SearchConfig & cfg, const std::vector<Graph> & hosts = {})
    -> CspOutcome
{
    std::map<int, std::vector<Graph>> cache;
    for (int s : profile.sizes)
        if (! cache.count(s))
            cache[s] = enumerate_r_graphs(s, f1, f2).graphs;
    return csp_search(profile, f1, f2, k, cfg, [&](int s) -> const std::vector<Graph> & { return cache.at(s); }, hosts);
}

} // namespace singram
