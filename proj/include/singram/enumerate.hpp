#pragma once

#include "singram/graph6.hpp"
#include "singram/pattern.hpp"
#include "singram/singular.hpp"
#include "singram/small_graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace singram {

inline constexpr const char * generator_version = "singram-augment-1";

/// Predicate on a freshly extended graph and its new vertex. It must be hereditary
/// (if it rejects a graph it rejects every supergraph obtained by adding vertices).
using HereditaryFilter = std::function<bool(const SmallGraph &, int)>;

class ExhaustionBoundExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

    struct U128Hash
    {
        auto operator()(u128 v) const -> std::size_t
        {
            auto lo = static_cast<std::uint64_t>(v), hi = static_cast<std::uint64_t>(v >> 64);
            return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
        }
    };

    /// Canonical augmentation: calls emit(child) once per isomorphism class of
    /// one-vertex extensions of `parent` whose canonical deletion recovers `parent`.
    template <typename Emit>
    auto augment(const SmallGraph & parent, const HereditaryFilter & keep, Emit && emit) -> bool
    {
        const int m = parent.n;
        const int x = m;
        if (m + 1 > small_max_order)
            throw OrderOverflow("enumeration limited to 16 vertices");
        std::array<int, small_max_order> pdeg{};
        int pmax = 0;
        for (int v = 0; v < m; ++v) {
            pdeg[v] = parent.degree(v);
            pmax = std::max(pmax, pdeg[v]);
        }
        std::unordered_set<u128, U128Hash> seen;
        SmallGraph c = parent;
        c.n = m + 1;
        for (std::uint32_t s = 0; s < (1U << m); ++s) {
            const int dx = std::popcount(s);
            if (dx < pmax)
                continue;
            std::array<int, small_max_order> deg{};
            bool ok = true;
            for (int v = 0; v < m && ok; ++v) {
                deg[v] = pdeg[v] + static_cast<int>((s >> v) & 1U);
                ok = deg[v] <= dx;
            }
            if (! ok)
                continue;
            deg[x] = dx;
            for (int v = 0; v < m; ++v)
                c.adj[v] = static_cast<std::uint16_t>(parent.adj[v] | (((s >> v) & 1U) << x));
            c.adj[x] = static_cast<std::uint16_t>(s);

            // invariant: (degree, sum of neighbour degrees); x must attain the maximum
            auto inv2 = [&](int v) {
                int t = 0;
                for (std::uint16_t r = c.adj[v]; r; r &= r - 1)
                    t += deg[std::countr_zero(r)];
                return t;
            };
            const int xi = inv2(x);
            std::uint16_t top = static_cast<std::uint16_t>(1U << x);
            for (int v = 0; v < m && ok; ++v)
                if (deg[v] == dx) {
                    int iv = inv2(v);
                    if (iv > xi)
                        ok = false;
                    else if (iv == xi)
                        top |= static_cast<std::uint16_t>(1U << v);
                }
            if (! ok)
                continue;
            if (keep && ! keep(c, x))
                continue;

            if (std::popcount(top) > 1) {
                // refine with the top class last; only the final cell may hold the deleted vertex
                detail::SmallPartition p;
                p.count = 0;
                auto rest = static_cast<std::uint16_t>(c.all() & ~top);
                if (rest)
                    p.cells[p.count++] = rest;
                p.cells[p.count++] = top;
                detail::small_refine(c, p);
                const std::uint16_t last = p.cells[p.count - 1];
                if (! ((last >> x) & 1U))
                    continue;
                top = last;
            }
            const u128 key = small_rooted_key(c, x);
            if (std::popcount(top) > 1) {
                bool minimal = true;
                std::uint16_t done = static_cast<std::uint16_t>(1U << x);
                for (std::uint16_t r = static_cast<std::uint16_t>(top & ~(1U << x)); r && minimal; r &= r - 1) {
                    int y = std::countr_zero(r);
                    bool twin = false;
                    for (std::uint16_t t = done; t; t &= t - 1) {
                        int u = std::countr_zero(t);
                        if (static_cast<std::uint16_t>(c.adj[u] & ~(1U << y)) == static_cast<std::uint16_t>(c.adj[y] & ~(1U << u))) {
                            twin = true;
                            break;
                        }
                    }
                    done |= static_cast<std::uint16_t>(1U << y);
                    if (twin)
                        continue;
                    if (small_rooted_key(c, y) < key)
                        minimal = false;
                }
                if (! minimal)
                    continue;
            }
            if (! seen.insert(key).second)
                continue;
            if (! emit(c))
                return false;
        }
        return true;
    }

    inline auto resolve_jobs(int jobs) -> int
    {
        if (jobs > 0)
            return jobs;
        return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    }

    /// Runs body(i) for i in [0, count) across `jobs` threads in chunks.
    template <typename Body>
    auto parallel_for(std::size_t count, int jobs, Body && body) -> void
    {
        jobs = resolve_jobs(jobs);
        if (jobs == 1 || count < 64) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                try {
                    while (true) {
                        std::size_t start = next.fetch_add(32);
                        if (start >= count)
                            break;
                        for (std::size_t i = start; i < std::min(count, start + 32); ++i)
                            body(i);
                    }
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

/// All one-vertex canonical extensions of the given parents, in parent order.
inline auto next_level(const std::vector<SmallGraph> & parents, const HereditaryFilter & keep = {}, int jobs = 1) -> std::vector<SmallGraph>
{
    std::vector<std::vector<SmallGraph>> kids(parents.size());
    detail::parallel_for(parents.size(), jobs, [&](std::size_t i) {
        detail::augment(parents[i], keep, [&](const SmallGraph & c) {
            kids[i].push_back(c);
            return true;
        });
    });
    std::vector<SmallGraph> out;
    for (auto & k : kids)
        out.insert(out.end(), k.begin(), k.end());
    return out;
}

/// One graph per isomorphism class of order n passing `keep`, in deterministic order.
inline auto generate_small(int n, const HereditaryFilter & keep = {}, int jobs = 1) -> std::vector<SmallGraph>
{
    if (n < 0 || n > small_max_order)
        throw std::invalid_argument("generate: order outside [0, 16]");
    std::vector<SmallGraph> level{SmallGraph{}};
    for (int m = 0; m < n && ! level.empty(); ++m)
        level = next_level(level, keep, jobs);
    return level;
}

/// Streams the order-n graphs to `visit`; returning false stops the sweep.
/// With jobs != 1, `visit` is called concurrently from worker threads.
inline auto for_each_graph(int n, const std::function<bool(const SmallGraph &)> & visit, const HereditaryFilter & keep = {}, int jobs = 1) -> bool
{
    if (n < 1)
        return visit(generate_small(n, keep, jobs).at(0));
    auto parents = generate_small(n - 1, keep, jobs);
    std::atomic<bool> stop{false};
    detail::parallel_for(parents.size(), jobs, [&](std::size_t i) {
        if (stop)
            return;
        bool done = ! detail::augment(parents[i], keep, [&](const SmallGraph & c) { return ! stop && visit(c); });
        if (done)
            stop = true;
    });
    return ! stop;
}

inline auto generate_all(int n, int jobs = 1) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (const auto & s : generate_small(n, {}, jobs))
        out.push_back(to_graph(s));
    return out;
}

/// Keeps graphs that are f1-free and whose complement is f2-free.
inline auto r_graph_filter(const Graph & f1, const Graph & f2) -> HereditaryFilter
{
    auto a = to_small(f1), b = to_small(f2);
    return [a, b](const SmallGraph & g, int x) { return ! small_contains(g, a, x) && ! small_contains(g.complement(), b, x); };
}

inline auto is_r_graph(const Graph & g, const Graph & f1, const Graph & f2) -> bool
{
    return ! contains_subgraph(g, f1) && ! contains_subgraph(complement(g), f2);
}

struct RGraphCatalog
{
    int order = 0;
    Graph f1, f2;
    std::vector<Graph> graphs; // canonical labellings, sorted by canonical key
};

inline auto enumerate_r_graphs(int n, const Graph & f1, const Graph & f2, int jobs = 1) -> RGraphCatalog
{
    RGraphCatalog cat{n, f1, f2, {}};
    auto level = generate_small(n, r_graph_filter(f1, f2), jobs);
    std::vector<std::pair<u128, SmallGraph>> keyed;
    for (const auto & g : level)
        keyed.emplace_back(small_canonical_key(g), small_canonical_graph(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    for (const auto & [key, g] : keyed)
        cat.graphs.push_back(to_graph(g));
    return cat;
}

/// Least n whose R-graph catalog is empty.
inline auto ramsey_number(const Graph & f1, const Graph & f2, int max_n = 10, int jobs = 1) -> int
{
    auto keep = r_graph_filter(f1, f2);
    std::vector<SmallGraph> level{SmallGraph{}};
    for (int n = 1; n <= max_n; ++n) {
        level = next_level(level, keep, jobs);
        if (level.empty()) {
            if (! next_level(level, keep, jobs).empty())
                throw std::logic_error("R-graph catalogs are not monotone");
            return n;
        }
    }
    throw ExhaustionBoundExceeded("R-graph catalog still nonempty at order " + std::to_string(max_n));
}

struct VertexStability
{
    int vertex = 0;
    int r_extensions = 0;                      // labeled extensions of h - v that are R-graphs
    std::vector<std::vector<int>> alternatives; // neighbourhoods (in h's labels) other than N(v)
};

struct StabilityReport
{
    bool stable = true;
    std::vector<VertexStability> vertices;
};

/// For each v, re-attaching a vertex to h - v yields an R-graph only via N(v).
inline auto ramsey_stability(const Graph & h, const Graph & f1, const Graph & f2) -> StabilityReport
{
    if (! is_r_graph(h, f1, f2))
        throw std::invalid_argument("ramsey stability: h is not an R-graph");
    const int k = h.order();
    if (k > small_max_order)
        throw OrderOverflow("ramsey stability supports at most 16 vertices");
    auto a = to_small(f1), b = to_small(f2);
    StabilityReport report;
    for (int v = 0; v < k; ++v) {
        std::vector<int> rest;
        for (int u = 0; u < k; ++u)
            if (u != v)
                rest.push_back(u);
        auto base = to_small(induced(h, rest));
        SmallGraph c = base;
        c.n = k;
        const int x = k - 1;
        std::uint32_t own = 0;
        for (int i = 0; i < k - 1; ++i)
            if (h.adjacent(v, rest[i]))
                own |= 1U << i;
        VertexStability vs{v, 0, {}};
        for (std::uint32_t s = 0; s < (1U << (k - 1)); ++s) {
            for (int i = 0; i < k - 1; ++i)
                c.adj[i] = static_cast<std::uint16_t>(base.adj[i] | (((s >> i) & 1U) << x));
            c.adj[x] = static_cast<std::uint16_t>(s);
            if (small_contains(c, a, x) || small_contains(c.complement(), b, x))
                continue;
            ++vs.r_extensions;
            if (s != own) {
                std::vector<int> nb;
                for (int i = 0; i < k - 1; ++i)
                    if ((s >> i) & 1U)
                        nb.push_back(rest[i]);
                vs.alternatives.push_back(nb);
            }
        }
        if (! vs.alternatives.empty())
            report.stable = false;
        report.vertices.push_back(std::move(vs));
    }
    return report;
}

inline auto is_ramsey_stable(const Graph & h, const Graph & f1, const Graph & f2) -> bool
{
    return ramsey_stability(h, f1, f2).stable;
}

/// Writes <stem>.g6 and <stem>.json.
inline auto write_catalog(const RGraphCatalog & cat, const std::string & stem, const std::string & f1_name, const std::string & f2_name) -> void
{
    std::ofstream g6(stem + ".g6");
    if (! g6)
        throw std::runtime_error("cannot write " + stem + ".g6");
    write_g6_stream(g6, cat.graphs);
    nlohmann::ordered_json side;
    side["order"] = cat.order;
    side["patterns"] = {f1_name, f2_name};
    side["count"] = cat.graphs.size();
    side["generatorVersion"] = generator_version;
    std::ofstream js(stem + ".json");
    js << side.dump(2) << '\n';
}

inline auto read_catalog(const std::string & stem) -> RGraphCatalog
{
    std::ifstream js(stem + ".json");
    if (! js)
        throw std::runtime_error("cannot open " + stem + ".json");
    auto side = nlohmann::json::parse(js);
    RGraphCatalog cat;
    cat.order = side.at("order").get<int>();
    auto names = side.at("patterns").get<std::vector<std::string>>();
    if (names.size() != 2)
        throw std::runtime_error("catalog sidecar needs two patterns");
    cat.f1 = parse_pattern(names[0]);
    cat.f2 = parse_pattern(names[1]);
    cat.graphs = read_g6_file(stem + ".g6");
    if (cat.graphs.size() != side.at("count").get<std::size_t>())
        throw std::runtime_error("catalog count mismatch");
    for (const auto & g : cat.graphs)
        if (g.order() != cat.order || ! is_r_graph(g, cat.f1, cat.f2))
            throw std::runtime_error("catalog member fails the R-graph check");
    return cat;
}

} // namespace singram
