#pragma once

#include "singram/canonical.hpp"
#include "singram/constructions.hpp"
#include "singram/enumerate.hpp"
#include "singram/graph6.hpp"
#include "singram/pattern.hpp"
#include "singram/search.hpp"

#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace singram {

/// Edge count of the balanced complete (s-1)-partite graph on n vertices.
inline auto turan_number(int n, int s) -> long
{
    if (s < 2)
        throw std::invalid_argument("turan_number: s >= 2");
    if (n <= 0)
        return 0;
    const int r = s - 1;
    long total = static_cast<long>(n) * (n - 1) / 2;
    for (int i = 0; i < r; ++i) {
        const long part = n / r + (i < n % r ? 1 : 0);
        total -= part * (part - 1) / 2;
    }
    return total;
}

inline auto turan_graph(int n, int s) -> Graph
{
    if (s < 2)
        throw std::invalid_argument("turan_graph: s >= 2");
    const int r = s - 1;
    std::vector<int> parts;
    for (int i = 0; i < r; ++i)
        parts.push_back(n / r + (i < n % r ? 1 : 0));
    return complete_multipartite(parts);
}

struct TsResult
{
    int n = 0;
    std::string pattern;
    int k = 1;
    long value = 0;
    std::vector<Graph> witnesses;
    std::string method; // exhaustive | construction-lower-only
    std::string source;
    long graphs = 0;
};

/// Maximum edge count of an n-vertex graph with no k-singular copy of the pattern,
/// by scanning every canonical graph. All extremal graphs are kept.
inline auto ts_exact(int n, const std::string & pattern, int k = 1, int jobs = 1) -> TsResult
{
    if (n > 9)
        throw ExhaustionBoundExceeded("ts_exact: n <= 9 (use the lower mode for larger n)");
    if (n < 0)
        throw std::invalid_argument("ts_exact: n >= 0");
    const Graph f = parse_pattern(pattern);
    SmallSrTester tester(f, f, k);
    TsResult out{n, to_string(parse_spec(pattern)), k, -1, {}, "exhaustive", "", 0};
    std::mutex mu;
    std::atomic<long> best{-1};
    std::vector<SmallGraph> found;
    std::atomic<long> count{0};
    for_each_graph(
        n,
        [&](const SmallGraph & g) {
            ++count;
            const long e = g.edge_count();
            if (e < best.load())
                return true;
            if (tester.has_singular(g, false))
                return true;
            std::lock_guard lock(mu);
            if (e > best.load()) {
                best = e;
                found.clear();
            }
            if (e == best.load())
                found.push_back(g);
            return true;
        },
        {}, jobs);
    out.value = best.load();
    out.graphs = count.load();
    for (const auto & g : found)
        out.witnesses.push_back(to_graph(g));
    std::sort(out.witnesses.begin(), out.witnesses.end(), [](const Graph & a, const Graph & b) { return g6_encode(a) < g6_encode(b); });
    return out;
}

namespace detail {

    inline auto pad_isolated(const Graph & g, int n) -> Graph { return g.order() >= n ? g : disjoint_union(g, empty_graph(n - g.order())); }

} // namespace detail

/// Best construction-based lower bound on Ts(n, pattern, 1): the triangle constructions,
/// both general constructions on the largest admissible order, then isolated padding.
inline auto ts_lower(int n, const std::string & pattern) -> TsResult
{
    const Graph f = parse_pattern(pattern);
    const int p = f.order();
    const int q = chromatic_number(f);
    TsResult out{n, to_string(parse_spec(pattern)), 1, -1, {}, "construction-lower-only", "", 0};
    auto consider = [&](const Graph & g, const std::string & source) {
        if (g.order() != n || g.edge_count() <= out.value || has_singular_copy(g, f, 1))
            return;
        out.value = g.edge_count();
        out.witnesses = {g};
        out.source = source;
    };
    consider(empty_graph(n), "empty");
    if (is_isomorphic(f, complete_graph(3)) && n >= 4)
        consider(build_trian(n).graph, "trian n=" + std::to_string(n));
    if (p >= 3 && q >= 2)
        for (int m = n - n % (q - 1); m > 0; m -= q - 1) {
            try {
                consider(detail::pad_isolated(build_turan_c1(m, p, q, pattern).graph, n), "turan_c1 n=" + std::to_string(m) + " + " + std::to_string(n - m) + " isolated");
                break;
            }
            catch (const std::invalid_argument &) {
            }
        }
    if (p >= 4 && q >= 2) {
        const int step = (p - 1) * (q - 1);
        for (int m = n - n % step; m > 0; m -= step) {
            try {
                consider(detail::pad_isolated(build_turan_c2(m, p, q, pattern).graph, n), "turan_c2 n=" + std::to_string(m) + " + " + std::to_string(n - m) + " isolated");
                break;
            }
            catch (const std::invalid_argument &) {
            }
        }
    }
    return out;
}

struct GapRow
{
    int n = 0;
    long ex = 0;     // ex(n, K_{(p-1)(q-1)+1})
    long lower = 0;  // best construction
    long gap = 0;
    double bound = 0; // c q p^3, or c r n when (q-1) does not divide n
    std::string status; // ok | exceeds | construction degenerate
    std::string source;
};

inline auto ts_gap_report(const std::string & pattern, int n_from, int n_to, double c = 1.0) -> std::vector<GapRow>
{
    const Graph f = parse_pattern(pattern);
    const int p = f.order();
    const int q = chromatic_number(f);
    if (p < 3 || q < 2)
        throw std::invalid_argument("ts_gap_report: pattern needs p >= 3 vertices and chromatic number q >= 2");
    std::vector<GapRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        GapRow row;
        row.n = n;
        row.ex = turan_number(n, (p - 1) * (q - 1) + 1);
        auto lo = ts_lower(n, pattern);
        row.lower = lo.value;
        row.source = lo.source;
        const int r = n % (q - 1);
        row.bound = r == 0 ? c * q * p * p * p : c * r * n;
        if (lo.source == "empty") {
            row.status = "construction degenerate";
            row.gap = 0;
        }
        else {
            row.gap = row.ex - row.lower;
            row.status = row.gap > row.bound ? "exceeds" : "ok";
        }
        rows.push_back(row);
    }
    return rows;
}

inline auto ts_csv_header() -> std::string { return "n,k,pattern,value,method,witness_count"; }

inline auto ts_csv_row(const TsResult & r) -> std::string
{
    std::ostringstream os;
    os << r.n << ',' << r.k << ',' << r.pattern << ',' << r.value << ',' << r.method << ',' << r.witnesses.size();
    return os.str();
}

inline auto gap_csv_header() -> std::string { return "n,pattern,ex,lower,gap,bound,status"; }

inline auto gap_csv_row(const std::string & pattern, const GapRow & r) -> std::string
{
    std::ostringstream os;
    os << r.n << ',' << pattern << ',' << r.ex << ',' << r.lower << ',';
    if (r.status == "construction degenerate")
        os << ',';
    else
        os << r.gap << ',';
    os << r.bound << ',' << r.status;
    return os.str();
}

} // namespace singram
