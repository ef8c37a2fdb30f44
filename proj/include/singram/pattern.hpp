#pragma once

// Pattern mini-language used by the CLI and the construction registry.
//
//   spec  := term ('+' term)*            disjoint union, left to right
//   term  := [count] atom                count copies (mK2 = matching, mK1 = empty graph)
//   atom  := K<d>        complete graph K_d (single digit)
//          | K<p><q>     complete bipartite K_{p,q} (two digits, e.g. K13 = claw)
//          | K<p>,<q>    complete bipartite with arbitrary sizes
//          | K(<n>)      complete graph of any order
//          | P<n> | C<n> | S<s> (star K_{1,s}) | E<n> (empty) | M<m> (matching)
//          | PAW | BULL
//
// Names are case-insensitive. Vertex orderings follow the graph.hpp builders:
// K_{p,q} puts the p-side first, the star centre is vertex 0, unions concatenate.

#include "singram/graph.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singram {

class SpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct GraphSpec
{
    enum class Kind
    {
        Complete,
        CompleteBipartite,
        Path,
        Cycle,
        Star,
        Matching,
        Empty,
        Paw,
        Bull,
        Union
    };

    Kind kind = Kind::Empty;
    int a = 0;
    int b = 0;
    std::vector<GraphSpec> parts;

    static auto complete(int n) -> GraphSpec { return {Kind::Complete, n, 0, {}}; }
    static auto bipartite(int p, int q) -> GraphSpec { return {Kind::CompleteBipartite, p, q, {}}; }
    static auto path(int n) -> GraphSpec { return {Kind::Path, n, 0, {}}; }
    static auto cycle(int n) -> GraphSpec { return {Kind::Cycle, n, 0, {}}; }
    static auto star(int s) -> GraphSpec { return {Kind::Star, s, 0, {}}; }
    static auto matching(int m) -> GraphSpec { return {Kind::Matching, m, 0, {}}; }
    static auto empty(int n) -> GraphSpec { return {Kind::Empty, n, 0, {}}; }
    static auto paw() -> GraphSpec { return {Kind::Paw, 0, 0, {}}; }
    static auto bull() -> GraphSpec { return {Kind::Bull, 0, 0, {}}; }
    static auto disjoint(std::vector<GraphSpec> parts) -> GraphSpec { return {Kind::Union, 0, 0, std::move(parts)}; }

    friend auto operator==(const GraphSpec &, const GraphSpec &) -> bool = default;
};

inline auto build(const GraphSpec & spec) -> Graph
{
    using K = GraphSpec::Kind;
    switch (spec.kind) {
    case K::Complete: return complete_graph(spec.a);
    case K::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
    case K::Path: return path_graph(spec.a);
    case K::Cycle: return cycle_graph(spec.a);
    case K::Star: return star_graph(spec.a);
    case K::Matching:
        if (2 * spec.a > max_order)
            throw OrderOverflow("matching too large");
        return matching_graph(spec.a);
    case K::Empty: return empty_graph(spec.a);
    case K::Paw: return paw_graph();
    case K::Bull: return bull_graph();
    case K::Union: {
        Graph g(0);
        for (const auto & p : spec.parts) {
            auto h = build(p);
            if (g.order() + h.order() > max_order)
                throw OrderOverflow("union too large");
            g = disjoint_union(g, h);
        }
        return g;
    }
    }
    throw SpecError("unknown graph spec kind");
}

inline auto to_string(const GraphSpec & spec) -> std::string
{
    using K = GraphSpec::Kind;
    auto num = [](int v) { return std::to_string(v); };
    switch (spec.kind) {
    case K::Complete: return spec.a < 10 ? "K" + num(spec.a) : "K(" + num(spec.a) + ")";
    case K::CompleteBipartite:
        return spec.a < 10 && spec.b < 10 ? "K" + num(spec.a) + num(spec.b) : "K" + num(spec.a) + "," + num(spec.b);
    case K::Path: return "P" + num(spec.a);
    case K::Cycle: return "C" + num(spec.a);
    case K::Star: return "S" + num(spec.a);
    case K::Matching: return num(spec.a) + "K2";
    case K::Empty: return num(spec.a) + "K1";
    case K::Paw: return "PAW";
    case K::Bull: return "BULL";
    case K::Union: {
        std::string s;
        for (const auto & p : spec.parts)
            s += (s.empty() ? "" : "+") + to_string(p);
        return s;
    }
    }
    return "?";
}

namespace detail {

    inline auto parse_uint(std::string_view & s) -> int
    {
        if (s.empty() || ! std::isdigit(static_cast<unsigned char>(s.front())))
            throw SpecError("expected a number");
        long v = 0;
        while (! s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
            v = v * 10 + (s.front() - '0');
            if (v > 100000)
                throw SpecError("number too large");
            s.remove_prefix(1);
        }
        return static_cast<int>(v);
    }

    inline auto parse_atom(std::string_view s) -> GraphSpec
    {
        if (s == "PAW")
            return GraphSpec::paw();
        if (s == "BULL")
            return GraphSpec::bull();
        if (s.empty())
            throw SpecError("empty pattern term");
        char head = s.front();
        s.remove_prefix(1);
        GraphSpec result;
        if (head == 'K') {
            if (! s.empty() && s.front() == '(') {
                s.remove_prefix(1);
                int n = parse_uint(s);
                if (s != ")")
                    throw SpecError("expected ')'");
                return GraphSpec::complete(n);
            }
            auto digits = s;
            int first = parse_uint(s);
            if (! s.empty() && s.front() == ',') {
                s.remove_prefix(1);
                int q = parse_uint(s);
                if (! s.empty())
                    throw SpecError("trailing characters");
                return GraphSpec::bipartite(first, q);
            }
            if (! s.empty())
                throw SpecError("trailing characters");
            auto len = digits.size();
            if (len == 1)
                return GraphSpec::complete(first);
            if (len == 2)
                return GraphSpec::bipartite(digits[0] - '0', digits[1] - '0');
            throw SpecError("ambiguous K term; use K(n) or Kp,q");
        }
        int v = parse_uint(s);
        if (! s.empty())
            throw SpecError("trailing characters");
        switch (head) {
        case 'P':
            if (v < 1)
                throw SpecError("P needs at least one vertex");
            return GraphSpec::path(v);
        case 'C':
            if (v < 3)
                throw SpecError("C needs at least three vertices");
            return GraphSpec::cycle(v);
        case 'S': return GraphSpec::star(v);
        case 'E': return GraphSpec::empty(v);
        case 'M': return GraphSpec::matching(v);
        default: throw SpecError(std::string("unknown pattern head '") + head + "'");
        }
    }

    inline auto parse_term(std::string_view s) -> GraphSpec
    {
        int count = 1;
        if (! s.empty() && std::isdigit(static_cast<unsigned char>(s.front())))
            count = parse_uint(s);
        if (count < 1)
            throw SpecError("copy count must be positive");
        auto atom = parse_atom(s);
        if (count == 1)
            return atom;
        if (atom.kind == GraphSpec::Kind::Complete && atom.a == 2)
            return GraphSpec::matching(count);
        if (atom.kind == GraphSpec::Kind::Complete && atom.a == 1)
            return GraphSpec::empty(count);
        return GraphSpec::disjoint(std::vector<GraphSpec>(static_cast<std::size_t>(count), atom));
    }

} // namespace detail

inline auto parse_spec(std::string_view text) -> GraphSpec
{
    std::string upper;
    for (char c : text)
        if (! std::isspace(static_cast<unsigned char>(c)))
            upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "STAR" || upper.empty())
        throw SpecError("empty pattern");
    // STAR<s> is an alias of S<s>
    std::string normalised;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (upper.compare(i, 4, "STAR") == 0) {
            normalised.push_back('S');
            i += 3;
        }
        else
            normalised.push_back(upper[i]);
    }
    std::vector<GraphSpec> terms;
    std::string_view rest(normalised);
    while (true) {
        auto plus = rest.find('+');
        terms.push_back(detail::parse_term(rest.substr(0, plus)));
        if (plus == std::string_view::npos)
            break;
        rest.remove_prefix(plus + 1);
    }
    if (terms.size() == 1)
        return terms.front();
    return GraphSpec::disjoint(std::move(terms));
}

inline auto parse_pattern(std::string_view text) -> Graph { return build(parse_spec(text)); }

} // namespace singram
