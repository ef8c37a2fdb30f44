#pragma once

#include "singram/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singram {

class Graph6Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline auto g6_encode(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    }
    else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

inline auto g6_decode(std::string_view text) -> Graph
{
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: character outside 63..126");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    }
    else if (text.size() >= 2 && text[1] == 126) {
        if (text.size() < 8)
            throw Graph6Error("graph6: truncated 8-byte header");
        for (std::size_t k = 2; k < 8; ++k)
            n = (n << 6) | (text[k] - 63);
        pos = 8;
    }
    else {
        if (text.size() < 4)
            throw Graph6Error("graph6: truncated 4-byte header");
        for (std::size_t k = 1; k < 4; ++k)
            n = (n << 6) | (text[k] - 63);
        if (n <= 62)
            throw Graph6Error("graph6: non-minimal header");
        pos = 4;
    }
    if (n > max_order)
        throw OrderOverflow("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(max_order));

    const long bits = n * (n - 1) / 2;
    const long expected = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != expected)
        throw Graph6Error("graph6: length mismatch for n=" + std::to_string(n));

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = text.back() - 63;
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1))
            throw Graph6Error("graph6: nonzero padding bits");
    }
    return g;
}

/// One graph per line; blank lines skipped.
inline auto read_g6_stream(std::istream & in) -> std::vector<Graph>
{
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        graphs.push_back(g6_decode(line));
    }
    return graphs;
}

inline auto read_g6_file(const std::string & path) -> std::vector<Graph>
{
    std::ifstream in(path);
    if (! in)
        throw Graph6Error("cannot open " + path);
    return read_g6_stream(in);
}

inline auto write_g6_stream(std::ostream & out, const std::vector<Graph> & graphs) -> void
{
    for (const auto & g : graphs)
        out << g6_encode(g) << '\n';
}

} // namespace singram
