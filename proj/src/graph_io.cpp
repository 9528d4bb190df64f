#include "holescope/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

namespace holescope {

namespace {

constexpr int bias = 63;

int decode_char(char c)
{
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw FormatError("graph6: byte " + std::to_string(u) + " outside printable range 63..126");
    return u - bias;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("graph6: empty input");
    if (text.starts_with(">>"))
        throw FormatError("graph6: header form (>>graph6<<) is not accepted");
    if (text.front() == ':')
        throw FormatError("graph6: sparse6 input is not supported");
    if (text.front() == '&')
        throw FormatError("graph6: digraph6 input is not supported");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = decode_char(text[0]);
        pos = 1;
    }
    else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
        if (text.size() < 8)
            throw FormatError("graph6: truncated 8-byte length header");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | decode_char(text[i]);
        pos = 8;
    }
    else {
        if (text.size() < 4)
            throw FormatError("graph6: truncated 4-byte length header");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | decode_char(text[i]);
        pos = 4;
        if (n < 63)
            throw FormatError("graph6: non-canonical length header");
    }
    if (n > (std::int64_t{1} << 24))
        throw FormatError("graph6: vertex count too large");

    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t expected_bytes = (pairs + 5) / 6;
    if (text.size() - pos != expected_bytes)
        throw FormatError("graph6: expected " + std::to_string(expected_bytes) + " edge bytes, found " +
                          std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int chunk = decode_char(text[pos + bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (bit % 6 != 0) {
        int chunk = decode_char(text[pos + bit / 6]);
        if (chunk & ((1 << (6 - bit % 6)) - 1))
            throw FormatError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g)
{
    std::string out;
    const std::int64_t n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + bias));
    }
    else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    }
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    }

    int chunk = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + bias));
                chunk = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + bias));
    return out;
}

namespace {

long parse_int(std::string_view token, int line_no)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw FormatError("edge list line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<long> declared;
    long max_id = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty() || tokens[0].starts_with('#'))
            continue;
        if (tokens[0] == "n") {
            if (tokens.size() != 2)
                throw FormatError("edge list line " + std::to_string(line_no) + ": expected 'n <k>'");
            declared = parse_int(tokens[1], line_no);
            if (*declared < 0)
                throw FormatError("edge list: negative vertex count");
            continue;
        }
        if (tokens.size() != 2)
            throw FormatError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        long u = parse_int(tokens[0], line_no), v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0)
            throw FormatError("edge list line " + std::to_string(line_no) + ": negative vertex id");
        if (u == v)
            throw FormatError("edge list line " + std::to_string(line_no) + ": loop " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    long n = declared ? *declared : max_id + 1;
    if (max_id >= n)
        throw FormatError("edge list: vertex id " + std::to_string(max_id) + " exceeds declared count " +
                          std::to_string(n));
    return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace holescope
