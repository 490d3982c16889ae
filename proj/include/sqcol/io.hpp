#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sqcol/coloring.hpp"
#include "sqcol/plane_graph.hpp"

namespace sqcol {

namespace detail {

struct Line {
    int number;
    std::string text;
};

// Non-empty lines with '#' comments stripped.
inline std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        out.push_back({number, raw});
    }
    return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string& what)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

inline std::vector<long> parse_ints(const Line& line, std::string_view text)
{
    std::vector<long> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(tok, &used);
        } catch (const std::exception&) {
            parse_fail(line.number, "expected integer, got '" + tok + "'");
        }
        if (used != tok.size())
            parse_fail(line.number, "expected integer, got '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

inline std::pair<int, int> parse_header(const std::vector<Line>& lines)
{
    if (lines.empty())
        throw Error(Errc::ParseError, "empty input: missing 'n m' header", 0);
    const auto head = parse_ints(lines.front(), lines.front().text);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0)
        parse_fail(lines.front().number, "header must be 'n m'");
    return {static_cast<int>(head[0]), static_cast<int>(head[1])};
}

} // namespace detail

/// Canonical graph text: "n m", then one line "v: a b c" per vertex listing
/// its clockwise rotation. Blank lines and '#' comments are ignored.
inline PlaneGraph read_graph(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    const auto [n, m] = detail::parse_header(lines);
    if (static_cast<int>(lines.size()) - 1 != n)
        detail::parse_fail(lines.back().number, "expected " + std::to_string(n) + " rotation lines, found " +
                                                    std::to_string(lines.size() - 1));
    std::vector<PlaneGraph::Rotation> rot(n);
    std::vector<char> seen(n, 0);
    long darts = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto colon = line.text.find(':');
        if (colon == std::string::npos)
            detail::parse_fail(line.number, "expected 'v: neighbors...'");
        const auto id = detail::parse_ints(line, std::string_view(line.text).substr(0, colon));
        if (id.size() != 1 || id[0] < 0 || id[0] >= n)
            detail::parse_fail(line.number, "bad vertex id");
        if (seen[id[0]])
            detail::parse_fail(line.number, "vertex " + std::to_string(id[0]) + " listed twice");
        seen[id[0]] = 1;
        for (long u : detail::parse_ints(line, std::string_view(line.text).substr(colon + 1))) {
            if (u < 0 || u >= n)
                detail::parse_fail(line.number, "neighbor " + std::to_string(u) + " out of range");
            rot[id[0]].push_back(static_cast<Vertex>(u));
            ++darts;
        }
    }
    if (darts != 2L * m)
        detail::parse_fail(lines.front().number, "header declares " + std::to_string(m) + " edges but rotations hold " +
                                                     std::to_string(darts) + " darts");
    return PlaneGraph::build(std::move(rot));
}

inline std::string write_graph(const PlaneGraph& g)
{
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << v << ':';
        for (Vertex u : g.rotation(v))
            out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

/// Plain edge list "n m" followed by m lines "u v". Carries no embedding, so
/// it only feeds the exact oracle.
inline SimpleGraph read_edge_list(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    const auto [n, m] = detail::parse_header(lines);
    if (static_cast<int>(lines.size()) - 1 != m)
        detail::parse_fail(lines.back().number, "expected " + std::to_string(m) + " edge lines");
    SimpleGraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto e = detail::parse_ints(lines[i], lines[i].text);
        if (e.size() != 2 || e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
            detail::parse_fail(lines[i].number, "expected 'u v' with ids below " + std::to_string(n));
        if (e[0] == e[1])
            detail::parse_fail(lines[i].number, "self-loop");
        g.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
    }
    return g;
}

/// True when the text looks like the rotation format (a ':' after the header).
inline bool looks_like_rotation_format(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    return lines.size() < 2 || lines[1].text.find(':') != std::string::npos;
}

/// Coloring text: one line "v color" per vertex.
inline Coloring read_coloring(std::string_view text, int num_vertices)
{
    Coloring c(num_vertices, 0);
    int max_color = -1;
    for (const auto& line : detail::content_lines(text)) {
        const auto vals = detail::parse_ints(line, line.text);
        if (vals.size() != 2 || vals[0] < 0 || vals[0] >= num_vertices || vals[1] < 0)
            detail::parse_fail(line.number, "expected 'v color'");
        if (c.assigned(static_cast<Vertex>(vals[0])))
            detail::parse_fail(line.number, "vertex " + std::to_string(vals[0]) + " colored twice");
        c.set(static_cast<Vertex>(vals[0]), static_cast<int>(vals[1]));
        max_color = std::max(max_color, static_cast<int>(vals[1]));
    }
    c.palette_size = max_color + 1;
    return c;
}

inline std::string write_coloring(const Coloring& c)
{
    std::ostringstream out;
    for (Vertex v = 0; v < c.size(); ++v)
        out << v << ' ' << c[v] << '\n';
    return out.str();
}

} // namespace sqcol
