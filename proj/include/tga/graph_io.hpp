#pragma once

// Line-oriented graph text format:
//
//   g <n> <k>
//   c <vertex> <color> ... <color>     (omitted vertex: empty color set)
//   e <u> <v>
//
// Vertices are 0-based, colors 1-based. Blank lines and '#' comments are ignored.

#include "tga/error.hpp"
#include "tga/graph.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tga {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline long long parse_integer(const Token& t, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected an integer, found '" + std::string(t.text) + "'", line, t.column);
    return v;
}

/// Calls fn(line_number, tokens) for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto tokens = split_line(text.substr(pos, end - pos));
        if (!tokens.empty()) fn(line_no, tokens);
        pos = end + 1;
    }
}

}  // namespace detail

inline ColoredGraph read_graph(std::string_view text) {
    bool have_header = false;
    ColoredGraph g;
    detail::for_each_line(text, [&](std::size_t line, const std::vector<detail::Token>& t) {
        auto vertex = [&](const detail::Token& tok) {
            long long v = detail::parse_integer(tok, line);
            if (v < 0 || static_cast<std::size_t>(v) >= g.n())
                throw ParseError("vertex out of range", line, tok.column);
            return static_cast<Vertex>(v);
        };
        if (!have_header) {
            if (t[0].text != "g" || t.size() != 3) throw ParseError("expected 'g <n> <k>' header", line, t[0].column);
            long long n = detail::parse_integer(t[1], line);
            long long k = detail::parse_integer(t[2], line);
            if (n < 0) throw ParseError("negative vertex count", line, t[1].column);
            if (k < 0 || k > kMaxColors) throw ParseError("color count out of range", line, t[2].column);
            g = ColoredGraph(static_cast<int>(k), static_cast<std::size_t>(n));
            have_header = true;
            return;
        }
        if (t[0].text == "c") {
            if (t.size() < 2) throw ParseError("expected 'c <vertex> <colors...>'", line, t[0].column);
            Vertex v = vertex(t[1]);
            ColorSet c;
            for (std::size_t i = 2; i < t.size(); ++i) {
                long long color = detail::parse_integer(t[i], line);
                if (color < 1 || color > g.k()) throw ParseError("color out of range", line, t[i].column);
                c.insert(static_cast<int>(color));
            }
            g.set_colors(v, g.colors(v) | c);
        } else if (t[0].text == "e") {
            if (t.size() != 3) throw ParseError("expected 'e <u> <v>'", line, t[0].column);
            Vertex u = vertex(t[1]);
            Vertex v = vertex(t[2]);
            if (u == v) throw ParseError("self-loop", line, t[2].column);
            if (!g.add_edge(u, v)) throw ParseError("duplicate edge", line, t[0].column);
        } else {
            throw ParseError("unknown line kind '" + std::string(t[0].text) + "'", line, t[0].column);
        }
    });
    if (!have_header) throw ParseError("missing 'g <n> <k>' header", 1, 1);
    return g;
}

inline std::string write_graph(const ColoredGraph& g) {
    std::ostringstream os;
    os << "g " << g.n() << ' ' << g.k() << '\n';
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.colors(v).empty()) continue;
        os << "c " << v;
        for (int c : g.colors(v).colors()) os << ' ' << c;
        os << '\n';
    }
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace tga
