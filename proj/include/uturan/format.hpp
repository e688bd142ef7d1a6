#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uturan/hypergraph.hpp"

namespace uturan {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int(std::string_view tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

// Yields (line_number, content) for non-blank, non-comment lines.
inline std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#')
            out.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

} // namespace detail

/// Parses the hypergraph text format: a header line "n m" followed by m lines
/// "a b c". Vertex order within an edge line is free; '#' starts a comment
/// line. Errors are reported with 1-based line numbers.
inline Hypergraph3 parse_hypergraph(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
    auto [hline, header] = lines[0];
    auto toks = detail::split_ws(header);
    if (toks.size() != 2)
        throw ParseError(hline, "malformed header, expected \"n m\"");
    int n = detail::parse_int(toks[0], hline);
    int m = detail::parse_int(toks[1], hline);
    if (n < 0 || m < 0) throw ParseError(hline, "negative count in header");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError(hline, "header announces " + std::to_string(m) + " edges but " +
                                    std::to_string(lines.size() - 1) + " edge lines follow");

    std::vector<Triple> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        auto [lineno, line] = lines[i];
        auto parts = detail::split_ws(line);
        if (parts.size() != 3)
            throw ParseError(lineno, "expected 3 vertices on an edge line");
        Triple t{detail::parse_int(parts[0], lineno), detail::parse_int(parts[1], lineno),
                 detail::parse_int(parts[2], lineno)};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw ParseError(lineno, "repeated vertex inside an edge");
        if (t[0] < 0 || t[2] >= n)
            throw ParseError(lineno, "vertex index out of range 0.." + std::to_string(n - 1));
        if (std::find(edges.begin(), edges.end(), t) != edges.end())
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(t);
    }
    return Hypergraph3::make(n, std::move(edges));
}

/// Inverse of parse_hypergraph; edges emitted sorted lexicographically.
/// No trailing newline.
inline std::string serialize_hypergraph(const Hypergraph3& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.edges.size();
    for (const Triple& t : h.edges)
        os << '\n' << t[0] << ' ' << t[1] << ' ' << t[2];
    return os.str();
}

} // namespace uturan
