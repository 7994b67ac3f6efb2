#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "membership.hpp"
#include "pattern.hpp"
#include "substitution.hpp"

namespace arraypat {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

inline bool blank(std::string_view line) { return split_tokens(line).empty(); }

} // namespace detail

/// Grid text format: one row per line, cells separated by spaces or tabs,
/// equal cell counts per line, trailing blank lines ignored. Empty input
/// is rejected unless allow_empty is set (the empty grid is a legitimate
/// algebraic value but rarely a useful input).
inline grid parse_grid(std::string_view text, bool allow_empty = false) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && detail::blank(lines.back())) lines.pop_back();
    std::vector<token> cells;
    std::size_t rows = 0, cols = 0;
    for (auto line : lines) {
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) throw format_error("blank line inside a grid");
        if (rows == 0) cols = tokens.size();
        else if (tokens.size() != cols)
            throw format_error("ragged grid: row " + std::to_string(rows + 1) + " has " +
                               std::to_string(tokens.size()) + " cells, expected " +
                               std::to_string(cols));
        for (auto t : tokens) cells.emplace_back(t);
        ++rows;
    }
    if (rows == 0) {
        if (allow_empty) return grid{};
        throw format_error("empty grid input");
    }
    return grid(rows, cols, std::move(cells));
}

inline std::string serialize_grid(const grid& g) {
    std::string out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) out += ' ';
            out += g(i, j);
        }
        out += '\n';
    }
    return out;
}

/// Single-line rendering, rows separated by " / ". Used in reports.
template <class Cell>
std::string inline_grid(const basic_grid<Cell>& g, std::string (*show)(const Cell&)) {
    std::string out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (i) out += " / ";
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) out += ' ';
            out += show(g(i, j));
        }
    }
    return out;
}

inline std::string inline_grid(const grid& g) {
    return inline_grid<token>(g, +[](const token& t) { return t; });
}

inline std::string inline_pattern(const pattern& p) {
    return inline_grid<var_id>(p.vars(), +[](const var_id& v) { return var_name(v); });
}

struct parsed_pattern {
    pattern value;
    bool was_canonical; // callers may warn when the input needed renaming
};

/// Pattern text format: the grid format with every cell matching
/// x<positive-integer>. Input is canonicalized on load.
inline parsed_pattern parse_pattern(std::string_view text) {
    auto lines = detail::split_lines(text);
    while (!lines.empty() && detail::blank(lines.back())) lines.pop_back();
    std::vector<var_id> cells;
    std::size_t rows = 0, cols = 0;
    for (auto line : lines) {
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) throw format_error("blank line inside a pattern");
        if (rows == 0) cols = tokens.size();
        else if (tokens.size() != cols) throw format_error("ragged pattern");
        for (auto t : tokens) {
            auto v = parse_var_name(t);
            if (!v) throw format_error("pattern cell '" + std::string(t) +
                                       "' is not of the form x<positive-integer>");
            cells.push_back(*v);
        }
        ++rows;
    }
    if (rows == 0) throw format_error("empty pattern input");
    var_grid raw(rows, cols, std::move(cells));
    return parsed_pattern{pattern::canonical(raw), is_canonical(raw)};
}

inline std::string serialize_pattern(const pattern& p) {
    std::string out;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (j) out += ' ';
            out += var_name(p.at(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Substitution text format: one binding per line,
///   x<k> = <row> / <row> / ...
/// with cells space-separated inside a row.
inline substitution parse_substitution(std::string_view text) {
    substitution h;
    for (auto line : detail::split_lines(text)) {
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 3 || tokens[1] != "=")
            throw format_error("substitution line must look like 'x1 = a b / c d'");
        auto x = parse_var_name(tokens[0]);
        if (!x) throw format_error("substitution binds '" + std::string(tokens[0]) +
                                   "', which is not a variable");
        std::vector<token> cells;
        std::size_t rows = 0, cols = 0, run = 0;
        auto close_row = [&] {
            if (run == 0) throw format_error("empty row in substitution image");
            if (rows == 0) cols = run;
            else if (run != cols) throw format_error("ragged substitution image");
            ++rows;
            run = 0;
        };
        for (std::size_t k = 2; k < tokens.size(); ++k) {
            if (tokens[k] == "/") close_row();
            else {
                cells.emplace_back(tokens[k]);
                ++run;
            }
        }
        close_row();
        h.set(*x, grid(rows, cols, std::move(cells)));
    }
    return h;
}

inline std::string serialize_substitution(const substitution& h) {
    std::string out;
    for (const auto& [x, g] : h.images()) {
        out += var_name(x) + " = " + inline_grid(g) + "\n";
    }
    return out;
}

/// Witness block: the substitution format preceded by a mode line.
inline std::string serialize_witness(mode z, const substitution& h) {
    return "mode: " + to_string(z) + "\n" + serialize_substitution(h);
}

} // namespace arraypat
