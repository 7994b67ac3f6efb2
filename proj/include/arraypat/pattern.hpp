#pragma once

#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"

namespace arraypat {

using var_id = int; // always >= 1
using var_grid = basic_grid<var_id>;

inline std::string var_name(var_id x) { return "x" + std::to_string(x); }

inline std::optional<var_id> parse_var_name(std::string_view s) {
    if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return std::nullopt;
    var_id value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) return std::nullopt;
    return value;
}

/// True when, reading row-major, the k-th distinct variable of g is k.
inline bool is_canonical(const var_grid& g) {
    var_id next = 1;
    std::map<var_id, var_id> seen;
    for (const var_id v : g.cells()) {
        auto [it, inserted] = seen.emplace(v, next);
        if (inserted) {
            if (v != next) return false;
            ++next;
        }
    }
    return true;
}

/// An array pattern: a non-empty rectangular grid of variables kept in
/// canonical form (row-major first-occurrence numbering). Canonical form
/// turns renaming equivalence into plain equality.
class pattern {
public:
    static pattern canonical(const var_grid& raw) {
        if (raw.empty()) throw format_error("patterns must be non-empty");
        std::map<var_id, var_id> renaming;
        std::vector<var_id> cells;
        cells.reserve(raw.area());
        var_id next = 1;
        for (const var_id v : raw.cells()) {
            if (v < 1) throw format_error("variable identifiers must be positive");
            auto [it, inserted] = renaming.emplace(v, next);
            if (inserted) ++next;
            cells.push_back(it->second);
        }
        return pattern(var_grid(raw.rows(), raw.cols(), std::move(cells)), next - 1);
    }

    std::size_t rows() const noexcept { return vars_.rows(); }
    std::size_t cols() const noexcept { return vars_.cols(); }
    std::size_t area() const noexcept { return vars_.area(); }
    int var_count() const noexcept { return var_count_; }

    // 0-based access.
    var_id at(std::size_t i, std::size_t j) const { return vars_(i, j); }
    const var_grid& vars() const noexcept { return vars_; }

    friend bool operator==(const pattern&, const pattern&) = default;
    friend auto operator<=>(const pattern&, const pattern&) = default;

private:
    pattern(var_grid g, int count) : vars_(std::move(g)), var_count_(count) {}

    var_grid vars_;
    int var_count_ = 0;
};

/// Equality of dimensions and position-coincidence relations.
inline bool equivalent(const pattern& p, const pattern& q) { return p == q; }

inline pattern transform_pattern(const pattern& p, geom_op op) {
    return pattern::canonical(transform(p.vars(), op));
}

namespace detail {

inline void grow_restricted_sequences(std::vector<var_id>& prefix, var_id used, std::size_t n,
                                      std::vector<pattern>& out, std::size_t rows, std::size_t cols) {
    if (prefix.size() == n) {
        out.push_back(pattern::canonical(var_grid(rows, cols, prefix)));
        return;
    }
    for (var_id v = 1; v <= used + 1; ++v) {
        prefix.push_back(v);
        grow_restricted_sequences(prefix, std::max(used, v), n, out, rows, cols);
        prefix.pop_back();
    }
}

} // namespace detail

/// All canonical patterns of the given shape, one per renaming class, in
/// lexicographic order of their variable sequences. The count is the Bell
/// number of rows*cols, so shapes beyond max_cells are refused.
inline std::vector<pattern> enumerate_patterns(std::size_t rows, std::size_t cols,
                                               std::size_t max_cells = 12) {
    if (rows < 1 || cols < 1) throw format_error("pattern shape must be positive");
    if (rows * cols > max_cells)
        throw capacity_error("pattern enumeration limited to " + std::to_string(max_cells) + " cells");
    std::vector<pattern> out;
    std::vector<var_id> prefix;
    prefix.reserve(rows * cols);
    detail::grow_restricted_sequences(prefix, 0, rows * cols, out, rows, cols);
    return out;
}

} // namespace arraypat
