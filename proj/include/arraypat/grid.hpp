#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace arraypat {

/// Rectangular array over an arbitrary cell type, stored row-major.
/// The empty grid (0x0) is the only degenerate value: rows() == 0 iff
/// cols() == 0. Grids are plain values; all operations on them are pure.
template <class Cell>
class basic_grid {
public:
    basic_grid() = default;

    basic_grid(std::size_t rows, std::size_t cols, std::vector<Cell> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ == 0 || cols_ == 0)
            throw format_error("grid dimensions must be positive (default-construct the empty grid)");
        if (cells_.size() != rows_ * cols_)
            throw format_error("cell count does not match grid dimensions");
    }

    static basic_grid filled(std::size_t rows, std::size_t cols, const Cell& value) {
        return basic_grid(rows, cols, std::vector<Cell>(rows * cols, value));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t area() const noexcept { return rows_ * cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    // 0-based access.
    const Cell& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    Cell& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

    std::span<const Cell> row(std::size_t i) const { return {cells_.data() + i * cols_, cols_}; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }

    friend bool operator==(const basic_grid&, const basic_grid&) = default;
    friend auto operator<=>(const basic_grid&, const basic_grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cell> cells_;
};

/// Symbols are arbitrary non-whitespace tokens, not single characters.
using token = std::string;
using grid = basic_grid<token>;

/// Result of a partial concatenation: a grid, or the absorbing value
/// "undefined" on dimension mismatch. Undefined is a value, never an error.
template <class Cell>
using concat_result = std::optional<basic_grid<Cell>>;

inline constexpr std::nullopt_t undefined = std::nullopt;

/// Stacks a above b. Undefined when the column counts differ; the empty
/// grid is a two-sided identity.
template <class Cell>
concat_result<Cell> row_concat(const basic_grid<Cell>& a, const basic_grid<Cell>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.cols() != b.cols()) return undefined;
    std::vector<Cell> cells;
    cells.reserve(a.area() + b.area());
    cells.insert(cells.end(), a.cells().begin(), a.cells().end());
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return basic_grid<Cell>(a.rows() + b.rows(), a.cols(), std::move(cells));
}

/// Places a beside b. Undefined when the row counts differ.
template <class Cell>
concat_result<Cell> col_concat(const basic_grid<Cell>& a, const basic_grid<Cell>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.rows() != b.rows()) return undefined;
    std::vector<Cell> cells;
    cells.reserve(a.area() + b.area());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cells.insert(cells.end(), a.row(i).begin(), a.row(i).end());
        cells.insert(cells.end(), b.row(i).begin(), b.row(i).end());
    }
    return basic_grid<Cell>(a.rows(), a.cols() + b.cols(), std::move(cells));
}

// Absorbing overloads so chained concatenations propagate undefined.
template <class Cell>
concat_result<Cell> row_concat(const concat_result<Cell>& a, const concat_result<Cell>& b) {
    if (!a || !b) return undefined;
    return row_concat(*a, *b);
}

template <class Cell>
concat_result<Cell> col_concat(const concat_result<Cell>& a, const concat_result<Cell>& b) {
    if (!a || !b) return undefined;
    return col_concat(*a, *b);
}

/// The eight geometric operations on grids (identity omitted). h_flip
/// reflects along the horizontal axis (reverses row order), v_flip along
/// the vertical axis (reverses each row).
enum class geom_op { transpose, h_flip, v_flip, right_turn, left_turn, half_turn };

template <class Cell>
basic_grid<Cell> transform(const basic_grid<Cell>& a, geom_op op) {
    if (a.empty()) return a;
    const std::size_t m = a.rows(), n = a.cols();
    const bool swaps = op == geom_op::transpose || op == geom_op::right_turn || op == geom_op::left_turn;
    const std::size_t rm = swaps ? n : m;
    const std::size_t rn = swaps ? m : n;
    std::vector<Cell> cells(a.area());
    for (std::size_t i = 0; i < rm; ++i) {
        for (std::size_t j = 0; j < rn; ++j) {
            std::size_t si = 0, sj = 0;
            switch (op) {
            case geom_op::transpose:  si = j;          sj = i;          break;
            case geom_op::h_flip:     si = m - 1 - i;  sj = j;          break;
            case geom_op::v_flip:     si = i;          sj = n - 1 - j;  break;
            case geom_op::right_turn: si = m - 1 - j;  sj = i;          break;
            case geom_op::left_turn:  si = j;          sj = n - 1 - i;  break;
            case geom_op::half_turn:  si = m - 1 - i;  sj = n - 1 - j;  break;
            }
            cells[i * rn + j] = a(si, sj);
        }
    }
    return basic_grid<Cell>(rm, rn, std::move(cells));
}

/// The height x width block of a anchored at (top, left). Coordinates are
/// 1-based, matching the usual W[i,j] convention for arrays.
template <class Cell>
basic_grid<Cell> subgrid(const basic_grid<Cell>& a, std::size_t top, std::size_t left,
                         std::size_t height, std::size_t width) {
    if (top < 1 || left < 1 || height < 1 || width < 1 ||
        top + height - 1 > a.rows() || left + width - 1 > a.cols())
        throw range_error("subgrid request out of range");
    std::vector<Cell> cells;
    cells.reserve(height * width);
    for (std::size_t i = 0; i < height; ++i)
        for (std::size_t j = 0; j < width; ++j)
            cells.push_back(a(top - 1 + i, left - 1 + j));
    return basic_grid<Cell>(height, width, std::move(cells));
}

/// Exchanges the two symbols of a binary alphabet in every cell.
template <class Cell>
basic_grid<Cell> conjugate(const basic_grid<Cell>& a, const std::array<Cell, 2>& alphabet) {
    basic_grid<Cell> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == alphabet[0]) out(i, j) = alphabet[1];
            else if (a(i, j) == alphabet[1]) out(i, j) = alphabet[0];
            else throw domain_error("conjugate: cell outside the two-token alphabet");
        }
    }
    return out;
}

/// Cell-wise renaming; every token occurring in a must be mapped.
template <class Cell>
basic_grid<Cell> project(const basic_grid<Cell>& a, const std::map<Cell, Cell>& map) {
    basic_grid<Cell> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto it = map.find(a(i, j));
            if (it == map.end()) throw domain_error("project: token without an image");
            out(i, j) = it->second;
        }
    }
    return out;
}

} // namespace arraypat
