#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "pattern.hpp"
#include "substitution.hpp"

namespace arraypat {

/// Which image relation defines the language: morphic (h), proper (p),
/// column-row (r), row-column (c), or either of the last two (rc).
enum class mode { h, p, r, c, rc };

inline std::string to_string(mode z) {
    switch (z) {
    case mode::h: return "h";
    case mode::p: return "p";
    case mode::r: return "r";
    case mode::c: return "c";
    case mode::rc: return "rc";
    }
    return "?";
}

inline std::optional<mode> parse_mode(std::string_view s) {
    if (s == "h") return mode::h;
    if (s == "p") return mode::p;
    if (s == "r") return mode::r;
    if (s == "c") return mode::c;
    if (s == "rc") return mode::rc;
    return std::nullopt;
}

inline constexpr mode all_modes[] = {mode::h, mode::p, mode::r, mode::c, mode::rc};

/// Checks a claimed witness directly against the image definitions.
inline bool verify_witness(const grid& w, const pattern& p, mode z, const substitution& h) {
    for (var_id x : detail::distinct_vars(p.vars()))
        if (!h.contains(x))
            throw precondition_error("witness has no image for " + var_name(x));
    switch (z) {
    case mode::h: {
        if (!uniform_dims(h, p)) return false;
        return apply_morphism(h, p) == w;
    }
    case mode::r: {
        concat_result<token> out = assemble_cr(h, p);
        return out && *out == w;
    }
    case mode::c: {
        concat_result<token> out = assemble_rc(h, p);
        return out && *out == w;
    }
    case mode::p: {
        concat_result<token> cr = assemble_cr(h, p);
        concat_result<token> rc = assemble_rc(h, p);
        return cr && rc && *cr == w && *rc == w;
    }
    case mode::rc:
        return verify_witness(w, p, mode::r, h) || verify_witness(w, p, mode::c, h);
    }
    return false;
}

namespace detail {

inline bool blocks_equal(const grid& w, std::size_t r1, std::size_t c1, std::size_t r2,
                         std::size_t c2, std::size_t h, std::size_t wd) {
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < wd; ++j)
            if (w(r1 + i, c1 + j) != w(r2 + i, c2 + j)) return false;
    return true;
}

// Union-find over a fixed handful of indices.
struct dsu {
    std::vector<int> parent;
    explicit dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

// Rows sharing a variable must receive equal strip heights.
inline dsu row_classes(const var_grid& p) {
    dsu d(p.rows());
    std::map<var_id, int> first_row;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            auto [it, inserted] = first_row.emplace(p(i, j), static_cast<int>(i));
            if (!inserted) d.merge(static_cast<int>(i), it->second);
        }
    return d;
}

inline dsu col_classes(const var_grid& p) {
    dsu d(p.cols());
    std::map<var_id, int> first_col;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            auto [it, inserted] = first_col.emplace(p(i, j), static_cast<int>(j));
            if (!inserted) d.merge(static_cast<int>(j), it->second);
        }
    return d;
}

// Enumerates per-index sizes (heights of pattern rows / widths of pattern
// columns) summing exactly to total, equal inside each class, smaller
// candidates first, indices in order. Calls sink(sizes); sink returns true
// to stop the search.
template <class Sink>
bool for_each_class_composition(dsu& classes, std::size_t count, std::size_t total, Sink&& sink) {
    std::vector<std::size_t> sizes(count, 0);
    auto rec = [&](auto&& self, std::size_t idx, std::size_t sum) -> bool {
        if (idx == count)
            return sum == total && sink(static_cast<const std::vector<std::size_t>&>(sizes));
        const int rep = classes.find(static_cast<int>(idx));
        // Lower bound for what the remaining indices must still consume.
        auto remaining_min = [&](std::size_t from, std::size_t pending_class, std::size_t pending_value) {
            std::size_t acc = 0;
            for (std::size_t k = from; k < count; ++k) {
                const int r = classes.find(static_cast<int>(k));
                if (sizes[r] > 0) acc += sizes[r];
                else if (static_cast<std::size_t>(r) == pending_class) acc += pending_value;
                else acc += 1;
            }
            return acc;
        };
        if (sizes[rep] > 0) {
            const std::size_t h = sizes[rep];
            if (sum + h + remaining_min(idx + 1, count, 0) > total) return false;
            return self(self, idx + 1, sum + h);
        }
        for (std::size_t h = 1; sum + h + remaining_min(idx + 1, rep, h) <= total; ++h) {
            sizes[rep] = h;
            if (self(self, idx + 1, sum + h)) return true;
            sizes[rep] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

// Offsets of each pattern-row strip inside w given per-row heights.
inline std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& sizes, dsu& classes) {
    std::vector<std::size_t> off(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        off[i + 1] = off[i] + sizes[classes.find(static_cast<int>(i))];
    return off;
}

// --- h: the single candidate uniform tiling --------------------------------

inline std::optional<substitution> decide_h(const grid& w, const var_grid& p) {
    const std::size_t m0 = p.rows(), n0 = p.cols();
    if (w.rows() % m0 != 0 || w.cols() % n0 != 0) return std::nullopt;
    const std::size_t bh = w.rows() / m0, bw = w.cols() / n0;
    std::map<var_id, std::pair<std::size_t, std::size_t>> first;
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t j = 0; j < n0; ++j) {
            auto [it, inserted] = first.emplace(p(i, j), std::make_pair(i * bh, j * bw));
            if (!inserted &&
                !blocks_equal(w, it->second.first, it->second.second, i * bh, j * bw, bh, bw))
                return std::nullopt;
        }
    substitution h;
    for (const auto& [x, anchor] : first)
        h.set(x, subgrid(w, anchor.first + 1, anchor.second + 1, bh, bw));
    return h;
}

// --- p: one height per pattern row, one width per pattern column -----------

inline std::optional<substitution> decide_p(const grid& w, const var_grid& p) {
    const std::size_t m0 = p.rows(), n0 = p.cols();
    if (w.rows() < m0 || w.cols() < n0) return std::nullopt;
    dsu rows_d = row_classes(p);
    dsu cols_d = col_classes(p);
    std::optional<substitution> found;
    for_each_class_composition(rows_d, m0, w.rows(), [&](const std::vector<std::size_t>& hs) {
        auto row_off = prefix_offsets(hs, rows_d);
        return for_each_class_composition(cols_d, n0, w.cols(), [&](const std::vector<std::size_t>& ws) {
            auto col_off = prefix_offsets(ws, cols_d);
            std::map<var_id, std::pair<std::size_t, std::size_t>> anchor;
            for (std::size_t i = 0; i < m0; ++i)
                for (std::size_t j = 0; j < n0; ++j) {
                    auto [it, inserted] = anchor.emplace(p(i, j), std::make_pair(row_off[i], col_off[j]));
                    if (inserted) continue;
                    const std::size_t hx = hs[rows_d.find(static_cast<int>(i))];
                    const std::size_t wx = ws[cols_d.find(static_cast<int>(j))];
                    if (!blocks_equal(w, it->second.first, it->second.second, row_off[i], col_off[j],
                                      hx, wx))
                        return false;
                }
            substitution h;
            for (std::size_t i = 0; i < m0; ++i)
                for (std::size_t j = 0; j < n0; ++j) {
                    const var_id x = p(i, j);
                    if (h.contains(x)) continue;
                    h.set(x, subgrid(w, row_off[i] + 1, col_off[j] + 1,
                                     hs[rows_d.find(static_cast<int>(i))],
                                     ws[cols_d.find(static_cast<int>(j))]));
                }
            found = std::move(h);
            return true;
        });
    });
    return found;
}

// --- r: strip heights per row, widths per variable -------------------------

// Widths are fixed per variable at first placement (row-major), candidate
// sizes ascending, each pattern row summing exactly to the target width.
template <class Sink>
bool search_r_widths(const var_grid& p, std::size_t target, std::map<var_id, std::size_t>& width,
                     std::size_t i, std::size_t j, std::size_t sum, Sink&& sink) {
    if (j == p.cols()) {
        if (sum != target) return false;
        if (i + 1 == p.rows()) return sink(width);
        return search_r_widths(p, target, width, i + 1, 0, 0, sink);
    }
    auto rest_min = [&](std::size_t from) {
        std::size_t acc = 0;
        for (std::size_t k = from; k < p.cols(); ++k) {
            auto it = width.find(p(i, k));
            acc += it == width.end() ? 1 : it->second;
        }
        return acc;
    };
    const var_id x = p(i, j);
    auto it = width.find(x);
    if (it != width.end()) {
        if (sum + it->second + rest_min(j + 1) > target) return false;
        return search_r_widths(p, target, width, i, j + 1, sum + it->second, sink);
    }
    for (std::size_t c = 1; sum + c + rest_min(j + 1) <= target; ++c) {
        width.emplace(x, c);
        if (search_r_widths(p, target, width, i, j + 1, sum + c, sink)) return true;
        width.erase(x);
    }
    return false;
}

inline std::optional<substitution> decide_r(const grid& w, const var_grid& p) {
    const std::size_t m0 = p.rows(), n0 = p.cols();
    if (w.rows() < m0 || w.cols() < n0) return std::nullopt;
    dsu rows_d = row_classes(p);
    std::optional<substitution> found;
    for_each_class_composition(rows_d, m0, w.rows(), [&](const std::vector<std::size_t>& hs) {
        auto row_off = prefix_offsets(hs, rows_d);
        std::map<var_id, std::size_t> width;
        return search_r_widths(p, w.cols(), width, 0, 0, 0, [&](const std::map<var_id, std::size_t>& ws) {
            // Dims settled; check content occurrence by occurrence.
            struct placement { std::size_t top, left, height, width; };
            std::map<var_id, placement> anchor;
            for (std::size_t i = 0; i < m0; ++i) {
                std::size_t off = 0;
                for (std::size_t j = 0; j < n0; ++j) {
                    const var_id x = p(i, j);
                    const std::size_t hx = hs[rows_d.find(static_cast<int>(i))];
                    const std::size_t wx = ws.at(x);
                    auto [it, inserted] = anchor.emplace(x, placement{row_off[i], off, hx, wx});
                    if (!inserted &&
                        !blocks_equal(w, it->second.top, it->second.left, row_off[i], off, hx, wx))
                        return false;
                    off += wx;
                }
            }
            substitution h;
            for (const auto& [x, at] : anchor)
                h.set(x, subgrid(w, at.top + 1, at.left + 1, at.height, at.width));
            found = std::move(h);
            return true;
        });
    });
    return found;
}

inline substitution transpose_witness(const substitution& h) {
    substitution out;
    for (const auto& [x, g] : h.images()) out.set(x, transform(g, geom_op::transpose));
    return out;
}

inline std::optional<substitution> decide_c(const grid& w, const var_grid& p) {
    auto res = decide_r(transform(w, geom_op::transpose), transform(p, geom_op::transpose));
    if (!res) return std::nullopt;
    return transpose_witness(*res);
}

} // namespace detail

/// Decides w in L_z(p), returning a witness substitution on success.
/// Search order is deterministic: strip heights assigned to pattern rows
/// top-down, widths left-to-right, smaller sizes first; the first witness
/// found wins. In rc mode the r search runs before the c search.
inline std::optional<substitution> decide(const grid& w, const pattern& p, mode z) {
    if (w.empty()) return std::nullopt;
    switch (z) {
    case mode::h: return detail::decide_h(w, p.vars());
    case mode::p: return detail::decide_p(w, p.vars());
    case mode::r: return detail::decide_r(w, p.vars());
    case mode::c: return detail::decide_c(w, p.vars());
    case mode::rc: {
        auto r = detail::decide_r(w, p.vars());
        if (r) return r;
        return detail::decide_c(w, p.vars());
    }
    }
    return std::nullopt;
}

} // namespace arraypat
