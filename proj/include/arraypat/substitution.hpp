#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "grid.hpp"
#include "pattern.hpp"

namespace arraypat {

/// Finite map from variables to non-empty terminal arrays. Also serves as
/// the witness type returned by membership queries.
class substitution {
public:
    substitution() = default;

    void set(var_id x, grid image) {
        if (x < 1) throw precondition_error("variable identifiers must be positive");
        if (image.empty()) throw precondition_error("substitution images must be non-empty");
        images_[x] = std::move(image);
    }

    bool contains(var_id x) const { return images_.count(x) != 0; }

    const grid& image(var_id x) const {
        auto it = images_.find(x);
        if (it == images_.end())
            throw precondition_error("substitution has no image for " + var_name(x));
        return it->second;
    }

    const std::map<var_id, grid>& images() const noexcept { return images_; }

    friend bool operator==(const substitution&, const substitution&) = default;

private:
    std::map<var_id, grid> images_;
};

struct uniform_size {
    std::size_t rows = 0;
    std::size_t cols = 0;
    friend bool operator==(const uniform_size&, const uniform_size&) = default;
};

/// Common image dimensions across vars, if all images agree.
inline std::optional<uniform_size> uniform_dims(const substitution& h, const std::vector<var_id>& vars) {
    std::optional<uniform_size> dims;
    for (var_id x : vars) {
        const grid& g = h.image(x);
        uniform_size d{g.rows(), g.cols()};
        if (!dims) dims = d;
        else if (*dims != d) return std::nullopt;
    }
    return dims;
}

namespace detail {

inline std::vector<var_id> distinct_vars(const var_grid& p) {
    std::vector<var_id> out;
    for (var_id v : p.cells())
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

} // namespace detail

inline std::optional<uniform_size> uniform_dims(const substitution& h, const pattern& p) {
    return uniform_dims(h, detail::distinct_vars(p.vars()));
}

/// Column-row assembly: column-concatenate the images across each pattern
/// row, then row-concatenate the resulting strips. Works over any cell
/// type so the enumeration engine can assemble marker grids through the
/// same code path.
template <class Cell>
concat_result<Cell> assemble_cr(const std::map<var_id, basic_grid<Cell>>& images, const var_grid& p) {
    concat_result<Cell> whole = basic_grid<Cell>{};
    for (std::size_t i = 0; i < p.rows(); ++i) {
        concat_result<Cell> strip = basic_grid<Cell>{};
        for (std::size_t j = 0; j < p.cols(); ++j) {
            auto it = images.find(p(i, j));
            if (it == images.end())
                throw precondition_error("substitution has no image for " + var_name(p(i, j)));
            strip = col_concat(strip, concat_result<Cell>(it->second));
        }
        whole = row_concat(whole, strip);
    }
    return whole;
}

/// Row-column assembly: row-concatenate the images down each pattern
/// column, then column-concatenate the resulting strips.
template <class Cell>
concat_result<Cell> assemble_rc(const std::map<var_id, basic_grid<Cell>>& images, const var_grid& p) {
    concat_result<Cell> whole = basic_grid<Cell>{};
    for (std::size_t j = 0; j < p.cols(); ++j) {
        concat_result<Cell> strip = basic_grid<Cell>{};
        for (std::size_t i = 0; i < p.rows(); ++i) {
            auto it = images.find(p(i, j));
            if (it == images.end())
                throw precondition_error("substitution has no image for " + var_name(p(i, j)));
            strip = row_concat(strip, concat_result<Cell>(it->second));
        }
        whole = col_concat(whole, strip);
    }
    return whole;
}

inline concat_result<token> assemble_cr(const substitution& h, const pattern& p) {
    return assemble_cr(h.images(), p.vars());
}

inline concat_result<token> assemble_rc(const substitution& h, const pattern& p) {
    return assemble_rc(h.images(), p.vars());
}

/// Image of a variable grid under a uniform substitution. For uniform h
/// both assemblies are defined and coincide; the result has dimensions
/// (m * p.rows, n * p.cols).
inline grid apply_morphism(const substitution& h, const var_grid& p) {
    if (!uniform_dims(h, detail::distinct_vars(p)))
        throw precondition_error("apply_morphism requires a uniform substitution");
    concat_result<token> out = assemble_cr(h.images(), p);
    return *out;
}

inline grid apply_morphism(const substitution& h, const pattern& p) {
    return apply_morphism(h, p.vars());
}

/// Composition of uniform substitutions: x maps to the outer image of
/// inner(x) read as a variable grid (cells of the form x<k>). Uniform with
/// dimensions (m1*m2, n1*n2).
inline substitution compose_uniform(const substitution& outer, const substitution& inner) {
    std::vector<var_id> inner_domain;
    std::vector<var_id> outer_used;
    std::map<var_id, var_grid> parsed;
    for (const auto& [x, g] : inner.images()) {
        inner_domain.push_back(x);
        std::vector<var_id> cells;
        cells.reserve(g.area());
        for (const token& t : g.cells()) {
            auto v = parse_var_name(t);
            if (!v) throw precondition_error("compose_uniform: inner image cell '" + t +
                                             "' is not a variable token");
            cells.push_back(*v);
            if (std::find(outer_used.begin(), outer_used.end(), *v) == outer_used.end())
                outer_used.push_back(*v);
        }
        parsed.emplace(x, var_grid(g.rows(), g.cols(), std::move(cells)));
    }
    if (!uniform_dims(inner, inner_domain))
        throw precondition_error("compose_uniform: inner substitution is not uniform");
    if (!uniform_dims(outer, outer_used))
        throw precondition_error("compose_uniform: outer substitution is not uniform");
    substitution out;
    for (const auto& [x, vg] : parsed) out.set(x, apply_morphism(outer, vg));
    return out;
}

} // namespace arraypat
