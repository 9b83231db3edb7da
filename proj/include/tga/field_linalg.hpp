#pragma once

// Linear algebra over Q for the field-carrier rank checks. Elimination runs on
// arbitrary-precision rationals so intermediate growth cannot overflow.

#include "tga/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tga::field {

using BigRational = boost::multiprecision::cpp_rational;

inline BigRational widen(const Rational& r) { return BigRational(r.num(), r.den()); }

/// Incrementally maintained row echelon form.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces v against the stored rows; returns the residue (zero at every pivot).
    std::vector<BigRational> reduce(std::span<const Rational> v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<BigRational> w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(widen(x));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (w[p] == 0) continue;
            BigRational factor = w[p] / rows_[r][p];
            for (std::size_t c = p; c < cols_; ++c)
                if (rows_[r][c] != 0) w[c] -= factor * rows_[r][c];
        }
        return w;
    }

    bool in_span(std::span<const Rational> v) const {
        auto w = reduce(v);
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    /// Adds v if independent; returns whether it was added.
    bool insert(std::span<const Rational> v) {
        auto w = reduce(v);
        std::size_t p = 0;
        while (p < cols_ && w[p] == 0) ++p;
        if (p == cols_) return false;
        // Rows stay fully reduced: every pivot column is zero outside its own row.
        for (auto& row : rows_) {
            if (row[p] == 0) continue;
            BigRational factor = row[p] / w[p];
            for (std::size_t c = p; c < cols_; ++c)
                if (w[c] != 0) row[c] -= factor * w[c];
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<BigRational>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row basis chosen by the same removal process as the tropical one (drop the
/// lowest-index row lying in the span of the rest). Over a field that process
/// keeps exactly the rows not spanned by later rows, found by a descending scan.
inline std::vector<std::size_t> extract_basis(std::span<const std::vector<Rational>> rows) {
    if (rows.empty()) return {};
    Echelon ech(rows.front().size());
    std::vector<std::size_t> kept;
    for (std::size_t i = rows.size(); i-- > 0;)
        if (ech.insert(rows[i])) kept.push_back(i);
    return {kept.rbegin(), kept.rend()};
}

inline std::size_t rank(std::span<const std::vector<Rational>> rows) { return extract_basis(rows).size(); }

inline bool in_span(std::span<const std::vector<Rational>> generators, std::span<const Rational> target) {
    Echelon ech(target.size());
    for (const auto& g : generators) ech.insert(g);
    return ech.in_span(target);
}

}  // namespace tga::field
