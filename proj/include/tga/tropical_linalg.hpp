#pragma once

// Max-plus linear algebra: residuation, solvability of X ⊗ x = b, row bases
// and row rank. Min-plus is handled through the order-reversing isomorphism
// t ↦ −t onto max-plus.

#include "tga/semiring.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace tga {

/// Dense row-major matrix over a semiring.
template <Semiring S>
class Matrix {
public:
    using value_type = Value<S>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

    static Matrix from_rows(const std::vector<Vector<S>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("matrix rows differ in length");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
        }
        m.validate();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector<S> row_vector(std::size_t r) const { return Vector<S>(row(r).begin(), row(r).end()); }

    std::vector<Vector<S>> row_vectors() const {
        std::vector<Vector<S>> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
        return out;
    }

    /// Tropical matrices must not hold the transient top element.
    void validate() const {
        if constexpr (TropicalSemiring<S>) {
            for (const auto& v : data_)
                if (v == S::top()) throw std::invalid_argument("matrix entry is the top element");
        }
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

namespace maxplus {

/// Greatest x with a ⊗ x ≤ b, in max-plus order. Returns +∞ when a = −∞.
inline Tropical residual(const Tropical& b, const Tropical& a) {
    if (a.is_neg_inf()) return Tropical::pos_inf();
    if (b.is_neg_inf()) return Tropical::neg_inf();
    if (b.is_pos_inf() || a.is_pos_inf()) throw std::invalid_argument("residual of the top element");
    return Tropical(b.value() - a.value());
}

namespace detail {

template <class RowAt>
std::vector<Tropical> principal(std::size_t count, RowAt&& row_at, std::span<const Tropical> target) {
    std::vector<Tropical> x(count, Tropical::pos_inf());
    for (std::size_t j = 0; j < count; ++j) {
        std::span<const Tropical> r = row_at(j);
        if (r.size() != target.size()) throw std::invalid_argument("row and target lengths differ");
        Tropical best = Tropical::pos_inf();
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i].is_neg_inf()) continue;
            Tropical c = residual(target[i], r[i]);
            if (c < best) best = c;
            if (best.is_neg_inf()) break;
        }
        // A row with no finite entry imposes no constraint; it must not contribute.
        x[j] = best.is_pos_inf() ? Tropical::neg_inf() : best;
    }
    return x;
}

template <class RowAt>
bool reproduces(std::size_t count, RowAt&& row_at, std::span<const Tropical> x,
                std::span<const Tropical> target) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        Tropical acc = Tropical::neg_inf();
        for (std::size_t j = 0; j < count; ++j) {
            if (x[j].is_neg_inf()) continue;
            acc = MaxPlus::plus(acc, MaxPlus::times(x[j], row_at(j)[i]));
        }
        if (acc != target[i]) return false;
    }
    return true;
}

inline void check_target(std::span<const Tropical> target) {
    for (const auto& t : target)
        if (t.is_pos_inf()) throw std::invalid_argument("target contains the top element");
}

}  // namespace detail

/// Principal solution x̂ⱼ = min over coordinates of residual(targetᵢ, rowsⱼᵢ).
/// It is the greatest sub-solution: ⊕ⱼ x̂ⱼ ⊗ rowsⱼ ≤ target.
inline std::vector<Tropical> principal_solution(std::span<const std::vector<Tropical>> rows,
                                                std::span<const Tropical> target) {
    detail::check_target(target);
    return detail::principal(rows.size(), [&](std::size_t j) { return std::span<const Tropical>(rows[j]); },
                             target);
}

/// Coefficients x with ⊕ⱼ xⱼ ⊗ rowsⱼ = target, or nullopt when no such x exists.
inline std::optional<std::vector<Tropical>> solve_combination(std::span<const std::vector<Tropical>> rows,
                                                              std::span<const Tropical> target) {
    detail::check_target(target);
    auto row_at = [&](std::size_t j) { return std::span<const Tropical>(rows[j]); };
    auto x = detail::principal(rows.size(), row_at, target);
    if (!detail::reproduces(rows.size(), row_at, x, target)) return std::nullopt;
    return x;
}

/// Same as solve_combination, restricted to the rows of `rows` named by `use`.
inline std::optional<std::vector<Tropical>> solve_combination(std::span<const std::vector<Tropical>> rows,
                                                              std::span<const std::size_t> use,
                                                              std::span<const Tropical> target) {
    detail::check_target(target);
    auto row_at = [&](std::size_t j) { return std::span<const Tropical>(rows[use[j]]); };
    auto x = detail::principal(use.size(), row_at, target);
    if (!detail::reproduces(use.size(), row_at, x, target)) return std::nullopt;
    return x;
}

/// Row indices surviving the removal process: repeatedly drop the lowest-index
/// row that is a combination of the remaining rows.
///
/// A row that is not a combination of a set stays so for every subset, so one
/// ascending scan reproduces the process exactly. Rows equal up to a finite
/// scalar are mutually expressible; all but the last of each such group are
/// dropped up front, which leaves the scan's answers unchanged.
inline std::vector<std::size_t> extract_basis(std::span<const std::vector<Tropical>> rows) {
    const std::size_t n = rows.size();
    std::vector<bool> alive(n, true);

    std::map<std::vector<Tropical>, std::size_t> last_of_class;
    for (std::size_t r = 0; r < n; ++r) {
        Tropical top = Tropical::neg_inf();
        for (const auto& v : rows[r]) top = MaxPlus::plus(top, v);
        if (top.is_pos_inf()) throw std::invalid_argument("row contains the top element");
        if (top.is_neg_inf()) {
            alive[r] = false;  // generated by the empty combination
            continue;
        }
        std::vector<Tropical> normalized;
        normalized.reserve(rows[r].size());
        for (const auto& v : rows[r]) normalized.push_back(v.is_finite() ? Tropical(v.value() - top.value()) : v);
        auto [it, inserted] = last_of_class.try_emplace(std::move(normalized), r);
        if (!inserted) {
            alive[it->second] = false;
            it->second = r;
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t r = 0; r < n; ++r)
        if (alive[r]) current.push_back(r);

    std::vector<std::size_t> others;
    for (std::size_t pos = 0; pos < current.size();) {
        const std::size_t r = current[pos];
        others.clear();
        for (std::size_t q : current)
            if (q != r) others.push_back(q);
        if (solve_combination(rows, others, rows[r])) {
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(pos));
        } else {
            ++pos;
        }
    }
    return current;
}

inline std::size_t row_rank(const Matrix<MaxPlus>& m) {
    auto rows = m.row_vectors();
    return extract_basis(rows).size();
}

}  // namespace maxplus

// ---------------------------------------------------------------------------
// Semiring-generic entry points. Min-plus maps through t ↦ −t.

namespace detail {

inline std::vector<Tropical> negated(std::span<const Tropical> v) {
    std::vector<Tropical> out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(-t);
    return out;
}

inline std::vector<std::vector<Tropical>> negated_rows(std::span<const std::vector<Tropical>> rows) {
    std::vector<std::vector<Tropical>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(negated(r));
    return out;
}

}  // namespace detail

/// Greatest x with a ⊗ x ≤ b in the semiring's natural order.
template <TropicalSemiring S>
Tropical residual(const Tropical& b, const Tropical& a) {
    if constexpr (std::same_as<S, MaxPlus>) {
        return maxplus::residual(b, a);
    } else {
        return -maxplus::residual(-b, -a);
    }
}

template <TropicalSemiring S>
std::optional<std::vector<Tropical>> solve_combination(std::span<const std::vector<Tropical>> rows,
                                                       std::span<const Tropical> target) {
    if constexpr (std::same_as<S, MaxPlus>) {
        return maxplus::solve_combination(rows, target);
    } else {
        auto neg_rows = detail::negated_rows(rows);
        auto neg_target = detail::negated(target);
        auto x = maxplus::solve_combination(neg_rows, neg_target);
        if (!x) return std::nullopt;
        return detail::negated(*x);
    }
}

template <TropicalSemiring S>
std::vector<std::size_t> extract_basis(std::span<const std::vector<Tropical>> rows) {
    if constexpr (std::same_as<S, MaxPlus>) {
        return maxplus::extract_basis(rows);
    } else {
        auto neg_rows = detail::negated_rows(rows);
        return maxplus::extract_basis(neg_rows);
    }
}

template <TropicalSemiring S>
std::size_t row_rank(const Matrix<S>& m) {
    auto rows = m.row_vectors();
    return extract_basis<S>(rows).size();
}

}  // namespace tga
