#pragma once

// Finite truncations of Hankel matrices H(f, □)_{X,Y} = f(X □ Y) over graph
// enumerations, with row bases and generator checks per carrier.

#include "tga/canonical.hpp"
#include "tga/error.hpp"
#include "tga/field_linalg.hpp"
#include "tga/graph.hpp"
#include "tga/nat_span.hpp"
#include "tga/quantum.hpp"
#include "tga/semiring.hpp"
#include "tga/tropical_linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tga {

inline constexpr std::size_t kHankelSideCap = 512;
// Coefficient bound for ℕ membership searches.
inline constexpr std::uint64_t kNatCoefficientBound = 4;

enum class HankelOp { glue, join, unite, stacked };

/// glue_k (k-graphs), join_ij and union (k-colored graphs), or the stacked
/// matrix whose column blocks are union followed by every join pair.
struct HankelShape {
    HankelOp op = HankelOp::glue;
    int k = 0;
    int i = 1;
    int j = 2;

    std::string name() const {
        switch (op) {
            case HankelOp::glue: return "glue_" + std::to_string(k);
            case HankelOp::join: return "join_" + std::to_string(i) + "_" + std::to_string(j);
            case HankelOp::unite: return "union";
            case HankelOp::stacked: return "stacked";
        }
        return {};
    }

    /// Column-block operations, in order.
    std::vector<GraphOperation> operations() const {
        switch (op) {
            case HankelOp::glue: return {[](const ColoredGraph& a, const ColoredGraph& b) { return glue_colored(a, b); }};
            case HankelOp::join:
                check_join_colors(i, j, k);
                return {[i = i, j = j](const ColoredGraph& a, const ColoredGraph& b) { return join(i, j, a, b); }};
            case HankelOp::unite:
                return {[](const ColoredGraph& a, const ColoredGraph& b) { return disjoint_union(a, b); }};
            case HankelOp::stacked: {
                std::vector<GraphOperation> ops{
                    [](const ColoredGraph& a, const ColoredGraph& b) { return disjoint_union(a, b); }};
                for (int x = 1; x <= k; ++x)
                    for (int y = x + 1; y <= k; ++y)
                        ops.push_back([x, y](const ColoredGraph& a, const ColoredGraph& b) { return join(x, y, a, b); });
                return ops;
            }
        }
        return {};
    }

    bool commutative() const { return op != HankelOp::stacked; }
};

template <Semiring S>
struct TruncatedHankel {
    std::string param;
    HankelShape shape;
    std::size_t max_n = 0;
    std::vector<ColoredGraph> index;  // ordered by vertex count
    std::size_t blocks = 1;
    std::vector<Vector<S>> entries;   // row X, column (block, Y)

    std::size_t side() const noexcept { return index.size(); }

    /// Number of index graphs with at most `size` vertices (a prefix).
    std::size_t prefix(std::size_t size) const {
        return static_cast<std::size_t>(std::partition_point(index.begin(), index.end(),
                                                             [size](const ColoredGraph& g) { return g.n() <= size; }) -
                                        index.begin());
    }

    /// Rows and columns restricted to index graphs with at most `size` vertices.
    std::vector<Vector<S>> truncated_rows(std::size_t size) const {
        const std::size_t p = prefix(size);
        std::vector<Vector<S>> out(p);
        for (std::size_t r = 0; r < p; ++r) {
            out[r].reserve(p * blocks);
            for (std::size_t b = 0; b < blocks; ++b)
                out[r].insert(out[r].end(), entries[r].begin() + static_cast<std::ptrdiff_t>(b * side()),
                              entries[r].begin() + static_cast<std::ptrdiff_t>(b * side() + p));
        }
        return out;
    }

    const Value<S>& at(std::size_t row, std::size_t col, std::size_t block = 0) const {
        return entries.at(row).at(block * side() + col);
    }

    /// Index of the class of g, if enumerated.
    std::optional<std::size_t> find(const ColoredGraph& g) const {
        for (std::size_t x = 0; x < index.size(); ++x)
            if (index[x].n() == g.n() && is_isomorphic(index[x], g)) return x;
        return std::nullopt;
    }

    bool symmetric() const {
        if (blocks != 1) return false;
        for (std::size_t a = 0; a < side(); ++a)
            for (std::size_t b = a + 1; b < side(); ++b)
                if (entries[a][b] != entries[b][a]) return false;
        return true;
    }
};

template <Semiring S>
TruncatedHankel<S> build_hankel(const GraphParameter<S>& f, std::string param, const HankelShape& shape,
                                std::size_t max_n, std::size_t side_cap = kHankelSideCap) {
    TruncatedHankel<S> h;
    h.param = std::move(param);
    h.shape = shape;
    h.max_n = max_n;
    const auto ops = shape.operations();
    h.blocks = ops.size();
    h.index = shape.op == HankelOp::glue ? enumerate_labeled_colored(shape.k, max_n)
                                         : enumerate_colored_graphs(shape.k, max_n);
    if (h.index.size() > side_cap)
        throw ResourceError("Hankel matrix side " + std::to_string(h.index.size()) + " exceeds the cap of " +
                            std::to_string(side_cap));
    const std::size_t n = h.index.size();
    h.entries.assign(n, Vector<S>(n * h.blocks, S::zero()));
    for (std::size_t b = 0; b < h.blocks; ++b)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                // Commutative operations fill both triangles from one evaluation.
                if (shape.commutative() && y < x) {
                    h.entries[x][b * n + y] = h.entries[y][b * n + x];
                    continue;
                }
                h.entries[x][b * n + y] = f(ops[b](h.index[x], h.index[y]));
            }
    return h;
}

/// Indices of a row basis (tropical and field carriers) or of a reduced
/// generating set (ℕ, coefficients bounded by kNatCoefficientBound).
template <Semiring S>
std::vector<std::size_t> row_basis(std::span<const Vector<S>> rows) {
    if constexpr (TropicalSemiring<S>) {
        return extract_basis<S>(rows);
    } else if constexpr (std::same_as<S, RationalField>) {
        return field::extract_basis(rows);
    } else if constexpr (std::same_as<S, Natural>) {
        // Exact duplicates and zero rows are dropped before the search.
        std::map<Vector<S>, std::size_t> last;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (std::any_of(rows[r].begin(), rows[r].end(), [](std::uint64_t v) { return v != 0; })) last[rows[r]] = r;
        std::vector<std::size_t> keep;
        for (const auto& [row, r] : last) keep.push_back(r);
        std::sort(keep.begin(), keep.end());
        std::vector<Vector<S>> sub;
        for (auto r : keep) sub.push_back(rows[r]);
        std::vector<std::size_t> out;
        for (auto r : nat::reduce_generators(sub, kNatCoefficientBound)) out.push_back(keep[r]);
        return out;
    } else {
        throw UnsupportedError("no rank notion for this semiring");
    }
}

template <Semiring S>
bool in_row_span(std::span<const Vector<S>> generators, std::span<const Value<S>> target) {
    if constexpr (TropicalSemiring<S>) {
        return solve_combination<S>(generators, target).has_value();
    } else if constexpr (std::same_as<S, RationalField>) {
        return field::in_span(generators, target);
    } else if constexpr (std::same_as<S, Natural>) {
        return nat::in_span(generators, target, kNatCoefficientBound);
    } else {
        throw UnsupportedError("no span test for this semiring");
    }
}

/// Whether every row of the truncation at `size` lies in the span of the
/// candidate rows.
template <Semiring S>
bool check_generators(const TruncatedHankel<S>& h, const std::vector<std::size_t>& candidates,
                      std::optional<std::size_t> size = std::nullopt) {
    const auto rows = h.truncated_rows(size.value_or(h.max_n));
    std::vector<Vector<S>> gens;
    for (auto c : candidates) {
        if (c >= rows.size()) throw std::out_of_range("candidate row out of range");
        gens.push_back(rows[c]);
    }
    for (const auto& row : rows)
        if (!in_row_span<S>(gens, row)) return false;
    return true;
}

struct RankReport {
    std::string param;
    std::string op;
    std::string semiring;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> basis_rows;  // at the largest truncation
    bool stabilized = false;
};

template <Semiring S>
RankReport rank_report(const TruncatedHankel<S>& h, std::vector<std::size_t> sizes) {
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.empty()) throw std::invalid_argument("no truncation sizes");
    if (sizes.back() > h.max_n) throw std::invalid_argument("truncation size exceeds the built matrix");
    RankReport rep;
    rep.param = h.param;
    rep.op = h.shape.name();
    rep.semiring = std::string(S::name);
    rep.sizes = sizes;
    for (auto s : sizes) {
        const auto rows = h.truncated_rows(s);
        auto basis = row_basis<S>(rows);
        rep.ranks.push_back(basis.size());
        if (s == sizes.back()) rep.basis_rows = std::move(basis);
    }
    rep.stabilized = rep.ranks.size() >= 2 && rep.ranks[rep.ranks.size() - 1] == rep.ranks[rep.ranks.size() - 2];
    return rep;
}

template <Semiring S>
RankReport rank_report(const GraphParameter<S>& f, std::string param, const HankelShape& shape,
                       std::vector<std::size_t> sizes, std::size_t side_cap = kHankelSideCap) {
    if (sizes.empty()) throw std::invalid_argument("no truncation sizes");
    const auto h = build_hankel<S>(f, std::move(param), shape, *std::max_element(sizes.begin(), sizes.end()), side_cap);
    return rank_report<S>(h, std::move(sizes));
}

}  // namespace tga
