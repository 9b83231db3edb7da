#pragma once

// Experimental: derive a presentation for a brute-force parameter from a
// truncated stacked union/join Hankel matrix. The result is only as good as
// the truncation; validation agreement on an expression pool is reported,
// never assumed.

#include "tga/expr.hpp"
#include "tga/hankel.hpp"
#include "tga/presentation.hpp"

#include <string>
#include <vector>

namespace tga {

struct SynthDiagnostics {
    std::size_t side = 0;        // enumerated graphs
    std::size_t basis_size = 0;  // m
    std::vector<std::string> unsolved;  // representations not found at this truncation
    std::size_t pool_size = 0;
    std::size_t pool_agree = 0;
    std::vector<std::string> disagreements;

    bool all_solved() const noexcept { return unsolved.empty(); }
};

template <Semiring S>
struct SynthResult {
    Presentation<S> presentation;
    std::vector<ColoredGraph> basis;  // representative graph of each basis class
    SynthDiagnostics diagnostics;
};

template <TropicalSemiring S>
SynthResult<S> synthesize_presentation(const GraphParameter<S>& f, int k, std::size_t max_n,
                                       const std::vector<CwExpr>& pool = {},
                                       std::size_t side_cap = kHankelSideCap) {
    const HankelShape shape{HankelOp::stacked, k};
    const auto h = build_hankel<S>(f, "synth", shape, max_n, side_cap);
    const auto ops = shape.operations();
    const auto basis = row_basis<S>(h.entries);

    SynthResult<S> res;
    auto& diag = res.diagnostics;
    diag.side = h.side();
    diag.basis_size = basis.size();
    const std::size_t m = basis.size();
    std::vector<Vector<S>> basis_rows;
    for (auto b : basis) {
        basis_rows.push_back(h.entries[b]);
        res.basis.push_back(h.index[b]);
    }

    auto row_of = [&](const ColoredGraph& z) {
        Vector<S> row;
        row.reserve(h.side() * ops.size());
        for (const auto& op : ops)
            for (const auto& y : h.index) row.push_back(f(op(z, y)));
        return row;
    };
    auto represent = [&](const ColoredGraph& z, const std::string& what) {
        auto x = solve_combination<S>(basis_rows, row_of(z));
        if (!x) {
            diag.unsolved.push_back(what);
            return Vector<S>(m, S::zero());
        }
        return *x;
    };
    auto as_entries = [&](const Vector<S>& v) {
        std::vector<typename Table<S>::Entry> out;
        for (std::size_t r = 0; r < m; ++r)
            if (!is_zero<S>(v[r])) out.emplace_back(static_cast<std::uint32_t>(r), v[r]);
        return out;
    };

    Presentation<S> p;
    p.k = k;
    p.m = m;
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
        const ColorSet c = ColorSet::from_bits(bits);
        p.leaf[c] = {represent(single_vertex(k, c), "leaf " + c.to_string()), std::nullopt};
    }
    auto bilinear_table = [&](const GraphOperation& op, const std::string& what) {
        std::vector<std::vector<typename Table<S>::Entry>> rows(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                rows[a * m + b] = as_entries(represent(op(res.basis[a], res.basis[b]),
                                                       what + " of basis " + std::to_string(a) + "," + std::to_string(b)));
        return Table<S>::from_entries(m * m, m, std::move(rows));
    };
    p.union_tab = bilinear_table(ops[0], "union");
    std::size_t block = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j, ++block)
            p.join_tab[{i, j}] = bilinear_table(ops[block], "join " + std::to_string(i) + "," + std::to_string(j));

    Alphabet alphabet;
    for (const auto& e : pool) alphabet.merge(alphabet_of(e));
    for (const auto& rho : alphabet.recolorings) {
        if (rho.max_color() > k) continue;
        std::vector<std::vector<typename Table<S>::Entry>> rows(m);
        for (std::size_t a = 0; a < m; ++a)
            rows[a] = as_entries(represent(recolor(rho, res.basis[a]), "recoloring " + rho.name() + " of basis " + std::to_string(a)));
        p.recolor_tab[rho.name()] = Table<S>::from_entries(m, m, std::move(rows));
    }
    for (std::size_t a = 0; a < m; ++a) p.out.push_back(f(res.basis[a]));
    res.presentation = std::move(p);

    diag.pool_size = pool.size();
    for (std::size_t x = 0; x < pool.size(); ++x) {
        try {
            const auto got = eval_presentation<S>(pool[x], res.presentation);
            const auto want = f(eval_expr(pool[x], k));
            if (got == want) {
                ++diag.pool_agree;
            } else {
                diag.disagreements.push_back("pool[" + std::to_string(x) + "]: presentation " + S::to_string(got) +
                                             ", brute force " + S::to_string(want));
            }
        } catch (const std::exception& err) {
            diag.disagreements.push_back("pool[" + std::to_string(x) + "]: " + err.what());
        }
    }
    return res;
}

}  // namespace tga
