#pragma once

// Built-in presentations over the state space of color subsets: state S ⊆ [k]
// records which color classes contain a chosen vertex. Both are exact on
// single-colored expressions.

#include "tga/error.hpp"
#include "tga/expr.hpp"
#include "tga/presentation.hpp"
#include "tga/semiring.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace tga {

inline constexpr int kBuiltinMaxColors = 12;
// Tables are stored up to this many states and computed on demand beyond.
inline constexpr std::size_t kBuiltinMaterializeStates = 16;

namespace detail {

inline void check_builtin(int k, const Alphabet& alphabet) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > kBuiltinMaxColors)
        throw ResourceError("built-in presentations need 2^k states; k=" + std::to_string(k) + " exceeds " +
                            std::to_string(kBuiltinMaxColors));
    for (const auto& rho : alphabet.recolorings) {
        if (!rho.preserves_single_colors())
            throw UnsupportedError("recoloring " + rho.name() + " does not keep vertices single-colored");
        if (rho.max_color() > k) throw UnsupportedError("recoloring " + rho.name() + " exceeds k");
    }
}

/// Image of a state under a single-color-preserving recoloring.
inline std::uint32_t recolor_state(const Recoloring& rho, std::uint32_t s) {
    std::uint32_t out = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        const int c = std::countr_zero(rest) + 1;
        out |= rho(ColorSet{c}).bits();
    }
    return out;
}

inline bool joined(std::uint32_t s, int i, int j) {
    return ((s >> (i - 1)) & 1u) && ((s >> (j - 1)) & 1u);
}

template <Semiring S>
Table<S> rule_table(std::size_t sources, std::size_t m, typename Table<S>::Rule rule) {
    auto t = Table<S>::from_rule(sources, m, std::move(rule));
    return m <= kBuiltinMaterializeStates ? t.materialized() : t;
}

inline Vector<MaxPlus> unit_vector(std::size_t m, std::size_t at) {
    Vector<MaxPlus> v(m, MaxPlus::zero());
    v[at] = MaxPlus::one();
    return v;
}

}  // namespace detail

/// Weighted maximum independent set over max-plus. Leaves with more than one
/// color are not covered, and every recoloring in the alphabet must map
/// single colors to single colors or to nothing.
inline Presentation<MaxPlus> mis_presentation(int k, const Alphabet& alphabet = {}) {
    detail::check_builtin(k, alphabet);
    using Entry = Table<MaxPlus>::Entry;
    const std::size_t m = std::size_t{1} << k;
    Presentation<MaxPlus> p;
    p.k = k;
    p.m = m;
    p.leaf[ColorSet{}] = {detail::unit_vector(m, 0), detail::unit_vector(m, 0)};
    for (int c = 1; c <= k; ++c)
        p.leaf[ColorSet{c}] = {detail::unit_vector(m, 0), detail::unit_vector(m, std::size_t{1} << (c - 1))};
    // Unselected leaves contribute 0 and selected ones their weight: vec holds
    // the empty state, wvec the state with the leaf's color.
    p.union_tab = detail::rule_table<MaxPlus>(m * m, m, [m](std::size_t src, std::vector<Entry>& out) {
        out.emplace_back(static_cast<std::uint32_t>((src / m) | (src % m)), MaxPlus::one());
    });
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            p.join_tab[{i, j}] = detail::rule_table<MaxPlus>(m * m, m, [m, i, j](std::size_t src, std::vector<Entry>& out) {
                const auto s = static_cast<std::uint32_t>((src / m) | (src % m));
                if (!detail::joined(s, i, j)) out.emplace_back(s, MaxPlus::one());
            });
    for (const auto& rho : alphabet.recolorings)
        p.recolor_tab[rho.name()] = detail::rule_table<MaxPlus>(m, m, [rho](std::size_t src, std::vector<Entry>& out) {
            out.emplace_back(detail::recolor_state(rho, static_cast<std::uint32_t>(src)), MaxPlus::one());
        });
    p.out.assign(m, MaxPlus::one());
    return p;
}

/// Weighted count of independent sets over ℕ, as a linear presentation for
/// words. A leaf or added vertex of weight w contributes w when selected.
inline LinearPresentation<Natural> count_is_presentation(int k, const Alphabet& alphabet = {}) {
    detail::check_builtin(k, alphabet);
    using Entry = Table<Natural>::Entry;
    const std::size_t m = std::size_t{1} << k;
    LinearPresentation<Natural> lp;
    lp.k = k;
    lp.m = m;
    auto unit = [m](std::size_t at) {
        Vector<Natural> v(m, 0);
        v[at] = 1;
        return v;
    };
    auto identity = detail::rule_table<Natural>(m, m, [](std::size_t src, std::vector<Entry>& out) {
        out.emplace_back(static_cast<std::uint32_t>(src), 1);
    });
    auto select = [m](std::uint32_t c, int i, int j) {
        return detail::rule_table<Natural>(m, m, [c, i, j](std::size_t src, std::vector<Entry>& out) {
            const auto s = static_cast<std::uint32_t>(src) | c;
            if (i == 0 || !detail::joined(s, i, j)) out.emplace_back(s, 1);
        });
    };
    auto keep_unjoined = [m](int i, int j) {
        return detail::rule_table<Natural>(m, m, [i, j](std::size_t src, std::vector<Entry>& out) {
            const auto s = static_cast<std::uint32_t>(src);
            if (!detail::joined(s, i, j)) out.emplace_back(s, 1);
        });
    };
    for (int c = 0; c <= k; ++c) {
        const ColorSet cs = c == 0 ? ColorSet{} : ColorSet{c};
        lp.init[cs] = {unit(0), unit(cs.bits())};
        lp.add[cs] = {identity, select(cs.bits(), 0, 0)};
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                lp.small_join[{i, j, cs}] = {keep_unjoined(i, j), select(cs.bits(), i, j)};
    }
    for (const auto& rho : alphabet.recolorings)
        lp.recolor[rho.name()] = detail::rule_table<Natural>(m, m, [rho](std::size_t src, std::vector<Entry>& out) {
            out.emplace_back(detail::recolor_state(rho, static_cast<std::uint32_t>(src)), 1);
        });
    lp.out.assign(m, 1);
    return lp;
}

}  // namespace tga
