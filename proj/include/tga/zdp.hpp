#pragma once

// Dynamic program for the tropical partition function Z_H on plain
// expressions. A state records, for every color c and target vertex a, how
// many vertices of color c are mapped to a; a join of colors i and j then adds
// count(i,a)·count(j,b)·β(a,b) over all target pairs. Uncolored vertices are
// no longer joinable and only contribute their α term.

#include "tga/error.hpp"
#include "tga/expr.hpp"
#include "tga/params.hpp"
#include "tga/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace tga {

inline constexpr std::size_t kZStateCap = 200'000;

inline Tropical eval_zH(const CwExpr& e, const WeightedTargetGraph& H, EvalStats* stats = nullptr,
                        std::size_t state_cap = kZStateCap) {
    if (!is_plain(e))
        throw UnsupportedError("the Z_H program needs a single-colored expression in which no join repeats an edge");
    const std::size_t h = H.n;
    if (h == 0) return Tropical::neg_inf();
    const int k = std::max(e.max_color(), 1);
    const std::size_t slots = static_cast<std::size_t>(k) * h;
    using State = std::vector<std::uint32_t>;
    using Table = std::map<State, Rational>;
    std::uint64_t ops = 0;

    auto put = [&](Table& t, State s, const Rational& v) {
        auto [it, fresh] = t.try_emplace(std::move(s), v);
        if (!fresh && it->second < v) it->second = v;
        ++ops;
        if (t.size() > state_cap)
            throw ResourceError("Z_H state space exceeds " + std::to_string(state_cap) + " states");
    };
    auto slot = [h](int c, std::size_t a) { return static_cast<std::size_t>(c - 1) * h + a; };

    std::vector<Table> stack;
    for (const auto& n : e.nodes()) {
        switch (n.kind) {
            case NodeKind::leaf: {
                Table t;
                for (std::size_t a = 0; a < h; ++a) {
                    State s(slots, 0);
                    if (!n.colors.empty()) s[slot(n.colors.max_color(), a)] = 1;
                    put(t, std::move(s), H.alpha[a]);
                }
                stack.push_back(std::move(t));
                break;
            }
            case NodeKind::unite:
            case NodeKind::join: {
                Table right = std::move(stack.back());
                stack.pop_back();
                Table left = std::move(stack.back());
                Table merged;
                for (const auto& [s1, v1] : left)
                    for (const auto& [s2, v2] : right) {
                        State s(slots);
                        for (std::size_t x = 0; x < slots; ++x) s[x] = s1[x] + s2[x];
                        Rational v = v1 + v2;
                        bool ok = true;
                        if (n.kind == NodeKind::join && n.i <= k && n.j <= k) {
                            for (std::size_t a = 0; a < h && ok; ++a) {
                                const std::uint32_t ci = s[slot(n.i, a)];
                                if (ci == 0) continue;
                                for (std::size_t b = 0; b < h; ++b) {
                                    const std::uint32_t cj = s[slot(n.j, b)];
                                    if (cj == 0) continue;
                                    const Rational* w = H.edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
                                    if (!w) {
                                        ok = false;
                                        break;
                                    }
                                    v = v + Rational(static_cast<std::int64_t>(ci) * cj) * *w;
                                }
                            }
                        }
                        if (ok) put(merged, std::move(s), v);
                    }
                stack.back() = std::move(merged);
                break;
            }
            case NodeKind::recolor: {
                const Recoloring& rho = e.recolorings()[n.rho];
                if (rho.is_identity()) break;
                Table next;
                for (const auto& [s1, v] : stack.back()) {
                    State s(slots, 0);
                    for (int c = 1; c <= k; ++c) {
                        const ColorSet to = rho(ColorSet{c});
                        for (std::size_t a = 0; a < h; ++a) {
                            if (s1[slot(c, a)] == 0) continue;
                            if (to.size() > 1) throw UnsupportedError("recoloring " + rho.name() + " creates multi-colored vertices");
                            if (to.max_color() > k) throw UnsupportedError("recoloring " + rho.name() + " exceeds the expression's colors");
                            if (!to.empty()) s[slot(to.max_color(), a)] += s1[slot(c, a)];
                        }
                    }
                    put(next, std::move(s), v);
                }
                stack.back() = std::move(next);
                break;
            }
        }
    }
    if (stats) {
        stats->nodes = e.size();
        stats->ops = ops;
    }
    std::optional<Rational> best;
    for (const auto& [s, v] : stack.back())
        if (!best || *best < v) best = v;
    return best ? Tropical(*best) : Tropical::neg_inf();
}

}  // namespace tga
