#pragma once

// Expressions for standard graph families. All of them are linear (every
// binary node has a leaf on the right) except cograph_random, and every vertex
// carries exactly one color.
//
//   path      3 colors: 1 interior, 2 growing end, 3 new vertex
//   cycle     4 colors: 1 first vertex, 2 growing end, 3 interior, 4 new vertex
//   complete  2 colors: 1 placed, 2 new vertex
//   complete_bipartite, star
//             3 colors: 1 left side, 2 new right vertex, 3 placed right side
//   cograph_random
//             2 colors: every vertex rests at color 1; a join temporarily
//             moves its right operand to color 2

#include "tga/expr.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tga {

enum class Family { path, cycle, complete, complete_bipartite, cograph_random, star };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::cograph_random: return "cograph_random";
        case Family::star: return "star";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite,
                     Family::cograph_random, Family::star})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
    Family family = Family::path;
    std::size_t n = 1;   // vertex count; left side for complete_bipartite
    std::size_t m = 0;   // right side for complete_bipartite (0 means n)
    std::uint64_t seed = 0;
};

/// Colors the generated expression uses.
inline int family_colors(Family f) {
    switch (f) {
        case Family::path: return 3;
        case Family::cycle: return 4;
        case Family::complete: return 2;
        case Family::complete_bipartite:
        case Family::star: return 3;
        case Family::cograph_random: return 2;
    }
    return 0;
}

namespace detail {

inline Recoloring rules(std::initializer_list<std::pair<int, int>> moves) {
    std::map<ColorSet, ColorSet> m;
    for (auto [from, to] : moves) m[ColorSet{from}] = ColorSet{to};
    return Recoloring(std::move(m));
}

inline ExprBuilder::Id build_path(ExprBuilder& b, std::size_t n) {
    auto acc = b.leaf({2});
    const Recoloring shift = rules({{2, 1}, {3, 2}});
    for (std::size_t t = 1; t < n; ++t) acc = b.recolor(shift, b.join(2, 3, acc, b.leaf({3})));
    return acc;
}

inline ExprBuilder::Id build_cycle(ExprBuilder& b, std::size_t n) {
    if (n == 1) return b.leaf({1});
    if (n == 2) return b.join(1, 2, b.leaf({1}), b.leaf({2}));
    auto acc = b.recolor(rules({{4, 2}}), b.join(1, 4, b.leaf({1}), b.leaf({4})));
    const Recoloring shift = rules({{2, 3}, {4, 2}});
    for (std::size_t t = 2; t + 1 < n; ++t) acc = b.recolor(shift, b.join(2, 4, acc, b.leaf({4})));
    // Close the cycle: the last vertex sees both the first vertex and the end.
    acc = b.recolor(rules({{2, 1}}), acc);
    return b.join(1, 4, acc, b.leaf({4}));
}

inline ExprBuilder::Id build_complete(ExprBuilder& b, std::size_t n) {
    auto acc = b.leaf({1});
    const Recoloring settle = rules({{2, 1}});
    for (std::size_t t = 1; t < n; ++t) acc = b.recolor(settle, b.join(1, 2, acc, b.leaf({2})));
    return acc;
}

inline ExprBuilder::Id build_bipartite(ExprBuilder& b, std::size_t left, std::size_t right) {
    auto acc = b.leaf({1});
    for (std::size_t t = 1; t < left; ++t) acc = b.unite(acc, b.leaf({1}));
    const Recoloring settle = rules({{2, 3}});
    for (std::size_t t = 0; t < right; ++t) acc = b.recolor(settle, b.join(1, 2, acc, b.leaf({2})));
    return acc;
}

// Random cotree: repeatedly merge two random subtrees by union or complete join.
inline ExprBuilder::Id build_cograph(ExprBuilder& b, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ExprBuilder::Id> pool;
    pool.reserve(n);
    for (std::size_t v = 0; v < n; ++v) pool.push_back(b.leaf({1}));
    const Recoloring to2 = rules({{1, 2}});
    const Recoloring to1 = rules({{2, 1}});
    while (pool.size() > 1) {
        std::size_t x = rng() % pool.size();
        std::swap(pool[x], pool.back());
        ExprBuilder::Id right = pool.back();
        pool.pop_back();
        std::size_t y = rng() % pool.size();
        ExprBuilder::Id left = pool[y];
        if (rng() & 1u) {
            pool[y] = b.unite(left, right);
        } else {
            pool[y] = b.recolor(to1, b.join(1, 2, left, b.recolor(to2, right)));
        }
    }
    return pool.front();
}

}  // namespace detail

inline CwExpr generate(const FamilySpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("family size must be at least 1");
    ExprBuilder b;
    ExprBuilder::Id root = 0;
    switch (spec.family) {
        case Family::path: root = detail::build_path(b, spec.n); break;
        case Family::cycle: root = detail::build_cycle(b, spec.n); break;
        case Family::complete: root = detail::build_complete(b, spec.n); break;
        case Family::complete_bipartite:
            root = detail::build_bipartite(b, spec.n, spec.m == 0 ? spec.n : spec.m);
            break;
        case Family::star:
            root = spec.n == 1 ? b.leaf({1}) : detail::build_bipartite(b, 1, spec.n - 1);
            break;
        case Family::cograph_random: root = detail::build_cograph(b, spec.n, spec.seed); break;
    }
    return b.build(root);
}

/// Vertex count of the graph generate(spec) denotes.
inline std::size_t family_size(const FamilySpec& spec) {
    if (spec.family == Family::complete_bipartite) return spec.n + (spec.m == 0 ? spec.n : spec.m);
    return spec.n;
}

}  // namespace tga
