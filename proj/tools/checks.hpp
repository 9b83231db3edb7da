#pragma once

// Property suites run by `tga check`. Each property draws its cases from a
// seed derived from (suite seed, property name, case index), so results do
// not depend on which properties run or in what order.

#include "tga/tga.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tga::checks {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t case_seed(std::uint64_t seed, std::string_view property, std::uint64_t index) {
    std::uint64_t h = seed;
    for (char c : property) h = splitmix64(h ^ static_cast<unsigned char>(c));
    return splitmix64(h + index);
}

using Rng = std::mt19937_64;
// A case returns a counterexample description, or nothing when it holds.
using Case = std::function<std::optional<std::string>(Rng&)>;

struct Property {
    std::string suite;
    std::string name;
    Case run;
};

struct Outcome {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;
    std::uint64_t failing_seed = 0;
};

namespace detail {

inline ColoredGraph random_graph(Rng& rng, int k, std::size_t n, bool multi_colored) {
    ColoredGraph g(k, n);
    for (Vertex v = 0; v < n; ++v) {
        if (k == 0) break;
        if (multi_colored) {
            g.set_colors(v, ColorSet::from_bits(static_cast<std::uint32_t>(rng() % (1u << k))));
        } else if (auto c = static_cast<int>(rng() % static_cast<unsigned>(k + 1)); c > 0) {
            g.set_colors(v, ColorSet{c});
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}

inline ColoredGraph random_labeled(Rng& rng, int k, std::size_t n) {
    ColoredGraph g = random_graph(rng, 0, n, false).with_k(k);
    for (int i = 1; i <= k && n > 0; ++i) {
        if (rng() % 3 == 0) continue;
        auto v = static_cast<Vertex>(rng() % n);
        ColorSet c = g.colors(v);
        c.insert(i);
        g.set_colors(v, c);
    }
    return g;
}

inline CwExpr random_expr(Rng& rng, int k, std::size_t leaves, bool weights) {
    ExprBuilder b;
    std::vector<ExprBuilder::Id> pool;
    auto color = [&] {
        auto c = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
        return c == 0 ? ColorSet{} : ColorSet{c};
    };
    for (std::size_t i = 0; i < leaves; ++i) {
        std::optional<Rational> w;
        if (weights && rng() % 2) w = Rational(static_cast<std::int64_t>(rng() % 7) - 2);
        pool.push_back(b.leaf(color(), w));
    }
    while (pool.size() > 1) {
        const std::size_t x = rng() % pool.size();
        if (rng() % 4 == 0) {
            pool[x] = b.recolor(Recoloring({{ColorSet{1 + static_cast<int>(rng() % k)}, color()}}), pool[x]);
            continue;
        }
        std::size_t y = rng() % pool.size();
        if (y == x) y = (x + 1) % pool.size();
        ExprBuilder::Id node;
        if (k < 2 || rng() % 3 == 0) {
            node = b.unite(pool[x], pool[y]);
        } else {
            const int i = 1 + static_cast<int>(rng() % k);
            int j = 1 + static_cast<int>(rng() % (k - 1));
            if (j >= i) ++j;
            node = b.join(i, j, pool[x], pool[y]);
        }
        pool[x] = node;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(y));
    }
    return b.build(pool.front());
}

inline std::string graph_text(const ColoredGraph& g) {
    std::string s = write_graph(g);
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

template <Semiring S>
Value<S> random_value(Rng& rng) {
    if constexpr (TropicalSemiring<S>) {
        if (rng() % 6 == 0) return S::zero();
        return Tropical(Rational(static_cast<std::int64_t>(rng() % 21) - 10, 1 + rng() % 3));
    } else if constexpr (std::same_as<S, Natural>) {
        return rng() % 50;
    } else if constexpr (std::same_as<S, RationalField>) {
        return Rational(static_cast<std::int64_t>(rng() % 21) - 10, 1 + rng() % 4);
    } else {
        return rng() % 2 == 0;
    }
}

template <Semiring S>
std::optional<std::string> semiring_axioms(Rng& rng) {
    const auto a = random_value<S>(rng);
    const auto b = random_value<S>(rng);
    const auto c = random_value<S>(rng);
    auto show = [&] { return std::string(S::name) + " a=" + S::to_string(a) + " b=" + S::to_string(b) + " c=" + S::to_string(c); };
    if (S::plus(a, b) != S::plus(b, a)) return show() + ": plus not commutative";
    if (S::times(a, b) != S::times(b, a)) return show() + ": times not commutative";
    if (S::plus(S::plus(a, b), c) != S::plus(a, S::plus(b, c))) return show() + ": plus not associative";
    if (S::times(S::times(a, b), c) != S::times(a, S::times(b, c))) return show() + ": times not associative";
    if (S::times(a, S::plus(b, c)) != S::plus(S::times(a, b), S::times(a, c))) return show() + ": not distributive";
    if (S::plus(a, S::zero()) != a || S::times(a, S::one()) != a) return show() + ": units";
    if (S::times(a, S::zero()) != S::zero()) return show() + ": zero not absorbing";
    return std::nullopt;
}

}  // namespace detail

inline std::vector<Property> all_properties() {
    using detail::graph_text;
    std::vector<Property> ps;

    ps.push_back({"semiring", "maxplus_axioms", detail::semiring_axioms<MaxPlus>});
    ps.push_back({"semiring", "minplus_axioms", detail::semiring_axioms<MinPlus>});
    ps.push_back({"semiring", "nat_axioms", detail::semiring_axioms<Natural>});
    ps.push_back({"semiring", "rat_axioms", detail::semiring_axioms<RationalField>});

    ps.push_back({"linalg", "solvable_systems_reproduce", [](Rng& rng) -> std::optional<std::string> {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 5;
        std::vector<std::vector<Tropical>> m(rows, std::vector<Tropical>(cols));
        for (auto& r : m)
            for (auto& x : r) x = rng() % 5 == 0 ? Tropical::neg_inf() : Tropical(static_cast<std::int64_t>(rng() % 11) - 5);
        std::vector<Tropical> target(cols, Tropical::neg_inf());
        for (std::size_t i = 0; i < rows; ++i) {
            const Tropical c = rng() % 4 == 0 ? Tropical::neg_inf() : Tropical(static_cast<std::int64_t>(rng() % 7) - 3);
            for (std::size_t j = 0; j < cols; ++j) accumulate<MaxPlus>(target[j], MaxPlus::times(c, m[i][j]));
        }
        if (std::all_of(target.begin(), target.end(), [](const Tropical& t) { return t.is_neg_inf(); })) return std::nullopt;
        auto x = solve_combination<MaxPlus>(m, target);
        if (!x) return "constructed system reported unsolvable";
        std::vector<Tropical> got(cols, Tropical::neg_inf());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) accumulate<MaxPlus>(got[j], MaxPlus::times((*x)[i], m[i][j]));
        if (got != target) return "returned coefficients do not reproduce the target";
        return std::nullopt;
    }});

    ps.push_back({"graphs", "canonical_form_is_invariant", [](Rng& rng) -> std::optional<std::string> {
        const int k = static_cast<int>(rng() % 3);
        auto g = detail::random_graph(rng, k, rng() % 7, true);
        std::vector<Vertex> perm(g.n());
        for (Vertex v = 0; v < g.n(); ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        ColoredGraph h(k, g.n());
        for (Vertex v = 0; v < g.n(); ++v) h.set_colors(perm[v], g.colors(v));
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        if (canonical_form(g) != canonical_form(h)) return "relabeling changed the canonical form of " + graph_text(g);
        return std::nullopt;
    }});
    ps.push_back({"graphs", "operations_commute_and_associate", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 2);
        auto a = detail::random_graph(rng, k, rng() % 4, true);
        auto b = detail::random_graph(rng, k, rng() % 4, true);
        auto c = detail::random_graph(rng, k, rng() % 4, true);
        auto where = [&] { return graph_text(a) + " | " + graph_text(b) + " | " + graph_text(c); };
        if (!is_isomorphic(disjoint_union(a, b), disjoint_union(b, a))) return "union not commutative: " + where();
        if (!is_isomorphic(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c))))
            return "union not associative: " + where();
        if (k == 2) {
            if (!is_isomorphic(join(1, 2, a, b), join(1, 2, b, a))) return "join not commutative: " + where();
            if (!is_isomorphic(join(1, 2, join(1, 2, a, b), c), join(1, 2, a, join(1, 2, b, c))))
                return "join not associative: " + where();
        }
        auto la = detail::random_labeled(rng, k, rng() % 4);
        auto lb = detail::random_labeled(rng, k, rng() % 4);
        auto lc = detail::random_labeled(rng, k, rng() % 4);
        if (!is_isomorphic(glue_colored(la, lb), glue_colored(lb, la))) return "glue not commutative";
        if (!is_isomorphic(glue_colored(glue_colored(la, lb), lc), glue_colored(la, glue_colored(lb, lc))))
            return "glue not associative";
        return std::nullopt;
    }});
    ps.push_back({"graphs", "glued_graphs_have_small_separators", [](Rng& rng) -> std::optional<std::string> {
        const int k = static_cast<int>(rng() % 3);
        auto a = detail::random_labeled(rng, k, 1 + rng() % 4);
        auto b = detail::random_labeled(rng, k, 1 + rng() % 4);
        // Both operands must keep a vertex outside the shared labels.
        if (a.n() <= static_cast<std::size_t>(a.used_colors().size()) || b.n() <= static_cast<std::size_t>(b.used_colors().size())) return std::nullopt;
        const auto g = glue(LabeledGraph::from_colored(a), LabeledGraph::from_colored(b)).graph();
        if (is_k_connected(g, static_cast<std::size_t>(k))) return "glue result is (k+1)-connected: " + graph_text(g);
        return std::nullopt;
    }});

    ps.push_back({"expr", "parse_serialize_round_trip", [](Rng& rng) -> std::optional<std::string> {
        auto e = detail::random_expr(rng, 1 + static_cast<int>(rng() % 3), 1 + rng() % 10, true);
        const auto text = serialize_expr(e);
        if (!(parse_expr(text) == e)) return "round trip changed " + text;
        return std::nullopt;
    }});
    ps.push_back({"expr", "words_agree_with_trees", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 3);
        auto e = detail::random_expr(rng, k, 1 + rng() % 8, false);
        auto w = as_linear(e);
        if (!w) return std::nullopt;
        if (!is_isomorphic(eval_word(*w, k), eval_expr(e, k))) return "word and tree differ: " + serialize_expr(e);
        return std::nullopt;
    }});

    ps.push_back({"engine", "mis_matches_oracle", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 3);
        auto e = detail::random_expr(rng, k, 1 + rng() % 12, true);
        const auto p = mis_presentation(k, alphabet_of(e));
        std::vector<Rational> w;
        for (const auto& x : leaf_weights(e)) w.push_back(x.value_or(Rational(1)));
        const auto got = eval_presentation<MaxPlus>(e, p);
        const Tropical want(weighted_alpha_brute(eval_expr(e, k), w));
        if (got != want) return serialize_expr(e) + ": presentation " + got.to_string() + ", oracle " + want.to_string();
        return std::nullopt;
    }});
    ps.push_back({"engine", "count_matches_oracle", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 3);
        auto e = detail::random_expr(rng, k, 1 + rng() % 10, false);
        auto w = as_linear(e);
        if (!w) return std::nullopt;
        const auto got = eval_linear<Natural>(*w, count_is_presentation(k, alphabet_of(e)));
        const auto want = count_independent_sets(eval_expr(e, k));
        if (got != want) return serialize_expr(e) + ": word " + std::to_string(got) + ", oracle " + std::to_string(want);
        return std::nullopt;
    }});
    ps.push_back({"engine", "linear_matches_tree", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 3);
        auto e = detail::random_expr(rng, k, 1 + rng() % 10, true);
        auto w = as_linear(e);
        if (!w) return std::nullopt;
        const auto p = mis_presentation(k, alphabet_of(e));
        if (eval_linear<MaxPlus>(*w, curry(p, alphabet_of(e))) != eval_presentation<MaxPlus>(e, p))
            return "curried evaluation differs on " + serialize_expr(e);
        return std::nullopt;
    }});
    ps.push_back({"engine", "zH_matches_oracle", [](Rng& rng) -> std::optional<std::string> {
        const int k = 1 + static_cast<int>(rng() % 3);
        auto e = detail::random_expr(rng, k, 1 + rng() % 7, false);
        if (!is_plain(e)) return std::nullopt;
        WeightedTargetGraph h(1 + rng() % 3);
        for (std::size_t a = 0; a < h.n; ++a) h.alpha[a] = Rational(static_cast<std::int64_t>(rng() % 5) - 2);
        for (std::size_t a = 0; a < h.n; ++a)
            for (std::size_t b = a; b < h.n; ++b)
                if (rng() % 3)
                    h.set_edge(static_cast<Vertex>(a), static_cast<Vertex>(b), Rational(static_cast<std::int64_t>(rng() % 5) - 2));
        const auto got = eval_zH(e, h);
        const auto want = z_partition_brute(eval_expr(e, k), h);
        if (got != want) return serialize_expr(e) + " with H " + write_target_graph(h) + ": dp " + got.to_string() + ", oracle " + want.to_string();
        return std::nullopt;
    }});

    ps.push_back({"hankel", "commutative_operations_are_symmetric", [](Rng& rng) -> std::optional<std::string> {
        const auto A = UltimatelyPeriodicSet({1, 1 + rng() % 4});
        const std::size_t k0 = rng() % 2;
        GraphParameter<MaxPlus> f = [&](const ColoredGraph& g) { return f_A<MaxPlus>(g, k0, A); };
        const HankelShape shapes[] = {{HankelOp::glue, 1}, {HankelOp::unite, 1}, {HankelOp::join, 2, 1, 2}};
        const auto& shape = shapes[rng() % 3];
        auto h = build_hankel<MaxPlus>(f, "fA", shape, 2);
        if (!h.symmetric()) return shape.name() + " matrix of fA " + A.to_string() + " is not symmetric";
        return std::nullopt;
    }});
    ps.push_back({"hankel", "ranks_nondecreasing", [](Rng& rng) -> std::optional<std::string> {
        const auto A = UltimatelyPeriodicSet({1, 2 + rng() % 3});
        const std::size_t k0 = rng() % 2;
        GraphParameter<MaxPlus> f = [&](const ColoredGraph& g) { return f_A<MaxPlus>(g, k0, A); };
        auto rep = rank_report<MaxPlus>(f, "fA", HankelShape{HankelOp::glue, static_cast<int>(rng() % 2)}, {0, 1, 2, 3});
        for (std::size_t x = 1; x < rep.ranks.size(); ++x)
            if (rep.ranks[x] < rep.ranks[x - 1]) return "rank decreased for fA " + A.to_string();
        return std::nullopt;
    }});
    ps.push_back({"hankel", "fA_two_rows_generate_over_rat", [](Rng& rng) -> std::optional<std::string> {
        std::set<std::uint64_t> members{1};
        for (int x = 0; x < 2; ++x) members.insert(2 + rng() % 4);
        const UltimatelyPeriodicSet A(members, rng() % 2 ? 4 : 0, rng() % 2 ? 2 : 0);
        const std::size_t k0 = rng() % 3;
        GraphParameter<RationalField> f = [&](const ColoredGraph& g) { return f_A<RationalField>(g, k0, A); };
        auto h = build_hankel<RationalField>(f, "fA", HankelShape{HankelOp::glue, 0}, 4);
        const std::vector<std::size_t> rows{*h.find(ColoredGraph(0, 1)), *h.find(ColoredGraph(0))};
        if (!check_generators<RationalField>(h, rows)) return "rows of K1 and the empty graph do not generate fA " + A.to_string();
        return std::nullopt;
    }});
    return ps;
}

inline std::vector<std::string> suite_names() { return {"semiring", "linalg", "graphs", "expr", "engine", "hankel"}; }

/// Runs the properties of `suite` ("all" for every suite); stops a property
/// at its first counterexample.
inline std::vector<Outcome> run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases) {
    std::vector<Outcome> out;
    for (const auto& p : all_properties()) {
        if (suite != "all" && p.suite != suite) continue;
        Outcome o;
        o.suite = p.suite;
        o.name = p.name;
        for (std::size_t c = 0; c < cases; ++c) {
            const auto s = case_seed(seed, p.suite + "/" + p.name, c);
            Rng rng(s);
            ++o.cases;
            if (auto cx = p.run(rng)) {
                o.counterexample = std::move(cx);
                o.failing_seed = s;
                break;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace tga::checks
