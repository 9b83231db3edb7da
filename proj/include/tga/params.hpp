#pragma once

// Brute-force graph parameters. These are the oracles every fast evaluator is
// checked against, so they favour obviously-correct exhaustive search.

#include "tga/connectivity.hpp"
#include "tga/error.hpp"
#include "tga/graph.hpp"
#include "tga/graph_io.hpp"
#include "tga/rational.hpp"
#include "tga/semiring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tga {

inline constexpr std::size_t kBruteMaxVertices = 25;

namespace detail {

inline void check_brute_guard(const ColoredGraph& g, std::size_t max_n) {
    if (g.n() > max_n || g.n() > 63)
        throw ResourceError("brute-force guard exceeded: " + std::to_string(g.n()) + " > " + std::to_string(max_n) +
                            " vertices");
}

inline std::vector<std::uint64_t> neighbor_masks(const ColoredGraph& g) {
    std::vector<std::uint64_t> out(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) out[v] |= std::uint64_t{1} << w;
    return out;
}

// Maximum weight of an independent subset of `mask`. Branches on a vertex of
// maximum degree inside the mask; isolated vertices are decided greedily.
inline Rational max_weight_is(std::uint64_t mask, const std::vector<std::uint64_t>& nbr,
                              const std::vector<Rational>& w) {
    Rational free_gain(0);
    std::uint64_t rest = mask;
    int best_v = -1;
    int best_deg = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int deg = std::popcount(nbr[v] & mask);
        if (deg == 0) {
            if (w[v] > Rational(0)) free_gain = free_gain + w[v];
            rest &= ~(std::uint64_t{1} << v);
        } else if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    if (best_v < 0) return free_gain;
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    Rational skip = max_weight_is(rest & ~bit, nbr, w);
    Rational take = w[best_v] + max_weight_is(rest & ~bit & ~nbr[best_v], nbr, w);
    return free_gain + std::max(skip, take);
}

// Σ over independent subsets I of `mask` of Π_{v∈I} w(v).
template <class T, class Mul, class Add>
T weighted_is_count(std::uint64_t mask, const std::vector<std::uint64_t>& nbr, const std::vector<T>& w,
                    const T& one, Mul mul, Add add) {
    if (mask == 0) return one;
    int v = std::countr_zero(mask);
    const std::uint64_t bit = std::uint64_t{1} << v;
    T skip = weighted_is_count(mask & ~bit, nbr, w, one, mul, add);
    T take = mul(w[v], weighted_is_count(mask & ~bit & ~nbr[v], nbr, w, one, mul, add));
    return add(skip, take);
}

inline std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace detail

/// Maximum total weight of an independent set (the empty set counts, so the
/// result is at least 0).
inline Rational weighted_alpha_brute(const ColoredGraph& g, const std::vector<Rational>& weights,
                                     std::size_t max_n = kBruteMaxVertices) {
    detail::check_brute_guard(g, max_n);
    if (weights.size() != g.n()) throw std::invalid_argument("weight list length differs from vertex count");
    return detail::max_weight_is(detail::full_mask(g.n()), detail::neighbor_masks(g), weights);
}

/// Independence number as a max-plus value.
inline Tropical alpha_brute(const ColoredGraph& g, std::size_t max_n = kBruteMaxVertices) {
    return Tropical(weighted_alpha_brute(g, std::vector<Rational>(g.n(), Rational(1)), max_n));
}

/// Clique number as a max-plus value.
inline Tropical omega_brute(const ColoredGraph& g, std::size_t max_n = kBruteMaxVertices) {
    detail::check_brute_guard(g, max_n);
    return alpha_brute(complement(g), max_n);
}

/// Number of independent sets, the empty set included.
inline std::uint64_t count_independent_sets(const ColoredGraph& g, std::size_t max_n = kBruteMaxVertices) {
    detail::check_brute_guard(g, max_n);
    std::vector<std::uint64_t> w(g.n(), 1);
    return detail::weighted_is_count<std::uint64_t>(
        detail::full_mask(g.n()), detail::neighbor_masks(g), w, 1, Natural::times, Natural::plus);
}

/// Σ_I Π_{v∈I} w(v) over independent sets I, over natural weights.
inline std::uint64_t weighted_count_independent_sets(const ColoredGraph& g, const std::vector<std::uint64_t>& w,
                                                     std::size_t max_n = kBruteMaxVertices) {
    detail::check_brute_guard(g, max_n);
    if (w.size() != g.n()) throw std::invalid_argument("weight list length differs from vertex count");
    return detail::weighted_is_count<std::uint64_t>(
        detail::full_mask(g.n()), detail::neighbor_masks(g), w, 1, Natural::times, Natural::plus);
}

// ---------------------------------------------------------------------------
// Ultimately periodic subsets of ℕ.

class UltimatelyPeriodicSet {
public:
    UltimatelyPeriodicSet() = default;
    UltimatelyPeriodicSet(std::set<std::uint64_t> explicit_members, std::uint64_t threshold = 0,
                          std::uint64_t period = 0)
        : explicit_(std::move(explicit_members)), threshold_(threshold), period_(period) {}

    static UltimatelyPeriodicSet all() { return UltimatelyPeriodicSet({0}, 0, 1); }

    bool contains(std::uint64_t n) const {
        if (explicit_.contains(n)) return true;
        if (period_ == 0 || n < threshold_) return false;
        const std::uint64_t r = (n - threshold_) % period_;
        return explicit_.contains(threshold_ + r);
    }

    const std::set<std::uint64_t>& explicit_members() const noexcept { return explicit_; }
    std::uint64_t threshold() const noexcept { return threshold_; }
    std::uint64_t period() const noexcept { return period_; }

    /// `{a,b,...}` with an optional `+p@t` tail: beyond t, membership repeats
    /// with period p the pattern of the explicit members in [t, t+p). `all` is ℕ.
    static UltimatelyPeriodicSet parse(std::string_view text) {
        auto fail = [&](const std::string& why) -> UltimatelyPeriodicSet {
            throw ParseError("bad set '" + std::string(text) + "': " + why, 1, 1);
        };
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s += c;
        if (s == "all") return all();
        if (s.empty() || s.front() != '{') return fail("expected '{'");
        auto close = s.find('}');
        if (close == std::string::npos) return fail("expected '}'");
        std::set<std::uint64_t> members;
        auto parse_nat = [&](std::string_view tok) {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
                fail("expected a natural number, found '" + std::string(tok) + "'");
            return v;
        };
        std::string_view body(s.data() + 1, close - 1);
        while (!body.empty()) {
            auto comma = body.find(',');
            members.insert(parse_nat(body.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        std::string_view tail(s.data() + close + 1, s.size() - close - 1);
        if (tail.empty()) return UltimatelyPeriodicSet(std::move(members));
        if (tail.front() != '+') return fail("expected '+p@t' tail");
        auto at = tail.find('@');
        if (at == std::string_view::npos) return fail("expected '@' in tail");
        std::uint64_t p = parse_nat(tail.substr(1, at - 1));
        std::uint64_t t = parse_nat(tail.substr(at + 1));
        return UltimatelyPeriodicSet(std::move(members), t, p);
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (auto v : explicit_) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += '}';
        if (period_ > 0) out += "+" + std::to_string(period_) + "@" + std::to_string(threshold_);
        return out;
    }

    friend bool operator==(const UltimatelyPeriodicSet&, const UltimatelyPeriodicSet&) = default;

private:
    std::set<std::uint64_t> explicit_;
    std::uint64_t threshold_ = 0;
    std::uint64_t period_ = 0;
};

// ---------------------------------------------------------------------------
// f_A and g_A^r.

/// What f_A and g_A^r report when their predicate fails.
enum class ElseValue {
    integer_zero,   // the number 0 embedded in the carrier (default)
    semiring_zero,  // the ⊕-unit: −∞ in max-plus, 0 in ℕ and ℚ
};

template <Semiring S>
Value<S> else_value(ElseValue e) {
    return e == ElseValue::semiring_zero ? S::zero() : S::from_rational(Rational(0));
}

/// |V(G)| if G is (k0+1)-connected and |V(G)| ∈ A.
template <Semiring S>
Value<S> f_A(const ColoredGraph& g, std::size_t k0, const UltimatelyPeriodicSet& A,
             ElseValue else_v = ElseValue::integer_zero) {
    if (A.contains(g.n()) && is_k_connected(g, k0)) return S::from_rational(Rational(static_cast<std::int64_t>(g.n())));
    return else_value<S>(else_v);
}

/// |V(G)| if G is r-regular, connected and |V(G)| ∈ A.
template <Semiring S>
Value<S> g_Ar(const ColoredGraph& g, std::size_t r, const UltimatelyPeriodicSet& A,
              ElseValue else_v = ElseValue::integer_zero) {
    if (A.contains(g.n()) && is_r_regular(g, r) && is_connected(g))
        return S::from_rational(Rational(static_cast<std::int64_t>(g.n())));
    return else_value<S>(else_v);
}

// ---------------------------------------------------------------------------
// Weighted target graphs and the tropical partition function.

struct WeightedTargetGraph {
    std::size_t n = 0;
    std::vector<Rational> alpha;                          // vertex weights, default 0
    std::map<std::pair<Vertex, Vertex>, Rational> beta;  // keys (a,b) with a ≤ b; these are the edges

    explicit WeightedTargetGraph(std::size_t n_ = 0) : n(n_), alpha(n_, Rational(0)) {}

    void set_edge(Vertex a, Vertex b, Rational w) {
        if (a >= n || b >= n) throw std::out_of_range("target vertex out of range");
        beta[{std::min(a, b), std::max(a, b)}] = w;
    }

    const Rational* edge(Vertex a, Vertex b) const {
        auto it = beta.find({std::min(a, b), std::max(a, b)});
        return it == beta.end() ? nullptr : &it->second;
    }

    friend bool operator==(const WeightedTargetGraph&, const WeightedTargetGraph&) = default;
};

/// `h <n>`, then `a <v> <rational>` and `b <u> <v> <rational>` lines (u = v is a loop).
inline WeightedTargetGraph read_target_graph(std::string_view text) {
    std::optional<WeightedTargetGraph> h;
    detail::for_each_line(text, [&](std::size_t line, const std::vector<detail::Token>& t) {
        auto vertex = [&](const detail::Token& tok) {
            long long v = detail::parse_integer(tok, line);
            if (v < 0 || static_cast<std::size_t>(v) >= h->n) throw ParseError("vertex out of range", line, tok.column);
            return static_cast<Vertex>(v);
        };
        auto rational = [&](const detail::Token& tok) {
            try {
                return Rational::parse(tok.text);
            } catch (const std::exception&) {
                throw ParseError("expected a rational, found '" + std::string(tok.text) + "'", line, tok.column);
            }
        };
        if (!h) {
            if (t[0].text != "h" || t.size() != 2) throw ParseError("expected 'h <n>' header", line, t[0].column);
            long long n = detail::parse_integer(t[1], line);
            if (n < 0) throw ParseError("negative vertex count", line, t[1].column);
            h.emplace(static_cast<std::size_t>(n));
            return;
        }
        if (t[0].text == "a" && t.size() == 3) {
            h->alpha[vertex(t[1])] = rational(t[2]);
        } else if (t[0].text == "b" && t.size() == 4) {
            Vertex a = vertex(t[1]);
            Vertex b = vertex(t[2]);
            if (h->edge(a, b)) throw ParseError("duplicate edge", line, t[0].column);
            h->set_edge(a, b, rational(t[3]));
        } else {
            throw ParseError("expected 'a <v> <r>' or 'b <u> <v> <r>'", line, t[0].column);
        }
    });
    if (!h) throw ParseError("missing 'h <n>' header", 1, 1);
    return *h;
}

inline std::string write_target_graph(const WeightedTargetGraph& h) {
    std::ostringstream os;
    os << "h " << h.n << '\n';
    for (std::size_t v = 0; v < h.n; ++v) os << "a " << v << ' ' << h.alpha[v].to_string() << '\n';
    for (const auto& [e, w] : h.beta) os << "b " << e.first << ' ' << e.second << ' ' << w.to_string() << '\n';
    return os.str();
}

inline constexpr std::uint64_t kPartitionBruteMaxMaps = std::uint64_t{1} << 24;

/// max over homomorphisms h: G → H of Σ α(h(v)) + Σ_{uv ∈ E(G)} β(h(u), h(v));
/// −∞ if there is none.
inline Tropical z_partition_brute(const ColoredGraph& g, const WeightedTargetGraph& H,
                                  std::uint64_t max_maps = kPartitionBruteMaxMaps) {
    std::uint64_t maps = 1;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (H.n == 0) break;
        if (maps > max_maps / H.n) throw ResourceError("partition-function guard exceeded");
        maps *= H.n;
    }
    const std::size_t n = g.n();
    std::vector<Vertex> image(n, 0);
    std::optional<Rational> best;
    auto dfs = [&](auto&& self, std::size_t v, const Rational& acc) -> void {
        if (v == n) {
            if (!best || acc > *best) best = acc;
            return;
        }
        for (Vertex a = 0; a < H.n; ++a) {
            Rational value = acc + H.alpha[a];
            bool ok = true;
            for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
                if (u >= v) continue;
                const Rational* w = H.edge(image[u], a);
                if (!w) {
                    ok = false;
                    break;
                }
                value = value + *w;
            }
            if (!ok) continue;
            image[v] = a;
            self(self, v + 1, value);
        }
    };
    dfs(dfs, 0, Rational(0));
    return best ? Tropical(*best) : Tropical::neg_inf();
}

}  // namespace tga
