#pragma once

// Canonical forms for small colored graphs, isomorphism, and enumeration of
// isomorphism classes.

#include "tga/error.hpp"
#include "tga/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tga {

inline constexpr std::size_t kIsomorphismMaxVertices = 10;

/// Text that is equal for two graphs iff they are isomorphic respecting colors.
struct CanonicalForm {
    std::string text;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Encoding of a vertex ordering: for each position, the vertex's color set and
// degree followed by its adjacency to earlier positions. The canonical form is
// the lexicographically least encoding over all orderings.
class Canonizer {
public:
    explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.n()) {
        placed_at_.assign(n_, kUnplaced);
        order_.reserve(n_);
    }

    std::pair<std::string, std::vector<Vertex>> run() {
        std::string prefix = header();
        search(prefix);
        return {best_, best_order_};
    }

private:
    static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

    std::string header() const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "n%zu;k%d;", n_, g_.k());
        return buf;
    }

    std::string symbol(Vertex v) const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04x%04zx", g_.colors(v).bits(), g_.degree(v));
        std::string s = buf;
        for (std::size_t p = 0; p < order_.size(); ++p) s += g_.has_edge(v, order_[p]) ? '1' : '0';
        s += '|';
        return s;
    }

    // u and w are interchangeable: swapping them is an automorphism.
    bool twins(Vertex u, Vertex w) const {
        if (g_.colors(u) != g_.colors(w)) return false;
        const auto& a = g_.neighbors(u);
        const auto& b = g_.neighbors(w);
        std::size_t i = 0, j = 0;
        while (true) {
            while (i < a.size() && a[i] == w) ++i;
            while (j < b.size() && b[j] == u) ++j;
            if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
            if (a[i] != b[j]) return false;
            ++i;
            ++j;
        }
    }

    void search(std::string& prefix) {
        if (!best_.empty()) {
            int cmp = prefix.compare(0, prefix.size(), best_, 0, std::min(prefix.size(), best_.size()));
            if (cmp > 0) return;
        }
        if (order_.size() == n_) {
            if (best_.empty() || prefix < best_) {
                best_ = prefix;
                best_order_ = order_;
            }
            return;
        }
        std::string min_symbol;
        std::vector<Vertex> candidates;
        for (Vertex v = 0; v < n_; ++v) {
            if (placed_at_[v] != kUnplaced) continue;
            std::string s = symbol(v);
            if (candidates.empty() || s < min_symbol) {
                min_symbol = std::move(s);
                candidates.assign(1, v);
            } else if (s == min_symbol) {
                candidates.push_back(v);
            }
        }
        std::vector<Vertex> tried;
        for (Vertex v : candidates) {
            bool redundant = false;
            for (Vertex u : tried)
                if (twins(u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            const std::size_t mark = prefix.size();
            prefix += min_symbol;
            placed_at_[v] = order_.size();
            order_.push_back(v);
            search(prefix);
            order_.pop_back();
            placed_at_[v] = kUnplaced;
            prefix.resize(mark);
        }
    }

    const ColoredGraph& g_;
    std::size_t n_;
    std::vector<std::size_t> placed_at_;
    std::vector<Vertex> order_;
    std::string best_;
    std::vector<Vertex> best_order_;
};

inline void check_iso_guard(const ColoredGraph& g, std::size_t max_n) {
    if (g.n() > max_n)
        throw ResourceError("isomorphism guard exceeded: " + std::to_string(g.n()) + " > " + std::to_string(max_n) +
                            " vertices");
}

}  // namespace detail

/// Canonical form together with the canonically relabeled graph.
struct Canonized {
    CanonicalForm form;
    ColoredGraph graph;
};

inline Canonized canonize(const ColoredGraph& g, std::size_t max_n = kIsomorphismMaxVertices) {
    detail::check_iso_guard(g, max_n);
    auto [text, order] = detail::Canonizer(g).run();
    std::vector<Vertex> position(g.n());
    for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<Vertex>(p);
    ColoredGraph out(g.k(), g.n());
    for (Vertex v = 0; v < g.n(); ++v) out.set_colors(position[v], g.colors(v));
    for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
    return {CanonicalForm{std::move(text)}, std::move(out)};
}

inline CanonicalForm canonical_form(const ColoredGraph& g, std::size_t max_n = kIsomorphismMaxVertices) {
    detail::check_iso_guard(g, max_n);
    return CanonicalForm{detail::Canonizer(g).run().first};
}

inline bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b,
                          std::size_t max_n = kIsomorphismMaxVertices) {
    if (a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, max_n) == canonical_form(b, max_n);
}

// ---------------------------------------------------------------------------
// Enumeration of isomorphism classes.

inline constexpr std::uint64_t kEnumerationRawCap = std::uint64_t{1} << 22;

namespace detail {

inline std::uint64_t raw_graph_count(std::size_t n, std::uint64_t colorings_per_vertex, std::uint64_t cap) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs >= 62) return cap + 1;
    std::uint64_t count = std::uint64_t{1} << pairs;
    for (std::size_t v = 0; v < n; ++v) {
        if (count > cap) return cap + 1;
        count *= colorings_per_vertex;
    }
    return count;
}

template <class EachColoring>
std::vector<ColoredGraph> enumerate_classes(int k, std::size_t max_n, std::uint64_t raw_cap,
                                            std::uint64_t (*raw)(std::size_t, int), EachColoring&& each_coloring) {
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_n; ++n) {
        total += raw(n, k);
        if (total > raw_cap)
            throw ResourceError("enumeration guard exceeded for k=" + std::to_string(k) +
                                ", max_n=" + std::to_string(max_n));
    }
    std::map<std::pair<std::size_t, std::string>, ColoredGraph> classes;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            ColoredGraph base(k, n);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1u) base.add_edge(pairs[e].first, pairs[e].second);
            each_coloring(base, [&](const ColoredGraph& g) {
                auto c = canonize(g, std::max(max_n, kIsomorphismMaxVertices));
                classes.try_emplace({n, std::move(c.form.text)}, std::move(c.graph));
            });
        }
    }
    std::vector<ColoredGraph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace detail

/// One representative per colored-isomorphism class with at most max_n
/// vertices, ordered by (vertex count, canonical form). Index 0 is the empty graph.
inline std::vector<ColoredGraph> enumerate_colored_graphs(int k, std::size_t max_n,
                                                          std::uint64_t raw_cap = kEnumerationRawCap) {
    auto raw = [](std::size_t n, int kk) {
        return detail::raw_graph_count(n, std::uint64_t{1} << kk, kEnumerationRawCap * 1024);
    };
    return detail::enumerate_classes(
        k, max_n, raw_cap, +raw, [k](const ColoredGraph& base, auto&& emit) {
            const std::size_t n = base.n();
            const std::uint32_t subsets = 1u << k;
            std::vector<std::uint32_t> digits(n, 0);
            while (true) {
                ColoredGraph g = base;
                for (Vertex v = 0; v < n; ++v) g.set_colors(v, ColorSet::from_bits(digits[v]));
                emit(g);
                std::size_t pos = 0;
                while (pos < n && ++digits[pos] == subsets) digits[pos++] = 0;
                if (pos == n) break;
            }
        });
}

/// One representative per isomorphism class of k-graphs (partial, possibly
/// non-injective labelings) with at most max_n vertices, in the colored view.
inline std::vector<ColoredGraph> enumerate_labeled_colored(int k, std::size_t max_n,
                                                           std::uint64_t raw_cap = kEnumerationRawCap) {
    auto raw = [](std::size_t n, int kk) {
        return detail::raw_graph_count(n, 1, kEnumerationRawCap * 1024) *
               [&] {
                   std::uint64_t c = 1;
                   for (int i = 0; i < kk; ++i) c *= n + 1;
                   return c;
               }();
    };
    return detail::enumerate_classes(
        k, max_n, raw_cap, +raw, [k](const ColoredGraph& base, auto&& emit) {
            const std::size_t n = base.n();
            std::vector<std::size_t> target(static_cast<std::size_t>(k), 0);  // 0 = unlabeled, else vertex+1
            while (true) {
                ColoredGraph g = base;
                for (int i = 0; i < k; ++i) {
                    if (target[static_cast<std::size_t>(i)] == 0) continue;
                    auto v = static_cast<Vertex>(target[static_cast<std::size_t>(i)] - 1);
                    ColorSet c = g.colors(v);
                    c.insert(i + 1);
                    g.set_colors(v, c);
                }
                emit(g);
                std::size_t pos = 0;
                while (pos < target.size() && ++target[pos] == n + 1) target[pos++] = 0;
                if (pos == target.size()) break;
            }
        });
}

inline std::vector<LabeledGraph> enumerate_labeled_graphs(int k, std::size_t max_n,
                                                          std::uint64_t raw_cap = kEnumerationRawCap) {
    std::vector<LabeledGraph> out;
    for (const auto& g : enumerate_labeled_colored(k, max_n, raw_cap)) out.push_back(LabeledGraph::from_colored(g));
    return out;
}

}  // namespace tga
