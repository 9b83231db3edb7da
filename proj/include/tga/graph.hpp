#pragma once

#include "tga/colorset.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tga {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph whose vertices 0..n-1 each carry a subset of [k].
///
/// This is the per-vertex (transposed) view of a coloring C: [k] → 2^V.
/// Color classes may overlap and may be empty. Adjacency lists are kept
/// sorted, so equality is labeled-graph equality.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(int k, std::size_t n = 0) : k_(check_k(k)), colors_(n), adj_(n) {}

    static ColoredGraph from_edges(int k, std::size_t n, const std::vector<Edge>& edges,
                                   const std::vector<ColorSet>& colors = {}) {
        ColoredGraph g(k, n);
        if (!colors.empty()) {
            if (colors.size() != n) throw std::invalid_argument("color list length differs from vertex count");
            for (std::size_t v = 0; v < n; ++v) g.set_colors(static_cast<Vertex>(v), colors[v]);
        }
        for (auto [u, v] : edges)
            if (!g.add_edge(u, v)) throw std::invalid_argument("duplicate edge");
        return g;
    }

    int k() const noexcept { return k_; }
    std::size_t n() const noexcept { return colors_.size(); }
    bool empty() const noexcept { return colors_.empty(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    ColorSet colors(Vertex v) const { return colors_.at(v); }

    void set_colors(Vertex v, ColorSet c) {
        if (!c.within(k_)) throw std::out_of_range("color set " + c.to_string() + " exceeds k=" + std::to_string(k_));
        colors_.at(v) = c;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= n() || v >= n()) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    Vertex add_vertex(ColorSet c = {}) {
        colors_.push_back(ColorSet{});
        adj_.emplace_back();
        const auto v = static_cast<Vertex>(colors_.size() - 1);
        set_colors(v, c);
        return v;
    }

    /// Adds {u,v}; returns false if it was already present. Loops are rejected.
    bool add_edge(Vertex u, Vertex v) {
        if (u >= n() || v >= n()) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        auto& a = adj_[u];
        auto it = std::lower_bound(a.begin(), a.end(), v);
        if (it != a.end() && *it == v) return false;
        a.insert(it, v);
        auto& b = adj_[v];
        b.insert(std::lower_bound(b.begin(), b.end(), u), u);
        return true;
    }

    /// Edges {u,v} with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// C(i): the vertices carrying color i.
    std::vector<Vertex> color_class(int i) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n(); ++v)
            if (colors_[v].contains(i)) out.push_back(v);
        return out;
    }

    /// Union of all vertex color sets.
    ColorSet used_colors() const {
        ColorSet s;
        for (auto c : colors_) s = s | c;
        return s;
    }

    /// Same graph viewed with a different color count; colors must fit.
    ColoredGraph with_k(int k) const {
        ColoredGraph g = *this;
        g.k_ = check_k(k);
        for (auto c : colors_)
            if (!c.within(k)) throw std::out_of_range("colors do not fit in k=" + std::to_string(k));
        return g;
    }

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    static int check_k(int k) {
        if (k < 0 || k > kMaxColors) throw std::out_of_range("color count out of range: " + std::to_string(k));
        return k;
    }

    int k_ = 0;
    std::vector<ColorSet> colors_;
    std::vector<std::vector<Vertex>> adj_;
};

inline ColoredGraph single_vertex(int k, ColorSet c = {}) {
    ColoredGraph g(k, 1);
    g.set_colors(0, c);
    return g;
}

inline void require_same_k(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.k() != b.k())
        throw std::invalid_argument("color counts differ: " + std::to_string(a.k()) + " vs " + std::to_string(b.k()));
}

/// g1 ⊔ g2: vertices of g2 are shifted by g1.n().
inline ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2) {
    require_same_k(g1, g2);
    ColoredGraph g = g1;
    const auto shift = static_cast<Vertex>(g1.n());
    for (Vertex v = 0; v < g2.n(); ++v) g.add_vertex(g2.colors(v));
    for (auto [u, v] : g2.edges()) g.add_edge(u + shift, v + shift);
    return g;
}

inline void check_join_colors(int i, int j, int k) {
    if (i == j) throw std::invalid_argument("join requires distinct colors");
    if (i < 1 || j < 1 || i > k || j > k)
        throw std::out_of_range("join colors out of range for k=" + std::to_string(k));
}

/// Adds every edge between C(i) and C(j) of g in place; a vertex in both
/// classes gets no loop.
inline void complete_between(ColoredGraph& g, int i, int j) {
    check_join_colors(i, j, g.k());
    const auto ci = g.color_class(i);
    const auto cj = g.color_class(j);
    for (Vertex u : ci)
        for (Vertex v : cj)
            if (u != v) g.add_edge(u, v);
}

/// Binary (i,j)-join: disjoint union, then all edges between the merged
/// classes C(i) and C(j), including pairs inside one operand.
inline ColoredGraph join(int i, int j, const ColoredGraph& g1, const ColoredGraph& g2) {
    require_same_k(g1, g2);
    check_join_colors(i, j, g1.k());
    ColoredGraph g = disjoint_union(g1, g2);
    complete_between(g, i, j);
    return g;
}

/// Replaces each vertex color set S by rho(S).
inline ColoredGraph recolor(const Recoloring& rho, const ColoredGraph& g) {
    ColoredGraph out = g;
    for (Vertex v = 0; v < g.n(); ++v) out.set_colors(v, rho(g.colors(v)));
    return out;
}

/// True when every vertex carries at most one color.
inline bool is_single_colored(const ColoredGraph& g) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.colors(v).size() > 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// k-graphs: graphs with a partial, not necessarily injective labeling [k] → V.

class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(ColoredGraph graph, std::vector<std::optional<Vertex>> labels)
        : graph_(std::move(graph)), labels_(std::move(labels)) {
        if (labels_.size() > static_cast<std::size_t>(kMaxColors)) throw std::out_of_range("too many labels");
        for (const auto& l : labels_)
            if (l && *l >= graph_.n()) throw std::out_of_range("label points outside the graph");
        graph_ = uncolored(graph_);
    }

    int k() const noexcept { return static_cast<int>(labels_.size()); }
    const ColoredGraph& graph() const noexcept { return graph_; }
    const std::vector<std::optional<Vertex>>& labels() const noexcept { return labels_; }
    std::optional<Vertex> label(int i) const { return labels_.at(static_cast<std::size_t>(i - 1)); }

    /// Colored view: vertex ℓ(i) carries color i. Classes have size at most one.
    ColoredGraph to_colored() const {
        ColoredGraph g = graph_.with_k(k());
        for (int i = 1; i <= k(); ++i) {
            if (auto v = label(i)) {
                ColorSet c = g.colors(*v);
                c.insert(i);
                g.set_colors(*v, c);
            }
        }
        return g;
    }

    /// Inverse of to_colored; every color class must have size at most one.
    static LabeledGraph from_colored(const ColoredGraph& g) {
        std::vector<std::optional<Vertex>> labels(static_cast<std::size_t>(g.k()));
        for (int i = 1; i <= g.k(); ++i) {
            auto cls = g.color_class(i);
            if (cls.size() > 1) throw std::invalid_argument("color class too large to be a label");
            if (!cls.empty()) labels[static_cast<std::size_t>(i - 1)] = cls.front();
        }
        return LabeledGraph(g, std::move(labels));
    }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    static ColoredGraph uncolored(const ColoredGraph& g) {
        ColoredGraph out(0, g.n());
        for (auto [u, v] : g.edges()) out.add_edge(u, v);
        return out;
    }

    ColoredGraph graph_;
    std::vector<std::optional<Vertex>> labels_;
};

/// g1 ⊔ₖ g2: disjoint union, then for each label defined in both operands the
/// two labeled vertices are identified. Parallel edges collapse, and an edge
/// whose endpoints get identified disappears (graphs stay simple).
inline LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (g1.k() != g2.k()) throw std::invalid_argument("label counts differ");
    const std::size_t n1 = g1.graph().n();
    const std::size_t total = n1 + g2.graph().n();

    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= g1.k(); ++i) {
        auto a = g1.label(i);
        auto b = g2.label(i);
        if (a && b) {
            std::size_t ra = find(*a), rb = find(n1 + *b);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }

    std::vector<Vertex> index(total);
    std::size_t next = 0;
    std::vector<std::optional<Vertex>> root_index(total);
    for (std::size_t x = 0; x < total; ++x) {
        std::size_t r = find(x);
        if (!root_index[r]) root_index[r] = static_cast<Vertex>(next++);
        index[x] = *root_index[r];
    }

    ColoredGraph g(0, next);
    auto add = [&](Vertex u, Vertex v) {
        if (u != v) g.add_edge(u, v);
    };
    for (auto [u, v] : g1.graph().edges()) add(index[u], index[v]);
    for (auto [u, v] : g2.graph().edges()) add(index[n1 + u], index[n1 + v]);

    std::vector<std::optional<Vertex>> labels(static_cast<std::size_t>(g1.k()));
    for (int i = 1; i <= g1.k(); ++i) {
        if (auto a = g1.label(i)) {
            labels[static_cast<std::size_t>(i - 1)] = index[*a];
        } else if (auto b = g2.label(i)) {
            labels[static_cast<std::size_t>(i - 1)] = index[n1 + *b];
        }
    }
    return LabeledGraph(std::move(g), std::move(labels));
}

/// Gluing on the colored view of labeled graphs (color classes of size ≤ 1).
inline ColoredGraph glue_colored(const ColoredGraph& g1, const ColoredGraph& g2) {
    require_same_k(g1, g2);
    return glue(LabeledGraph::from_colored(g1), LabeledGraph::from_colored(g2)).to_colored();
}

// ---------------------------------------------------------------------------
// Small standard graphs (uncolored unless k is given).

inline ColoredGraph path_graph(std::size_t n, int k = 0) {
    ColoredGraph g(k, n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline ColoredGraph cycle_graph(std::size_t n, int k = 0) {
    ColoredGraph g = path_graph(n, k);
    if (n >= 3) g.add_edge(static_cast<Vertex>(n - 1), 0);
    return g;
}

inline ColoredGraph complete_graph(std::size_t n, int k = 0) {
    ColoredGraph g(k, n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline ColoredGraph complete_bipartite(std::size_t a, std::size_t b, int k = 0) {
    ColoredGraph g(k, a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
    return g;
}

inline ColoredGraph edgeless_graph(std::size_t n, int k = 0) { return ColoredGraph(k, n); }

inline ColoredGraph complement(const ColoredGraph& g) {
    ColoredGraph out(g.k(), g.n());
    for (Vertex v = 0; v < g.n(); ++v) out.set_colors(v, g.colors(v));
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

/// Subgraph induced by the vertices flagged in keep, renumbered in order.
inline ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<bool>& keep) {
    std::vector<Vertex> index(g.n());
    ColoredGraph out(g.k());
    for (Vertex v = 0; v < g.n(); ++v)
        if (keep[v]) index[v] = out.add_vertex(g.colors(v));
    for (auto [u, v] : g.edges())
        if (keep[u] && keep[v]) out.add_edge(index[u], index[v]);
    return out;
}

}  // namespace tga
