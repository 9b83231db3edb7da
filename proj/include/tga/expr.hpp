#pragma once

// Clique-width parse trees and linear clique-width words.
//
// A CwExpr stores its nodes in postorder (children before parents, root last),
// so every bottom-up pass is a single forward loop with a value stack and no
// recursion, however deep the tree.

#include "tga/colorset.hpp"
#include "tga/graph.hpp"
#include "tga/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tga {

enum class NodeKind : std::uint8_t { leaf, unite, join, recolor };

struct ExprNode {
    NodeKind kind = NodeKind::leaf;
    ColorSet colors;                 // leaf
    std::optional<Rational> weight;  // leaf
    int i = 0;                       // join
    int j = 0;                       // join
    std::uint32_t left = 0;          // unite/join/recolor child
    std::uint32_t right = 0;         // unite/join
    std::uint32_t rho = 0;           // recolor: index into CwExpr::recolorings()

    friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

class ExprBuilder;

class CwExpr {
public:
    const std::vector<ExprNode>& nodes() const noexcept { return nodes_; }
    const std::vector<Recoloring>& recolorings() const noexcept { return recolorings_; }
    const ExprNode& node(std::uint32_t id) const { return nodes_.at(id); }
    std::uint32_t root() const { return static_cast<std::uint32_t>(nodes_.size() - 1); }
    std::size_t size() const noexcept { return nodes_.size(); }

    std::size_t leaf_count() const noexcept {
        std::size_t c = 0;
        for (const auto& n : nodes_) c += n.kind == NodeKind::leaf;
        return c;
    }

    /// Largest color mentioned anywhere (leaves, joins, recoloring rules).
    int max_color() const {
        int m = 0;
        for (const auto& n : nodes_) {
            if (n.kind == NodeKind::leaf) m = std::max(m, n.colors.max_color());
            if (n.kind == NodeKind::join) m = std::max({m, n.i, n.j});
        }
        for (const auto& r : recolorings_) m = std::max(m, r.max_color());
        return m;
    }

    /// Structural equality (nodes are in canonical postorder).
    friend bool operator==(const CwExpr&, const CwExpr&) = default;

private:
    friend class ExprBuilder;
    std::vector<ExprNode> nodes_;
    std::vector<Recoloring> recolorings_;
};

/// Arena for assembling expressions; build() emits the canonical postorder.
class ExprBuilder {
public:
    using Id = std::uint32_t;

    Id leaf(ColorSet colors, std::optional<Rational> weight = std::nullopt) {
        ExprNode n;
        n.kind = NodeKind::leaf;
        n.colors = colors;
        n.weight = weight;
        return push(n);
    }

    Id unite(Id a, Id b) {
        check(a);
        check(b);
        ExprNode n;
        n.kind = NodeKind::unite;
        n.left = a;
        n.right = b;
        return push(n);
    }

    Id join(int i, int j, Id a, Id b) {
        check(a);
        check(b);
        if (i == j) throw std::invalid_argument("join requires distinct colors");
        if (i < 1 || j < 1 || i > kMaxColors || j > kMaxColors) throw std::out_of_range("join color out of range");
        ExprNode n;
        n.kind = NodeKind::join;
        n.i = i;
        n.j = j;
        n.left = a;
        n.right = b;
        return push(n);
    }

    Id recolor(const Recoloring& rho, Id a) {
        check(a);
        auto [it, inserted] = rho_index_.try_emplace(rho, static_cast<std::uint32_t>(recolorings_.size()));
        if (inserted) recolorings_.push_back(rho);
        ExprNode n;
        n.kind = NodeKind::recolor;
        n.left = a;
        n.rho = it->second;
        return push(n);
    }

    /// The tree rooted at root in canonical postorder.
    CwExpr build(Id root) const {
        check(root);
        CwExpr out;
        std::map<Recoloring, std::uint32_t> rho_out;
        std::vector<std::pair<Id, bool>> stack{{root, false}};
        std::vector<std::uint32_t> emitted;  // stack of new ids of finished children
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            const ExprNode& n = nodes_[id];
            if (!expanded && n.kind != NodeKind::leaf) {
                stack.emplace_back(id, true);
                if (n.kind != NodeKind::recolor) stack.emplace_back(n.right, false);
                stack.emplace_back(n.left, false);
                continue;
            }
            ExprNode copy = n;
            if (n.kind == NodeKind::unite || n.kind == NodeKind::join) {
                copy.right = emitted.back();
                emitted.pop_back();
                copy.left = emitted.back();
                emitted.pop_back();
            } else if (n.kind == NodeKind::recolor) {
                copy.left = emitted.back();
                emitted.pop_back();
                const Recoloring& rho = recolorings_[n.rho];
                auto [it, inserted] = rho_out.try_emplace(rho, static_cast<std::uint32_t>(out.recolorings_.size()));
                if (inserted) out.recolorings_.push_back(rho);
                copy.rho = it->second;
            }
            emitted.push_back(static_cast<std::uint32_t>(out.nodes_.size()));
            out.nodes_.push_back(copy);
        }
        return out;
    }

    std::size_t size() const noexcept { return nodes_.size(); }

private:
    Id push(const ExprNode& n) {
        nodes_.push_back(n);
        return static_cast<Id>(nodes_.size() - 1);
    }
    void check(Id id) const {
        if (id >= nodes_.size()) throw std::out_of_range("unknown expression node");
    }

    std::vector<ExprNode> nodes_;
    std::vector<Recoloring> recolorings_;
    std::map<Recoloring, std::uint32_t> rho_index_;
};

inline void check_expr_colors(const CwExpr& e, int k) {
    if (e.max_color() > k)
        throw std::out_of_range("expression uses color " + std::to_string(e.max_color()) + " but k=" +
                                std::to_string(k));
}

/// The colored graph an expression denotes. Vertex v is the v-th leaf in postorder.
inline ColoredGraph eval_expr(const CwExpr& e, int k) {
    check_expr_colors(e, k);
    std::vector<ColoredGraph> stack;
    for (const auto& n : e.nodes()) {
        switch (n.kind) {
            case NodeKind::leaf: stack.push_back(single_vertex(k, n.colors)); break;
            case NodeKind::unite:
            case NodeKind::join: {
                ColoredGraph right = std::move(stack.back());
                stack.pop_back();
                ColoredGraph& left = stack.back();
                left = n.kind == NodeKind::unite ? disjoint_union(left, right) : join(n.i, n.j, left, right);
                break;
            }
            case NodeKind::recolor: stack.back() = recolor(e.recolorings()[n.rho], stack.back()); break;
        }
    }
    return std::move(stack.back());
}

/// Leaf weights in vertex order of eval_expr.
inline std::vector<std::optional<Rational>> leaf_weights(const CwExpr& e) {
    std::vector<std::optional<Rational>> out;
    for (const auto& n : e.nodes())
        if (n.kind == NodeKind::leaf) out.push_back(n.weight);
    return out;
}

// ---------------------------------------------------------------------------
// Linear words: every binary step has a single vertex as one operand.

struct WordVertex {
    ColorSet colors;
    std::optional<Rational> weight;
    friend bool operator==(const WordVertex&, const WordVertex&) = default;
};

struct AddVertex {
    WordVertex vertex;
    friend bool operator==(const AddVertex&, const AddVertex&) = default;
};

struct SmallJoin {
    int i = 0;
    int j = 0;
    WordVertex vertex;
    friend bool operator==(const SmallJoin&, const SmallJoin&) = default;
};

struct RecolorStep {
    Recoloring rho;
    friend bool operator==(const RecolorStep&, const RecolorStep&) = default;
};

using WordStep = std::variant<AddVertex, SmallJoin, RecolorStep>;

struct LinearWord {
    WordVertex initial;
    std::vector<WordStep> steps;
    friend bool operator==(const LinearWord&, const LinearWord&) = default;

    std::size_t vertex_count() const {
        std::size_t n = 1;
        for (const auto& s : steps) n += !std::holds_alternative<RecolorStep>(s);
        return n;
    }
};

/// The word read along the spine of e, or nullopt if some binary node has two
/// non-leaf children. When both children are leaves the left one continues the spine.
inline std::optional<LinearWord> as_linear(const CwExpr& e) {
    std::vector<WordStep> top_down;
    std::uint32_t at = e.root();
    auto vertex_of = [&](std::uint32_t id) { return WordVertex{e.node(id).colors, e.node(id).weight}; };
    while (true) {
        const ExprNode& n = e.node(at);
        if (n.kind == NodeKind::leaf) {
            LinearWord w;
            w.initial = vertex_of(at);
            w.steps.assign(top_down.rbegin(), top_down.rend());
            return w;
        }
        if (n.kind == NodeKind::recolor) {
            top_down.emplace_back(RecolorStep{e.recolorings()[n.rho]});
            at = n.left;
            continue;
        }
        std::uint32_t leaf, spine;
        if (e.node(n.right).kind == NodeKind::leaf) {
            leaf = n.right;
            spine = n.left;
        } else if (e.node(n.left).kind == NodeKind::leaf) {
            leaf = n.left;
            spine = n.right;
        } else {
            return std::nullopt;
        }
        if (n.kind == NodeKind::unite) {
            top_down.emplace_back(AddVertex{vertex_of(leaf)});
        } else {
            top_down.emplace_back(SmallJoin{n.i, n.j, vertex_of(leaf)});
        }
        at = spine;
    }
}

/// Leaf-on-the-right expression spelling out a word.
inline CwExpr word_to_expr(const LinearWord& w) {
    ExprBuilder b;
    auto acc = b.leaf(w.initial.colors, w.initial.weight);
    for (const auto& step : w.steps) {
        if (const auto* add = std::get_if<AddVertex>(&step)) {
            acc = b.unite(acc, b.leaf(add->vertex.colors, add->vertex.weight));
        } else if (const auto* sj = std::get_if<SmallJoin>(&step)) {
            acc = b.join(sj->i, sj->j, acc, b.leaf(sj->vertex.colors, sj->vertex.weight));
        } else {
            acc = b.recolor(std::get<RecolorStep>(step).rho, acc);
        }
    }
    return b.build(acc);
}

inline ColoredGraph eval_word(const LinearWord& w, int k) {
    ColoredGraph g = single_vertex(k, w.initial.colors);
    for (const auto& step : w.steps) {
        if (const auto* add = std::get_if<AddVertex>(&step)) {
            g.add_vertex(add->vertex.colors);
        } else if (const auto* sj = std::get_if<SmallJoin>(&step)) {
            g.add_vertex(sj->vertex.colors);
            complete_between(g, sj->i, sj->j);
        } else {
            g = recolor(std::get<RecolorStep>(step).rho, g);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Structural predicates used as preconditions by the built-in evaluators.

/// Every vertex carries at most one color at every stage of the construction.
inline bool is_single_colored(const CwExpr& e) {
    for (const auto& n : e.nodes())
        if (n.kind == NodeKind::leaf && n.colors.size() > 1) return false;
    for (const auto& r : e.recolorings())
        if (!r.preserves_single_colors()) return false;
    return true;
}

/// Single-colored, and no join can add an edge that already exists. Tracked
/// conservatively through the relation "some c-vertex is adjacent to some
/// d-vertex"; a join (i,j) is accepted only if (i,j) is not yet related.
inline bool is_plain(const CwExpr& e) {
    if (!is_single_colored(e)) return false;
    struct Info {
        std::uint32_t present = 0;                        // colors with a vertex
        std::array<std::uint32_t, kMaxColors + 1> adj{};  // adj[c] bit d: c–d edge exists
    };
    auto bit = [](int c) { return std::uint32_t{1} << c; };
    std::vector<Info> stack;
    for (const auto& n : e.nodes()) {
        if (n.kind == NodeKind::leaf) {
            Info info;
            if (!n.colors.empty()) info.present = bit(n.colors.max_color());
            stack.push_back(info);
            continue;
        }
        if (n.kind == NodeKind::recolor) {
            const Recoloring& rho = e.recolorings()[n.rho];
            auto image = [&](int c) {
                ColorSet t = rho(ColorSet{c});
                return t.empty() ? 0 : t.max_color();
            };
            Info& top = stack.back();
            Info out;
            for (int c = 1; c <= kMaxColors; ++c) {
                if (!(top.present & bit(c))) continue;
                int c2 = image(c);
                if (c2 == 0) continue;
                out.present |= bit(c2);
                for (int d = 1; d <= kMaxColors; ++d) {
                    if (!(top.adj[c] & bit(d))) continue;
                    int d2 = image(d);
                    if (d2 == 0) continue;
                    out.adj[c2] |= bit(d2);
                    out.adj[d2] |= bit(c2);
                }
            }
            top = out;
            continue;
        }
        Info right = stack.back();
        stack.pop_back();
        Info& left = stack.back();
        left.present |= right.present;
        for (int c = 0; c <= kMaxColors; ++c) left.adj[c] |= right.adj[c];
        if (n.kind == NodeKind::join) {
            if (left.adj[n.i] & bit(n.j)) return false;
            if ((left.present & bit(n.i)) && (left.present & bit(n.j))) {
                left.adj[n.i] |= bit(n.j);
                left.adj[n.j] |= bit(n.i);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// The operations an expression (or word) uses; presentations are built for an
// alphabet.

struct Alphabet {
    std::set<std::pair<int, int>> joins;  // normalized i < j
    std::set<Recoloring> recolorings;     // identity excluded
    std::set<ColorSet> leaves;

    void add_join(int i, int j) { joins.emplace(std::min(i, j), std::max(i, j)); }
    void add_recoloring(const Recoloring& r) {
        if (!r.is_identity()) recolorings.insert(r);
    }
    void merge(const Alphabet& o) {
        joins.insert(o.joins.begin(), o.joins.end());
        recolorings.insert(o.recolorings.begin(), o.recolorings.end());
        leaves.insert(o.leaves.begin(), o.leaves.end());
    }
};

inline Alphabet alphabet_of(const CwExpr& e) {
    Alphabet a;
    for (const auto& n : e.nodes()) {
        if (n.kind == NodeKind::leaf) a.leaves.insert(n.colors);
        if (n.kind == NodeKind::join) a.add_join(n.i, n.j);
        if (n.kind == NodeKind::recolor) a.add_recoloring(e.recolorings()[n.rho]);
    }
    return a;
}

/// Every join pair over [k], no recolorings, every leaf color set.
inline Alphabet full_join_alphabet(int k) {
    Alphabet a;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) a.add_join(i, j);
    for (std::uint32_t s = 0; s < (1u << k); ++s) a.leaves.insert(ColorSet::from_bits(s));
    return a;
}

}  // namespace tga
