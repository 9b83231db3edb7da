#pragma once

// Finite presentations of graph parameters and their evaluation on
// clique-width expressions and linear words.
//
// A presentation fixes m basis classes. Every expression node is evaluated to
// a coordinate vector of length m; binary operations act through bilinear
// tables, recolorings and word steps through linear maps, and the answer is
// the coordinate vector paired with the output functional.

#include "tga/error.hpp"
#include "tga/expr.hpp"
#include "tga/semiring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tga {

/// Maps each source index s ∈ [0, sources) to a length-m vector. Bilinear
/// tables use source p·m + q, linear maps use source p. Storage is dense,
/// sparse (finite entries only, chosen when at least 90% of entries are the
/// ⊕-unit) or a rule computed on demand.
template <Semiring S>
class Table {
public:
    using Entry = std::pair<std::uint32_t, Value<S>>;
    using Rule = std::function<void(std::size_t source, std::vector<Entry>& out)>;
    enum class Storage { dense, sparse, rule };

    Table() = default;

    static Table from_dense(std::size_t sources, std::size_t m, std::vector<Value<S>> data) {
        if (data.size() != sources * m) throw std::invalid_argument("table data has the wrong size");
        std::size_t zeros = 0;
        for (const auto& v : data) zeros += is_zero<S>(v);
        Table t(sources, m);
        if (10 * zeros >= 9 * data.size() && !data.empty()) {
            t.storage_ = Storage::sparse;
            t.offsets_.assign(sources + 1, 0);
            for (std::size_t s = 0; s < sources; ++s) {
                for (std::size_t r = 0; r < m; ++r)
                    if (!is_zero<S>(data[s * m + r])) t.entries_.emplace_back(static_cast<std::uint32_t>(r), data[s * m + r]);
                t.offsets_[s + 1] = t.entries_.size();
            }
        } else {
            t.storage_ = Storage::dense;
            t.dense_ = std::move(data);
        }
        t.check_values();
        return t;
    }

    static Table from_entries(std::size_t sources, std::size_t m, std::vector<std::vector<Entry>> rows) {
        if (rows.size() != sources) throw std::invalid_argument("table has the wrong number of sources");
        std::size_t nnz = 0;
        for (auto& row : rows) {
            std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
            std::size_t out = 0;
            for (std::size_t x = 0; x < row.size(); ++x) {
                if (row[x].first >= m) throw std::out_of_range("table entry index out of range");
                if (out > 0 && row[out - 1].first == row[x].first) {
                    accumulate<S>(row[out - 1].second, row[x].second);
                } else {
                    row[out++] = row[x];
                }
            }
            row.resize(out);
            std::erase_if(row, [](const Entry& e) { return is_zero<S>(e.second); });
            nnz += row.size();
        }
        const std::size_t cells = sources * m;
        if (cells == 0 || 10 * (cells - nnz) < 9 * cells) {
            std::vector<Value<S>> data(cells, S::zero());
            for (std::size_t s = 0; s < sources; ++s)
                for (const auto& [r, v] : rows[s]) data[s * m + r] = v;
            return from_dense(sources, m, std::move(data));
        }
        Table t(sources, m);
        t.storage_ = Storage::sparse;
        t.offsets_.assign(sources + 1, 0);
        t.entries_.reserve(nnz);
        for (std::size_t s = 0; s < sources; ++s) {
            t.entries_.insert(t.entries_.end(), rows[s].begin(), rows[s].end());
            t.offsets_[s + 1] = t.entries_.size();
        }
        t.check_values();
        return t;
    }

    static Table from_rule(std::size_t sources, std::size_t m, Rule rule) {
        Table t(sources, m);
        t.storage_ = Storage::rule;
        t.rule_ = std::move(rule);
        return t;
    }

    std::size_t sources() const noexcept { return sources_; }
    std::size_t m() const noexcept { return m_; }
    Storage storage() const noexcept { return storage_; }

    /// Finite (non-⊕-unit) entries at source s; `out` is overwritten.
    void entries(std::size_t s, std::vector<Entry>& out) const {
        out.clear();
        switch (storage_) {
            case Storage::dense:
                for (std::size_t r = 0; r < m_; ++r)
                    if (!is_zero<S>(dense_[s * m_ + r])) out.emplace_back(static_cast<std::uint32_t>(r), dense_[s * m_ + r]);
                break;
            case Storage::sparse:
                out.assign(entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[s]),
                           entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[s + 1]));
                break;
            case Storage::rule:
                rule_(s, out);
                break;
        }
    }

    Vector<S> vector_at(std::size_t s) const {
        Vector<S> v(m_, S::zero());
        std::vector<Entry> buf;
        entries(s, buf);
        for (const auto& [r, x] : buf) accumulate<S>(v[r], x);
        return v;
    }

    /// Stored copy of a rule-backed table.
    Table materialized() const {
        if (storage_ != Storage::rule) return *this;
        std::vector<std::vector<Entry>> rows(sources_);
        for (std::size_t s = 0; s < sources_; ++s) entries(s, rows[s]);
        return from_entries(sources_, m_, std::move(rows));
    }

    /// Equality of the represented functions (storage may differ).
    friend bool operator==(const Table& a, const Table& b) {
        if (a.sources_ != b.sources_ || a.m_ != b.m_) return false;
        for (std::size_t s = 0; s < a.sources_; ++s)
            if (a.vector_at(s) != b.vector_at(s)) return false;
        return true;
    }

private:
    Table(std::size_t sources, std::size_t m) : sources_(sources), m_(m) {}

    void check_values() const {
        if constexpr (TropicalSemiring<S>) {
            for (const auto& v : dense_)
                if (v == S::top()) throw std::invalid_argument("table entry is the top element");
            for (const auto& e : entries_)
                if (e.second == S::top()) throw std::invalid_argument("table entry is the top element");
        }
    }

    std::size_t sources_ = 0;
    std::size_t m_ = 0;
    Storage storage_ = Storage::dense;
    std::vector<Value<S>> dense_;
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
    Rule rule_;
};

/// Leaf coordinates: vec ⊕ w ⊗ wvec, where w is the leaf weight (the number 1
/// when absent). Without wvec only unweighted leaves are supported.
template <Semiring S>
struct LeafVectors {
    Vector<S> vec;
    std::optional<Vector<S>> wvec;
    friend bool operator==(const LeafVectors&, const LeafVectors&) = default;
};

template <Semiring S>
struct Presentation {
    int k = 0;
    std::size_t m = 0;
    std::map<ColorSet, LeafVectors<S>> leaf;
    Table<S> union_tab;                                // sources m·m
    std::map<std::pair<int, int>, Table<S>> join_tab;  // key (i, j) with i < j; sources m·m
    std::map<std::string, Table<S>> recolor_tab;       // key Recoloring::name(); sources m
    Vector<S> out;

    void validate() const {
        auto check_vec = [&](const Vector<S>& v, const char* what) {
            if (v.size() != m) throw std::invalid_argument(std::string(what) + " has the wrong length");
            if constexpr (TropicalSemiring<S>) {
                for (const auto& x : v)
                    if (x == S::top()) throw std::invalid_argument(std::string(what) + " holds the top element");
            }
        };
        auto check_table = [&](const Table<S>& t, std::size_t sources, const char* what) {
            if (t.sources() != sources || t.m() != m) throw std::invalid_argument(std::string(what) + " has the wrong shape");
        };
        for (const auto& [c, lv] : leaf) {
            if (!c.within(k)) throw std::invalid_argument("leaf colors exceed k");
            check_vec(lv.vec, "leaf vector");
            if (lv.wvec) check_vec(*lv.wvec, "leaf weight vector");
        }
        check_table(union_tab, m * m, "union table");
        for (const auto& [ij, t] : join_tab) {
            if (ij.first >= ij.second || ij.first < 1 || ij.second > k) throw std::invalid_argument("bad join key");
            check_table(t, m * m, "join table");
        }
        for (const auto& [name, t] : recolor_tab) check_table(t, m, "recoloring table");
        check_vec(out, "output vector");
    }

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct EvalStats {
    std::size_t nodes = 0;
    std::uint64_t ops = 0;  // ⊗-then-⊕ accumulations
};

namespace detail {

template <Semiring S>
std::vector<std::uint32_t> support(const Vector<S>& v) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero<S>(v[i])) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

template <Semiring S>
Vector<S> bilinear(const Table<S>& t, std::size_t m, const Vector<S>& u, const Vector<S>& v, std::uint64_t& ops) {
    Vector<S> acc(m, S::zero());
    std::vector<typename Table<S>::Entry> buf;
    const auto su = support<S>(u);
    const auto sv = support<S>(v);
    for (auto p : su)
        for (auto q : sv) {
            t.entries(std::size_t{p} * m + q, buf);
            if (buf.empty()) continue;
            const Value<S> coeff = S::times(u[p], v[q]);
            for (const auto& [r, x] : buf) {
                accumulate<S>(acc[r], S::times(coeff, x));
                ++ops;
            }
        }
    return acc;
}

template <Semiring S>
Vector<S> apply_map(const Table<S>& t, std::size_t m, const Vector<S>& v, std::uint64_t& ops) {
    Vector<S> acc(m, S::zero());
    std::vector<typename Table<S>::Entry> buf;
    for (auto p : support<S>(v)) {
        t.entries(p, buf);
        for (const auto& [r, x] : buf) {
            accumulate<S>(acc[r], S::times(v[p], x));
            ++ops;
        }
    }
    return acc;
}

template <Semiring S>
Value<S> leaf_weight(const std::optional<Rational>& w) {
    return S::from_rational(w.value_or(Rational(1)));
}

template <Semiring S>
Vector<S> leaf_coordinates(const std::map<ColorSet, LeafVectors<S>>& leaves, ColorSet c,
                           const std::optional<Rational>& weight) {
    auto it = leaves.find(c);
    if (it == leaves.end()) throw UnsupportedError("presentation has no leaf vector for colors " + c.to_string());
    const LeafVectors<S>& lv = it->second;
    if (!lv.wvec) {
        if (weight) throw UnsupportedError("presentation does not support weighted leaves");
        return lv.vec;
    }
    Vector<S> out = lv.vec;
    const Value<S> w = leaf_weight<S>(weight);
    for (std::size_t r = 0; r < out.size(); ++r) accumulate<S>(out[r], S::times(w, (*lv.wvec)[r]));
    return out;
}

template <Semiring S>
Value<S> pair_out(const Vector<S>& v, const Vector<S>& out) {
    Value<S> acc = S::zero();
    for (std::size_t p = 0; p < v.size(); ++p) accumulate<S>(acc, S::times(v[p], out[p]));
    return acc;
}

}  // namespace detail

/// Coordinate vector of an expression's value.
template <Semiring S>
Vector<S> eval_coordinates(const CwExpr& e, const Presentation<S>& p, EvalStats* stats = nullptr) {
    if (e.max_color() > p.k)
        throw UnsupportedError("color overflow: expression uses color " + std::to_string(e.max_color()) +
                               " but the presentation has k=" + std::to_string(p.k));
    std::vector<const Table<S>*> rho_tables(e.recolorings().size(), nullptr);
    for (std::size_t r = 0; r < e.recolorings().size(); ++r) {
        const Recoloring& rho = e.recolorings()[r];
        if (rho.is_identity()) continue;
        auto it = p.recolor_tab.find(rho.name());
        if (it == p.recolor_tab.end()) throw UnsupportedError("no recoloring table for " + rho.name());
        rho_tables[r] = &it->second;
    }
    std::uint64_t ops = 0;
    std::vector<Vector<S>> stack;
    for (const auto& n : e.nodes()) {
        switch (n.kind) {
            case NodeKind::leaf: stack.push_back(detail::leaf_coordinates<S>(p.leaf, n.colors, n.weight)); break;
            case NodeKind::unite:
            case NodeKind::join: {
                const Table<S>* t = &p.union_tab;
                if (n.kind == NodeKind::join) {
                    auto it = p.join_tab.find({std::min(n.i, n.j), std::max(n.i, n.j)});
                    if (it == p.join_tab.end())
                        throw UnsupportedError("no join table for (" + std::to_string(n.i) + "," + std::to_string(n.j) + ")");
                    t = &it->second;
                }
                Vector<S> right = std::move(stack.back());
                stack.pop_back();
                stack.back() = detail::bilinear<S>(*t, p.m, stack.back(), right, ops);
                break;
            }
            case NodeKind::recolor:
                if (rho_tables[n.rho]) stack.back() = detail::apply_map<S>(*rho_tables[n.rho], p.m, stack.back(), ops);
                break;
        }
    }
    if (stats) {
        stats->nodes = e.size();
        stats->ops = ops;
    }
    return std::move(stack.back());
}

template <Semiring S>
Value<S> eval_presentation(const CwExpr& e, const Presentation<S>& p, EvalStats* stats = nullptr) {
    return detail::pair_out<S>(eval_coordinates<S>(e, p, stats), p.out);
}

// ---------------------------------------------------------------------------
// Linear presentations: one m×m matrix per word step.

/// A step with a new vertex: v·base ⊕ w ⊗ (v·scaled).
template <Semiring S>
struct VertexStep {
    Table<S> base;
    std::optional<Table<S>> scaled;
};

template <Semiring S>
struct LinearPresentation {
    int k = 0;
    std::size_t m = 0;
    std::map<ColorSet, LeafVectors<S>> init;
    std::map<ColorSet, VertexStep<S>> add;
    std::map<std::tuple<int, int, ColorSet>, VertexStep<S>> small_join;  // (i, j) with i < j
    std::map<std::string, Table<S>> recolor;
    Vector<S> out;
};

template <Semiring S>
Value<S> eval_linear(const LinearWord& w, const LinearPresentation<S>& lp, EvalStats* stats = nullptr) {
    std::uint64_t ops = 0;
    Vector<S> v = detail::leaf_coordinates<S>(lp.init, w.initial.colors, w.initial.weight);
    auto vertex_step = [&](const VertexStep<S>& st, const WordVertex& x) {
        Vector<S> next = detail::apply_map<S>(st.base, lp.m, v, ops);
        if (st.scaled) {
            const Value<S> c = detail::leaf_weight<S>(x.weight);
            Vector<S> extra = detail::apply_map<S>(*st.scaled, lp.m, v, ops);
            for (std::size_t r = 0; r < lp.m; ++r) accumulate<S>(next[r], S::times(c, extra[r]));
        } else if (x.weight) {
            throw UnsupportedError("presentation does not support weighted vertices");
        }
        v = std::move(next);
    };
    for (const auto& step : w.steps) {
        if (const auto* add = std::get_if<AddVertex>(&step)) {
            auto it = lp.add.find(add->vertex.colors);
            if (it == lp.add.end()) throw UnsupportedError("unsupported step: add " + add->vertex.colors.to_string());
            vertex_step(it->second, add->vertex);
        } else if (const auto* sj = std::get_if<SmallJoin>(&step)) {
            auto key = std::make_tuple(std::min(sj->i, sj->j), std::max(sj->i, sj->j), sj->vertex.colors);
            auto it = lp.small_join.find(key);
            if (it == lp.small_join.end())
                throw UnsupportedError("unsupported step: join (" + std::to_string(sj->i) + "," + std::to_string(sj->j) +
                                       ") with " + sj->vertex.colors.to_string());
            vertex_step(it->second, sj->vertex);
        } else {
            const Recoloring& rho = std::get<RecolorStep>(step).rho;
            if (rho.is_identity()) continue;
            auto it = lp.recolor.find(rho.name());
            if (it == lp.recolor.end()) throw UnsupportedError("no recoloring table for " + rho.name());
            v = detail::apply_map<S>(it->second, lp.m, v, ops);
        }
    }
    if (stats) {
        stats->nodes = w.steps.size() + 1;
        stats->ops = ops;
    }
    return detail::pair_out<S>(v, lp.out);
}

/// Step matrices obtained by fixing the right operand of the bilinear tables
/// to a single vertex: M[p][r] = ⊕_q leaf[q] ⊗ tab(p, q)[r].
template <Semiring S>
LinearPresentation<S> curry(const Presentation<S>& p, const Alphabet& alphabet) {
    LinearPresentation<S> lp;
    lp.k = p.k;
    lp.m = p.m;
    lp.init = p.leaf;
    lp.out = p.out;
    lp.recolor = p.recolor_tab;
    std::vector<typename Table<S>::Entry> buf;
    auto fix_right = [&](const Table<S>& t, const Vector<S>& leaf) {
        std::vector<std::vector<typename Table<S>::Entry>> rows(p.m);
        const auto sl = detail::support<S>(leaf);
        for (std::size_t a = 0; a < p.m; ++a) {
            Vector<S> acc(p.m, S::zero());
            for (auto q : sl) {
                t.entries(a * p.m + q, buf);
                for (const auto& [r, x] : buf) accumulate<S>(acc[r], S::times(leaf[q], x));
            }
            for (std::size_t r = 0; r < p.m; ++r)
                if (!is_zero<S>(acc[r])) rows[a].emplace_back(static_cast<std::uint32_t>(r), acc[r]);
        }
        return Table<S>::from_entries(p.m, p.m, std::move(rows));
    };
    auto step_for = [&](const Table<S>& t, const LeafVectors<S>& lv) {
        VertexStep<S> st{fix_right(t, lv.vec), std::nullopt};
        if (lv.wvec) st.scaled = fix_right(t, *lv.wvec);
        return st;
    };
    std::set<ColorSet> leaves = alphabet.leaves;
    if (leaves.empty())
        for (const auto& [c, lv] : p.leaf) leaves.insert(c);
    for (ColorSet c : leaves) {
        auto it = p.leaf.find(c);
        if (it == p.leaf.end()) continue;
        lp.add.emplace(c, step_for(p.union_tab, it->second));
        for (auto [i, j] : alphabet.joins) {
            auto jt = p.join_tab.find({i, j});
            if (jt == p.join_tab.end()) continue;
            lp.small_join.emplace(std::make_tuple(i, j, c), step_for(jt->second, it->second));
        }
    }
    return lp;
}

}  // namespace tga
