#pragma once

// Quantum graphs: finite formal semiring-linear combinations of colored graphs,
// with the inner product ⟨X, Y⟩ = f(□(X, Y)).

#include "tga/canonical.hpp"
#include "tga/graph.hpp"
#include "tga/semiring.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tga {

template <Semiring S>
using GraphParameter = std::function<Value<S>(const ColoredGraph&)>;

using GraphOperation = std::function<ColoredGraph(const ColoredGraph&, const ColoredGraph&)>;

template <Semiring S>
struct QuantumTerm {
    Value<S> coefficient;
    ColoredGraph graph;
};

template <Semiring S>
class QuantumGraph {
public:
    explicit QuantumGraph(int k = 0) : k_(k) {}

    static QuantumGraph single(Value<S> coefficient, ColoredGraph g) {
        QuantumGraph x(g.k());
        x.add_term(std::move(coefficient), std::move(g));
        return x;
    }

    int k() const noexcept { return k_; }
    const std::vector<QuantumTerm<S>>& terms() const noexcept { return terms_; }

    void add_term(Value<S> coefficient, ColoredGraph g) {
        if (g.k() != k_) throw std::invalid_argument("quantum graph terms must share k");
        terms_.push_back({std::move(coefficient), std::move(g)});
    }

    /// Merges terms with isomorphic graphs by ⊕ of their coefficients.
    QuantumGraph normalized() const {
        std::map<CanonicalForm, std::pair<Value<S>, ColoredGraph>> merged;
        for (const auto& t : terms_) {
            auto c = canonize(t.graph);
            auto [it, inserted] = merged.try_emplace(c.form, t.coefficient, c.graph);
            if (!inserted) accumulate<S>(it->second.first, t.coefficient);
        }
        QuantumGraph out(k_);
        for (auto& [form, term] : merged) out.add_term(term.first, term.second);
        return out;
    }

private:
    int k_;
    std::vector<QuantumTerm<S>> terms_;
};

template <Semiring S>
QuantumGraph<S> qg_add(const QuantumGraph<S>& x, const QuantumGraph<S>& y) {
    if (x.k() != y.k()) throw std::invalid_argument("quantum graphs differ in k");
    QuantumGraph<S> out = x;
    for (const auto& t : y.terms()) out.add_term(t.coefficient, t.graph);
    return out;
}

template <Semiring S>
QuantumGraph<S> qg_scale(const Value<S>& a, const QuantumGraph<S>& x) {
    QuantumGraph<S> out(x.k());
    for (const auto& t : x.terms()) out.add_term(S::times(a, t.coefficient), t.graph);
    return out;
}

/// □(X, Y) = ⊕ (aᵢ ⊗ bⱼ) □(Fᵢ, Gⱼ).
template <Semiring S>
QuantumGraph<S> qg_apply_op(const GraphOperation& op, const QuantumGraph<S>& x, const QuantumGraph<S>& y) {
    if (x.k() != y.k()) throw std::invalid_argument("quantum graphs differ in k");
    QuantumGraph<S> out(x.k());
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) {
            ColoredGraph g = op(a.graph, b.graph);
            out.add_term(S::times(a.coefficient, b.coefficient), g.with_k(x.k()));
        }
    return out;
}

/// f(X) = ⊕ aᵢ ⊗ f(Fᵢ).
template <Semiring S>
Value<S> qg_apply_param(const GraphParameter<S>& f, const QuantumGraph<S>& x) {
    Value<S> acc = S::zero();
    for (const auto& t : x.terms()) accumulate<S>(acc, S::times(t.coefficient, f(t.graph)));
    return acc;
}

template <Semiring S>
Value<S> inner_product(const GraphParameter<S>& f, const GraphOperation& op, const QuantumGraph<S>& x,
                       const QuantumGraph<S>& y) {
    return qg_apply_param<S>(f, qg_apply_op<S>(op, x, y));
}

}  // namespace tga
