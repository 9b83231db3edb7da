#pragma once

// Membership in the N-span of nonnegative integer vectors by bounded search.
// Used for truncated Hankel matrices over the natural semiring, where no rank
// notion is computed and only generator checks are offered.

#include "tga/error.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tga::nat {

namespace detail {

inline bool search(std::span<const std::vector<std::uint64_t>> gens, std::size_t idx,
                   std::vector<std::uint64_t>& remaining, std::uint64_t bound, std::uint64_t& budget) {
    bool done = true;
    for (auto x : remaining)
        if (x != 0) {
            done = false;
            break;
        }
    if (done) return true;
    if (idx == gens.size()) return false;
    if (budget == 0) throw ResourceError("natural span search budget exhausted");
    --budget;

    const auto& g = gens[idx];
    std::uint64_t c = 0;
    std::vector<std::uint64_t> saved = remaining;
    while (true) {
        if (search(gens, idx + 1, remaining, bound, budget)) return true;
        if (c == bound) break;
        // Subtracting another copy of g must keep every coordinate nonnegative.
        bool fits = false;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) fits = true;
        if (!fits) break;  // zero generator adds nothing
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] > remaining[i]) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        for (std::size_t i = 0; i < g.size(); ++i) remaining[i] -= g[i];
        ++c;
    }
    remaining = saved;
    return false;
}

}  // namespace detail

/// True iff target = Σ cⱼ gensⱼ with integer 0 ≤ cⱼ ≤ bound.
inline bool in_span(std::span<const std::vector<std::uint64_t>> gens, std::span<const std::uint64_t> target,
                    std::uint64_t bound, std::uint64_t budget = 10'000'000) {
    for (const auto& g : gens)
        if (g.size() != target.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<std::uint64_t> remaining(target.begin(), target.end());
    return detail::search(gens, 0, remaining, bound, budget);
}

/// Generators surviving the lowest-index-first removal process, with
/// membership decided by in_span under the coefficient bound.
inline std::vector<std::size_t> reduce_generators(std::span<const std::vector<std::uint64_t>> rows,
                                                  std::uint64_t bound) {
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < rows.size(); ++i) current.push_back(i);
    std::vector<std::vector<std::uint64_t>> others;
    for (std::size_t pos = 0; pos < current.size();) {
        others.clear();
        for (std::size_t q : current)
            if (q != current[pos]) others.push_back(rows[q]);
        if (in_span(others, rows[current[pos]], bound)) {
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(pos));
        } else {
            ++pos;
        }
    }
    return current;
}

}  // namespace tga::nat
