#pragma once

#include "tga/graph.hpp"

#include <cstddef>
#include <vector>

namespace tga {

/// Reachability on the vertices flagged alive. No alive vertex counts as connected.
inline bool is_connected_on(const ColoredGraph& g, const std::vector<bool>& alive) {
    std::size_t start = g.n();
    std::size_t count = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (alive[v]) {
            if (start == g.n()) start = v;
            ++count;
        }
    if (count == 0) return true;
    std::vector<bool> seen(g.n(), false);
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (alive[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == count;
}

/// The empty graph counts as connected.
inline bool is_connected(const ColoredGraph& g) { return is_connected_on(g, std::vector<bool>(g.n(), true)); }

/// True iff removing any set of at most kk vertices leaves a connected graph
/// (an empty remainder counts as connected). kk = 0 is plain connectivity, and
/// graphs with at most kk + 1 vertices pass whenever they are connected.
inline bool is_k_connected(const ColoredGraph& g, std::size_t kk) {
    if (!is_connected(g)) return false;
    const std::size_t n = g.n();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> chosen;

    // Enumerate removal sets of size 1..kk in lexicographic order.
    auto recurse = [&](auto&& self, std::size_t from) -> bool {
        if (chosen.size() == kk) return true;
        for (std::size_t v = from; v < n; ++v) {
            alive[v] = false;
            chosen.push_back(v);
            bool ok = is_connected_on(g, alive) && self(self, v + 1);
            chosen.pop_back();
            alive[v] = true;
            if (!ok) return false;
        }
        return true;
    };
    return recurse(recurse, 0);
}

inline bool is_r_regular(const ColoredGraph& g, std::size_t r) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != r) return false;
    return true;
}

}  // namespace tga
