#include "tga/canonical.hpp"
#include "tga/connectivity.hpp"
#include "tga/graph.hpp"
#include "tga/graph_io.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace tga;
using tga::testing::brute_isomorphic;
using tga::testing::random_colored_graph;

TEST(ColorSet, Basics) {
    ColorSet s{1, 3};
    EXPECT_TRUE(s.contains(1));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.size(), 2);
    EXPECT_EQ(s.max_color(), 3);
    EXPECT_EQ(s.to_string(), "{1,3}");
    EXPECT_EQ(ColorSet{}.to_string(), "{}");
    EXPECT_THROW(ColorSet{17}, std::out_of_range);
    EXPECT_THROW(ColorSet{0}, std::out_of_range);
}

TEST(Recoloring, ExplicitRulesWithIdentityDefault) {
    Recoloring rho({{ColorSet{1}, ColorSet{2}}, {ColorSet{2}, ColorSet{2}}});
    EXPECT_EQ(rho(ColorSet{1}), ColorSet{2});
    EXPECT_EQ(rho(ColorSet{3}), ColorSet{3});
    EXPECT_EQ(rho(ColorSet{1, 2}), (ColorSet{1, 2}));  // no rule for the pair
    EXPECT_EQ(rho.rules().size(), 1u);                  // identity rule dropped
    EXPECT_EQ(rho.name(), "{1}->{2}");
    EXPECT_TRUE(Recoloring().is_identity());
    EXPECT_EQ(Recoloring().name(), "id");
    EXPECT_TRUE(rho.preserves_single_colors());
    EXPECT_FALSE(Recoloring({{ColorSet{1}, ColorSet{1, 2}}}).preserves_single_colors());
}

TEST(ColoredGraph, RejectsLoopsAndOutOfRangeColors) {
    ColoredGraph g(2, 3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_THROW(g.set_colors(0, ColorSet{3}), std::out_of_range);
    EXPECT_THROW(g.add_edge(0, 5), std::out_of_range);
}

TEST(Join, AddsAllEdgesBetweenMergedClasses) {
    // K₁{1} ⊔ K₁{2} joined on (1,2) is K₂.
    auto k2 = join(1, 2, single_vertex(2, {1}), single_vertex(2, {2}));
    EXPECT_EQ(k2.n(), 2u);
    EXPECT_EQ(k2.edge_count(), 1u);
    // Within-operand pairs are joined as well.
    ColoredGraph a(2, 2);
    a.set_colors(0, {1});
    a.set_colors(1, {2});
    auto g = join(1, 2, a, ColoredGraph(2));
    EXPECT_TRUE(g.has_edge(0, 1));
    // No color-2 vertex: nothing is added.
    auto two = join(1, 2, single_vertex(2, {1}), single_vertex(2, {1}));
    EXPECT_EQ(two.edge_count(), 0u);
    EXPECT_THROW(join(1, 1, a, a), std::invalid_argument);
    EXPECT_THROW(join(1, 3, a, a), std::out_of_range);
}

TEST(Join, VertexInBothClassesGetsNoLoop) {
    auto g = join(1, 2, single_vertex(2, {1, 2}), single_vertex(2, {}));
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Recolor, AppliesToWholeColorSets) {
    ColoredGraph g(3, 2);
    g.set_colors(0, {1});
    g.set_colors(1, {1, 2});
    auto h = recolor(Recoloring({{ColorSet{1}, ColorSet{3}}}), g);
    EXPECT_EQ(h.colors(0), ColorSet{3});
    EXPECT_EQ(h.colors(1), (ColorSet{1, 2}));
}

TEST(Glue, IdentifiesEquallyLabeledVertices) {
    // Two labeled edges glued at both ends collapse into one edge.
    LabeledGraph e(path_graph(2), {Vertex{0}, Vertex{1}});
    auto g = glue(e, e);
    EXPECT_EQ(g.graph().n(), 2u);
    EXPECT_EQ(g.graph().edge_count(), 1u);
    // Gluing at one end makes P₃.
    LabeledGraph f(path_graph(2), {Vertex{0}, std::nullopt});
    auto p3 = glue(f, f);
    EXPECT_TRUE(is_isomorphic(p3.graph(), path_graph(3)));
    EXPECT_EQ(p3.label(1), Vertex{0});
    // k = 0 is plain disjoint union.
    auto u = glue(LabeledGraph(path_graph(2), {}), LabeledGraph(path_graph(3), {}));
    EXPECT_EQ(u.graph().n(), 5u);
    EXPECT_EQ(u.graph().edge_count(), 3u);
}

TEST(Glue, NonInjectiveLabelingMergesVertices) {
    // Labels 1 and 2 on different vertices of g1, the same vertex of g2: all
    // three labeled vertices become one, and the g1 edge between them vanishes.
    LabeledGraph g1(path_graph(2), {Vertex{0}, Vertex{1}});
    LabeledGraph g2(ColoredGraph(0, 1), {Vertex{0}, Vertex{0}});
    auto g = glue(g1, g2);
    EXPECT_EQ(g.graph().n(), 1u);
    EXPECT_EQ(g.graph().edge_count(), 0u);
}

TEST(Connectivity, KConnectivity) {
    EXPECT_TRUE(is_connected(ColoredGraph(0, 0)));
    EXPECT_TRUE(is_connected(ColoredGraph(0, 1)));
    EXPECT_FALSE(is_connected(edgeless_graph(2)));
    EXPECT_TRUE(is_k_connected(cycle_graph(5), 1));
    EXPECT_FALSE(is_k_connected(cycle_graph(5), 2));
    EXPECT_FALSE(is_k_connected(path_graph(3), 1));
    EXPECT_TRUE(is_k_connected(complete_graph(4), 3));
    EXPECT_TRUE(is_k_connected(ColoredGraph(0, 1), 1));  // K₁ passes vacuously
    EXPECT_FALSE(is_k_connected(edgeless_graph(2), 1));
    EXPECT_TRUE(is_r_regular(cycle_graph(5), 2));
    EXPECT_FALSE(is_r_regular(path_graph(3), 2));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 6;
        const int k = static_cast<int>(rng() % 3);
        auto a = random_colored_graph(rng, k, n, 0.5, true);
        // b is either a relabeling of a or an independent random graph.
        ColoredGraph b;
        if (rng() % 2) {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            b = ColoredGraph(k, n);
            for (Vertex v = 0; v < n; ++v) b.set_colors(perm[v], a.colors(v));
            for (auto [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
        } else {
            b = random_colored_graph(rng, k, n, 0.5, true);
        }
        EXPECT_EQ(is_isomorphic(a, b), brute_isomorphic(a, b));
        auto ca = canonize(a);
        EXPECT_TRUE(brute_isomorphic(ca.graph, a));
    }
}

TEST(Canonical, GuardRejectsLargeGraphs) {
    EXPECT_THROW(canonical_form(path_graph(11)), ResourceError);
    EXPECT_NO_THROW(canonical_form(path_graph(11), 12));
}

// Class counts from an independent enumeration (networkx isomorphism over all
// colorings and edge sets).
TEST(Enumeration, ColoredClassCounts) {
    EXPECT_EQ(enumerate_colored_graphs(0, 4).size(), 19u);
    EXPECT_EQ(enumerate_colored_graphs(1, 4).size(), 119u);
    EXPECT_EQ(enumerate_colored_graphs(2, 3).size(), 145u);
}

TEST(Enumeration, LabeledClassCounts) {
    EXPECT_EQ(enumerate_labeled_graphs(1, 4).size(), 48u);
    EXPECT_EQ(enumerate_labeled_graphs(2, 3).size(), 45u);
}

TEST(Enumeration, OrderAndDistinctness) {
    auto gs = enumerate_colored_graphs(1, 3);
    ASSERT_FALSE(gs.empty());
    EXPECT_EQ(gs.front().n(), 0u);
    for (std::size_t i = 1; i < gs.size(); ++i) EXPECT_LE(gs[i - 1].n(), gs[i].n());
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(brute_isomorphic(gs[i], gs[j]));
}

TEST(Enumeration, GuardFires) { EXPECT_THROW(enumerate_colored_graphs(2, 6, 1000), ResourceError); }

TEST(GraphIO, RoundTrip) {
    ColoredGraph g(2, 3);
    g.set_colors(0, {1, 2});
    g.set_colors(2, {2});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto text = write_graph(g);
    EXPECT_EQ(text, "g 3 2\nc 0 1 2\nc 2 2\ne 0 1\ne 1 2\n");
    EXPECT_EQ(read_graph(text), g);
}

TEST(GraphIO, ErrorsCarryPositions) {
    try {
        read_graph("g 2 1\n# comment\ne 0 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 5u);
    }
    EXPECT_THROW(read_graph("g 2 1\ne 0 0\n"), ParseError);
    EXPECT_THROW(read_graph("g 2 1\ne 0 1\ne 1 0\n"), ParseError);
    EXPECT_THROW(read_graph("g 2 1\nc 0 2\n"), ParseError);
    EXPECT_THROW(read_graph("e 0 1\n"), ParseError);
}

// Operation laws on random inputs: ⊔ and η̄ᵢⱼ are commutative and associative
// up to isomorphism, and so is gluing.
TEST(OperationLaws, CommutativeAndAssociative) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2;
        auto a = random_colored_graph(rng, k, rng() % 3, 0.5, true);
        auto b = random_colored_graph(rng, k, rng() % 3, 0.5, true);
        auto c = random_colored_graph(rng, k, rng() % 3, 0.5, true);
        EXPECT_TRUE(is_isomorphic(disjoint_union(a, b), disjoint_union(b, a)));
        EXPECT_TRUE(is_isomorphic(join(1, 2, a, b), join(1, 2, b, a)));
        EXPECT_TRUE(is_isomorphic(join(1, 2, join(1, 2, a, b), c), join(1, 2, a, join(1, 2, b, c))));
        auto la = tga::testing::random_labeled_colored(rng, k, rng() % 3);
        auto lb = tga::testing::random_labeled_colored(rng, k, rng() % 3);
        auto lc = tga::testing::random_labeled_colored(rng, k, rng() % 3);
        EXPECT_TRUE(is_isomorphic(glue_colored(la, lb), glue_colored(lb, la)));
        EXPECT_TRUE(is_isomorphic(glue_colored(glue_colored(la, lb), lc), glue_colored(la, glue_colored(lb, lc))));
    }
}
