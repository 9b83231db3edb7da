#include "tga/field_linalg.hpp"
#include "tga/nat_span.hpp"
#include "tga/tropical_linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tga;

namespace {

const Tropical NI = Tropical::neg_inf();

using Rows = std::vector<std::vector<Tropical>>;

std::vector<Tropical> combine(const Rows& rows, const std::vector<Tropical>& x) {
    std::vector<Tropical> out(rows.front().size(), NI);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = MaxPlus::plus(out[i], MaxPlus::times(x[j], rows[j][i]));
    return out;
}

// Exhaustive search over coefficients in {−∞} ∪ [lo, hi].
bool brute_solvable(const Rows& rows, const std::vector<Tropical>& target, int lo, int hi) {
    std::vector<Tropical> grid{NI};
    for (int v = lo; v <= hi; ++v) grid.emplace_back(v);
    std::vector<std::size_t> idx(rows.size(), 0);
    while (true) {
        std::vector<Tropical> x;
        for (auto i : idx) x.push_back(grid[i]);
        if (combine(rows, x) == target) return true;
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == grid.size()) idx[p++] = 0;
        if (p == idx.size()) return false;
    }
}

}  // namespace

TEST(Residual, Conventions) {
    EXPECT_EQ(maxplus::residual(Tropical(5), Tropical(2)), Tropical(3));
    EXPECT_EQ(maxplus::residual(Tropical(5), NI), Tropical::pos_inf());
    EXPECT_EQ(maxplus::residual(NI, Tropical(2)), NI);
    EXPECT_EQ(maxplus::residual(NI, NI), Tropical::pos_inf());
}

TEST(SolveCombination, SmallExample) {
    Rows rows{{0, 1}, {1, 0}};
    std::vector<Tropical> target{2, 3};
    auto x = maxplus::solve_combination(rows, target);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (std::vector<Tropical>{2, 1}));
}

TEST(SolveCombination, UnsolvableExample) {
    // (0,0) = (0,−∞) ⊕ (−∞,0).
    Rows rows{{0, NI}, {NI, 0}};
    EXPECT_TRUE(maxplus::solve_combination(rows, std::vector<Tropical>{0, 0}));
    // From (0,1) and (1,0) the principal solution for (0,2) is (0,−1), giving (0,1).
    Rows rows2{{0, 1}, {1, 0}};
    EXPECT_FALSE(maxplus::solve_combination(rows2, std::vector<Tropical>{0, 2}));
}

TEST(SolveCombination, AllBottomTargetUsesEmptyCombination) {
    Rows rows{{0, 1}};
    auto x = maxplus::solve_combination(rows, std::vector<Tropical>{NI, NI});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], NI);
}

TEST(SolveCombination, RejectsTop) {
    Rows rows{{0, 1}};
    EXPECT_THROW(maxplus::solve_combination(rows, std::vector<Tropical>{Tropical::pos_inf(), 0}),
                 std::invalid_argument);
}

TEST(SolveCombination, MinPlusViaDuality) {
    Rows rows{{0, 1}, {1, 0}};
    // min-plus: x ⊗ rows = (min(x0, x1+1), min(x0+1, x1)).
    auto x = solve_combination<MinPlus>(rows, std::vector<Tropical>{2, 3});
    ASSERT_TRUE(x);
    std::vector<Tropical> out{MinPlus::plus(MinPlus::times((*x)[0], 0), MinPlus::times((*x)[1], 1)),
                              MinPlus::plus(MinPlus::times((*x)[0], 1), MinPlus::times((*x)[1], 0))};
    EXPECT_EQ(out, (std::vector<Tropical>{2, 3}));
}

TEST(ExtractBasis, DropsScalarMultiplesAndBottomRows) {
    Rows rows{{0, 1}, {NI, NI}, {2, 3}, {1, 0}};
    auto b = maxplus::extract_basis(rows);
    EXPECT_EQ(b, (std::vector<std::size_t>{2, 3}));
}

TEST(ExtractBasis, RemovesLowestExpressibleRowFirst) {
    // Row 2 = row 0 ⊕ row 1. Row 0 is not a combination of rows 1 and 2 (its
    // second coordinate is −∞), nor is row 1, so only row 2 goes.
    Rows rows{{0, NI}, {NI, 0}, {0, 0}};
    EXPECT_EQ(maxplus::extract_basis(rows), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(maxplus::row_rank(Matrix<MaxPlus>::from_rows(rows)), 2u);
}

TEST(ExtractBasis, IdentityPatternIsIndependent) {
    Rows rows{{0, NI, NI}, {NI, 0, NI}, {NI, NI, 0}};
    EXPECT_EQ(maxplus::extract_basis(rows).size(), 3u);
}

// Property: the extracted basis generates every input row and no basis row is
// a combination of the others.
TEST(ExtractBasis, BasisGeneratesAndIsIndependent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 4;
        Rows rows(r, std::vector<Tropical>(c));
        for (auto& row : rows)
            for (auto& v : row) v = (rng() % 4 == 0) ? NI : Tropical(static_cast<int>(rng() % 5));
        auto basis = maxplus::extract_basis(rows);
        for (const auto& row : rows) EXPECT_TRUE(maxplus::solve_combination(rows, basis, row));
        for (std::size_t b : basis) {
            std::vector<std::size_t> others;
            for (std::size_t q : basis)
                if (q != b) others.push_back(q);
            EXPECT_FALSE(maxplus::solve_combination(rows, others, rows[b]));
        }
    }
}

// Property: solve_combination agrees with exhaustive search over a coefficient
// grid wide enough to contain every principal solution.
TEST(SolveCombination, AgreesWithBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        Rows rows(3, std::vector<Tropical>(3));
        for (auto& row : rows)
            for (auto& v : row) v = (rng() % 4 == 0) ? NI : Tropical(static_cast<int>(rng() % 4));
        std::vector<Tropical> target(3);
        for (auto& v : target) v = (rng() % 5 == 0) ? NI : Tropical(static_cast<int>(rng() % 7));
        auto x = maxplus::solve_combination(rows, target);
        EXPECT_EQ(x.has_value(), brute_solvable(rows, target, -3, 6));
        if (x) {
            EXPECT_EQ(combine(rows, *x), target);
        }
    }
}

TEST(FieldLinalg, RankAndBasis) {
    using R = Rational;
    std::vector<std::vector<R>> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}};
    EXPECT_EQ(field::rank(rows), 2u);
    // Rows 3 and 2 are independent; row 1 = 2(row 3 − row 2) and row 0 = row 1 / 2.
    EXPECT_EQ(field::extract_basis(rows), (std::vector<std::size_t>{2, 3}));
    EXPECT_TRUE(field::in_span(rows, std::vector<R>{3, 7, 10}));
    EXPECT_FALSE(field::in_span(rows, std::vector<R>{0, 0, 1}));
}

TEST(FieldLinalg, ZeroRowsHaveRankZero) {
    std::vector<std::vector<Rational>> rows{{0, 0}, {0, 0}};
    EXPECT_EQ(field::rank(rows), 0u);
}

TEST(NatSpan, BoundedMembership) {
    std::vector<std::vector<std::uint64_t>> gens{{1, 0}, {1, 1}};
    EXPECT_TRUE(nat::in_span(gens, std::vector<std::uint64_t>{3, 2}, 5));
    EXPECT_FALSE(nat::in_span(gens, std::vector<std::uint64_t>{0, 1}, 5));
    EXPECT_FALSE(nat::in_span(gens, std::vector<std::uint64_t>{9, 0}, 5));  // needs 9 copies
    EXPECT_TRUE(nat::in_span(gens, std::vector<std::uint64_t>{0, 0}, 0));
}
