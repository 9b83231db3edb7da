#include "tga/rational.hpp"
#include "tga/semiring.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace tga;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-7/2"), Rational(-7, 2));
    EXPECT_EQ(Rational::parse("2.5"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
    EXPECT_EQ(Rational::parse("6/-4"), Rational(-3, 2));
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, NormalizesAndPrints) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OverflowIsAnError) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Rational(1), std::overflow_error);
    EXPECT_THROW(big * Rational(2), std::overflow_error);
    EXPECT_THROW(Rational(1, std::numeric_limits<std::int64_t>::max()) *
                     Rational(1, std::numeric_limits<std::int64_t>::max() - 1),
                 std::overflow_error);
}

TEST(Tropical, MaxPlusOperations) {
    using S = MaxPlus;
    EXPECT_EQ(S::plus(Tropical(3), Tropical(-2)), Tropical(3));
    EXPECT_EQ(S::times(Tropical(3), Tropical(-2)), Tropical(1));
    EXPECT_EQ(S::times(Tropical(3), S::zero()), S::zero());
    EXPECT_EQ(S::plus(S::zero(), Tropical(Rational(-7, 2))), Tropical(Rational(-7, 2)));
    EXPECT_EQ(S::one(), Tropical(0));
}

TEST(Tropical, MinPlusIsTheOrderDual) {
    using S = MinPlus;
    EXPECT_EQ(S::plus(Tropical(3), Tropical(-2)), Tropical(-2));
    EXPECT_EQ(S::times(Tropical(3), Tropical(-2)), Tropical(1));
    EXPECT_EQ(S::zero(), Tropical::pos_inf());
    EXPECT_EQ(S::times(Tropical(5), S::zero()), S::zero());
    EXPECT_EQ(S::plus(S::zero(), Tropical(4)), Tropical(4));
}

TEST(Tropical, TextForm) {
    EXPECT_EQ(Tropical::neg_inf().to_string(), "-inf");
    EXPECT_EQ(Tropical::pos_inf().to_string(), "+inf");
    EXPECT_EQ(Tropical(Rational(-7, 2)).to_string(), "-7/2");
    EXPECT_EQ(Tropical::parse("-inf"), Tropical::neg_inf());
    EXPECT_EQ(Tropical::parse("+inf"), Tropical::pos_inf());
    EXPECT_EQ(Tropical::parse("3"), Tropical(3));
    EXPECT_LT(Tropical::neg_inf(), Tropical(-1000000));
    EXPECT_LT(Tropical(1000000), Tropical::pos_inf());
}

TEST(Natural, CheckedCounting) {
    EXPECT_EQ(Natural::plus(2, 3), 5u);
    EXPECT_EQ(Natural::times(4, 3), 12u);
    EXPECT_THROW(Natural::times(std::numeric_limits<std::uint64_t>::max(), 2), std::overflow_error);
    EXPECT_THROW(Natural::from_rational(Rational(-1)), std::invalid_argument);
    EXPECT_THROW(Natural::from_rational(Rational(1, 2)), std::invalid_argument);
}

TEST(Boolean, Operations) {
    EXPECT_TRUE(Boolean::plus(false, true));
    EXPECT_FALSE(Boolean::times(false, true));
    EXPECT_TRUE(Boolean::from_rational(Rational(2)));
}

TEST(WithSemiring, DispatchesByName) {
    auto name_of = [](std::string_view n) {
        return with_semiring(n, []<Semiring S>() { return std::string(S::name); });
    };
    EXPECT_EQ(name_of("maxplus"), "maxplus");
    EXPECT_EQ(name_of("minplus"), "minplus");
    EXPECT_EQ(name_of("nat"), "nat");
    EXPECT_EQ(name_of("rat"), "rat");
    EXPECT_THROW(name_of("reals"), std::invalid_argument);
}

// Semiring axioms on random small values.
template <Semiring S>
void check_axioms(const std::vector<Value<S>>& pool) {
    for (const auto& a : pool) {
        EXPECT_EQ(S::plus(a, S::zero()), a);
        EXPECT_EQ(S::times(a, S::one()), a);
        EXPECT_EQ(S::times(a, S::zero()), S::zero());
        for (const auto& b : pool) {
            EXPECT_EQ(S::plus(a, b), S::plus(b, a));
            EXPECT_EQ(S::times(a, b), S::times(b, a));
            for (const auto& c : pool) {
                EXPECT_EQ(S::plus(S::plus(a, b), c), S::plus(a, S::plus(b, c)));
                EXPECT_EQ(S::times(S::times(a, b), c), S::times(a, S::times(b, c)));
                EXPECT_EQ(S::times(a, S::plus(b, c)), S::plus(S::times(a, b), S::times(a, c)));
            }
        }
    }
}

TEST(SemiringAxioms, HoldOnSamples) {
    std::vector<Tropical> trop{Tropical::neg_inf(), Tropical(0), Tropical(-2), Tropical(Rational(7, 3)), Tropical(5)};
    check_axioms<MaxPlus>(trop);
    std::vector<Tropical> trop_min{Tropical::pos_inf(), Tropical(0), Tropical(-2), Tropical(Rational(7, 3))};
    check_axioms<MinPlus>(trop_min);
    check_axioms<Natural>({0, 1, 2, 7});
    check_axioms<RationalField>({Rational(0), Rational(1), Rational(-3, 2), Rational(5)});
    check_axioms<Boolean>({false, true});
}
