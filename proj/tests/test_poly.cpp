#include <random>

#include <gtest/gtest.h>

#include "gradalg/poly.hpp"
#include "oracles.hpp"

using gradalg::exact_divide;
using gradalg::Integer;
using gradalg::IntPoly;

namespace {

IntPoly from_oracle(const oracle::Coeffs& c) { return IntPoly(std::vector<Integer>(c.begin(), c.end())); }

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-max_coeff, max_coeff);
    std::vector<Integer> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coef(rng);
    return IntPoly(std::move(cs));
}

} // namespace

TEST(IntPoly, ZeroHasNoDegree) {
    IntPoly zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_FALSE(zero.degree().has_value());
    EXPECT_EQ(IntPoly({0, 0, 0}), zero);
    EXPECT_EQ(IntPoly({1, 2, 0, 0}).degree(), 1u);
    EXPECT_THROW(zero.leading(), std::domain_error);
}

TEST(IntPoly, SquareOfOneMinusT) {
    const IntPoly a{1, -1};
    EXPECT_EQ(a * a, (IntPoly{1, -2, 1}));
}

TEST(IntPoly, CubeTimesOnePlusT) {
    const IntPoly got = IntPoly{1, -1}.pow(3) * IntPoly{1, 1};
    const auto want = oracle::convolve(oracle::power(oracle::from({1, -1}), 3), oracle::from({1, 1}));
    EXPECT_EQ(got, from_oracle(want));
    EXPECT_EQ(got, (IntPoly{1, -2, 0, 2, -1}));
}

TEST(IntPoly, EvaluateCharacteristicPolynomialAtOne) {
    const IntPoly p{1, -2, 0, 1, 1, 0, -2, 1};
    EXPECT_EQ(p.evaluate(1), 0);
    EXPECT_EQ(p.evaluate(2), 1 - 4 + 8 + 16 - 128 + 128);
}

TEST(IntPoly, AddSubtractCancelToZero) {
    const IntPoly p{3, 0, -7, 2};
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p + (-p), IntPoly{});
}

TEST(IntPoly, NoOverflowOnLargePowers) {
    const IntPoly p = IntPoly{1, 1}.pow(100);
    EXPECT_EQ(p.coeff(50), oracle::binom(100, 50));
}

TEST(IntPoly, ToString) {
    EXPECT_EQ(IntPoly({1, -3, 3, -1}).to_string(), "1 - 3t + 3t^2 - t^3");
    EXPECT_EQ(IntPoly({0, 1}).to_string(), "t");
    EXPECT_EQ(IntPoly{}.to_string(), "0");
    EXPECT_EQ(IntPoly({-1, 0, 2}).to_string(), "-1 + 2t^2");
}

TEST(ExactDivide, Examples) {
    EXPECT_EQ(exact_divide(IntPoly{1, -1}.pow(3), IntPoly{1, -1}), (IntPoly{1, -2, 1}));
    const auto q = exact_divide(IntPoly{1, -2, 0, 2, -1}, IntPoly{1, 1});
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, (IntPoly{1, -3, 3, -1}));
    EXPECT_EQ(*q * (IntPoly{1, 1}), (IntPoly{1, -2, 0, 2, -1}));
    EXPECT_FALSE(exact_divide(IntPoly{1, -1}, IntPoly{1, 1}));
}

TEST(ExactDivide, RationalQuotientIsNotDivisible) {
    // 1 / 2 has a rational quotient only; (1 + t) / 2t has none at all.
    EXPECT_FALSE(exact_divide(IntPoly{1, 1}, IntPoly{0, 2}));
    EXPECT_FALSE(exact_divide(IntPoly{1}, IntPoly{2}));
    EXPECT_EQ(exact_divide(IntPoly{2, 4}, IntPoly{2}), (IntPoly{1, 2}));
}

TEST(ExactDivide, ZeroDivisorThrows) { EXPECT_THROW(exact_divide(IntPoly{1}, IntPoly{}), std::invalid_argument); }

TEST(ExactDivide, ZeroDividend) { EXPECT_EQ(exact_divide(IntPoly{}, IntPoly{1, 1}), IntPoly{}); }

TEST(ExactDivide, RandomProductsDivideBack) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly a = random_poly(rng, 6, 9);
        IntPoly b = random_poly(rng, 5, 9);
        if (b.is_zero()) b = IntPoly{1};
        const IntPoly prod = a * b;
        const auto want = oracle::convolve(oracle::Coeffs(a.coeffs().begin(), a.coeffs().end()),
                                           oracle::Coeffs(b.coeffs().begin(), b.coeffs().end()));
        ASSERT_EQ(prod, from_oracle(want));
        const auto q = exact_divide(prod, b);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, a);
        // Perturbing the constant term breaks divisibility unless b is a unit.
        if (*b.degree() > 0) {
            const auto r = exact_divide(prod + IntPoly{1}, b);
            if (r) {
                EXPECT_EQ(*r * b, prod + IntPoly{1});
            }
        }
    }
}
