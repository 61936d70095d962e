#include "fibroot/rational.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace fibroot;

namespace {

Rational q(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

Rational unwrap(const ArithResult& r) { return std::get<Rational>(r); }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(q(4, 8), q(1, 2));
    EXPECT_EQ(q(3, -6).numerator(), -1);
    EXPECT_EQ(q(3, -6).denominator(), 2);
    EXPECT_EQ(q(0, -5).denominator(), 1);
    EXPECT_THROW(q(1, 0), DivisionByZero);
}

TEST(RationalArith, WorkedValues) {
    EXPECT_EQ(unwrap(rational_arith(Rational(3) + q(1, 6), q(1, 228), ArithOp::Sub)), q(721, 228));
    EXPECT_EQ(unwrap(rational_arith(q(1, 2), q(1, 2), ArithOp::Add)), Rational(1));
    EXPECT_EQ(unwrap(rational_arith(q(11, 321), q(11, 321), ArithOp::Mul)), q(121, 103041));
}

TEST(RationalArith, DivisionByZeroIsAValue) {
    const ArithResult r = rational_arith(q(1, 2), Rational(0), ArithOp::Div);
    ASSERT_TRUE(std::holds_alternative<ArithError>(r));
    EXPECT_EQ(std::get<ArithError>(r), ArithError::DivisionByZero);
    EXPECT_THROW(q(1, 2) / Rational(0), DivisionByZero);
}

TEST(RationalArith, AgreesWithBoostRational) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long long> num(-5000, 5000), den(1, 5000);
    for (int i = 0; i < 20000; ++i) {
        const long long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        const Rational a = q(an, ad), b = q(bn, bd);
        const oracle::cpp_rational ra{oracle::cpp_int(an), oracle::cpp_int(ad)};
        const oracle::cpp_rational rb{oracle::cpp_int(bn), oracle::cpp_int(bd)};
        auto same = [](const Rational& x, const oracle::cpp_rational& y) {
            return x.numerator() == boost::multiprecision::numerator(y) &&
                   x.denominator() == boost::multiprecision::denominator(y);
        };
        ASSERT_TRUE(same(unwrap(rational_arith(a, b, ArithOp::Add)), ra + rb));
        ASSERT_TRUE(same(unwrap(rational_arith(a, b, ArithOp::Sub)), ra - rb));
        ASSERT_TRUE(same(unwrap(rational_arith(a, b, ArithOp::Mul)), ra * rb));
        if (bn != 0) {
            ASSERT_TRUE(same(unwrap(rational_arith(a, b, ArithOp::Div)), ra / rb));
        }
    }
}

TEST(Rational, StaysCanonicalAlongAChain) {
    Rational x = q(1, 3);
    for (int i = 1; i < 40; ++i) {
        x = x * q(i + 1, i) - q(1, i * i + 1);
        ASSERT_GT(x.denominator(), 0);
        ASSERT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(x.numerator()), x.denominator()), 1);
    }
}

TEST(Rational, OrderingAndFloor) {
    EXPECT_LT(q(1, 3), q(1, 2));
    EXPECT_GT(q(-1, 3), q(-1, 2));
    EXPECT_EQ(q(7, 2).floor(), 3);
    EXPECT_EQ(q(-7, 2).floor(), -4);
    EXPECT_EQ(q(-4, 2).floor(), -2);
}

TEST(MixedNumber, ModernAndFractionFirst) {
    EXPECT_EQ(to_mixed(q(736, 27)), "27 7/27");
    EXPECT_EQ(to_mixed(q(736, 27), MixedOrder::FractionFirst), "7/27 27");
    EXPECT_EQ(to_mixed(Rational(5)), "5");
    EXPECT_EQ(to_mixed(q(1, 4)), "1/4");
    EXPECT_EQ(to_mixed(Rational(0)), "0");
    EXPECT_EQ(to_mixed(q(-19, 6)), "-3 1/6");
    EXPECT_EQ(join_terms({Rational(85), q(1, 20), q(1, 400)}, MixedOrder::FractionFirst), "1/400 1/20 85");
}
