#include "fibroot/refine.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace fibroot;

namespace {

Rational q(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

}  // namespace

TEST(RefineOnce, WorkedValues) {
    const RefinementStep s = refine_once(3, 1, 10);
    EXPECT_EQ(s.approx, q(19, 6));
    EXPECT_EQ(s.residual, q(-1, 36));
    EXPECT_EQ(refine_once(27, 14, 743).approx, Rational(27) + q(7, 27));
    const RefinementStep p = refine_once(5, 0, 25);
    EXPECT_EQ(p.approx, Rational(5));
    EXPECT_TRUE(p.residual.is_zero());
}

TEST(RefineOnce, Rejections) {
    EXPECT_THROW(refine_once(0, 0, 0), std::domain_error);
    EXPECT_THROW(refine_once(3, 2, 10), std::invalid_argument);
}

TEST(RefineSecond, WorkedValues) {
    EXPECT_EQ(refine_second(q(19, 6), 10).approx, q(19, 6) - q(1, 228));
    EXPECT_EQ(refine_second(q(19, 6), 10).approx, q(721, 228));

    const Rational a1 = Rational(963) + q(11, 321);
    const Rational c = q(11, 321) * q(11, 321) / (Rational(2) * a1);
    const RefinementStep s = refine_second(a1, 927435);
    EXPECT_EQ(s.approx, a1 - c);
    EXPECT_EQ(s.correction, -c);
    EXPECT_EQ(c, q(121, 198464028));

    EXPECT_EQ(refine_second(Rational(5), 25).approx, Rational(5));
}

TEST(Heron, WorkedValues) {
    EXPECT_EQ(heron_step(Rational(3), 10), q(19, 6));
    EXPECT_EQ(heron_step(Rational(5), 25), Rational(5));
    EXPECT_EQ(heron_step(Rational(1), 2), q(3, 2));
    EXPECT_THROW(heron_step(Rational(0), 2), std::domain_error);
}

TEST(Newton, WorkedValues) {
    EXPECT_EQ(newton_step(Rational(3), 10), q(19, 6));
    EXPECT_EQ(newton_step(q(19, 6), 10), q(721, 228));
    EXPECT_EQ(newton_step(Rational(5), 25), Rational(5));
}

TEST(UnitFraction, WorkedValues) {
    EXPECT_EQ(round_unit_fraction(4975, 17010), q(1, 4));
    EXPECT_EQ(round_unit_fraction(1, 6), q(1, 6));
    EXPECT_EQ(round_unit_fraction(11, 642), q(1, 59));
    EXPECT_EQ(round_unit_fraction(0, 7), Rational(0));
    EXPECT_THROW(round_unit_fraction(1, 0), std::domain_error);
}

TEST(UnitFraction, NeverAboveAndExactWhenDividing) {
    for (unsigned d = 1; d <= 300; ++d)
        for (unsigned r = 1; r <= 300; ++r) {
            const Rational u = round_unit_fraction(r, d);
            ASSERT_LE(u, q(r, d));
            ASSERT_EQ(u.numerator(), 1);
            if (d % r == 0) {
                ASSERT_EQ(u, q(r, d));
            }
            // Next larger unit fraction would overshoot.
            if (u.denominator() > 1) {
                ASSERT_GT(q(1, static_cast<long long>(u.denominator()) - 1), q(r, d));
            }
        }
}

TEST(RefineSequence, WorkedValues) {
    const auto s10 = refine_sequence(10, StartChoice::Floor, 2);
    ASSERT_EQ(s10.size(), 2u);
    EXPECT_EQ(s10[0].approx, q(19, 6));
    EXPECT_EQ(s10[1].approx, q(721, 228));
    EXPECT_EQ(s10[1].residual, q(-1, 51984));
    EXPECT_EQ(refine_sequence(12345, StartChoice::Floor, 1)[0].approx, Rational(111) + q(4, 37));
    EXPECT_EQ(refine_sequence(8754, StartChoice::Floor, 1)[0].approx, Rational(93) + q(35, 62));
    EXPECT_THROW(refine_sequence(0, StartChoice::Floor, 1), std::domain_error);
    EXPECT_THROW(refine_sequence(10, StartChoice::Floor, 0), std::invalid_argument);
}

TEST(RefineSequence, CeilStartHasNegativeFirstResidual) {
    const auto s = refine_sequence(10, StartChoice::Ceil, 2);
    EXPECT_LT(s[0].correction.sign(), 0);  // 4 - 6/8
    EXPECT_EQ(s[0].approx, q(13, 4));
    EXPECT_LE(s[1].residual.sign(), 0);
}

TEST(RefineSequence, ResidualIdentityAndMonotoneDecay) {
    for (unsigned n = 1; n <= 3000; ++n) {
        for (StartChoice start : {StartChoice::Floor, StartChoice::Ceil}) {
            const auto seq = refine_sequence(n, start, 4);
            for (std::size_t i = 0; i < seq.size(); ++i) {
                ASSERT_EQ(seq[i].residual, Rational(n) - seq[i].approx * seq[i].approx);
                ASSERT_LE(seq[i].residual.sign(), 0);
                if (i > 0 && !seq[i - 1].residual.is_zero()) {
                    ASSERT_LT(seq[i].residual.abs(), seq[i - 1].residual.abs());
                }
            }
            if (start == StartChoice::Floor) {
                const Natural a = isqrt_oracle(n).root;
                ASSERT_GE(seq[0].approx * seq[0].approx, Rational(n));
                ASSERT_LE(Rational(a * a), Rational(n));
            }
        }
    }
}

TEST(Equivalence, HeronAgainstBoostRational) {
    for (unsigned n = 2; n <= 500; ++n) {
        const Natural a = isqrt_oracle(n).root;
        oracle::cpp_rational x(a);
        const auto seq = refine_sequence(n, StartChoice::Floor, 3);
        for (const auto& s : seq) {
            x = oracle::heron(x, n);
            ASSERT_EQ(s.approx.numerator(), boost::multiprecision::numerator(x));
            ASSERT_EQ(s.approx.denominator(), boost::multiprecision::denominator(x));
        }
    }
}
