#include "fibroot/exactnum.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace fibroot;

namespace {

Digits make(std::initializer_list<std::uint8_t> v) { return Digits{std::vector<std::uint8_t>(v)}; }

}  // namespace

TEST(Digits, LeastSignificantFirst) {
    EXPECT_EQ(digits_of(864), make({4, 6, 8}));
    EXPECT_EQ(digits_of(9876543), make({3, 4, 5, 6, 7, 8, 9}));
}

TEST(Digits, ZeroIsOneDigit) {
    EXPECT_EQ(digits_of(0), make({0}));
    EXPECT_EQ(digits_of(0).size(), 1u);
}

TEST(Digits, RoundTripAndNoLeadingZero) {
    for (unsigned n = 0; n <= 20000; ++n) {
        const Digits d = digits_of(n);
        ASSERT_EQ(value_of(d), n);
        if (n > 0) {
            ASSERT_NE(d.values.back(), 0);
        }
    }
    const Natural big("123456789012345678901234567890");
    EXPECT_EQ(value_of(digits_of(big)), big);
}

TEST(Digits, AtOrZeroPastTheTop) {
    const Digits d = digits_of(743);
    EXPECT_EQ(d.at_or_zero(2), 7);
    EXPECT_EQ(d.at_or_zero(3), 0);
}

TEST(Digits, RejectsNegative) { EXPECT_THROW(digits_of(Natural(-1)), std::domain_error); }

TEST(Partition, HeadTensOnes) {
    EXPECT_EQ(partition(12345), (Partition{123, 4, 5}));
    EXPECT_EQ(partition(7), (Partition{0, 0, 7}));
    EXPECT_EQ(partition(743), (Partition{7, 4, 3}));
}

TEST(Partition, Reconstructs) {
    for (unsigned n = 0; n <= 5000; ++n) ASSERT_EQ(partition(n).value(), n);
}

TEST(ParseNatural, AcceptsDigitsOnly) {
    EXPECT_EQ(parse_natural("864"), Natural(864));
    EXPECT_EQ(parse_natural("0"), Natural(0));
    EXPECT_FALSE(parse_natural(""));
    EXPECT_FALSE(parse_natural("-3"));
    EXPECT_FALSE(parse_natural("12a"));
    EXPECT_FALSE(parse_natural(" 1"));
}

TEST(Oracle, WorkedValues) {
    EXPECT_EQ(isqrt_oracle(25), (RootResult{25, 5, 0}));
    EXPECT_EQ(isqrt_oracle(864), (RootResult{864, 29, 23}));
    EXPECT_EQ(isqrt_oracle(927435), (RootResult{927435, 963, 66}));
}

TEST(Oracle, ExhaustiveAgainstScan) {
    const auto roots = oracle::scan_roots(1'000'000);
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        const RootResult r = isqrt_oracle(n);
        ASSERT_EQ(r.root, roots[n]) << n;
        ASSERT_TRUE(r.consistent()) << n;
    }
}

TEST(Oracle, LargeValuesAgainstBoost) {
    Natural n = 1;
    for (int i = 0; i < 60; ++i) {
        n = n * 37 + 11;
        ASSERT_EQ(isqrt_oracle(n).root, oracle::big_sqrt(n));
    }
}

TEST(RootResult, RemainderMayEqualTwiceRoot) {
    EXPECT_TRUE((RootResult{960, 30, 60}).consistent());
    EXPECT_FALSE((RootResult{961, 30, 61}).consistent());
}
