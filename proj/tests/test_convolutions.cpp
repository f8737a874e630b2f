#include "balkit/convolutions.hpp"
#include "balkit/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace balkit;

namespace {

const ConvFamily all_families[] = {ConvFamily::balancing, ConvFamily::lucas_balancing, ConvFamily::fibonacci,
                                   ConvFamily::lucas};

std::vector<mpz_class> oracle_terms(ConvFamily f, long count) {
    switch (f) {
    case ConvFamily::balancing: return oracle::balancing(count);
    case ConvFamily::lucas_balancing: return oracle::lucas_balancing(count);
    case ConvFamily::fibonacci: return oracle::fibonacci(count);
    case ConvFamily::lucas: return oracle::lucas(count);
    }
    return {};
}

}  // namespace

TEST(BruteConv, SpecValues) {
    EXPECT_EQ(brute_conv(ConvFamily::balancing, {1, 0, 3}), 12);
    EXPECT_EQ(brute_conv(ConvFamily::balancing, {2, 1, 1}), 70);
    EXPECT_EQ(brute_conv(ConvFamily::lucas_balancing, {1, 0, 0}), 1);
    EXPECT_EQ(brute_conv(ConvFamily::lucas, {3, 1, 2}), 107);
}

TEST(ConvClosed, SpecValues) {
    EXPECT_EQ(conv_balancing_closed({2, 1, 1}), 70);
    EXPECT_EQ(conv_balancing_closed({1, 0, 3}), 12);
    EXPECT_EQ(conv_balancing_closed({3, 0, 0}), 0);
    EXPECT_EQ(conv_balancing_r0(1, 3), 12);
    EXPECT_EQ(conv_balancing_r0(1, 2), 1);
    EXPECT_EQ(conv_balancing_r0(4, 0), 0);
    EXPECT_EQ(conv_lucas_balancing_closed({1, 0, 0}), 1);
    EXPECT_EQ(conv_lucas_balancing_closed({1, 0, 1}), 6);
    EXPECT_EQ(conv_fibonacci_closed({2, 0, 1}), 0);
    EXPECT_EQ(conv_fibonacci_closed({2, 1, 1}), 4);
    EXPECT_EQ(conv_fibonacci_closed({1, 0, 0}), 0);
    EXPECT_EQ(conv_lucas_closed({1, 0, 1}), 4);
    EXPECT_EQ(conv_lucas_closed({2, 0, 0}), 4);
    EXPECT_EQ(conv_lucas_closed({3, 1, 2}), 107);
}

TEST(ConvClosed, Errors) {
    EXPECT_THROW(validate({1, 1, 0}), ParameterError);
    EXPECT_THROW(validate({2, -1, 0}), ParameterError);
    EXPECT_THROW(validate({2, 1, -1}), ParameterError);
    EXPECT_THROW(conv_closed(ConvFamily::balancing, {1, 1, 0}), ParameterError);
    EXPECT_THROW(brute_conv(ConvFamily::lucas, {0, 0, 0}), ParameterError);
}

TEST(ConvClosed, OracleEquivalenceFullGrid) {
    for (auto f : all_families) {
        const auto s = oracle_terms(f, 5 * 40 + 5);
        for (long k = 1; k <= 5; ++k)
            for (long r = 0; r < k; ++r)
                for (long n = 0; n <= 40; ++n) {
                    const mpz_class expected = oracle::convolution(s, k, r, n);
                    ASSERT_EQ(brute_conv(f, {k, r, n}), expected);
                    ASSERT_EQ(conv_closed(f, {k, r, n}), expected)
                        << to_string(f) << " k=" << k << " r=" << r << " n=" << n;
                }
    }
}

TEST(ConvClosed, RationalityCertificates) {
    for (auto f : all_families)
        for (long k = 1; k <= 5; ++k)
            for (long r = 0; r < k; ++r)
                for (long n = 0; n <= 40; n += 3) {
                    const GaussQuad v = closed_form_value(f, {k, r, n});
                    ASSERT_TRUE(v.im().is_zero()) << to_string(f) << " " << k << " " << r << " " << n;
                    ASSERT_TRUE(v.re().is_rational()) << to_string(f) << " " << k << " " << r << " " << n;
                    ASSERT_TRUE(is_integer(v.re().a()));
                }
}

TEST(ConvClosed, FieldsByCase) {
    EXPECT_EQ(closed_form_value(ConvFamily::balancing, {2, 1, 3}).d(), 2);
    EXPECT_EQ(closed_form_value(ConvFamily::lucas_balancing, {2, 1, 3}).d(), 2);
    EXPECT_EQ(closed_form_value(ConvFamily::fibonacci, {3, 1, 3}).d(), 5);
    EXPECT_EQ(closed_form_value(ConvFamily::lucas, {3, 0, 3}).d(), 5);
}

TEST(ConvClosed, RZeroSpecializationMatchesGeneralForm) {
    for (long k = 1; k <= 5; ++k)
        for (long n = 0; n <= 40; ++n) ASSERT_EQ(conv_balancing_r0(k, n), conv_balancing_closed({k, 0, n})) << k << " " << n;
}

TEST(ConvClosed, BeyondGrid) {
    // A few larger parameters as a smoke test of the deep conjugate powers.
    for (auto f : all_families) {
        const auto s = oracle_terms(f, 9 * 60 + 9);
        EXPECT_EQ(conv_closed(f, {9, 4, 60}), oracle::convolution(s, 9, 4, 60)) << to_string(f);
        EXPECT_EQ(conv_closed(f, {8, 0, 60}), oracle::convolution(s, 8, 0, 60)) << to_string(f);
    }
}
