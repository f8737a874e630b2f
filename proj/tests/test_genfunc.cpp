#include "balkit/errors.hpp"
#include "balkit/genfunc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace balkit;

namespace {

std::vector<BigInt> coeffs(const PowerSeriesPrefix& s) { return s.coeffs; }

std::vector<mpz_class> oracle_terms(const SequenceId& seq, long count) {
    switch (seq.family()) {
    case Family::balancing: return oracle::balancing(count);
    case Family::lucas_balancing: return oracle::lucas_balancing(count);
    case Family::fibonacci: return oracle::fibonacci(count);
    case Family::lucas: return oracle::lucas(count);
    case Family::gen_fibonacci: return oracle::gen_fib(seq.param(), count);
    }
    return {};
}

const SequenceId families[] = {SequenceId::balancing(), SequenceId::lucas_balancing(), SequenceId::fibonacci(),
                               SequenceId::lucas()};

}  // namespace

TEST(Gf, SpecValues) {
    EXPECT_EQ(gf(SequenceId::balancing(), 1, 0).to_string(), "t/(1-6t+t^2)");
    EXPECT_EQ(gf(SequenceId::lucas_balancing(), 1, 0).to_string(), "(1-3t)/(1-6t+t^2)");
    // Numerator F_1 + (-1)^1 F_1 t.
    EXPECT_EQ(gf(SequenceId::fibonacci(), 2, 1).to_string(), "(1-t)/(1-3t+t^2)");
    EXPECT_EQ(gf(SequenceId::lucas(), 1, 0).to_string(), "(2-t)/(1-t-t^2)");
}

TEST(Gf, Errors) {
    EXPECT_THROW(gf(SequenceId::balancing(), 2, 2), ParameterError);
    EXPECT_THROW(gf(SequenceId::balancing(), 0, 0), ParameterError);
    EXPECT_THROW(gf(SequenceId::balancing(), 3, -1), ParameterError);
    EXPECT_THROW(gf(SequenceId::gen_fibonacci(2), 1, 0), ParameterError);
}

TEST(Expand, SpecValues) {
    EXPECT_EQ(coeffs(expand(gf(SequenceId::balancing(), 1, 0), 5)), (std::vector<BigInt>{0, 1, 6, 35, 204}));
    EXPECT_EQ(coeffs(expand(gf(SequenceId::balancing(), 2, 1), 4)), (std::vector<BigInt>{1, 35, 1189, 40391}));
    const RationalGF geometric{{{1}}, {{1, -1}}};
    EXPECT_EQ(coeffs(expand(geometric, 3)), (std::vector<BigInt>{1, 1, 1}));
}

TEST(Expand, Errors) {
    const RationalGF pole{{{1}}, {{0, 1}}};
    EXPECT_THROW(expand(pole, 3), DomainError);
    const RationalGF fractional{{{1}}, {{2, 1}}};
    EXPECT_THROW(expand(fractional, 3), DomainError);
}

TEST(Expand, MatchesTermsForAllSubsequences) {
    for (const auto& seq : families) {
        const auto s = oracle_terms(seq, 6 * 50 + 6);
        for (long k = 1; k <= 6; ++k)
            for (long r = 0; r < k; ++r) {
                const auto series = expand(gf(seq, k, r), 50);
                ASSERT_EQ(series.coeffs.size(), 50u);
                for (long n = 0; n < 50; ++n)
                    ASSERT_EQ(series.coeffs[n], s[k * n + r]) << seq.name() << " k=" << k << " r=" << r << " n=" << n;
            }
    }
}

TEST(Expand, LongPrefixIsCheap) {
    const auto series = expand(gf(SequenceId::balancing(), 1, 0), 10000);
    EXPECT_EQ(series.coeffs[9999], oracle::balancing(10000)[9999]);
}

TEST(SeriesMul, SquaredGfIsConvolution) {
    for (const auto& seq : families) {
        const auto s = oracle_terms(seq, 6 * 31 + 6);
        for (long k = 1; k <= 6; ++k)
            for (long r = 0; r < k; ++r) {
                const auto series = expand(gf(seq, k, r), 31);
                const auto sq = series_mul(series, series, 31);
                for (long n = 0; n <= 30; ++n)
                    ASSERT_EQ(sq.coeffs[n], oracle::convolution(s, k, r, n))
                        << seq.name() << " k=" << k << " r=" << r << " n=" << n;
            }
    }
}

TEST(SeriesMul, Truncation) {
    const PowerSeriesPrefix x{{1, 2}};
    const PowerSeriesPrefix y{{3, 4, 5}};
    EXPECT_EQ(series_mul(x, y, 5).coeffs, (std::vector<BigInt>{3, 10, 13, 10, 0}));
    EXPECT_EQ(series_mul(x, y, 2).coeffs, (std::vector<BigInt>{3, 10}));
}

TEST(Polynomial, Printing) {
    EXPECT_EQ((Polynomial{{0}}).to_string(), "0");
    EXPECT_EQ((Polynomial{{0, 1}}).to_string(), "t");
    EXPECT_EQ((Polynomial{{-2, 0, 3}}).to_string(), "-2+3t^2");
    EXPECT_EQ((Polynomial{{1}})[5], 0);
}
