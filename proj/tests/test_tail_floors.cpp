#include "balkit/errors.hpp"
#include "balkit/sequences.hpp"
#include "balkit/tail_floors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace balkit;

namespace {

const auto B_ = TailFamily::balancing;
const auto C_ = TailFamily::lucas_balancing;

std::vector<TailSpec> sweep_specs() {
    std::vector<TailSpec> specs;
    for (Shape s : all_shapes()) {
        if (s == Shape::plain) {
            for (long l = 1; l <= 3; ++l) {
                specs.push_back(TailSpec::plain(B_, l));
                specs.push_back(TailSpec::plain(C_, l));
            }
        } else if (is_gen_fib_shape(s)) {
            for (long a = 1; a <= 3; ++a) specs.push_back(TailSpec::gen_fib(s, a));
        } else {
            specs.push_back(TailSpec::alternating(B_, s));
            specs.push_back(TailSpec::alternating(C_, s));
        }
    }
    return specs;
}

// Float-oracle floor with enough terms for 2^-1400 relative accuracy.
oracle::FloatFloor oracle_floor(const TailSpec& spec, long n) {
    const auto factors = summand_factors(spec);
    double bits_per_term = 0;
    for (const auto& f : factors) {
        const double growth =
            spec.family() == TailFamily::gen_fibonacci ? spec.param() + 1.0 / (spec.param() + 1) : 5.0;
        bits_per_term += f.step * std::log2(growth);
    }
    const long terms = static_cast<long>(1400 / bits_per_term) + 2;
    long max_index = 0;
    std::vector<oracle::Factor> of;
    for (const auto& f : factors) {
        of.push_back({f.step, f.offset});
        max_index = std::max(max_index, f.step * (n + terms) + f.offset + 1);
    }
    std::vector<mpz_class> s;
    switch (spec.family()) {
    case TailFamily::balancing: s = oracle::balancing(max_index + 1); break;
    case TailFamily::lucas_balancing: s = oracle::lucas_balancing(max_index + 1); break;
    case TailFamily::gen_fibonacci: s = oracle::gen_fib(spec.param(), max_index + 1); break;
    }
    return oracle::float_floor(s, of, is_alternating(spec.shape()), n, terms);
}

}  // namespace

TEST(TailSpec, ParseAndName) {
    EXPECT_EQ(TailSpec::parse("alt-B", 1, 1), TailSpec::alternating(B_, Shape::alt));
    EXPECT_EQ(TailSpec::parse("alt-sq-C", 1, 1), TailSpec::alternating(C_, Shape::alt_sq));
    EXPECT_EQ(TailSpec::parse("plain-B", 3, 1), TailSpec::plain(B_, 3));
    EXPECT_EQ(TailSpec::parse("gf-odd-idx", 1, 2), TailSpec::gen_fib(Shape::gf_odd_idx, 2));
    EXPECT_EQ(TailSpec::plain(C_, 2).name(), "plain-C(l=2)");
    EXPECT_EQ(TailSpec::gen_fib(Shape::gf_sq, 3).name(), "gf-sq(a=3)");
    for (const auto& spec : sweep_specs())
        EXPECT_EQ(TailSpec::parse(spec.name().substr(0, spec.name().find('(')), std::max(1L, spec.param()),
                                  std::max(1L, spec.param())),
                  spec);
}

TEST(TailSpec, Errors) {
    EXPECT_THROW(TailSpec::parse("alt-G", 1, 1), ParameterError);
    EXPECT_THROW(TailSpec::parse("gf-plain-B", 1, 1), ParameterError);
    EXPECT_THROW(TailSpec::parse("nope", 1, 1), ParameterError);
    EXPECT_THROW(TailSpec::plain(B_, 0), ParameterError);
    EXPECT_THROW(TailSpec::plain(TailFamily::gen_fibonacci, 1), ParameterError);
    EXPECT_THROW(TailSpec::alternating(B_, Shape::gf_sq), ParameterError);
    EXPECT_THROW(TailSpec::alternating(TailFamily::gen_fibonacci, Shape::alt), ParameterError);
    EXPECT_THROW(TailSpec::gen_fib(Shape::alt, 1), ParameterError);
    EXPECT_THROW(TailSpec::gen_fib(Shape::gf_plain, 0), ParameterError);
}

TEST(Summand, Values) {
    EXPECT_EQ(summand(TailSpec::plain(B_, 2), 3), Rat(1, 6930));
    EXPECT_EQ(summand(TailSpec::alternating(B_, Shape::alt), 3), Rat(-1, 35));
    EXPECT_EQ(summand(TailSpec::alternating(C_, Shape::alt_consec_prod), 2), Rat(1, 17 * 99));
    EXPECT_EQ(summand(TailSpec::alternating(B_, Shape::alt_odd_sq), 2), Rat(1, 35 * 35));
    EXPECT_EQ(summand(TailSpec::gen_fib(Shape::gf_odd_idx, 1), 3), Rat(1, 5));
    EXPECT_THROW(summand(TailSpec::alternating(B_, Shape::alt), 0), RangeError);
}

TEST(ClosedFloor, SpecValues) {
    EXPECT_EQ(closed_floor(TailSpec::plain(B_, 1), 2).value, 4);
    EXPECT_EQ(closed_floor(TailSpec::alternating(B_, Shape::alt), 2).value, 7);
    EXPECT_EQ(closed_floor(TailSpec::alternating(B_, Shape::alt), 3).value, -42);
    EXPECT_EQ(closed_floor(TailSpec::plain(C_, 1), 1).value, 2);
    EXPECT_EQ(closed_floor(TailSpec::alternating(B_, Shape::alt_sq), 2).value, 37);
    EXPECT_EQ(closed_floor(TailSpec::gen_fib(Shape::gf_plain, 1), 4).value, 1);
}

TEST(ClosedFloor, Thresholds) {
    EXPECT_THROW(closed_floor(TailSpec::alternating(B_, Shape::alt), 0), RangeError);
    EXPECT_THROW(closed_floor(TailSpec::alternating(B_, Shape::alt_odd_sq), 1), RangeError);
    EXPECT_THROW(closed_floor(TailSpec::gen_fib(Shape::gf_odd_idx, 2), 1), RangeError);
    EXPECT_NO_THROW(closed_floor(TailSpec::gen_fib(Shape::gf_odd_idx, 2), 2));
}

TEST(VerifiedFloor, SpecValues) {
    EXPECT_EQ(verified_floor(TailSpec::plain(B_, 1), 1).value, 0);
    EXPECT_EQ(verified_floor(TailSpec::plain(B_, 1), 2).value, 4);
    EXPECT_EQ(verified_floor(TailSpec::alternating(B_, Shape::alt), 2).value, 7);
    EXPECT_EQ(verified_floor(TailSpec::alternating(B_, Shape::alt_sq), 2).value, 37);
    EXPECT_EQ(verified_floor(TailSpec::alternating(B_, Shape::alt_consec_prod), 2).value, 216);
    EXPECT_EQ(verified_floor(TailSpec::plain(C_, 1), 1).value, 2);
    EXPECT_EQ(verified_floor(TailSpec::alternating(C_, Shape::alt), 3).value, -116);
    EXPECT_EQ(verified_floor(TailSpec::gen_fib(Shape::gf_plain, 1), 4).value, 1);
    EXPECT_EQ(verified_floor(TailSpec::gen_fib(Shape::gf_sq, 1), 3).value, 2);
}

TEST(VerifiedFloor, BelowThresholdStillComputable) {
    // The closed form is not claimed at n = 1; the bracket is.
    EXPECT_EQ(verified_floor(TailSpec::alternating(B_, Shape::alt_odd_sq), 1).value, -2);
    EXPECT_THROW(verified_floor(TailSpec::alternating(B_, Shape::alt), 0), RangeError);
}

TEST(VerifiedFloor, UndecidedWhenBudgetTooSmall) {
    // With partial sums the alternating bracket at n = 25 is far too wide at
    // one term.
    EXPECT_THROW(certify_floor(TailSpec::alternating(B_, Shape::alt), 25, 1, BracketMethod::partial_sums),
                 UndecidedInterval);
}

TEST(Certification, ClosedEqualsVerifiedWithin16Terms) {
    for (const auto& spec : sweep_specs())
        for (long n = spec.threshold(); n <= 25; ++n) {
            const CertifiedFloor cert = certify_floor(spec, n, 16);
            ASSERT_LE(cert.terms, 16);
            ASSERT_EQ(cert.floor, closed_floor(spec, n)) << spec.name() << " n=" << n;
        }
}

TEST(Certification, MatchesFloatOracle) {
    for (const auto& spec : sweep_specs())
        for (long n = 1; n <= 25; n += (n < 6 ? 1 : 4)) {
            const auto expected = oracle_floor(spec, n);
            ASSERT_TRUE(expected.trusted) << spec.name() << " n=" << n;
            ASSERT_EQ(verified_floor(spec, n).value, expected.floor) << spec.name() << " n=" << n;
        }
}

TEST(Certification, PrintedCFormsDisagree) {
    for (Shape s : {Shape::alt_consec_prod, Shape::alt_oddprod, Shape::alt_evenprod}) {
        const TailSpec spec = TailSpec::alternating(C_, s);
        for (long n = 1; n <= 25; ++n) {
            ASSERT_NE(printed_floor(spec, n), verified_floor(spec, n)) << spec.name() << " n=" << n;
            ASSERT_EQ(closed_floor(spec, n), verified_floor(spec, n)) << spec.name() << " n=" << n;
        }
    }
    // Every other shape: printed and closed coincide.
    for (const auto& spec : sweep_specs()) {
        const bool corrected = spec.family() == C_ && (spec.shape() == Shape::alt_consec_prod ||
                                                       spec.shape() == Shape::alt_oddprod ||
                                                       spec.shape() == Shape::alt_evenprod);
        if (corrected) continue;
        for (long n = spec.threshold(); n <= 10; ++n) ASSERT_EQ(printed_floor(spec, n), closed_floor(spec, n));
    }
}

namespace {

// Exact partial sum of 150 terms; the remainder is below 5^-150.
Rat long_sum(const TailSpec& spec, long n) {
    Rat sum = 0;
    for (long k = n; k < n + 150; ++k) sum += summand(spec, k);
    return sum;
}

bool near_inside(const RigorousInterval& iv, const Rat& x) {
    const Rat slack(1, mpz_class("1000000000000000000000000000000"));
    return iv.lo <= x + slack && x - slack <= iv.hi;
}

}  // namespace

TEST(Bracket, SpecExamples) {
    const TailSpec plain = TailSpec::plain(B_, 1);
    const auto p = bracket_tail(plain, 2, 6, BracketMethod::partial_sums);
    EXPECT_LT(p.width(), Rat(1, 10000));
    EXPECT_TRUE(near_inside(p, long_sum(plain, 2)));
    EXPECT_NEAR(long_sum(plain, 2).get_d(), 0.2011552846, 1e-10);

    // Alternating, partial sums: consecutive partial sums from n = 2.
    const TailSpec alt = TailSpec::alternating(B_, Shape::alt);
    Rat s4 = 0;
    for (long k = 2; k < 2 + 4; ++k) s4 += summand(alt, k);
    const Rat s5 = s4 + summand(alt, 6);
    const auto iv = bracket_tail(alt, 2, 4, BracketMethod::partial_sums);
    // The last explicit term (k = 5) is negative, so S_4 is the lower end.
    EXPECT_EQ(iv.lo, s4);
    EXPECT_EQ(iv.hi, s5);
    EXPECT_TRUE(near_inside(iv, long_sum(alt, 2)));

    // 1/17 - 1/99 + 1/577 - ... = 0.0502018144...
    const TailSpec calt = TailSpec::alternating(C_, Shape::alt);
    for (auto method : {BracketMethod::ratio_tail, BracketMethod::partial_sums}) {
        const auto c = bracket_tail(calt, 2, 5, method);
        EXPECT_TRUE(near_inside(c, long_sum(calt, 2)));
        EXPECT_LT(c.lo.get_d(), 0.05020181444);
        EXPECT_GT(c.hi.get_d(), 0.05020181443);
    }
}

TEST(Bracket, SoundnessAgainstLongPartialSums) {
    // A 40-term partial_sums interval is itself rigorous and much narrower;
    // a sound short bracket must overlap it, and must contain its midpoint
    // whenever it is wider than it.
    for (auto method : {BracketMethod::ratio_tail, BracketMethod::partial_sums})
        for (const auto& spec : sweep_specs())
            for (long n = 1; n <= 12; n += 3) {
                const auto fine = bracket_tail(spec, n, 40, BracketMethod::partial_sums);
                for (long terms : {1L, 2L, 4L, 8L}) {
                    const auto iv = bracket_tail(spec, n, terms, method);
                    ASSERT_LE(iv.lo, iv.hi);
                    ASSERT_LE(iv.lo, fine.hi) << spec.name() << " n=" << n << " terms=" << terms;
                    ASSERT_GE(iv.hi, fine.lo) << spec.name() << " n=" << n << " terms=" << terms;
                }
            }
}

TEST(Bracket, ContainsLongPartialSum) {
    for (const auto& spec : sweep_specs()) {
        const long n = 3;
        const auto iv = bracket_tail(spec, n, 2);
        const auto wide = bracket_tail(spec, n, 2, BracketMethod::partial_sums);
        Rat sum = 0;
        for (long k = n; k < n + 200; ++k) sum += summand(spec, k);
        // 200 explicit terms leave a remainder far below either width.
        ASSERT_TRUE(iv.lo < sum + Rat(1, 1000000000) && sum - Rat(1, 1000000000) < iv.hi) << spec.name();
        ASSERT_TRUE(wide.lo < sum + Rat(1, 1000000000) && sum - Rat(1, 1000000000) < wide.hi) << spec.name();
    }
}

TEST(Bracket, MonotoneRefinement) {
    for (auto method : {BracketMethod::ratio_tail, BracketMethod::partial_sums})
        for (const auto& spec : sweep_specs())
            for (long n : {1L, 2L, 7L, 25L}) {
                Rat prev_width = -1;
                for (long terms = 1; terms <= 32; terms *= 2) {
                    const auto iv = bracket_tail(spec, n, terms, method);
                    if (prev_width >= 0) ASSERT_LE(iv.width(), prev_width) << spec.name() << " n=" << n;
                    prev_width = iv.width();
                }
            }
}

TEST(Bracket, AlternatingSign) {
    for (const auto& spec : sweep_specs()) {
        if (!is_alternating(spec.shape())) continue;
        for (long n = 1; n <= 25; ++n) {
            const auto iv = bracket_tail(spec, n, 4);
            if (n % 2 == 0) ASSERT_GT(iv.lo, 0) << spec.name() << " n=" << n;
            else ASSERT_LT(iv.hi, 0) << spec.name() << " n=" << n;
        }
    }
}

TEST(Bracket, PartialSumsMethodCertifiesToo) {
    for (const auto& spec : sweep_specs())
        for (long n = spec.threshold(); n <= 25; n += 6)
            ASSERT_EQ(certify_floor(spec, n, 64, BracketMethod::partial_sums).floor, closed_floor(spec, n))
                << spec.name() << " n=" << n;
}

TEST(Bracket, Errors) {
    EXPECT_THROW(bracket_tail(TailSpec::plain(B_, 1), 0, 4), RangeError);
    EXPECT_THROW(bracket_tail(TailSpec::plain(B_, 1), 2, 0), ParameterError);
}

TEST(GrowthLemmas, HoldExactly) {
    const auto b = oracle::balancing(502), c = oracle::lucas_balancing(502);
    for (long m = 1; m <= 500; ++m) {
        ASSERT_GE(b[m + 1], 5 * b[m]) << m;
        ASSERT_GE(c[m + 1], 5 * c[m]) << m;
    }
    for (long a = 1; a <= 3; ++a) {
        const auto g = oracle::gen_fib(a, 502);
        for (long m = 1; m <= 500; ++m) ASSERT_GE(g[m + 1], a * g[m]) << a << " " << m;
        // The sharper bound used by the partial-sums bracket: (a+1) G_{m+1} >= (a(a+1)+1) G_m.
        for (long m = 2; m <= 500; ++m) ASSERT_GE((a + 1) * g[m + 1], (a * (a + 1) + 1) * g[m]) << a << " " << m;
    }
}

TEST(GrowthLemmas, RatioEnvelopes) {
    // B_{m+1}/B_m decreases, C_{m+1}/C_m increases, and they never cross.
    const auto b = oracle::balancing(502), c = oracle::lucas_balancing(502);
    for (long m = 1; m < 500; ++m) {
        ASSERT_EQ(b[m + 1] * b[m + 1] - b[m] * b[m + 2], 1);
        ASSERT_EQ(c[m + 1] * c[m + 1] - c[m] * c[m + 2], -8);
        ASSERT_LT(c[m + 1] * b[m], b[m + 1] * c[m]);
    }
    // G ratios alternate around their limit, so consecutive ratios bracket all later ones.
    for (long a = 1; a <= 3; ++a) {
        const auto g = oracle::gen_fib(a, 503);
        for (long m = 1; m < 500; ++m) {
            const Rat r0 = make_rat(g[m + 1], g[m]), r1 = make_rat(g[m + 2], g[m + 1]), r2 = make_rat(g[m + 3], g[m + 2]);
            ASSERT_TRUE(std::min(r0, r1) <= r2 && r2 <= std::max(r0, r1)) << a << " " << m;
        }
    }
}
