#include "balkit/convolutions.hpp"

#include "balkit/errors.hpp"

#include <vector>

namespace balkit {

SequenceId sequence_of(ConvFamily f) {
    switch (f) {
    case ConvFamily::balancing: return SequenceId::balancing();
    case ConvFamily::lucas_balancing: return SequenceId::lucas_balancing();
    case ConvFamily::fibonacci: return SequenceId::fibonacci();
    case ConvFamily::lucas: return SequenceId::lucas();
    }
    return SequenceId::balancing();
}

std::string to_string(ConvFamily f) { return sequence_of(f).name(); }

void validate(const ConvParams& p) {
    if (!(p.k > p.r && p.r >= 0))
        throw ParameterError("convolution requires k > r >= 0, got k=" + std::to_string(p.k) +
                             " r=" + std::to_string(p.r));
    if (p.n < 0) throw ParameterError("convolution requires n >= 0");
}

namespace {

// S_{k m + r} for m = 0..n+1.
std::vector<BigInt> subsequence(ConvFamily f, const ConvParams& p) {
    const auto all = stream(sequence_of(f), 0, p.k * (p.n + 1) + p.r);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(p.n + 2));
    for (long m = 0; m <= p.n + 1; ++m) out.push_back(all[static_cast<std::size_t>(p.k * m + p.r)].v);
    return out;
}

int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

Rat rpow(const Rat& x, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

// B_{k-r}(-(n+1) B_{k(n+1)+r} + sum_j B_k B_{k-r}^j / 2
//     ((-1)^j/(B_k+B_r)^{j+1} + 1/(B_k-B_r)^{j+1}) (n-j+1) B_{k(n-j+1)+r})
Rat balancing_rational(const ConvParams& p) {
    const auto s = subsequence(ConvFamily::balancing, p);
    const BigInt bk = B(p.k), br = B(p.r), bkr = B(p.k - p.r);
    const Rat plus_inv = make_rat(1, bk + br);
    const Rat minus_inv = make_rat(1, bk - br);
    Rat sum = 0;
    Rat plus_pow = plus_inv, minus_pow = minus_inv;
    Rat weight = Rat(bk) / 2;
    for (long j = 0; j <= p.n; ++j) {
        const Rat bracket = neg_one_pow(j) * plus_pow + minus_pow;
        sum += weight * bracket * (p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)];
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
        weight *= bkr;
    }
    return Rat(bkr) * (-(p.n + 1) * Rat(s[static_cast<std::size_t>(p.n + 1)]) + sum);
}

// C_{k-r}((n+1) C_{k(n+1)+r} - sum_j 2 sqrt2 B_k (C_{k-r} i)^j / 2
//     (1/(2 sqrt2 B_k + C_r i)^{j+1} + (-1)^j/(2 sqrt2 B_k - C_r i)^{j+1}) (n-j+1) C_{k(n-j+1)+r})
GaussQuad lucas_balancing_gauss(const ConvParams& p) {
    constexpr long d = 2;
    const auto s = subsequence(ConvFamily::lucas_balancing, p);
    const QuadRat real_part(Rat(0), Rat(2 * B(p.k)), d);
    const QuadRat imag_part = QuadRat::rational(Rat(C(p.r)), d);
    // The two conjugates are built and powered independently so that the
    // cancellation of the final imaginary part is a genuine check.
    const GaussQuad plus_inv = GaussQuad(real_part, imag_part).inverse();
    const GaussQuad minus_inv = GaussQuad(real_part, -imag_part).inverse();
    const GaussQuad ci(QuadRat(d), QuadRat::rational(Rat(C(p.k - p.r)), d));

    GaussQuad sum(d);
    GaussQuad plus_pow = plus_inv, minus_pow = minus_inv;
    GaussQuad weight(real_part * Rat(1, 2));
    for (long j = 0; j <= p.n; ++j) {
        GaussQuad bracket = plus_pow;
        if (j % 2 == 0)
            bracket += minus_pow;
        else
            bracket -= minus_pow;
        const Rat scale = Rat((p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)]);
        sum += weight * bracket * GaussQuad(QuadRat::rational(scale, d));
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
        weight *= ci;
    }
    const GaussQuad lead(QuadRat::rational(Rat((p.n + 1) * s[static_cast<std::size_t>(p.n + 1)]), d));
    return GaussQuad(QuadRat::rational(Rat(C(p.k - p.r)), d)) * (lead - sum);
}

// k - r even:
// F_{k-r}(-(n+1) F_{k(n+1)+r} + sum_j (-1)^{rj} F_k F_{k-r}^j / 2
//     ((-1)^j/(F_k+F_r)^{j+1} + 1/(F_k-F_r)^{j+1}) (n-j+1) F_{k(n-j+1)+r})
Rat fibonacci_even(const ConvParams& p) {
    const auto s = subsequence(ConvFamily::fibonacci, p);
    const BigInt fk = F(p.k), fr = F(p.r), fkr = F(p.k - p.r);
    if (fk == fr) throw ParameterError("fibonacci closed form: F_k = F_r makes the bracket singular");
    const Rat plus_inv = make_rat(1, fk + fr);
    const Rat minus_inv = make_rat(1, fk - fr);
    Rat sum = 0;
    Rat plus_pow = plus_inv, minus_pow = minus_inv;
    for (long j = 0; j <= p.n; ++j) {
        const Rat weight = neg_one_pow(p.r * j) * Rat(fk) * rpow(Rat(fkr), j) / 2;
        const Rat bracket = neg_one_pow(j) * plus_pow + minus_pow;
        sum += weight * bracket * (p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)];
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
    }
    return Rat(fkr) * (-(p.n + 1) * Rat(s[static_cast<std::size_t>(p.n + 1)]) + sum);
}

// k - r odd:
// F_{k-r}((n+1) F_{k(n+1)+r} - sum_j (-1)^{(r+1)j} F_k (F_{k-r} i)^j / 2
//     (1/(F_k + F_r i)^{j+1} + (-1)^j/(F_k - F_r i)^{j+1}) (n-j+1) F_{k(n-j+1)+r})
GaussQuad fibonacci_odd(const ConvParams& p) {
    // Only Q(i) is needed; Q(sqrt 5) carries it with zero sqrt parts.
    constexpr long d = 5;
    const auto s = subsequence(ConvFamily::fibonacci, p);
    const QuadRat fk = QuadRat::rational(Rat(F(p.k)), d);
    const QuadRat fr = QuadRat::rational(Rat(F(p.r)), d);
    const GaussQuad plus_inv = GaussQuad(fk, fr).inverse();
    const GaussQuad minus_inv = GaussQuad(fk, -fr).inverse();
    const GaussQuad ci(QuadRat(d), QuadRat::rational(Rat(F(p.k - p.r)), d));

    GaussQuad sum(d);
    GaussQuad plus_pow = plus_inv, minus_pow = minus_inv;
    GaussQuad ci_pow(QuadRat::rational(Rat(1), d));
    for (long j = 0; j <= p.n; ++j) {
        GaussQuad bracket = plus_pow;
        if (j % 2 == 0)
            bracket += minus_pow;
        else
            bracket -= minus_pow;
        const Rat scale =
            neg_one_pow((p.r + 1) * j) * Rat(F(p.k)) / 2 * ((p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)]);
        sum += ci_pow * bracket * GaussQuad(QuadRat::rational(scale, d));
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
        ci_pow *= ci;
    }
    const GaussQuad lead(QuadRat::rational(Rat((p.n + 1) * s[static_cast<std::size_t>(p.n + 1)]), d));
    return GaussQuad(QuadRat::rational(Rat(F(p.k - p.r)), d)) * (lead - sum);
}

// k - r even:
// L_{k-r}((n+1) L_{k(n+1)+r} - sum_j (-1)^{(r+1)j} sqrt5 F_k (L_{k-r} i)^j / 2
//     ((-1)^j/(sqrt5 F_k + L_r i)^{j+1} + 1/(sqrt5 F_k - L_r i)^{j+1}) (n-j+1) L_{k(n-j+1)+r})
GaussQuad lucas_even(const ConvParams& p) {
    constexpr long d = 5;
    const auto s = subsequence(ConvFamily::lucas, p);
    const QuadRat root5_fk(Rat(0), Rat(F(p.k)), d);
    const QuadRat lr = QuadRat::rational(Rat(L(p.r)), d);
    const GaussQuad plus_inv = GaussQuad(root5_fk, lr).inverse();
    const GaussQuad minus_inv = GaussQuad(root5_fk, -lr).inverse();
    const GaussQuad li(QuadRat(d), QuadRat::rational(Rat(L(p.k - p.r)), d));

    GaussQuad sum(d);
    GaussQuad plus_pow = plus_inv, minus_pow = minus_inv;
    GaussQuad weight(root5_fk * Rat(1, 2));
    for (long j = 0; j <= p.n; ++j) {
        GaussQuad bracket = minus_pow;
        if (j % 2 == 0)
            bracket += plus_pow;
        else
            bracket -= plus_pow;
        const Rat scale = neg_one_pow((p.r + 1) * j) * Rat((p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)]);
        sum += weight * bracket * GaussQuad(QuadRat::rational(scale, d));
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
        weight *= li;
    }
    const GaussQuad lead(QuadRat::rational(Rat((p.n + 1) * s[static_cast<std::size_t>(p.n + 1)]), d));
    return GaussQuad(QuadRat::rational(Rat(L(p.k - p.r)), d)) * (lead - sum);
}

// k - r odd:
// L_{k-r}(-(n+1) L_{k(n+1)+r} + sum_j (-1)^{(r+1)j} sqrt5 F_k L_{k-r}^j / 2
//     ((-1)^j/(sqrt5 F_k + L_r)^{j+1} + 1/(sqrt5 F_k - L_r)^{j+1}) (n-j+1) L_{k(n-j+1)+r})
QuadRat lucas_odd(const ConvParams& p) {
    constexpr long d = 5;
    const auto s = subsequence(ConvFamily::lucas, p);
    const QuadRat root5_fk(Rat(0), Rat(F(p.k)), d);
    const QuadRat lr = QuadRat::rational(Rat(L(p.r)), d);
    const QuadRat plus = root5_fk + lr;
    const QuadRat minus = root5_fk - lr;
    if (minus.is_zero()) throw ParameterError("lucas closed form: sqrt5 F_k = L_r makes the bracket singular");
    const QuadRat plus_inv = plus.inverse();
    const QuadRat minus_inv = minus.inverse();
    const Rat lkr = Rat(L(p.k - p.r));

    QuadRat sum(d);
    QuadRat plus_pow = plus_inv, minus_pow = minus_inv;
    QuadRat weight = root5_fk * Rat(1, 2);
    for (long j = 0; j <= p.n; ++j) {
        QuadRat bracket = minus_pow;
        if (j % 2 == 0)
            bracket += plus_pow;
        else
            bracket -= plus_pow;
        const Rat scale = neg_one_pow((p.r + 1) * j) * Rat((p.n - j + 1) * s[static_cast<std::size_t>(p.n - j + 1)]);
        sum += weight * bracket * scale;
        plus_pow *= plus_inv;
        minus_pow *= minus_inv;
        weight = weight * lkr;
    }
    const QuadRat lead = QuadRat::rational(Rat(-(p.n + 1) * s[static_cast<std::size_t>(p.n + 1)]), d);
    return (lead + sum) * lkr;
}

GaussQuad embed(const Rat& x, long d) { return GaussQuad(QuadRat::rational(x, d)); }

}  // namespace

BigInt brute_conv(ConvFamily f, const ConvParams& p) {
    validate(p);
    const auto s = subsequence(f, p);
    BigInt sum = 0;
    for (long m = 0; m <= p.n; ++m) sum += s[static_cast<std::size_t>(m)] * s[static_cast<std::size_t>(p.n - m)];
    return sum;
}

GaussQuad closed_form_value(ConvFamily f, const ConvParams& p) {
    validate(p);
    const bool even_gap = (p.k - p.r) % 2 == 0;
    switch (f) {
    case ConvFamily::balancing: return embed(balancing_rational(p), 2);
    case ConvFamily::lucas_balancing: return lucas_balancing_gauss(p);
    case ConvFamily::fibonacci: return even_gap ? embed(fibonacci_even(p), 5) : fibonacci_odd(p);
    case ConvFamily::lucas: return even_gap ? lucas_even(p) : GaussQuad(lucas_odd(p));
    }
    throw ParameterError("unknown convolution family");
}

BigInt conv_closed(ConvFamily f, const ConvParams& p) {
    return require_integer(closed_form_value(f, p), ("closed-form convolution " + to_string(f)).c_str());
}

BigInt conv_balancing_closed(const ConvParams& p) { return conv_closed(ConvFamily::balancing, p); }
BigInt conv_lucas_balancing_closed(const ConvParams& p) { return conv_closed(ConvFamily::lucas_balancing, p); }
BigInt conv_fibonacci_closed(const ConvParams& p) { return conv_closed(ConvFamily::fibonacci, p); }
BigInt conv_lucas_closed(const ConvParams& p) { return conv_closed(ConvFamily::lucas, p); }

BigInt conv_balancing_r0(long k, long n) {
    if (k < 1) throw ParameterError("conv_balancing_r0 requires k >= 1");
    if (n < 0) throw ParameterError("conv_balancing_r0 requires n >= 0");
    BigInt sum = 0;
    for (long l = 1; l <= (n + 1) / 2; ++l) sum += (n - 2 * l + 1) * B(k * (n - 2 * l + 1));
    return B(k) * sum;
}

}  // namespace balkit
