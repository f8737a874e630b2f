#include "balkit/genfunc.hpp"

#include "balkit/errors.hpp"

namespace balkit {

const BigInt& Polynomial::operator[](std::size_t i) const {
    static const BigInt zero = 0;
    return i < coeffs.size() ? coeffs[i] : zero;
}

std::string Polynomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigInt& c = coeffs[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = abs(c);
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string RationalGF::to_string() const {
    auto wrap = [](const Polynomial& p) {
        std::size_t nonzero = 0;
        for (const auto& c : p.coeffs) nonzero += (c != 0);
        std::string s = p.to_string();
        return nonzero > 1 ? "(" + s + ")" : s;
    };
    return wrap(numer) + "/" + wrap(denom);
}

RationalGF gf(const SequenceId& seq, long k, long r) {
    if (!(k > r && r >= 0))
        throw ParameterError("gf requires k > r >= 0, got k=" + std::to_string(k) + " r=" + std::to_string(r));
    const int sr = (r % 2 == 0) ? 1 : -1;
    const int sk = (k % 2 == 0) ? 1 : -1;
    switch (seq.family()) {
    case Family::balancing:
        return {{{B(r), B(k - r)}}, {{1, -2 * C(k), 1}}};
    case Family::lucas_balancing:
        return {{{C(r), -C(k - r)}}, {{1, -2 * C(k), 1}}};
    case Family::fibonacci:
        return {{{F(r), sr * F(k - r)}}, {{1, -L(k), sk}}};
    case Family::lucas:
        return {{{L(r), -sr * L(k - r)}}, {{1, -L(k), sk}}};
    case Family::gen_fibonacci:
        break;
    }
    throw ParameterError("gf: no closed form for " + seq.name());
}

PowerSeriesPrefix expand(const RationalGF& g, std::size_t n) {
    const BigInt& d0 = g.denom[0];
    if (d0 == 0) throw DomainError("expand: denominator vanishes at t = 0 (pole at the origin)");
    PowerSeriesPrefix out;
    out.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt acc = g.numer[i];
        for (std::size_t j = 1; j < g.denom.size() && j <= i; ++j) acc -= g.denom[j] * out.coeffs[i - j];
        if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
            throw DomainError("expand: coefficient " + std::to_string(i) + " is not an integer");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
        out.coeffs.push_back(std::move(q));
    }
    return out;
}

PowerSeriesPrefix series_mul(const PowerSeriesPrefix& x, const PowerSeriesPrefix& y, std::size_t n) {
    PowerSeriesPrefix out;
    out.coeffs.assign(n, BigInt(0));
    for (std::size_t i = 0; i < n && i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < y.coeffs.size(); ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
    return out;
}

}  // namespace balkit
