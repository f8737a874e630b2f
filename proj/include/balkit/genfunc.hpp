#pragma once

// Rational generating functions of the subsequences S_{kn+r}:
//
//   B:  (B_r + B_{k-r} t) / (1 - 2 C_k t + t^2)
//   C:  (C_r - C_{k-r} t) / (1 - 2 C_k t + t^2)
//   F:  (F_r + (-1)^r F_{k-r} t) / (1 - L_k t + (-1)^k t^2)
//   L:  (L_r - (-1)^r L_{k-r} t) / (1 - L_k t + (-1)^k t^2)

#include "balkit/bigint.hpp"
#include "balkit/sequences.hpp"

#include <string>
#include <vector>

namespace balkit {

// Dense integer polynomial in t; coeffs[i] multiplies t^i.
struct Polynomial {
    std::vector<BigInt> coeffs;

    const BigInt& operator[](std::size_t i) const;  // zero past the end
    std::size_t size() const { return coeffs.size(); }
    // e.g. "1-6t+t^2"
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct RationalGF {
    Polynomial numer;
    Polynomial denom;

    // "t/(1-6t+t^2)"
    std::string to_string() const;
};

struct PowerSeriesPrefix {
    std::vector<BigInt> coeffs;
};

// Closed-form generating function of term(seq, k n + r), n >= 0.
// seq must be B, C, F or L; throws ParameterError unless k > r >= 0.
RationalGF gf(const SequenceId& seq, long k, long r);

// First n Taylor coefficients, via the recurrence induced by the denominator.
// Throws DomainError if denom(0) == 0 (pole at the origin) or if a coefficient
// is not an integer.
PowerSeriesPrefix expand(const RationalGF& g, std::size_t n);

// Truncated Cauchy product of two series, first n coefficients.
PowerSeriesPrefix series_mul(const PowerSeriesPrefix& x, const PowerSeriesPrefix& y, std::size_t n);

}  // namespace balkit
