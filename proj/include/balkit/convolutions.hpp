#pragma once

// Self-convolutions sum_{m=0}^{n} S_{km+r} S_{k(n-m)+r}, evaluated by brute
// force and by closed forms in exact field arithmetic.
//
// The closed forms expand the square of the generating function
// (p + q t)/(1 - c t + e t^2) around the roots of its derivative's cofactor,
// which leaves conjugate-pair brackets of the shape
//   1/(s - p)^{j+1} +- 1/(s + p)^{j+1}
// whose irrational and imaginary parts cancel. The fields involved:
//   B           rationals
//   C           Q(sqrt 2)(i), pair 2 sqrt2 B_k +- C_r i
//   F, k-r even rationals
//   F, k-r odd  Gaussian rationals, pair F_k +- F_r i
//   L, k-r even Q(sqrt 5)(i), pair sqrt5 F_k +- L_r i
//   L, k-r odd  Q(sqrt 5), pair sqrt5 F_k +- L_r

#include "balkit/bigint.hpp"
#include "balkit/quad_field.hpp"
#include "balkit/sequences.hpp"

#include <string>

namespace balkit {

enum class ConvFamily { balancing, lucas_balancing, fibonacci, lucas };

SequenceId sequence_of(ConvFamily f);
std::string to_string(ConvFamily f);

struct ConvParams {
    long k;
    long r;
    long n;
};

// Throws ParameterError unless k > r >= 0 and n >= 0.
void validate(const ConvParams& p);

BigInt brute_conv(ConvFamily f, const ConvParams& p);

// The closed form's exact value in its field, before the integrality check.
// Rational cases are embedded with zero sqrt and imaginary parts.
GaussQuad closed_form_value(ConvFamily f, const ConvParams& p);

// Closed form certified to be a rational integer (ConsistencyError otherwise).
BigInt conv_closed(ConvFamily f, const ConvParams& p);

BigInt conv_balancing_closed(const ConvParams& p);
// r = 0 specialization: B_k sum_{l=1}^{floor((n+1)/2)} (n-2l+1) B_{k(n-2l+1)}.
BigInt conv_balancing_r0(long k, long n);
BigInt conv_lucas_balancing_closed(const ConvParams& p);
BigInt conv_fibonacci_closed(const ConvParams& p);
BigInt conv_lucas_closed(const ConvParams& p);

}  // namespace balkit
