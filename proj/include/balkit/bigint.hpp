#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace balkit {

using BigInt = mpz_class;
using Rat = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const BigInt& num, const BigInt& den);

// Floor toward negative infinity.
BigInt floor_of(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rat& x);

BigInt pow_int(const BigInt& base, unsigned long exp);

// Non-negative residue of x modulo m (m > 0).
BigInt mod_floor(const BigInt& x, const BigInt& m);

}  // namespace balkit
