#pragma once

// Balancing-family integer sequences.
//
//   B_n = 6 B_{n-1} - B_{n-2},  B_0 = 0, B_1 = 1   (balancing)
//   C_n = 6 C_{n-1} - C_{n-2},  C_0 = 1, C_1 = 3   (Lucas-balancing)
//   F_n =   F_{n-1} + F_{n-2},  F_0 = 0, F_1 = 1
//   L_n =   L_{n-1} + L_{n-2},  L_0 = 2, L_1 = 1
//   G_n = a G_{n-1} + G_{n-2},  G_0 = 0, G_1 = 1   (generalized Fibonacci)
//
// Negative indices follow B_{-n} = -B_n, C_{-n} = C_n, F_{-n} = (-1)^{n+1} F_n,
// L_{-n} = (-1)^n L_n. G_n is only defined for n >= 0.

#include "balkit/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace balkit {

enum class Family { balancing, lucas_balancing, fibonacci, lucas, gen_fibonacci };

class SequenceId {
public:
    static SequenceId balancing() { return SequenceId(Family::balancing, 0); }
    static SequenceId lucas_balancing() { return SequenceId(Family::lucas_balancing, 0); }
    static SequenceId fibonacci() { return SequenceId(Family::fibonacci, 0); }
    static SequenceId lucas() { return SequenceId(Family::lucas, 0); }
    // Throws ParameterError for a < 1.
    static SequenceId gen_fibonacci(long a);

    Family family() const { return family_; }
    // Parameter a of GenFibonacci; 0 for the other families.
    long param() const { return param_; }

    // "B", "C", "F", "L" or "G(a)".
    std::string name() const;

    friend bool operator==(const SequenceId&, const SequenceId&) = default;

private:
    SequenceId(Family f, long a) : family_(f), param_(a) {}
    Family family_;
    long param_;
};

// S_n = coefficient * S_{n-1} + sign * S_{n-2}, with S_0 = seed0, S_1 = seed1.
struct Recurrence {
    long coefficient;
    int sign;
    long seed0;
    long seed1;
};

Recurrence recurrence_of(const SequenceId& seq);

struct IndexedTerm {
    long n;
    BigInt v;
};

// Exact term by linear iteration; negative indices via reflection.
// Throws RangeError for a negative GenFibonacci index.
BigInt term(const SequenceId& seq, long n);

// (B_n, C_n) in O(log n) multiplications. Throws RangeError for n < 0.
std::pair<BigInt, BigInt> pair_fast(long n);

// Terms from..to inclusive in one recurrence pass. Throws RangeError if from > to.
std::vector<IndexedTerm> stream(const SequenceId& seq, long from, long to);

// True iff 8x^2 + 1 is a perfect square. Throws DomainError for x < 1.
bool is_balancing(const BigInt& x);

// Shorthands used throughout the toolkit.
inline BigInt B(long n) { return term(SequenceId::balancing(), n); }
inline BigInt C(long n) { return term(SequenceId::lucas_balancing(), n); }
inline BigInt F(long n) { return term(SequenceId::fibonacci(), n); }
inline BigInt L(long n) { return term(SequenceId::lucas(), n); }

}  // namespace balkit
