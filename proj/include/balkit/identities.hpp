#pragma once

// Instance checks for the classical balancing-number identities. Each check
// evaluates both sides exactly and reports the first failing relation.

#include "balkit/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace balkit {

struct Witness {
    std::vector<long> params;
    std::string relation;
    BigInt lhs;
    BigInt rhs;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

// Collects relation checks for one parameter tuple; keeps the first failure.
class VerdictBuilder {
public:
    explicit VerdictBuilder(std::vector<long> params) : params_(std::move(params)) {}

    VerdictBuilder& expect_equal(const char* relation, const BigInt& lhs, const BigInt& rhs);
    Verdict finish() { return std::move(verdict_); }

private:
    std::vector<long> params_;
    Verdict verdict_;
};

// Value in {-1, 0, +1}.
class KroneckerSign {
public:
    explicit KroneckerSign(int v);
    int value() const { return value_; }
    friend bool operator==(KroneckerSign, KroneckerSign) = default;

private:
    int value_;
};

bool is_prime(long p);

// B_{n-r} B_{n+r} = B_n^2 - B_r^2 and C_{n-r} C_{n+r} = C_n^2 + C_r^2 - 1.
Verdict check_catalan(long n, long r);
// B_1 + B_3 + ... + B_{2n-1} = B_n^2, and B_{2n-1} = B_n^2 - B_{n-1}^2.
Verdict check_odd_sum(long n);
// B_{a+b+1} = B_{a+1} B_{b+1} - B_a B_b.
Verdict check_shifted_product(long a, long b);
// B_{n+-m} = B_n C_m +- B_m C_n and C_{n+-m} = C_n C_m +- 8 B_m B_n, n >= m >= 0.
Verdict check_addition(long m, long n);
// B_{n+m} - 2 B_n C_m and C_{n+m} - 2 C_n C_m, case split on n >= m.
Verdict check_combination(long m, long n);
// gcd(B_m, B_n) = B_{gcd(m,n)}.
Verdict check_gcd(long m, long n);
// (p/8): +1 if p = +-1 (mod 8), -1 if p = +-3 (mod 8). Throws ParameterError
// unless p is an odd prime.
KroneckerSign kronecker_p8(long p);
// C_p = 3 and B_p = (p/8), both mod p.
Verdict check_prime_congruences(long p);
// B_{2m} = 0 and B_{2m-1} = 1, both mod C_m.
Verdict check_mod_Cm(long m);
// sum_k binom(n,k) (-1)^{n-k} 3^k S_k for S = B, C, parity-cased.
Verdict check_binomial_3k(long n);
// sum_k binom(2n,k) (+-1)^k S_k = 8^n S_n or 4^n S_n, for S = B, C.
Verdict check_binomial_plain(long n);
// B_n B_{n-4} - B_{n-1} B_{n-3} = -35.
Verdict check_second_order_product(long n);
// C_n^2 - 8 B_n^2 = 1.
Verdict check_pell(long n);
// B_m B_n is not a balancing number (m, n >= 2).
Verdict check_balancing_product(long m, long n);

}  // namespace balkit
