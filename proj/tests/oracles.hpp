#pragma once

// Reference implementations used only by the tests. Deliberately naive and
// independent of the library: plain loops over mpz_class, no reflection
// tricks, no closed forms.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// S_0..S_{count-1} of S_n = c S_{n-1} + s S_{n-2}.
inline std::vector<mpz_class> iterate(long c, long s, long seed0, long seed1, long count) {
    std::vector<mpz_class> out;
    mpz_class x = seed0, y = seed1;
    for (long i = 0; i < count; ++i) {
        out.push_back(x);
        mpz_class z = c * y + s * x;
        x = y;
        y = z;
    }
    return out;
}

inline std::vector<mpz_class> balancing(long count) { return iterate(6, -1, 0, 1, count); }
inline std::vector<mpz_class> lucas_balancing(long count) { return iterate(6, -1, 1, 3, count); }
inline std::vector<mpz_class> fibonacci(long count) { return iterate(1, 1, 0, 1, count); }
inline std::vector<mpz_class> lucas(long count) { return iterate(1, 1, 2, 1, count); }
inline std::vector<mpz_class> gen_fib(long a, long count) { return iterate(a, 1, 0, 1, count); }

// sum_{m=0}^{n} S_{km+r} S_{k(n-m)+r} from a precomputed table.
inline mpz_class convolution(const std::vector<mpz_class>& s, long k, long r, long n) {
    mpz_class sum = 0;
    for (long m = 0; m <= n; ++m) sum += s[k * m + r] * s[k * (n - m) + r];
    return sum;
}

// Floor of 1/S for S = sum_{k >= n} sign(k) / prod_i s[step_i k + off_i],
// summed to `terms` terms in 4096-bit floating point. The caller picks
// `terms` so that the neglected remainder is below 2^-1400 relative; the
// floor is only trusted when 1/S is at least 2^-1000 away from an integer.
struct Factor {
    long step;
    long offset;
};

struct FloatFloor {
    mpz_class floor;
    bool trusted;
};

inline FloatFloor float_floor(const std::vector<mpz_class>& s, const std::vector<Factor>& factors, bool alternating,
                              long n, long terms) {
    const mp_bitcnt_t prec = 4096;
    mpf_class sum(0, prec);
    for (long k = n; k < n + terms; ++k) {
        mpz_class den = 1;
        for (const auto& f : factors) den *= s[f.step * k + f.offset];
        mpf_class t(1, prec);
        t /= mpf_class(den, prec);
        if (alternating && k % 2 != 0) sum -= t;
        else sum += t;
    }
    mpf_class inv(1, prec);
    inv /= sum;
    mpf_class fl(0, prec);
    mpf_floor(fl.get_mpf_t(), inv.get_mpf_t());
    mpf_class frac(inv - fl, prec);
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), 1000);
    FloatFloor out;
    out.floor = mpz_class(fl);
    out.trusted = frac > eps && (1 - frac) > eps;
    return out;
}

// Fixed-seed generator for the randomized property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // Small-height rational, occasionally zero.
    mpq_class rational() {
        mpq_class q(integer(-50, 50), integer(1, 40));
        q.canonicalize();
        return q;
    }

    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
