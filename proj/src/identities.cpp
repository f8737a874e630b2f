#include "balkit/identities.hpp"

#include "balkit/errors.hpp"
#include "balkit/sequences.hpp"

#include <numeric>

namespace balkit {

VerdictBuilder& VerdictBuilder::expect_equal(const char* relation, const BigInt& lhs, const BigInt& rhs) {
    if (verdict_.holds && lhs != rhs) {
        verdict_.holds = false;
        verdict_.witness = Witness{params_, relation, lhs, rhs};
    }
    return *this;
}

KroneckerSign::KroneckerSign(int v) : value_(v) {
    if (v < -1 || v > 1) throw DomainError("Kronecker sign must be in {-1, 0, 1}");
}

bool is_prime(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParameterError(msg);
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

Verdict check_catalan(long n, long r) {
    require(n >= r && r >= 0, "check_catalan requires n >= r >= 0");
    return VerdictBuilder({n, r})
        .expect_equal("B_{n-r} B_{n+r} = B_n^2 - B_r^2", B(n - r) * B(n + r), B(n) * B(n) - B(r) * B(r))
        .expect_equal("C_{n-r} C_{n+r} = C_n^2 + C_r^2 - 1", C(n - r) * C(n + r), C(n) * C(n) + C(r) * C(r) - 1)
        .finish();
}

Verdict check_odd_sum(long n) {
    require(n >= 1, "check_odd_sum requires n >= 1");
    BigInt sum = 0;
    for (const auto& t : stream(SequenceId::balancing(), 1, 2 * n - 1))
        if (t.n % 2 != 0) sum += t.v;
    const BigInt bn = B(n);
    const BigInt bn1 = B(n - 1);
    return VerdictBuilder({n})
        .expect_equal("B_1 + B_3 + ... + B_{2n-1} = B_n^2", sum, bn * bn)
        .expect_equal("B_{2n-1} = B_n^2 - B_{n-1}^2", B(2 * n - 1), bn * bn - bn1 * bn1)
        .finish();
}

Verdict check_shifted_product(long a, long b) {
    require(a >= 0 && b >= 0, "check_shifted_product requires a, b >= 0");
    return VerdictBuilder({a, b})
        .expect_equal("B_{a+b+1} = B_{a+1} B_{b+1} - B_a B_b", B(a + b + 1), B(a + 1) * B(b + 1) - B(a) * B(b))
        .finish();
}

Verdict check_addition(long m, long n) {
    require(n >= m && m >= 0, "check_addition requires n >= m >= 0");
    const BigInt bn = B(n), bm = B(m), cn = C(n), cm = C(m);
    return VerdictBuilder({m, n})
        .expect_equal("B_{n+m} = B_n C_m + B_m C_n", B(n + m), bn * cm + bm * cn)
        .expect_equal("B_{n-m} = B_n C_m - B_m C_n", B(n - m), bn * cm - bm * cn)
        .expect_equal("C_{n+m} = C_n C_m + 8 B_m B_n", C(n + m), cn * cm + 8 * bm * bn)
        .expect_equal("C_{n-m} = C_n C_m - 8 B_m B_n", C(n - m), cn * cm - 8 * bm * bn)
        .finish();
}

Verdict check_combination(long m, long n) {
    require(m >= 1 && n >= 1, "check_combination requires m, n >= 1");
    const BigInt lhs_b = B(n + m) - 2 * B(n) * C(m);
    const BigInt rhs_b = n >= m ? BigInt(-B(n - m)) : B(m - n);
    const BigInt lhs_c = C(n + m) - 2 * C(n) * C(m);
    const BigInt rhs_c = -C(n >= m ? n - m : m - n);
    return VerdictBuilder({m, n})
        .expect_equal(n >= m ? "B_{n+m} - 2 B_n C_m = -B_{n-m}" : "B_{n+m} - 2 B_n C_m = B_{m-n}", lhs_b, rhs_b)
        .expect_equal("C_{n+m} - 2 C_n C_m = -C_{|n-m|}", lhs_c, rhs_c)
        .finish();
}

Verdict check_gcd(long m, long n) {
    require(m >= 1 && n >= 1, "check_gcd requires m, n >= 1");
    BigInt g;
    const BigInt bm = B(m), bn = B(n);
    mpz_gcd(g.get_mpz_t(), bm.get_mpz_t(), bn.get_mpz_t());
    return VerdictBuilder({m, n}).expect_equal("gcd(B_m, B_n) = B_{gcd(m,n)}", g, B(std::gcd(m, n))).finish();
}

KroneckerSign kronecker_p8(long p) {
    require(p > 2 && is_prime(p), "kronecker_p8 requires an odd prime, got " + std::to_string(p));
    const long r = p % 8;
    return KroneckerSign(r == 1 || r == 7 ? 1 : -1);
}

Verdict check_prime_congruences(long p) {
    const KroneckerSign sym = kronecker_p8(p);
    const BigInt mp = p;
    return VerdictBuilder({p})
        .expect_equal("C_p = 3 (mod p)", mod_floor(C(p), mp), mod_floor(BigInt(3), mp))
        .expect_equal("B_p = (p/8) (mod p)", mod_floor(B(p), mp), mod_floor(BigInt(sym.value()), mp))
        .finish();
}

Verdict check_mod_Cm(long m) {
    require(m >= 1, "check_mod_Cm requires m >= 1");
    const BigInt cm = C(m);
    return VerdictBuilder({m})
        .expect_equal("B_{2m} = 0 (mod C_m)", mod_floor(B(2 * m), cm), BigInt(0))
        .expect_equal("B_{2m-1} = 1 (mod C_m)", mod_floor(B(2 * m - 1), cm), mod_floor(BigInt(1), cm))
        .finish();
}

Verdict check_binomial_3k(long n) {
    require(n >= 0, "check_binomial_3k requires n >= 0");
    const auto un = static_cast<unsigned long>(n);
    const auto bs = stream(SequenceId::balancing(), 0, n);
    const auto cs = stream(SequenceId::lucas_balancing(), 0, n);
    BigInt sum_b = 0;
    BigInt sum_c = 0;
    for (unsigned long k = 0; k <= un; ++k) {
        BigInt w = binomial(un, k) * pow_int(3, k);
        if ((un - k) % 2 != 0) w = -w;
        sum_b += w * bs[k].v;
        sum_c += w * cs[k].v;
    }
    const bool even = n % 2 == 0;
    const BigInt rhs_b = even ? pow_int(2, 3 * un / 2) * bs[un].v : pow_int(2, 3 * (un - 1) / 2) * cs[un].v;
    const BigInt rhs_c = even ? pow_int(2, 3 * un / 2) * cs[un].v : pow_int(2, 3 * (un + 1) / 2) * bs[un].v;
    return VerdictBuilder({n})
        .expect_equal(even ? "sum binom(n,k)(-1)^{n-k} 3^k B_k = 2^{3n/2} B_n"
                           : "sum binom(n,k)(-1)^{n-k} 3^k B_k = 2^{3(n-1)/2} C_n",
                      sum_b, rhs_b)
        .expect_equal(even ? "sum binom(n,k)(-1)^{n-k} 3^k C_k = 2^{3n/2} C_n"
                           : "sum binom(n,k)(-1)^{n-k} 3^k C_k = 2^{3(n+1)/2} B_n",
                      sum_c, rhs_c)
        .finish();
}

Verdict check_binomial_plain(long n) {
    require(n >= 0, "check_binomial_plain requires n >= 0");
    const auto un = static_cast<unsigned long>(n);
    const auto bs = stream(SequenceId::balancing(), 0, 2 * n);
    const auto cs = stream(SequenceId::lucas_balancing(), 0, 2 * n);
    BigInt pb = 0, pc = 0, ab = 0, ac = 0;
    for (unsigned long k = 0; k <= 2 * un; ++k) {
        const BigInt w = binomial(2 * un, k);
        pb += w * bs[k].v;
        pc += w * cs[k].v;
        if (k % 2 == 0) {
            ab += w * bs[k].v;
            ac += w * cs[k].v;
        } else {
            ab -= w * bs[k].v;
            ac -= w * cs[k].v;
        }
    }
    const BigInt e8 = pow_int(8, un);
    const BigInt e4 = pow_int(4, un);
    return VerdictBuilder({n})
        .expect_equal("sum binom(2n,k) B_k = 8^n B_n", pb, e8 * bs[un].v)
        .expect_equal("sum binom(2n,k) C_k = 8^n C_n", pc, e8 * cs[un].v)
        .expect_equal("sum binom(2n,k) (-1)^k B_k = 4^n B_n", ab, e4 * bs[un].v)
        .expect_equal("sum binom(2n,k) (-1)^k C_k = 4^n C_n", ac, e4 * cs[un].v)
        .finish();
}

Verdict check_second_order_product(long n) {
    require(n >= 4, "check_second_order_product requires n >= 4");
    return VerdictBuilder({n})
        .expect_equal("B_n B_{n-4} - B_{n-1} B_{n-3} = -35", B(n) * B(n - 4) - B(n - 1) * B(n - 3), BigInt(-35))
        .finish();
}

Verdict check_pell(long n) {
    const auto [b, c] = pair_fast(n < 0 ? -n : n);
    return VerdictBuilder({n}).expect_equal("C_n^2 - 8 B_n^2 = 1", c * c - 8 * b * b, BigInt(1)).finish();
}

Verdict check_balancing_product(long m, long n) {
    require(m >= 2 && n >= 2, "check_balancing_product requires m, n >= 2");
    const BigInt prod = B(m) * B(n);
    const bool bal = is_balancing(prod);
    return VerdictBuilder({m, n})
        .expect_equal("B_m B_n is not balancing (1 = balancing)", BigInt(bal ? 1 : 0), BigInt(0))
        .finish();
}

}  // namespace balkit
