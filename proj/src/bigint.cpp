#include "balkit/bigint.hpp"

#include "balkit/errors.hpp"

namespace balkit {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

BigInt floor_of(const Rat& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

std::string to_string(const Rat& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace balkit
