#include "balkit/sequences.hpp"

#include "balkit/errors.hpp"

#include <bit>
#include <cstdlib>

namespace balkit {

SequenceId SequenceId::gen_fibonacci(long a) {
    if (a < 1) throw ParameterError("GenFibonacci parameter a must be >= 1, got " + std::to_string(a));
    return SequenceId(Family::gen_fibonacci, a);
}

std::string SequenceId::name() const {
    switch (family_) {
    case Family::balancing: return "B";
    case Family::lucas_balancing: return "C";
    case Family::fibonacci: return "F";
    case Family::lucas: return "L";
    case Family::gen_fibonacci: return "G(" + std::to_string(param_) + ")";
    }
    return "?";
}

Recurrence recurrence_of(const SequenceId& seq) {
    switch (seq.family()) {
    case Family::balancing: return {6, -1, 0, 1};
    case Family::lucas_balancing: return {6, -1, 1, 3};
    case Family::fibonacci: return {1, 1, 0, 1};
    case Family::lucas: return {1, 1, 2, 1};
    case Family::gen_fibonacci: return {seq.param(), 1, 0, 1};
    }
    return {0, 0, 0, 0};
}

namespace {

BigInt iterate(const Recurrence& rec, unsigned long n) {
    BigInt prev = rec.seed0;
    BigInt cur = rec.seed1;
    if (n == 0) return prev;
    for (unsigned long i = 1; i < n; ++i) {
        BigInt next = rec.coefficient * cur;
        if (rec.sign > 0)
            next += prev;
        else
            next -= prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Sign applied to S_{|n|} to get S_n for n < 0.
int reflection_sign(const SequenceId& seq, unsigned long m) {
    const bool odd = (m & 1U) != 0;
    switch (seq.family()) {
    case Family::balancing: return -1;
    case Family::lucas_balancing: return 1;
    case Family::fibonacci: return odd ? 1 : -1;
    case Family::lucas: return odd ? -1 : 1;
    case Family::gen_fibonacci: break;
    }
    throw RangeError("GenFibonacci is undefined at negative indices");
}

}  // namespace

BigInt term(const SequenceId& seq, long n) {
    const Recurrence rec = recurrence_of(seq);
    if (n >= 0) return iterate(rec, static_cast<unsigned long>(n));
    const unsigned long m = static_cast<unsigned long>(-(n + 1)) + 1;
    const int s = reflection_sign(seq, m);
    BigInt v = iterate(rec, m);
    return s < 0 ? BigInt(-v) : v;
}

std::pair<BigInt, BigInt> pair_fast(long n) {
    if (n < 0) throw RangeError("pair_fast requires n >= 0");
    BigInt b = 0;
    BigInt c = 1;
    const auto u = static_cast<unsigned long>(n);
    for (int bit = std::bit_width(u) - 1; bit >= 0; --bit) {
        // m -> 2m
        BigInt b2 = 2 * b * c;
        BigInt c2 = 2 * c * c - 1;
        b = std::move(b2);
        c = std::move(c2);
        if ((u >> bit) & 1U) {
            // m -> m + 1
            BigInt b1 = 3 * b + c;
            BigInt c1 = 3 * c + 8 * b;
            b = std::move(b1);
            c = std::move(c1);
        }
    }
    return {b, c};
}

std::vector<IndexedTerm> stream(const SequenceId& seq, long from, long to) {
    if (from > to) throw RangeError("stream: from > to");
    std::vector<IndexedTerm> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    const Recurrence rec = recurrence_of(seq);
    BigInt prev = term(seq, from);
    out.push_back({from, prev});
    if (from == to) return out;
    BigInt cur = term(seq, from + 1);
    out.push_back({from + 1, cur});
    for (long i = from + 2; i <= to; ++i) {
        BigInt next = rec.coefficient * cur;
        if (rec.sign > 0)
            next += prev;
        else
            next -= prev;
        prev = std::move(cur);
        cur = std::move(next);
        out.push_back({i, cur});
    }
    return out;
}

bool is_balancing(const BigInt& x) {
    if (x < 1) throw DomainError("is_balancing requires x >= 1");
    BigInt v = 8 * x * x + 1;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

}  // namespace balkit
