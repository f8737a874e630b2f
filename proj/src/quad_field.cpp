#include "balkit/quad_field.hpp"

#include "balkit/errors.hpp"

#include <cstdlib>

namespace balkit {

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

namespace {

long checked_d(long d) {
    if (d < 2 || !is_squarefree(d))
        throw DomainError("Q(sqrt d) needs squarefree d >= 2, got " + std::to_string(d));
    return d;
}

}  // namespace

QuadRat::QuadRat(long d) : a_(0), b_(0), d_(checked_d(d)) {}

QuadRat::QuadRat(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(checked_d(d)) {
    a_.canonicalize();
    b_.canonicalize();
}

void QuadRat::require_same_field(const QuadRat& y, const char* op) const {
    if (d_ != y.d_)
        throw DomainError(std::string(op) + ": mismatched fields Q(sqrt " + std::to_string(d_) +
                          ") and Q(sqrt " + std::to_string(y.d_) + ")");
}

Rat QuadRat::norm() const { return a_ * a_ - d_ * b_ * b_; }

QuadRat QuadRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt d)");
    // Nonzero for nonzero x because sqrt(d) is irrational.
    const Rat n = norm();
    return QuadRat(a_ / n, -b_ / n, d_);
}

QuadRat& QuadRat::operator+=(const QuadRat& y) {
    require_same_field(y, "add");
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& y) {
    require_same_field(y, "sub");
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& y) {
    require_same_field(y, "mul");
    Rat a = a_ * y.a_ + d_ * b_ * y.b_;
    Rat b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadRat operator*(QuadRat x, const Rat& s) {
    x.a_ *= s;
    x.b_ *= s;
    return x;
}

std::string QuadRat::to_string() const {
    if (b_ == 0) return balkit::to_string(a_);
    std::string root = "sqrt" + std::to_string(d_);
    std::string bs = (b_ == 1) ? root : (b_ == -1) ? "-" + root : balkit::to_string(b_) + "*" + root;
    if (a_ == 0) return bs;
    if (bs.front() == '-') return balkit::to_string(a_) + " - " + bs.substr(1);
    return balkit::to_string(a_) + " + " + bs;
}

namespace {

template <class T>
T pow_impl(const T& x, long k, const T& one) {
    if (k < 0) {
        if (x.is_zero()) throw DivisionByZero("zero base with negative exponent");
        return pow_impl(x.inverse(), -k, one);
    }
    T result = one;
    T base = x;
    auto e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

}  // namespace

QuadRat pow(const QuadRat& x, long k) { return pow_impl(x, k, QuadRat::rational(Rat(1), x.d())); }

GaussQuad::GaussQuad(QuadRat re, QuadRat im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.d() != im_.d()) throw DomainError("GaussQuad parts from different quadratic fields");
}

QuadRat GaussQuad::norm() const { return re_ * re_ + im_ * im_; }

GaussQuad GaussQuad::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt d)(i)");
    const QuadRat n_inv = norm().inverse();
    return GaussQuad(re_ * n_inv, -im_ * n_inv);
}

GaussQuad& GaussQuad::operator+=(const GaussQuad& y) {
    re_ += y.re_;
    im_ += y.im_;
    return *this;
}

GaussQuad& GaussQuad::operator-=(const GaussQuad& y) {
    re_ -= y.re_;
    im_ -= y.im_;
    return *this;
}

GaussQuad& GaussQuad::operator*=(const GaussQuad& y) {
    QuadRat re = re_ * y.re_ - im_ * y.im_;
    QuadRat im = re_ * y.im_ + im_ * y.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussQuad::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    return "(" + re_.to_string() + ") + (" + im_.to_string() + ")*i";
}

GaussQuad pow(const GaussQuad& x, long k) {
    return pow_impl(x, k, GaussQuad(QuadRat::rational(Rat(1), x.d())));
}

QuadRat binet_alpha() { return QuadRat(Rat(3), Rat(2), 2); }
QuadRat binet_beta() { return QuadRat(Rat(3), Rat(-2), 2); }

BigInt require_integer(const QuadRat& x, const char* what) {
    if (!x.is_rational() || !is_integer(x.a()))
        throw ConsistencyError(std::string(what) + ": expected a rational integer, got " + x.to_string());
    return x.a().get_num();
}

BigInt require_integer(const GaussQuad& x, const char* what) {
    if (!x.is_real())
        throw ConsistencyError(std::string(what) + ": nonzero imaginary part in " + x.to_string());
    return require_integer(x.re(), what);
}

std::pair<BigInt, BigInt> binet(long n) {
    const QuadRat an = pow(binet_alpha(), n);
    const QuadRat bn = pow(binet_beta(), n);
    const QuadRat four_root2 = QuadRat(Rat(0), Rat(4), 2);
    const QuadRat b = (an - bn) / four_root2;
    const QuadRat c = (an + bn) * Rat(1, 2);
    return {require_integer(b, "binet B_n"), require_integer(c, "binet C_n")};
}

}  // namespace balkit
