#pragma once

// Exact arithmetic in Q(sqrt d) and in its Gaussian extension Q(sqrt d)(i).
//
// d is a runtime parameter so that Q(sqrt 2) and Q(sqrt 5) share one
// implementation. Combining elements with different d throws DomainError.

#include "balkit/bigint.hpp"

#include <string>
#include <utility>

namespace balkit {

// a + b*sqrt(d), d squarefree and >= 2.
class QuadRat {
public:
    // Zero of Q(sqrt d). Throws DomainError unless d is squarefree and >= 2.
    explicit QuadRat(long d);
    QuadRat(Rat a, Rat b, long d);

    static QuadRat rational(Rat a, long d) { return QuadRat(std::move(a), Rat(0), d); }
    // The element sqrt(d) itself.
    static QuadRat root(long d) { return QuadRat(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // a - b*sqrt(d)
    QuadRat conjugate() const { return QuadRat(a_, -b_, d_); }
    // a^2 - d b^2
    Rat norm() const;

    // Throws DivisionByZero on zero.
    QuadRat inverse() const;

    QuadRat& operator+=(const QuadRat& y);
    QuadRat& operator-=(const QuadRat& y);
    QuadRat& operator*=(const QuadRat& y);
    QuadRat& operator/=(const QuadRat& y) { return *this *= y.inverse(); }

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
    friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a_, -x.b_, x.d_); }

    // Rational scalars act on either field.
    friend QuadRat operator*(QuadRat x, const Rat& s);
    friend QuadRat operator*(const Rat& s, QuadRat x) { return std::move(x) * s; }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const;

private:
    void require_same_field(const QuadRat& y, const char* op) const;

    Rat a_;
    Rat b_;
    long d_;
};

// x^k for any signed k; throws DivisionByZero for 0^k with k < 0.
QuadRat pow(const QuadRat& x, long k);

bool is_squarefree(long d);

// re + im*i with re, im in the same Q(sqrt d).
class GaussQuad {
public:
    explicit GaussQuad(long d) : re_(d), im_(d) {}
    GaussQuad(QuadRat re, QuadRat im);
    // Embeds a real element (im = 0).
    explicit GaussQuad(QuadRat re) : re_(std::move(re)), im_(re_.d()) {}

    const QuadRat& re() const { return re_; }
    const QuadRat& im() const { return im_; }
    long d() const { return re_.d(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    // Complex conjugate re - im*i.
    GaussQuad conj() const { return GaussQuad(re_, -im_); }
    // re^2 + im^2, a real element of Q(sqrt d).
    QuadRat norm() const;
    GaussQuad inverse() const;

    GaussQuad& operator+=(const GaussQuad& y);
    GaussQuad& operator-=(const GaussQuad& y);
    GaussQuad& operator*=(const GaussQuad& y);
    GaussQuad& operator/=(const GaussQuad& y) { return *this *= y.inverse(); }

    friend GaussQuad operator+(GaussQuad x, const GaussQuad& y) { return x += y; }
    friend GaussQuad operator-(GaussQuad x, const GaussQuad& y) { return x -= y; }
    friend GaussQuad operator*(GaussQuad x, const GaussQuad& y) { return x *= y; }
    friend GaussQuad operator/(GaussQuad x, const GaussQuad& y) { return x /= y; }
    friend GaussQuad operator-(const GaussQuad& x) { return GaussQuad(-x.re_, -x.im_); }

    friend bool operator==(const GaussQuad& x, const GaussQuad& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

    std::string to_string() const;

private:
    QuadRat re_;
    QuadRat im_;
};

GaussQuad pow(const GaussQuad& x, long k);

// The imaginary unit in Q(sqrt d)(i).
inline GaussQuad imaginary_unit(long d) {
    return GaussQuad(QuadRat(d), QuadRat::rational(Rat(1), d));
}

// alpha = 3 + 2 sqrt 2 and beta = 3 - 2 sqrt 2.
QuadRat binet_alpha();
QuadRat binet_beta();

// (B_n, C_n) from (alpha^n - beta^n)/(4 sqrt 2) and (alpha^n + beta^n)/2,
// evaluated in Q(sqrt 2). Throws ConsistencyError if either is not a
// rational integer.
std::pair<BigInt, BigInt> binet(long n);

// The value of x as a rational integer; ConsistencyError otherwise.
BigInt require_integer(const QuadRat& x, const char* what);
BigInt require_integer(const GaussQuad& x, const char* what);

}  // namespace balkit
