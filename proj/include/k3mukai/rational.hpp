#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "k3mukai/errors.hpp"

namespace k3mukai {

// Arbitrary-precision integer. All lattice and Mukai arithmetic runs on
// these, so kernel eliminations and pairing sums never overflow.
using Int = mpz_class;

bool fits_int64(const Int& v);
long long to_int64(const Int& v);

/// Exact rational number, always reduced with positive denominator.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(const Int& v) : q_(v) {}
    Rational(const Int& num, const Int& den);

    static Rational parse(const std::string& text);

    Int numerator() const { return Int(q_.get_num()); }
    Int denominator() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Exact integer value; throws NotIntegral when the denominator is not 1.
    Int to_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const;

    /// Canonical string form "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Decimal approximation for display only; never used in computation.
    double approx() const { return q_.get_d(); }

  private:
    mpq_class q_; // canonical by construction
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i); houses central-charge values and exp(beta +- i omega)
/// coefficients.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace k3mukai
