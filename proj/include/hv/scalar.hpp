#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "hv/error.hpp"

namespace hv {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// form (reduced, positive denominator) through arithmetic; every constructor
// here canonicalizes explicitly.
using Int = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Int& num, const Int& den);

/// Element of the Gaussian rationals Q(i), the exact ground field.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}          // NOLINT: implicit by design
  Scalar(const Int& v) : re_(v), im_(0) {}    // NOLINT
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_rational() const { return im_ == 0; }
  // True iff the value lies in Z (real with denominator 1).
  bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;

  // z^e for e in Z; negative exponents invert (throws DivisionByZero on 0).
  Scalar pow(const Int& e) const;

  // Total order for deterministic sorting; not an algebraic order on C.
  int cmp(const Scalar& o) const;
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  Rational re_, im_;
};

std::string rational_str(const Rational& r);

// Literal grammar: `a/b`, `a`, `a/b+c/d i`, `i`, `-i`; whitespace-insensitive.
Scalar parse_scalar(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace hv
