#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "gdinv/errors.hpp"

namespace gdinv {

/// Arbitrary-precision rational. mpq_class keeps every value canonical
/// (gcd(num, den) = 1, den > 0) through arithmetic, so equality is structural.
using Rational = mpq_class;

/// Element of Q(i): re + im*i with exact rational components.
///
/// This is the scalar every kernel in the project runs over. All operations
/// are exact; equality is bitwise on the canonical representation. There is
/// no ordering and no rounding anywhere.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}                  // NOLINT: implicit by design
  GaussianRational(long v) : re_(v) {}                 // NOLINT
  GaussianRational(const Rational& re) : re_(re) {}    // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // Accepts gmpxx expression templates so things like GaussianRational(a*b + c)
  // with mpq operands work without an extra conversion step.
  template <class T, class U>
  GaussianRational(const __gmp_expr<T, U>& e) : re_(e) {}  // NOLINT

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw InvalidArgumentError("division by zero scalar");
    const Rational d = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& x) {
  return {x.real(), Rational(-x.imag())};
}
inline const Rational& real(const GaussianRational& x) { return x.real(); }
inline const Rational& imag(const GaussianRational& x) { return x.imag(); }
inline Rational abs2(const GaussianRational& x) {
  return x.real() * x.real() + x.imag() * x.imag();
}

/// Canonical text form, e.g. "0", "-3", "1/2", "i", "-i", "3/4i", "1/2-3/4i".
/// parse_scalar(to_string(x)) == x bitwise for every value.
std::string to_string(const GaussianRational& x);

/// Parses "p", "p/q", "[p[/q]][+|-][r[/t]]i" with arbitrary-precision integer
/// literals; whitespace-insensitive; a bare "i" means 1i. Throws ParseError.
GaussianRational parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace gdinv
