#pragma once

// Exact Gaussian-rational scalars and the scalar traits shared by the
// templated series/jet code. Two scalar types are supported:
//   std::complex<double>  floating mode, resonance by threshold
//   QComplex              exact mode over Q(i), resonance by exact zero

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

namespace ahscatter {

using cplx = std::complex<double>;
using Rational = mpq_class;

class QComplex {
 public:
  QComplex() : re_(0), im_(0) {}
  QComplex(long v) : re_(v), im_(0) {}  // NOLINT: implicit from integer literals
  // Canonical form is required for exact equality (2/4 != 1/2 in GMP otherwise).
  QComplex(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }  // NOLINT
  QComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  QComplex& operator+=(const QComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return QComplex(Rational(-a.re_), Rational(-a.im_)); }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

  cplx to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const QComplex& z);

/// Exact conversion: every finite double is a dyadic rational.
inline Rational to_rational(double v) { return Rational(v); }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<cplx> {
  static constexpr bool exact = false;
  static cplx from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static cplx from_real(double v) { return {v, 0.0}; }
  static cplx imag_unit() { return {0.0, 1.0}; }
  /// Threshold test used for resonance detection: |v| < 1e-8 * scale.
  static bool is_zero(const cplx& v, double scale = 1.0) { return std::abs(v) < 1e-8 * scale; }
  static double magnitude(const cplx& v) { return std::abs(v); }
  static cplx to_complex(const cplx& v) { return v; }
};

template <>
struct ScalarTraits<QComplex> {
  static constexpr bool exact = true;
  static QComplex from_rational(const Rational& q) { return QComplex(q); }
  static QComplex from_real(double v) { return QComplex(to_rational(v)); }
  static QComplex imag_unit() { return QComplex(Rational(0), Rational(1)); }
  static bool is_zero(const QComplex& v, double = 1.0) { return v.is_zero(); }
  static double magnitude(const QComplex& v) { return std::abs(v.to_complex()); }
  static cplx to_complex(const QComplex& v) { return v.to_complex(); }
};

}  // namespace ahscatter
