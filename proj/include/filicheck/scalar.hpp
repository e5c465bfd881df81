#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <ostream>
#include <string>

namespace filicheck {

/// Field a value or algebra lives over: the rationals or the Gaussian rationals Q(i).
enum class Field { Q, Qi };

std::string to_string(Field f);

/// Exact element of Q(i). Both parts are kept in lowest terms by GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v), im_(0) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  double re_double() const { return re_.get_d(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Text form used by the algebra file format: `p`, `p/q`, `p/q i`, `p/q+r/s i`.
  std::string str() const;

  friend void add_product(Scalar& acc, const Scalar& a, const Scalar& b);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Fused `acc += a * b` without a temporary Scalar for the real-only case.
void add_product(Scalar& acc, const Scalar& a, const Scalar& b);

}  // namespace filicheck
