#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace nsbound {

/// Exact complex number with rational real and imaginary parts.
///
/// Both parts are kept in canonical GMP form (reduced, positive denominator),
/// so structural equality is mathematical equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }

  /// |z| as a double no larger than the true modulus.
  double abs_lower() const;
  /// |z| as a double no smaller than the true modulus.
  double abs_upper() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Round a non-negative rational to the nearest double at or below it.
double to_double_down(const mpq_class& q);
/// Round a non-negative rational to the nearest double at or above it.
double to_double_up(const mpq_class& q);

/// Debug rendering, e.g. "3/4", "(1/2 + 3/4i)".
std::string to_string(const GaussianRational& z);

}  // namespace nsbound
