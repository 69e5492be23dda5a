#include "nsbound/gaussian_rational.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nsbound/errors.hpp"

namespace nsbound {

namespace {

mpq_class exact(double x) { return mpq_class(x); }

// Largest double whose square does not exceed q (q >= 0).
double sqrt_down(const mpq_class& q) {
  if (sgn(q) == 0) return 0.0;
  double s = std::sqrt(q.get_d());
  const double inf = std::numeric_limits<double>::infinity();
  while (s > 0 && exact(s) * exact(s) > q) s = std::nextafter(s, 0.0);
  for (double up = std::nextafter(s, inf); exact(up) * exact(up) <= q; up = std::nextafter(s, inf)) s = up;
  return s;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error("division of a Gaussian rational by zero");
  const mpq_class n = o.norm_squared();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

double GaussianRational::abs_lower() const { return sqrt_down(norm_squared()); }

double GaussianRational::abs_upper() const {
  const mpq_class q = norm_squared();
  double s = sqrt_down(q);
  if (exact(s) * exact(s) < q) s = std::nextafter(s, std::numeric_limits<double>::infinity());
  return s;
}

double to_double_down(const mpq_class& q) {
  double x = q.get_d();
  while (exact(x) > q) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

double to_double_up(const mpq_class& q) {
  double x = q.get_d();
  while (exact(x) < q) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

std::string to_string(const GaussianRational& z) {
  std::ostringstream out;
  if (z.is_real()) {
    out << z.re();
  } else if (sgn(z.re()) == 0) {
    out << z.im() << 'i';
  } else {
    out << '(' << z.re() << (sgn(z.im()) < 0 ? " - " : " + ") << abs(z.im()) << "i)";
  }
  return out.str();
}

}  // namespace nsbound
