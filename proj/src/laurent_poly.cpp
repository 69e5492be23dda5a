#include "nsbound/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nsbound/errors.hpp"

namespace nsbound {

namespace {

void require_same_dim(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": operands have " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " variables");
  }
}

Exponent sum(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t dim, const GaussianRational& c) {
  LaurentPoly p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent exponent, const GaussianRational& c) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t dim, std::size_t index) {
  Exponent e(dim, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

GaussianRational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (e.size() != dim_) throw DimensionMismatch("exponent length does not match polynomial rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_dim(*this, o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_dim(*this, o, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b, "multiply");
  LaurentPoly r(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) r.add_term(sum(ea, eb), ca * cb);
  }
  return r;
}

LaurentPoly operator*(const GaussianRational& c, const LaurentPoly& p) {
  LaurentPoly r(p.dim());
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : p.terms()) r.terms_.emplace_hint(r.terms_.end(), e, c * coeff);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(dim_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::embed(std::size_t dim) const {
  if (dim < dim_) throw DimensionMismatch("cannot embed into a ring with fewer variables");
  LaurentPoly r(dim);
  for (const auto& [e, c] : terms_) {
    Exponent wide(e);
    wide.resize(dim, 0);
    r.add_term(wide, c);
  }
  return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly star(const LaurentPoly& p) {
  LaurentPoly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    Exponent neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    r.add_term(neg, c.conj());
  }
  return r;
}

std::optional<mpq_class> l1_norm_exact(const LaurentPoly& p) {
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_real()) return std::nullopt;
    total += abs(c.re());
  }
  return total;
}

double l1_norm(const LaurentPoly& p) {
  if (auto exact = l1_norm_exact(p)) return to_double_up(*exact);
  // Sorted so the result does not depend on term order; the relative slack
  // covers the rounding of n additions.
  std::vector<double> moduli;
  moduli.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) moduli.push_back(c.abs_upper());
  std::sort(moduli.begin(), moduli.end());
  double total = 0.0;
  for (double m : moduli) total += m;
  const double slack = static_cast<double>(moduli.size()) * std::numeric_limits<double>::epsilon();
  return std::nextafter(total * (1.0 + slack), std::numeric_limits<double>::infinity());
}

std::complex<double> eval(const LaurentPoly& p, std::span<const double> angles) {
  if (angles.size() != p.dim()) throw DimensionMismatch("evaluation point has the wrong number of angles");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) phase += e[i] * angles[i];
    acc += c.to_complex() * std::polar(1.0, phase);
  }
  return acc;
}

const GaussianRational& lead_lex(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroInput("leading coefficient of the zero polynomial");
  return p.terms().rbegin()->second;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b, "divide");
  if (b.is_zero()) throw ZeroInput("division by the zero polynomial");
  LaurentPoly quotient(a.dim());
  if (a.is_zero()) return quotient;

  // In a domain, the exponent range of the quotient in each variable is fixed by
  // the ranges of a and b; a candidate outside that box proves non-divisibility.
  const std::size_t d = a.dim();
  auto range = [d](const LaurentPoly& p) {
    std::vector<int> lo(d, std::numeric_limits<int>::max()), hi(d, std::numeric_limits<int>::min());
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return std::pair{lo, hi};
  };
  const auto [alo, ahi] = range(a);
  const auto [blo, bhi] = range(b);

  const auto& [blead_exp, blead] = *b.terms().rbegin();
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    const auto& [rexp, rcoeff] = *rest.terms().rbegin();
    Exponent qexp(d);
    for (std::size_t i = 0; i < d; ++i) {
      qexp[i] = rexp[i] - blead_exp[i];
      if (qexp[i] < alo[i] - blo[i] || qexp[i] > ahi[i] - bhi[i]) {
        throw Error("divide_exact: divisor does not divide dividend");
      }
    }
    LaurentPoly step = LaurentPoly::monomial(qexp, rcoeff / blead);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

CompiledPoly::CompiledPoly(const LaurentPoly& p) : dim_(p.dim()) {
  for (const auto& [e, c] : p.terms()) {
    exponents_.insert(exponents_.end(), e.begin(), e.end());
    coeffs_.push_back(c.to_complex());
  }
}

std::complex<double> CompiledPoly::operator()(std::span<const double> angles) const {
  std::complex<double> acc{0.0, 0.0};
  const int* e = exponents_.data();
  for (const auto& c : coeffs_) {
    double phase = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) phase += e[i] * angles[i];
    e += dim_;
    acc += c * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

double CompiledPoly::modulus(std::span<const double> angles) const {
  if (coeffs_.size() == 1) return std::abs(coeffs_.front());
  return std::abs((*this)(angles));
}

}  // namespace nsbound
