#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nsbound/gaussian_rational.hpp"

namespace nsbound {

/// Multi-index (n_1, ..., n_d) of a Laurent monomial z_1^{n_1} ... z_d^{n_d}.
using Exponent = std::vector<int>;

/// Lexicographic order on Z^d with the LAST coordinate most significant.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Sparse Laurent polynomial in z_1^{±1}, ..., z_d^{±1} with Gaussian rational
/// coefficients. Zero coefficients are never stored; the zero polynomial has
/// no terms. Rank 0 is allowed and holds constants.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational, ExponentOrder>;

  explicit LaurentPoly(std::size_t dim = 1) : dim_(dim) {}

  static LaurentPoly constant(std::size_t dim, const GaussianRational& c);
  static LaurentPoly monomial(Exponent exponent, const GaussianRational& c);
  /// The variable z_{index+1} in rank dim.
  static LaurentPoly variable(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given exponent (zero if absent).
  GaussianRational coefficient(const Exponent& e) const;

  /// Adds c * z^e in place.
  void add_term(const Exponent& e, const GaussianRational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const GaussianRational& c, const LaurentPoly& p);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned n) const;

  /// Same polynomial viewed in a ring with more variables (new ones unused).
  LaurentPoly embed(std::size_t dim) const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// The involution sum c_g g -> sum conj(c_g) g^{-1}.
LaurentPoly star(const LaurentPoly& p);

/// Sum of coefficient moduli, rounded so the result is never below the true value.
double l1_norm(const LaurentPoly& p);

/// Exact L1 norm when every coefficient is real.
std::optional<mpq_class> l1_norm_exact(const LaurentPoly& p);

/// Value at z_j = exp(i * angles[j]).
std::complex<double> eval(const LaurentPoly& p, std::span<const double> angles);

/// Coefficient of the exponent that is maximal in ExponentOrder.
const GaussianRational& lead_lex(const LaurentPoly& p);

/// Quotient a / b, which must be exact. Throws if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Double-precision copy of a polynomial for fast repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const LaurentPoly& p);

  std::size_t dim() const { return dim_; }
  std::complex<double> operator()(std::span<const double> angles) const;
  /// |p(z)|. A single term has constant modulus on the torus and is returned exactly.
  double modulus(std::span<const double> angles) const;

 private:
  std::size_t dim_ = 0;
  std::vector<int> exponents_;  // term-major, dim_ entries per term
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace nsbound
