#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsbound/hermitian.hpp"
#include "nsbound/poly_matrix.hpp"
#include "nsbound/torus.hpp"

namespace nsbound {

/// Estimates of the spectral density function F(lambda) on a lambda grid.
struct DensityCurve {
  std::vector<double> lambdas;    // ascending, positive
  std::vector<double> estimates;  // F-hat(lambda), non-decreasing
  std::size_t f_zero = 0;         // m - k, set analytically
  std::uint64_t samples = 0;      // quadrature nodes
  std::string subject;
};

/// Per-node values pooled over a grid and sorted, so that any threshold is
/// resolved by binary search. For a scalar these are |p(z)|; for a matrix the
/// eigenvalues of A(z) A(z)^*, `per_point` of them for each node.
class SortedSamples {
 public:
  SortedSamples(std::vector<double> values, std::uint64_t points);

  std::uint64_t points() const { return points_; }
  const std::vector<double>& values() const { return values_; }
  /// Number of samples <= threshold.
  std::uint64_t count_at_most(double threshold) const;
  /// count_at_most / points.
  double fraction_at_most(double threshold) const;

 private:
  std::vector<double> values_;
  std::uint64_t points_;
};

/// Evaluation parallelism. 0 selects the hardware concurrency. Results do not
/// depend on the worker count.
struct ParallelOptions {
  unsigned workers = 0;
};

SortedSamples scalar_samples(const LaurentPoly& p, const TorusGrid& grid, ParallelOptions par = {});
SortedSamples gram_samples(const PolyMatrix& a, const TorusGrid& grid, ParallelOptions par = {});

/// F-hat(lambda) = fraction of nodes with |p(z)| <= lambda.
DensityCurve scalar_density(const LaurentPoly& p, std::span<const double> lambdas, const TorusGrid& grid,
                            ParallelOptions par = {});

/// A(z) A(z)^* for the entrywise evaluation of A at z.
ComplexMatrix gram_matrix(const PolyMatrix& a, std::span<const double> angles);
HermitianSpectrum gram_spectrum(const PolyMatrix& a, const TorusPoint& z);

/// F-hat(lambda) = average over nodes of #{eigenvalues of A(z)A(z)^* <= lambda^2};
/// f_zero is m - k.
DensityCurve matrix_density(const PolyMatrix& a, std::size_t k, std::span<const double> lambdas,
                            const TorusGrid& grid, ParallelOptions par = {});

/// max over nodes of the largest singular value of A(z).
double op_norm_estimate(const PolyMatrix& a, const TorusGrid& grid, ParallelOptions par = {});

/// Largest excess of a left-hand side over a right-hand side on a lambda grid.
struct ViolationReport {
  double max_violation = 0.0;  // max over lambda of lhs - rhs (may be negative)
  double worst_lambda = 0.0;
  double tolerance = 0.0;
  std::size_t checked = 0;

  bool consistent() const { return max_violation <= tolerance; }
};

/// F(q1 q2)(lambda) <= F(q1)(lambda^(1-s)) + F(q2)(lambda^s), all on one grid.
ViolationReport product_inequality_check(const LaurentPoly& q1, const LaurentPoly& q2, double s,
                                         std::span<const double> lambdas, const TorusGrid& grid,
                                         ParallelOptions par = {});

/// F_B(lambda) <= k * F_det(B)(||B||^(k-1) lambda), with ||B|| replaced by the
/// upper bound k^2 ||B||_1.
ViolationReport lemma31_check(const PolyMatrix& b, std::span<const double> lambdas, const TorusGrid& grid,
                              ParallelOptions par = {});

struct AlphaFit {
  double alpha_hat = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

inline constexpr std::size_t kMinAlphaFitPoints = 5;

/// Least-squares slope of log(F-hat - f_zero) against log(lambda) for lambdas
/// in [lo, hi] with F-hat > f_zero. Throws InsufficientData below 5 such points.
AlphaFit alpha_fit(const DensityCurve& curve, double lo, double hi);

/// The two lowest decades starting at the first lambda with F-hat > f_zero,
/// widened to the full usable range when that holds fewer than 5 points.
/// Throws InsufficientData when the curve never leaves f_zero.
std::pair<double, double> default_alpha_window(const DensityCurve& curve);

/// count points spaced evenly (or log-evenly) in [lo, hi].
std::vector<double> lambda_grid(double lo, double hi, std::size_t count, bool log_spaced = true);

}  // namespace nsbound
