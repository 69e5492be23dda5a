#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "nsbound/poly_matrix.hpp"
#include "nsbound/width.hpp"

namespace nsbound {

/// 8 * sqrt(3) / sqrt(47): the universal constant coming from the estimate
/// (47/48) x^2 <= 2 - 2 cos(x) on |x| <= 1/2.
double universal_constant();

struct BoundParameters {
  std::size_t k = 1;
  std::size_t d = 1;
  int wd = 0;
  double lead_abs = 1.0;
  double b_l1 = 0.0;
  double c = universal_constant();
};

/// Upper bound on F(lambda) - F(0) for the matrix; requires wd >= 1.
double matrix_bound(const BoundParameters& params, double lambda);

/// Spectral density of a width-zero polynomial: 0 below |lead|, 1 from |lead| on.
double step_bound(double lead_abs, double lambda);

/// Upper bound on F(lambda) for a single polynomial; requires wd >= 1.
double scalar_bound(std::size_t d, int wd, double lead_abs, double lambda);

/// Lower bound for the Novikov-Shubin invariant; nullopt means "infinite-type"
/// (the invariant is infinity or infinity+).
std::optional<double> ns_lower_bound(std::size_t d, int wd);

/// (k^2 * ||B||_1)^(k-1) * lambda.
double rescale_lambda(std::size_t k, double b_l1, double lambda);

enum class OrderingMode { kFixed, kExhaustive };
enum class MinorMode { kFirst, kBest };

inline constexpr std::size_t kMaxExhaustiveDim = 8;

/// Identity ordering profile, or the ordering minimising wd (ties: larger
/// |lead|, then lexicographically smallest permutation).
WidthProfile best_ordering(const LaurentPoly& p, OrderingMode mode);

struct AnalyzeOptions {
  OrderingMode ordering = OrderingMode::kFixed;
  MinorMode minor = MinorMode::kFirst;
  std::uint64_t search_cap = kDefaultMinorSearchCap;
};

struct BoundReport {
  BoundParameters params;
  MinorCertificate minor;
  WidthProfile profile;
  OrderingMode ordering_mode = OrderingMode::kFixed;
  MinorMode minor_mode = MinorMode::kFirst;
  std::size_t m = 0;  // rows of the analysed matrix
  std::size_t n = 0;
  /// Prefactor multiplying lambda^exponent; meaningful when !is_step.
  double coefficient = 0.0;
  /// 1 / (d * wd); meaningful when !is_step.
  double exponent = 0.0;
  std::optional<double> alpha_lower;
  bool is_step = false;

  /// F(0) = m - k.
  std::size_t f_zero() const { return m - params.k; }
  /// Raw formula value bounding F(lambda) - F(0). For width zero this is the
  /// step chain k * step(|lead|, rescaled lambda).
  double bound_at(double lambda) const;
  /// bound_at clipped to k, the largest value F - F(0) can take.
  double display_bound_at(double lambda) const;
};

BoundReport analyze(const PolyMatrix& a, const AnalyzeOptions& options = {});

std::string to_string(OrderingMode mode);
std::string to_string(MinorMode mode);

}  // namespace nsbound
