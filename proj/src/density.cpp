#include "nsbound/density.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "nsbound/errors.hpp"

namespace nsbound {

namespace {

unsigned worker_count(ParallelOptions par, std::uint64_t work) {
  unsigned w = par.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : par.workers;
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(work, 1)));
}

// Runs fn(begin, end) over fixed contiguous index ranges, one per worker.
template <typename Fn>
void parallel_ranges(std::uint64_t total, ParallelOptions par, Fn&& fn) {
  const unsigned workers = worker_count(par, total);
  if (workers <= 1) {
    fn(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

std::vector<CompiledPoly> compile_entries(const PolyMatrix& a) {
  std::vector<CompiledPoly> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.emplace_back(a(i, j));
  }
  return out;
}

ComplexMatrix gram_from_values(const std::vector<std::complex<double>>& values, std::size_t rows, std::size_t cols) {
  ComplexMatrix h(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t l = 0; l < cols; ++l) s += values[i * cols + l] * std::conj(values[j * cols + l]);
      h(i, j) = s;
      h(j, i) = std::conj(s);
    }
    h(i, i) = h(i, i).real();
  }
  return h;
}

void require_ascending(std::span<const double> lambdas) {
  if (lambdas.empty()) throw Error("lambda grid is empty");
  if (!std::is_sorted(lambdas.begin(), lambdas.end())) throw Error("lambda grid must be ascending");
}

void require_grid_dim(std::size_t dim, const TorusGrid& grid) {
  if (dim != grid.dim()) throw DimensionMismatch("torus grid dimension does not match the polynomial ring");
}

}  // namespace

SortedSamples::SortedSamples(std::vector<double> values, std::uint64_t points)
    : values_(std::move(values)), points_(points) {
  std::sort(values_.begin(), values_.end());
}

std::uint64_t SortedSamples::count_at_most(double threshold) const {
  return static_cast<std::uint64_t>(std::upper_bound(values_.begin(), values_.end(), threshold) - values_.begin());
}

double SortedSamples::fraction_at_most(double threshold) const {
  return static_cast<double>(count_at_most(threshold)) / static_cast<double>(points_);
}

SortedSamples scalar_samples(const LaurentPoly& p, const TorusGrid& grid, ParallelOptions par) {
  require_grid_dim(p.dim(), grid);
  const CompiledPoly compiled(p);
  std::vector<double> values(grid.size());
  parallel_ranges(grid.size(), par, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> angles(grid.dim());
    for (std::uint64_t i = begin; i < end; ++i) {
      grid.point(i, angles);
      values[i] = compiled.modulus(angles);
    }
  });
  return SortedSamples(std::move(values), grid.size());
}

SortedSamples gram_samples(const PolyMatrix& a, const TorusGrid& grid, ParallelOptions par) {
  require_grid_dim(a.dim(), grid);
  const auto entries = compile_entries(a);
  const std::size_t m = a.rows();
  std::vector<double> values(grid.size() * m);
  parallel_ranges(grid.size(), par, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> angles(grid.dim());
    std::vector<std::complex<double>> at(entries.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      grid.point(i, angles);
      for (std::size_t e = 0; e < entries.size(); ++e) at[e] = entries[e](angles);
      const HermitianSpectrum s = psd_eigenvalues(gram_from_values(at, m, a.cols()));
      std::copy(s.eigenvalues.begin(), s.eigenvalues.end(), values.begin() + static_cast<std::ptrdiff_t>(i * m));
    }
  });
  return SortedSamples(std::move(values), grid.size());
}

DensityCurve scalar_density(const LaurentPoly& p, std::span<const double> lambdas, const TorusGrid& grid,
                            ParallelOptions par) {
  if (p.is_zero()) throw ZeroInput("spectral density of the zero polynomial");
  require_ascending(lambdas);
  const SortedSamples samples = scalar_samples(p, grid, par);
  DensityCurve curve;
  curve.lambdas.assign(lambdas.begin(), lambdas.end());
  curve.samples = grid.size();
  for (double lambda : lambdas) curve.estimates.push_back(samples.fraction_at_most(lambda));
  return curve;
}

ComplexMatrix gram_matrix(const PolyMatrix& a, std::span<const double> angles) {
  std::vector<std::complex<double>> at;
  at.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) at.push_back(eval(a(i, j), angles));
  }
  return gram_from_values(at, a.rows(), a.cols());
}

HermitianSpectrum gram_spectrum(const PolyMatrix& a, const TorusPoint& z) {
  return psd_eigenvalues(gram_matrix(a, z.angles));
}

DensityCurve matrix_density(const PolyMatrix& a, std::size_t k, std::span<const double> lambdas,
                            const TorusGrid& grid, ParallelOptions par) {
  require_ascending(lambdas);
  if (k > a.rows()) throw DimensionMismatch("minor size exceeds the number of rows");
  const SortedSamples samples = gram_samples(a, grid, par);
  DensityCurve curve;
  curve.lambdas.assign(lambdas.begin(), lambdas.end());
  curve.samples = grid.size();
  curve.f_zero = a.rows() - k;
  for (double lambda : lambdas) curve.estimates.push_back(samples.fraction_at_most(lambda * lambda));
  return curve;
}

double op_norm_estimate(const PolyMatrix& a, const TorusGrid& grid, ParallelOptions par) {
  const SortedSamples samples = gram_samples(a, grid, par);
  return std::sqrt(samples.values().back());
}

ViolationReport product_inequality_check(const LaurentPoly& q1, const LaurentPoly& q2, double s,
                                         std::span<const double> lambdas, const TorusGrid& grid,
                                         ParallelOptions par) {
  if (!(s > 0.0 && s < 1.0)) throw Error("split exponent s must lie in (0, 1)");
  require_ascending(lambdas);
  const SortedSamples prod = scalar_samples(q1 * q2, grid, par);
  const SortedSamples first = scalar_samples(q1, grid, par);
  const SortedSamples second = scalar_samples(q2, grid, par);
  ViolationReport report;
  report.tolerance = grid.quadrature_tolerance();
  report.max_violation = -1e300;
  for (double lambda : lambdas) {
    const double lhs = prod.fraction_at_most(lambda);
    const double rhs = first.fraction_at_most(std::pow(lambda, 1.0 - s)) + second.fraction_at_most(std::pow(lambda, s));
    if (lhs - rhs > report.max_violation) {
      report.max_violation = lhs - rhs;
      report.worst_lambda = lambda;
    }
    ++report.checked;
  }
  return report;
}

ViolationReport lemma31_check(const PolyMatrix& b, std::span<const double> lambdas, const TorusGrid& grid,
                              ParallelOptions par) {
  if (!b.is_square()) throw DimensionMismatch("lemma31_check needs a square matrix");
  require_ascending(lambdas);
  const LaurentPoly p = determinant(b);
  if (p.is_zero()) throw ZeroInput("lemma31_check needs a non-singular matrix");
  const double k = static_cast<double>(b.rows());
  const double scale = std::pow(op_norm_upper(b), k - 1.0);
  const SortedSamples spectrum = gram_samples(b, grid, par);
  const SortedSamples det = scalar_samples(p, grid, par);
  ViolationReport report;
  report.tolerance = grid.quadrature_tolerance();
  report.max_violation = -1e300;
  for (double lambda : lambdas) {
    const double lhs = spectrum.fraction_at_most(lambda * lambda);
    const double rhs = k * det.fraction_at_most(scale * lambda);
    if (lhs - rhs > report.max_violation) {
      report.max_violation = lhs - rhs;
      report.worst_lambda = lambda;
    }
    ++report.checked;
  }
  return report;
}

AlphaFit alpha_fit(const DensityCurve& curve, double lo, double hi) {
  std::vector<double> xs;
  std::vector<double> ys;
  const double f0 = static_cast<double>(curve.f_zero);
  for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
    const double lambda = curve.lambdas[i];
    const double excess = curve.estimates[i] - f0;
    if (lambda < lo || lambda > hi || !(excess > 0.0) || !(lambda > 0.0)) continue;
    xs.push_back(std::log(lambda));
    ys.push_back(std::log(excess));
  }
  if (xs.size() < kMinAlphaFitPoints) {
    throw InsufficientData("alpha fit needs at least 5 lambdas with F-hat above F(0) in the window; found " +
                           std::to_string(xs.size()));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("alpha fit needs distinct lambdas");
  AlphaFit fit;
  fit.alpha_hat = sxy / sxx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points_used = xs.size();
  return fit;
}

std::pair<double, double> default_alpha_window(const DensityCurve& curve) {
  const double f0 = static_cast<double>(curve.f_zero);
  std::vector<double> usable;
  for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
    if (curve.estimates[i] - f0 > 0.0) usable.push_back(curve.lambdas[i]);
  }
  if (usable.empty()) throw InsufficientData("F-hat never exceeds F(0) on the lambda grid");
  const double lo = usable.front();
  const double hi = lo * 100.0;
  const auto inside = std::count_if(usable.begin(), usable.end(), [hi](double l) { return l <= hi; });
  if (inside >= static_cast<std::ptrdiff_t>(kMinAlphaFitPoints)) return {lo, hi};
  return {lo, usable.back()};
}

std::vector<double> lambda_grid(double lo, double hi, std::size_t count, bool log_spaced) {
  if (count < 2) throw Error("lambda grid needs at least two points");
  if (!(hi > lo)) throw Error("lambda grid needs lambda-max > lambda-min");
  if (log_spaced && !(lo > 0.0)) throw Error("log-spaced lambda grid needs lambda-min > 0");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace nsbound
