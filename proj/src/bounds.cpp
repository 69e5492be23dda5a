#include "nsbound/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "nsbound/errors.hpp"

namespace nsbound {

double universal_constant() { return 8.0 * std::sqrt(3.0) / std::sqrt(47.0); }

double matrix_bound(const BoundParameters& params, double lambda) {
  if (params.wd < 1) throw Error("matrix_bound needs wd >= 1; use step_bound for width zero");
  if (lambda <= 0.0) return 0.0;
  const double k = static_cast<double>(params.k);
  const double dwd = static_cast<double>(params.d) * params.wd;
  const double inner = std::pow(k, 2.0 * k - 2.0) * std::pow(params.b_l1, k - 1.0) * lambda / params.lead_abs;
  return params.c * k * dwd * std::pow(inner, 1.0 / dwd);
}

double step_bound(double lead_abs, double lambda) { return lambda < lead_abs ? 0.0 : 1.0; }

double scalar_bound(std::size_t d, int wd, double lead_abs, double lambda) {
  if (wd < 1) throw Error("scalar_bound needs wd >= 1; use step_bound for width zero");
  if (lambda <= 0.0) return 0.0;
  const double dwd = static_cast<double>(d) * wd;
  return universal_constant() * dwd * std::pow(lambda / lead_abs, 1.0 / dwd);
}

std::optional<double> ns_lower_bound(std::size_t d, int wd) {
  if (wd == 0) return std::nullopt;
  return 1.0 / (static_cast<double>(d) * wd);
}

double rescale_lambda(std::size_t k, double b_l1, double lambda) {
  const double kk = static_cast<double>(k);
  return std::pow(kk * kk * b_l1, kk - 1.0) * lambda;
}

namespace {

// True when `a` is a strictly better profile than `b` under the ordering rule.
bool better_profile(const WidthProfile& a, const WidthProfile& b) {
  if (a.wd != b.wd) return a.wd < b.wd;
  return a.lead.norm_squared() > b.lead.norm_squared();
}

}  // namespace

WidthProfile best_ordering(const LaurentPoly& p, OrderingMode mode) {
  if (p.is_zero()) throw ZeroInput("best_ordering of the zero polynomial");
  if (mode == OrderingMode::kFixed) return width_profile(p);
  if (p.dim() > kMaxExhaustiveDim) {
    throw Error("exhaustive ordering search is limited to " + std::to_string(kMaxExhaustiveDim) + " variables");
  }
  Ordering order = identity_ordering(p.dim());
  WidthProfile best = width_profile(p, order);
  while (std::next_permutation(order.begin(), order.end())) {
    WidthProfile candidate = width_profile(p, order);
    if (better_profile(candidate, best)) best = std::move(candidate);
  }
  return best;
}

double BoundReport::bound_at(double lambda) const {
  if (is_step) {
    return static_cast<double>(params.k) *
           step_bound(params.lead_abs, rescale_lambda(params.k, params.b_l1, lambda));
  }
  return matrix_bound(params, lambda);
}

double BoundReport::display_bound_at(double lambda) const {
  return std::min(bound_at(lambda), static_cast<double>(params.k));
}

namespace {

BoundReport build_report(const PolyMatrix& a, MinorCertificate minor, WidthProfile profile) {
  BoundReport r;
  r.m = a.rows();
  r.n = a.cols();
  r.params.k = minor.k;
  r.params.d = a.dim();
  r.params.wd = profile.wd;
  r.params.lead_abs = profile.lead.abs_lower();
  r.params.b_l1 = minor.b_l1;
  r.alpha_lower = ns_lower_bound(r.params.d, r.params.wd);
  r.is_step = profile.wd == 0;
  if (!r.is_step) {
    const double k = static_cast<double>(r.params.k);
    const double dwd = static_cast<double>(r.params.d) * r.params.wd;
    r.exponent = 1.0 / dwd;
    r.coefficient = r.params.c * k * dwd *
                    std::pow(std::pow(k, 2.0 * k - 2.0) * std::pow(r.params.b_l1, k - 1.0) / r.params.lead_abs,
                             r.exponent);
  }
  r.minor = std::move(minor);
  r.profile = std::move(profile);
  return r;
}

// Larger alpha lower bound wins (infinite-type beats every finite value); ties
// go to the smaller coefficient, or for step reports the later threshold.
bool better_report(const BoundReport& a, const BoundReport& b) {
  if (a.is_step != b.is_step) return a.is_step;
  if (a.is_step) return a.params.lead_abs > b.params.lead_abs;
  if (*a.alpha_lower != *b.alpha_lower) return *a.alpha_lower > *b.alpha_lower;
  return a.coefficient < b.coefficient;
}

}  // namespace

BoundReport analyze(const PolyMatrix& a, const AnalyzeOptions& options) {
  if (a.is_zero()) throw ZeroInput("analyze needs a non-zero matrix");
  MinorCertificate first = max_nonvanishing_minor(a, options.search_cap);

  std::optional<BoundReport> best;
  auto consider = [&](MinorCertificate cert) {
    WidthProfile profile = best_ordering(cert.det, options.ordering);
    BoundReport candidate = build_report(a, std::move(cert), std::move(profile));
    if (!best || better_report(candidate, *best)) best = std::move(candidate);
  };

  if (options.minor == MinorMode::kBest) {
    for (auto& cert : nonvanishing_minors(a, first.k, options.search_cap)) consider(std::move(cert));
  } else {
    consider(std::move(first));
  }
  best->ordering_mode = options.ordering;
  best->minor_mode = options.minor;
  return std::move(*best);
}

std::string to_string(OrderingMode mode) { return mode == OrderingMode::kFixed ? "fixed" : "exhaustive"; }
std::string to_string(MinorMode mode) { return mode == MinorMode::kFirst ? "first" : "best"; }

}  // namespace nsbound
