#include <doctest.h>

#include <cmath>
#include <random>

#include "nsbound/bounds.hpp"
#include "nsbound/cli.hpp"
#include "nsbound/errors.hpp"
#include "nsbound/parser.hpp"
#include "oracles.hpp"

using namespace nsbound;

namespace {

const double kExampleCoefficient = 192.0 * std::sqrt(2.0) / std::sqrt(47.0);

BoundParameters example_params() {
  BoundParameters p;
  p.k = 2;
  p.d = 2;
  p.wd = 2;
  p.lead_abs = 2.0;
  p.b_l1 = 18.0;
  return p;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("universal constant") {
  const double c = universal_constant();
  CHECK(rel_close(c * c * 47.0, 192.0, 1e-12));
  // sqrt(192/47) to 20 digits
  CHECK(rel_close(c, 2.0211646105596454868, 1e-15));
}

TEST_CASE("cosine inequality behind the constant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(-0.5, 0.5);
  for (int i = 0; i < 100000; ++i) {
    const double v = x(rng);
    REQUIRE(47.0 / 48.0 * v * v <= 2.0 - 2.0 * std::cos(v) + 1e-17);
  }
}

TEST_CASE("matrix_bound") {
  for (double lambda : {1e-6, 1e-3, 0.5, 1.0, 7.0}) {
    CHECK(rel_close(matrix_bound(example_params(), lambda), kExampleCoefficient * std::pow(lambda, 0.25), 1e-12));
  }
  CHECK(matrix_bound(example_params(), 0.0) == 0.0);
  BoundParameters unit;
  unit.k = 1;
  unit.d = 1;
  unit.wd = 1;
  unit.lead_abs = 1.0;
  unit.b_l1 = 123.0;
  CHECK(rel_close(matrix_bound(unit, 1.0), 2.0211646105596454868, 1e-14));
  unit.wd = 0;
  CHECK_THROWS(matrix_bound(unit, 1.0));
}

TEST_CASE("step_bound") {
  CHECK(step_bound(5.0, 4.9) == 0.0);
  CHECK(step_bound(5.0, 5.0) == 1.0);
  CHECK(step_bound(1.0, 0.0) == 0.0);
}

TEST_CASE("scalar_bound") {
  const double c = universal_constant();
  CHECK(rel_close(scalar_bound(1, 1, 1.0, 0.3), c * 0.3, 1e-14));
  CHECK(rel_close(scalar_bound(1, 3, 1.0, 0.3), c * 3.0 * std::cbrt(0.3), 1e-14));
  CHECK(rel_close(scalar_bound(2, 3, 4.5, 4.5), c * 6.0, 1e-14));
  CHECK_THROWS(scalar_bound(1, 0, 1.0, 1.0));
}

TEST_CASE("ns_lower_bound") {
  CHECK(ns_lower_bound(2, 2) == 0.25);
  CHECK(ns_lower_bound(1, 1) == 1.0);
  CHECK_FALSE(ns_lower_bound(3, 0).has_value());
}

TEST_CASE("rescale_lambda") {
  CHECK(rescale_lambda(1, 99.0, 0.37) == 0.37);
  CHECK(rescale_lambda(2, 18.0, 0.5) == 36.0);
  CHECK(rescale_lambda(2, 1.0, 1.0) == 4.0);
}

TEST_CASE("best_ordering") {
  const LaurentPoly p = parse_poly("z1^3*z2 + 2*z1*z2^2 - 16");
  const WidthProfile fixed = best_ordering(p, OrderingMode::kFixed);
  const WidthProfile best = best_ordering(p, OrderingMode::kExhaustive);
  CHECK(fixed.wd == 2);
  CHECK(best.wd == 2);
  CHECK(best.order == Ordering{0, 1});
  CHECK(width_profile(p, {1, 0}).wd == 3);

  // Exhaustive search can beat the identity order: width 4 in z2, width 1 in z1.
  const LaurentPoly q = parse_poly("z1*z2^4 + z2^4 + 3");
  CHECK(best_ordering(q, OrderingMode::kFixed).wd == 4);
  const WidthProfile q_best = best_ordering(q, OrderingMode::kExhaustive);
  CHECK(q_best.wd == 1);
  CHECK(q_best.order == Ordering{1, 0});

  CHECK(best_ordering(parse_poly("4*z1^2*z2^-1*z3", 3), OrderingMode::kExhaustive).wd == 0);
  CHECK(best_ordering(parse_poly("z1 - 3", 1), OrderingMode::kExhaustive).order == Ordering{0});
  CHECK_THROWS_AS(best_ordering(LaurentPoly(2), OrderingMode::kFixed), ZeroInput);
  CHECK_THROWS(best_ordering(parse_poly("z9", 9), OrderingMode::kExhaustive));
}

TEST_CASE("analyze") {
  SUBCASE("worked example") {
    const BoundReport r = analyze(cli::reference_example_matrix());
    CHECK(r.params.k == 2);
    CHECK(r.params.wd == 2);
    CHECK(r.params.lead_abs == 2.0);
    CHECK(r.params.b_l1 == 18.0);
    CHECK(rel_close(r.coefficient, kExampleCoefficient, 1e-12));
    CHECK(rel_close(r.coefficient * r.coefficient * 47.0 / (192.0 * 192.0 * 2.0), 1.0, 1e-12));
    CHECK(r.exponent == 0.25);
    CHECK(r.alpha_lower == 0.25);
    CHECK_FALSE(r.is_step);
    CHECK(r.f_zero() == 1);
    CHECK(rel_close(r.bound_at(0.01), kExampleCoefficient * std::pow(0.01, 0.25), 1e-12));
    CHECK(r.display_bound_at(1.0) == 2.0);
  }
  SUBCASE("monomial") {
    const BoundReport r = analyze(parse_matrix("[[(-3/2)*z1^4]]"));
    CHECK(r.is_step);
    CHECK(r.params.lead_abs == 1.5);
    CHECK_FALSE(r.alpha_lower.has_value());
    CHECK(r.bound_at(1.49) == 0.0);
    CHECK(r.bound_at(1.5) == 1.0);
  }
  SUBCASE("identity") {
    const BoundReport r = analyze(PolyMatrix::identity(2, 1));
    CHECK(r.params.k == 2);
    CHECK(r.minor.det == LaurentPoly::constant(1, 1));
    CHECK(r.is_step);
    CHECK(r.params.lead_abs == 1.0);
  }
  SUBCASE("best minor improves on the first") {
    // First 1x1 minor z1^3 - 1 has width 3; the constant entry 5 has width 0.
    const PolyMatrix a = parse_matrix("[[z1^3 - 1, 2*z1^3 - 2], [5*z1, 10*z1]]");
    const BoundReport first = analyze(a);
    CHECK(first.params.k == 1);
    CHECK(first.params.wd == 3);
    const BoundReport best = analyze(a, {OrderingMode::kFixed, MinorMode::kBest});
    CHECK(best.params.wd == 0);
    CHECK(best.params.lead_abs == 10.0);
    CHECK(best.minor_mode == MinorMode::kBest);
  }
  CHECK_THROWS_AS(analyze(parse_matrix("[[0, 0], [0, 0]]")), ZeroInput);
}

TEST_CASE("property: matrix bound is k times the scalar bound at the rescaled argument") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(1, 4);
  std::uniform_real_distribution<double> pos(0.1, 20.0);
  std::uniform_real_distribution<double> log_lambda(-8.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    BoundParameters p;
    p.k = static_cast<std::size_t>(small(rng));
    p.d = static_cast<std::size_t>(small(rng));
    p.wd = small(rng);
    p.lead_abs = pos(rng);
    p.b_l1 = pos(rng);
    const double lambda = std::pow(10.0, log_lambda(rng));
    const double direct = matrix_bound(p, lambda);
    const double via_scalar =
        static_cast<double>(p.k) * scalar_bound(p.d, p.wd, p.lead_abs, rescale_lambda(p.k, p.b_l1, lambda));
    REQUIRE(rel_close(direct, via_scalar, 1e-12));
    REQUIRE(matrix_bound(p, lambda * 1.5) >= direct);
  }
}

TEST_CASE("property: scaling the matrix changes lead but not the exponent") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyMatrix a = oracle::random_matrix(rng, 2, 2, 2, 3, 2);
    if (a.is_zero()) continue;
    const BoundReport r = analyze(a);
    PolyMatrix scaled = a;
    const GaussianRational c(3, -4);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = c * a(i, j);
    }
    const BoundReport s = analyze(scaled);
    REQUIRE(s.params.wd == r.params.wd);
    REQUIRE(s.exponent == r.exponent);
    // det scales by c^k, so |lead| scales by 5^k.
    REQUIRE(rel_close(s.params.lead_abs, r.params.lead_abs * std::pow(5.0, static_cast<double>(r.params.k)), 1e-14));
  }
}

TEST_CASE("property: exhaustive ordering never worse than fixed") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = oracle::random_nonzero_poly(rng, 1 + trial % 3, 6, 4);
    REQUIRE(best_ordering(p, OrderingMode::kExhaustive).wd <= best_ordering(p, OrderingMode::kFixed).wd);
  }
}
