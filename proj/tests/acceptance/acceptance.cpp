// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsbound/bounds.hpp"
#include "nsbound/density.hpp"
#include "nsbound/hermitian.hpp"
#include "nsbound/parser.hpp"
#include "oracles.hpp"

using namespace nsbound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-check failures; the first few messages are kept for the report.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_};
    return {false, std::to_string(failures_) + " failed check(s): " + messages_};
  }

 private:
  int failures_ = 0;
  std::string messages_;
  std::string notes_;
};

std::string num(double x, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(NSBOUND_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const double kExampleCoefficient = 192.0 * std::sqrt(2.0) / std::sqrt(47.0);

// The exact symbolic layer of the worked example, checked on an analysed matrix.
void check_example_report(const PolyMatrix& a, Checks& c) {
  const BoundReport r = analyze(a);
  c.expect(r.params.k == 2, "k != 2");
  c.expect(r.minor.det == parse_poly("z1^3*z2 + 2*z1*z2^2 - 16"), "det(B) mismatch");
  c.expect(r.profile.tower.size() == 3 && r.profile.tower[1] == parse_poly("2*z1"), "p_1 != 2*z1");
  c.expect(r.params.wd == 2, "wd != 2");
  c.expect(r.profile.lead == GaussianRational(2), "lead != 2");
  c.expect(l1_norm_matrix(a) == 18.0, "||A||_1 != 18");
  c.expect(r.params.b_l1 == 18.0, "||B||_1 != 18");
  c.expect(r.alpha_lower && *r.alpha_lower == 0.25, "alpha lower bound != 1/4");
  const double rel = std::abs(r.coefficient - kExampleCoefficient) / kExampleCoefficient;
  const double cross = r.coefficient * r.coefficient * 47.0 / (192.0 * 192.0 * 2.0);
  c.expect(rel <= 1e-12, "coefficient relative error " + num(rel));
  c.expect(std::abs(cross - 1.0) <= 1e-12, "cross-check " + num(cross, 17));
  c.expect(r.f_zero() == 1, "F(0) != 1");
}

Outcome ac1_example() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const int code = run_binary("example");
  const double elapsed = seconds_since(start);
  c.expect(code == 0, "nsbound example exited " + std::to_string(code));
  c.expect(elapsed < 1.0, "runtime " + num(elapsed) + " s");
  check_example_report(parse_matrix(std::string("[[z1^3, 2*z1*z2^2 - 16], [-1, z2], [1, z1*z2]]")), c);
  c.note("runtime " + num(elapsed, 3) + " s");
  return c.outcome();
}

Outcome ac2_constant() {
  Checks c;
  const double k = universal_constant();
  c.expect(std::abs(k * k * 47.0 - 192.0) <= 1e-12 * 192.0, "C^2 * 47 != 192");
  c.expect(k >= 2.0212934 && k <= 2.0212936, "C out of range: " + num(k, 12));
  c.note("C = " + num(k, 12));
  return c.outcome();
}

Outcome ac3_linear_factors() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  constexpr std::uint64_t kN = 1'000'000;
  const TorusGrid grid = TorusGrid::midpoint(1, kN);
  const auto lambdas = lambda_grid(3.0 / 64.0, 3.0, 64, false);
  const double cst = universal_constant();
  double worst = 0.0;
  for (const auto& [text, r] : std::vector<std::pair<const char*, double>>{{"z1 - 1/2", 0.5}, {"z1 - 1", 1.0}, {"z1 - 2", 2.0}}) {
    const DensityCurve curve = scalar_density(parse_poly(text), lambdas, grid);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double err = std::abs(curve.estimates[i] - oracle::circle_shift_measure(r, lambdas[i]));
      worst = std::max(worst, err);
      c.expect(err <= 2e-3, std::string(text) + " off oracle by " + num(err) + " at " + num(lambdas[i]));
      c.expect(curve.estimates[i] <= cst * lambdas[i] + 4.0 / kN, std::string(text) + " above C*lambda");
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "runtime " + num(elapsed) + " s");
  c.note("max |F-hat - oracle| = " + num(worst) + ", runtime " + num(elapsed, 3) + " s");
  return c.outcome();
}

Outcome ac4_step() {
  Checks c;
  const LaurentPoly p = parse_poly("5*z1^2*z2^-1");
  c.expect(width_profile(p).wd == 0, "wd != 0");
  std::vector<double> lambdas{0.1, 1.0, 4.0, 4.999, std::nextafter(5.0, 0.0), 5.0, 5.001, 7.0, 100.0};
  for (std::uint64_t n : {2, 3, 10, 97, 400}) {
    const DensityCurve curve = scalar_density(p, lambdas, TorusGrid::midpoint(2, n));
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      c.expect(curve.estimates[i] == (lambdas[i] < 5.0 ? 0.0 : 1.0), "N=" + std::to_string(n) + " lambda=" + num(lambdas[i], 17));
    }
  }
  const DensityCurve lat = scalar_density(p, lambdas, TorusGrid::lattice(2, 4099, 5));
  for (std::size_t i = 0; i < lambdas.size(); ++i) c.expect(lat.estimates[i] == (lambdas[i] < 5.0 ? 0.0 : 1.0), "lattice grid");
  return c.outcome();
}

Outcome ac5_scaling() {
  Checks c;
  std::mt19937_64 rng(505);
  int pairs = 0;
  while (pairs < 100) {
    const std::size_t dim = 1 + pairs % 2;
    const LaurentPoly p = oracle::random_nonzero_poly(rng, dim, 5, 3);
    const GaussianRational scale = oracle::random_rational(rng, 7, 5, true);
    if (scale.is_zero()) continue;
    ++pairs;
    const TorusGrid grid = dim == 1 ? TorusGrid::midpoint(1, 20000) : TorusGrid::midpoint(2, 150);
    const SortedSamples base = scalar_samples(p, grid);
    const SortedSamples scaled = scalar_samples(scale * p, grid);
    const double mod = std::abs(scale.to_complex());
    for (double lambda : lambda_grid(1e-3, 50.0, 32)) {
      c.expect(scaled.count_at_most(lambda) == base.count_at_most(lambda / mod), "count mismatch for pair " + std::to_string(pairs));
    }
  }
  c.note("100 pairs x 32 lambdas");
  return c.outcome();
}

Outcome ac6_product() {
  Checks c;
  std::mt19937_64 rng(606);
  constexpr std::uint64_t kN = 100'000;
  const TorusGrid grid = TorusGrid::midpoint(1, kN);
  const auto lambdas = lambda_grid(1e-4, 10.0, 64);
  double worst = -1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly q1 = oracle::random_nonzero_poly(rng, 1, 4, 3);
    const LaurentPoly q2 = oracle::random_nonzero_poly(rng, 1, 4, 3);
    const ViolationReport r = product_inequality_check(q1, q2, 0.5, lambdas, grid);
    worst = std::max(worst, r.max_violation);
    c.expect(r.tolerance == 4.0 / kN, "tolerance is not 4d/N");
    c.expect(r.consistent(), "pair " + std::to_string(trial) + " violates by " + num(r.max_violation));
  }
  c.note("worst lhs - rhs = " + num(worst));
  return c.outcome();
}

PolyMatrix random_reduction_matrix(std::mt19937_64& rng) {
  const std::vector<GaussianRational> coeffs{1, -1, 2, -2, GaussianRational(0, 1), GaussianRational(0, -1)};
  std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
  std::uniform_int_distribution<int> terms(1, 2);
  std::uniform_int_distribution<int> exp(-2, 2);
  while (true) {
    PolyMatrix b(2, 2, 1);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const int n = terms(rng);
        for (int t = 0; t < n; ++t) b(i, j).add_term({exp(rng)}, coeffs[pick(rng)]);
      }
    }
    if (!determinant(b).is_zero()) return b;
  }
}

Outcome ac7_minor_reduction() {
  Checks c;
  std::mt19937_64 rng(707);
  constexpr std::uint64_t kN = 100'000;
  const TorusGrid grid = TorusGrid::midpoint(1, kN);
  const auto lambdas = lambda_grid(1e-4, 10.0, 64);
  double worst = -10.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PolyMatrix b = random_reduction_matrix(rng);
    const ViolationReport r = lemma31_check(b, lambdas, grid);
    worst = std::max(worst, r.max_violation);
    c.expect(r.consistent(), "matrix " + format_matrix(b) + " violates by " + num(r.max_violation));
  }
  c.note("worst lhs - rhs = " + num(worst));
  return c.outcome();
}

Outcome ac8_tightness() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const TorusGrid grid = TorusGrid::midpoint(1, 1'000'000);
  const auto lambdas = lambda_grid(1e-5, 1e-2, 64);
  for (int r = 1; r <= 3; ++r) {
    const LaurentPoly p = parse_poly("z1 - 1").pow(static_cast<unsigned>(r));
    const DensityCurve curve = scalar_density(p, lambdas, grid);
    const AlphaFit fit = alpha_fit(curve, 1e-5, 1e-2);
    const double target = 1.0 / r;
    c.expect(std::abs(fit.alpha_hat - target) <= 0.05, "r=" + std::to_string(r) + " slope " + num(fit.alpha_hat));
    c.expect(fit.r_squared >= 0.99, "r=" + std::to_string(r) + " r^2 " + num(fit.r_squared));
    const auto lower = ns_lower_bound(1, width_profile(p).wd);
    c.expect(lower && *lower == target, "lower bound != 1/r for r=" + std::to_string(r));
    c.note("r=" + std::to_string(r) + ": alpha_hat " + num(fit.alpha_hat, 4) + " (r^2 " + num(fit.r_squared, 5) + ")");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, "runtime " + num(elapsed) + " s");
  c.note("runtime " + num(elapsed, 3) + " s");
  return c.outcome();
}

Outcome ac9_main_bound() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const auto csv = std::filesystem::temp_directory_path() / "nsbound_acceptance_example.csv";
  constexpr double kN = 1500;
  const int code = run_binary(std::string("verify ") + NSBOUND_DATA_DIR +
                              "/example.mat --grid 1500 --lambda-min 1e-4 --lambda-max 1 --points 64 --out " + csv.string());
  const double elapsed = seconds_since(start);
  c.expect(code == 0, "nsbound verify exited " + std::to_string(code));

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  double worst = 1e300;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(fields, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() != 5) {
      c.expect(false, "malformed CSV row");
      continue;
    }
    ++rows;
    const double lambda = v[0];
    const double f_hat = v[1];
    c.expect(v[2] == 1.0, "f_zero != 1");
    const double bound = kExampleCoefficient * std::pow(lambda, 0.25);
    const double margin = bound + 2.0 * 4.0 / kN - (f_hat - 1.0);
    worst = std::min(worst, margin);
    c.expect(margin >= 0.0, "bound violated at lambda " + num(lambda));
  }
  c.expect(rows == 64, "expected 64 lambda rows, got " + std::to_string(rows));
  c.expect(elapsed < 300.0, "runtime " + num(elapsed) + " s");
  c.note("2.25e6 nodes, smallest slack " + num(worst) + ", runtime " + num(elapsed, 3) + " s");
  std::filesystem::remove(csv);
  return c.outcome();
}

Outcome ac10_determinants() {
  Checks c;
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyMatrix b = oracle::random_matrix(rng, 4, 4, 2, 2, 2);
    c.expect(determinant_bareiss(b) == determinant_cofactor(b), "Bareiss != cofactor on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const PolyMatrix a = oracle::random_matrix(rng, 3, 3, 2, 2, 2);
    const PolyMatrix b = oracle::random_matrix(rng, 3, 3, 2, 2, 2);
    c.expect(determinant(a * b) == determinant(a) * determinant(b), "det(AB) != det(A)det(B)");
  }
  return c.outcome();
}

Outcome ac11_eigensolver() {
  Checks c;
  std::mt19937_64 rng(1111);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst_trace = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const std::size_t n = 1 + (trial / 6) % 6;
    std::vector<std::complex<double>> a(m * n);
    for (auto& x : a) x = {g(rng), g(rng)};
    ComplexMatrix h(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::complex<double> s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * std::conj(a[j * n + l]);
        h(i, j) = s;
      }
    }
    const HermitianSpectrum s = jacobi_eigenvalues(h);
    double sum = 0.0;
    for (double v : s.eigenvalues) sum += v;
    const double trace = h.trace_real();
    const double rel = std::abs(sum - trace) / trace;
    worst_trace = std::max(worst_trace, rel);
    c.expect(rel <= 1e-10, "trace mismatch " + num(rel));
    if (m == 2) {
      const auto [lo, hi] = oracle::hermitian2_eigenvalues(h(0, 0).real(), h(0, 1), h(1, 1).real());
      c.expect(std::abs(s.eigenvalues[0] - lo) <= 1e-10 * (1.0 + trace), "2x2 low eigenvalue");
      c.expect(std::abs(s.eigenvalues[1] - hi) <= 1e-10 * (1.0 + trace), "2x2 high eigenvalue");
    }
  }
  c.note("worst relative trace error " + num(worst_trace));
  return c.outcome();
}

Outcome ac12_parser() {
  Checks c;
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const LaurentPoly p = oracle::random_poly(rng, dim, 10, 9, 10000, 10000, true);
    c.expect(parse_poly(format_poly(p), dim) == p, "round trip failed: " + format_poly(p));
  }
  std::ifstream in(std::string(NSBOUND_DATA_DIR) + "/example.mat");
  std::stringstream text;
  text << in.rdbuf();
  check_example_report(parse_matrix(text.str()), c);
  return c.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1  worked example, exact symbolic layer", ac1_example},
      {"AC2  universal constant", ac2_constant},
      {"AC3  linear factors vs arc-measure oracle", ac3_linear_factors},
      {"AC4  width-zero step", ac4_step},
      {"AC5  scaling identity with identical counts", ac5_scaling},
      {"AC6  product inequality", ac6_product},
      {"AC7  minor reduction inequality (2x2)", ac7_minor_reduction},
      {"AC8  Novikov-Shubin tightness for (z-1)^r", ac8_tightness},
      {"AC9  main bound on the worked example", ac9_main_bound},
      {"AC10 determinant oracles", ac10_determinants},
      {"AC11 Jacobi eigensolver", ac11_eigensolver},
      {"AC12 parser round trip and example file", ac12_parser},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << (o.detail.empty() ? "" : " -- " + o.detail) << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
