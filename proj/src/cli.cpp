#include "nsbound/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nsbound/density.hpp"
#include "nsbound/errors.hpp"
#include "nsbound/parser.hpp"

namespace nsbound::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string set_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string ordering_text(const Ordering& order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + std::to_string(order[i] + 1);
  return out + ")";
}

std::string alpha_text(const std::optional<double>& alpha) {
  return alpha ? format_double(*alpha, 12) : std::string("infinite-type");
}

// Runs a command body, mapping library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailed;
  } catch (const ZeroInput& e) {
    err << "error: " << e.what() << '\n';
    return kZeroMatrix;
  } catch (const SearchCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kSearchCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOtherError;
  }
}

PolyMatrix load_matrix(const RunConfig& config) {
  const std::string text = read_file(config.input);
  try {
    return parse_matrix_or_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.span(), config.input + ":" + e.what());
  }
}

AnalyzeOptions analyze_options(const RunConfig& config) {
  return {config.ordering, config.minor, config.search_cap};
}

void print_report(const BoundReport& r, std::ostream& out) {
  out << "matrix: " << r.m << " x " << r.n << " over C[Z^" << r.params.d << "]\n";
  out << "minor search: " << to_string(r.minor_mode) << ", ordering search: " << to_string(r.ordering_mode) << '\n';
  out << "k = " << r.params.k << "  I = " << set_text(r.minor.row_set) << "  J = " << set_text(r.minor.col_set) << '\n';
  out << "det(B) = " << format_poly(r.minor.det) << '\n';
  out << "ordering = " << ordering_text(r.profile.order) << '\n';
  for (std::size_t i = 0; i < r.profile.tower.size(); ++i) {
    out << "  p_" << i << " = " << format_poly(r.profile.tower[i]);
    if (i < r.profile.widths.size()) out << "    w_" << i << " = " << r.profile.widths[i];
    out << '\n';
  }
  out << "wd(p) = " << r.params.wd << '\n';
  out << "lead(p) = " << to_string(r.profile.lead) << "  |lead(p)| >= " << format_double(r.params.lead_abs, 12) << '\n';
  out << "||B||_1 = " << format_double(r.params.b_l1, 12) << '\n';
  out << "F(0) = m - k = " << r.f_zero() << '\n';
  std::ostringstream summary;
  summary << "k=" << r.params.k << " wd=" << r.params.wd << " lead=" << to_string(r.profile.lead)
          << " ||B||_1=" << format_double(r.params.b_l1, 12) << ' ';
  if (r.is_step) {
    out << "bound: step; F - F(0) vanishes below |lead(p)| = " << format_double(r.params.lead_abs, 12)
        << " (argument rescaled by (k^2 ||B||_1)^(k-1))\n";
    out << "alpha lower bound: infinite-type\n";
    summary << "step at |c|=" << format_double(r.params.lead_abs, 12) << "; alpha: infinite-type";
  } else {
    out << "bound: F(lambda) - F(0) <= " << format_double(r.coefficient, 17) << " * lambda^"
        << format_double(r.exponent, 12) << '\n';
    out << "alpha lower bound: " << alpha_text(r.alpha_lower) << '\n';
    summary << "bound=" << format_double(r.coefficient, 6) << "*λ^" << format_double(r.exponent, 6)
            << " alpha≥" << alpha_text(r.alpha_lower);
  }
  out << summary.str() << '\n';
}

struct DensityRun {
  BoundReport report;
  DensityCurve curve;
  std::vector<double> bounds;
  double tolerance = 0.0;
};

// Analyse the input and estimate its spectral density on the configured grid.
// Returns nullopt (after reporting) when the cost guard refuses the grid.
std::optional<DensityRun> run_density(const RunConfig& config, std::ostream& err) {
  const PolyMatrix a = load_matrix(config);
  DensityRun run;
  run.report = analyze(a, analyze_options(config));

  if (config.grid < 2) throw Error("--grid must be at least 2");
  const double cost = config.lattice_points ? static_cast<double>(*config.lattice_points)
                                            : std::pow(static_cast<double>(config.grid), static_cast<double>(a.dim()));
  if (cost > config.max_grid_points) {
    err << "error: grid of " << format_double(cost, 6) << " points exceeds the cost guard of "
        << format_double(config.max_grid_points, 6) << '\n';
    return std::nullopt;
  }
  const TorusGrid grid = config.lattice_points ? TorusGrid::lattice(a.dim(), *config.lattice_points, config.seed)
                                               : TorusGrid::midpoint(a.dim(), config.grid);
  run.tolerance = grid.quadrature_tolerance(config.c_bnd);

  const double lead = run.report.params.lead_abs;
  const double lo = config.lambda_min.value_or(1e-4 * lead);
  const double hi = config.lambda_max.value_or(lead);
  const std::vector<double> lambdas = lambda_grid(lo, hi, config.points, config.log_spaced);

  const ParallelOptions par{config.workers};
  if (a.rows() == 1 && a.cols() == 1) {
    run.curve = scalar_density(a(0, 0), lambdas, grid, par);
  } else {
    run.curve = matrix_density(a, run.report.params.k, lambdas, grid, par);
  }
  run.curve.subject = config.input;
  for (double lambda : lambdas) run.bounds.push_back(config.bound_scale * run.report.bound_at(lambda));
  return run;
}

void write_csv(const DensityRun& run, std::ostream& out) {
  out << "lambda,f_hat,f_zero,bound,margin\r\n";
  const double f0 = static_cast<double>(run.curve.f_zero);
  for (std::size_t i = 0; i < run.curve.lambdas.size(); ++i) {
    const double margin = run.bounds[i] - (run.curve.estimates[i] - f0);
    out << format_double(run.curve.lambdas[i]) << ',' << format_double(run.curve.estimates[i]) << ','
        << run.curve.f_zero << ',' << format_double(run.bounds[i]) << ',' << format_double(margin) << "\r\n";
  }
}

}  // namespace

std::string format_double(double x, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

std::string reference_example_text() {
  return "# worked example: d = 2, m = 3, n = 2\n"
         "[[z1^3, 2*z1*z2^2 - 16],\n"
         " [-1, z2],\n"
         " [1, z1*z2]]\n";
}

PolyMatrix reference_example_matrix() { return parse_matrix(reference_example_text()); }

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolyMatrix a = load_matrix(config);
    const BoundReport report = analyze(a, analyze_options(config));
    print_report(report, out);
    return kOk;
  });
}

int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = run_density(config, err);
    if (!run) return static_cast<int>(kCostGuard);
    if (config.output.empty()) {
      write_csv(*run, out);
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw Error("cannot open output file '" + config.output + "'");
      write_csv(*run, file);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = run_density(config, err);
    if (!run) return static_cast<int>(kCostGuard);
    if (!config.output.empty()) {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw Error("cannot open output file '" + config.output + "'");
      write_csv(*run, file);
    }
    const BoundReport& r = run->report;
    const DensityCurve& curve = run->curve;

    double worst = INFINITY;
    double worst_lambda = 0.0;
    for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
      const double margin = run->bounds[i] - (curve.estimates[i] - static_cast<double>(curve.f_zero));
      if (margin < worst) {
        worst = margin;
        worst_lambda = curve.lambdas[i];
      }
    }
    const bool bound_ok = worst >= -run->tolerance;

    bool alpha_ok = true;
    std::string alpha_line;
    if (!r.alpha_lower) {
      alpha_line = "alpha: lower bound infinite-type (wd = 0); no finite fit to compare";
    } else {
      try {
        const auto [lo, hi] = default_alpha_window(curve);
        const AlphaFit fit = alpha_fit(curve, lo, hi);
        alpha_ok = fit.alpha_hat >= *r.alpha_lower - config.alpha_slack;
        alpha_line = "alpha_hat = " + format_double(fit.alpha_hat, 6) + " (r^2 = " + format_double(fit.r_squared, 6) +
                     ", " + std::to_string(fit.points_used) + " points in [" + format_double(lo, 6) + ", " +
                     format_double(hi, 6) + "]) vs lower bound " + alpha_text(r.alpha_lower);
      } catch (const InsufficientData& e) {
        alpha_line = "alpha_hat: no decay observed above F(0) at small lambda (spectral gap on this grid: " +
                     std::string(e.what()) + "); consistent with lower bound " + alpha_text(r.alpha_lower);
      }
    }

    out << "k=" << r.params.k << " d=" << r.params.d << " wd=" << r.params.wd << " F(0)=" << curve.f_zero
        << " samples=" << curve.samples << '\n';
    out << "worst margin = " << format_double(worst, 6) << " at lambda = " << format_double(worst_lambda, 6)
        << " (quadrature tolerance " << format_double(run->tolerance, 6) << ")\n";
    out << alpha_line << '\n';
    const bool ok = bound_ok && alpha_ok;
    out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
    return static_cast<int>(ok ? kOk : kVerifyFailed);
  });
}

int cmd_example(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolyMatrix a = reference_example_matrix();
    const BoundReport r = analyze(a);
    int failures = 0;
    auto check = [&](const std::string& name, const std::string& got, const std::string& expected, bool ok) {
      out << std::left << std::setw(12) << name << " = " << std::setw(34) << got << " expected " << expected
          << (ok ? "  [ok]" : "  [MISMATCH]") << '\n';
      if (!ok) ++failures;
    };

    out << "A = " << format_matrix(a) << "  (d = 2, m = 3, n = 2)\n";
    const LaurentPoly p = parse_poly("z1^3*z2 + 2*z1*z2^2 - 16");
    const LaurentPoly p1 = parse_poly("2*z1");
    const double coeff = 192.0 * std::sqrt(2.0) / std::sqrt(47.0);
    const double rel = std::abs(r.coefficient - coeff) / coeff;
    const double cross = r.coefficient * r.coefficient * 47.0 / (192.0 * 192.0 * 2.0);

    check("k", std::to_string(r.params.k), "2", r.params.k == 2);
    check("p = det(B)", format_poly(r.minor.det), "z1^3*z2 + 2*z1*z2^2 - 16", r.minor.det == p);
    check("p_1", format_poly(r.profile.tower.at(1)), "2*z1", r.profile.tower.at(1) == p1);
    check("wd(p)", std::to_string(r.params.wd), "2", r.params.wd == 2);
    check("lead(p)", to_string(r.profile.lead), "2", r.profile.lead == GaussianRational(2));
    check("||A||_1", format_double(l1_norm_matrix(a)), "18", l1_norm_matrix(a) == 18.0);
    check("||B||_1", format_double(r.params.b_l1), "18", r.params.b_l1 == 18.0);
    check("F(0)", std::to_string(r.f_zero()), "1 (m - k = 3 - 2)", r.f_zero() == 1);
    check("coefficient", format_double(r.coefficient), "192*sqrt(2)/sqrt(47) = " + format_double(coeff),
          rel <= 1e-12 && std::abs(cross - 1.0) <= 1e-12);
    check("exponent", format_double(r.exponent), "1/4", r.exponent == 0.25);
    check("alpha >=", alpha_text(r.alpha_lower), "1/4", r.alpha_lower && *r.alpha_lower == 0.25);
    out << "bound: F(lambda) - F(0) <= " << format_double(r.coefficient, 12) << " * lambda^(1/4)\n";
    out << (failures == 0 ? "example: all checks passed" : "example: " + std::to_string(failures) + " checks failed")
        << '\n';
    return static_cast<int>(failures == 0 ? kOk : kVerifyFailed);
  });
}

}  // namespace nsbound::cli
