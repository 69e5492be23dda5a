#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nsbound/bounds.hpp"
#include "nsbound/poly_matrix.hpp"

namespace nsbound::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseFailed = 2,
  kZeroMatrix = 3,
  kSearchCap = 4,
  kCostGuard = 5,
  kOtherError = 6,
};

struct RunConfig {
  std::string input;
  std::uint64_t grid = 1000;
  std::optional<std::uint64_t> lattice_points;  // rank-1 lattice instead of the midpoint grid
  std::uint64_t seed = 1;
  std::optional<double> lambda_min;  // default 1e-4 * |lead|
  std::optional<double> lambda_max;  // default |lead|
  std::size_t points = 64;
  bool log_spaced = true;
  OrderingMode ordering = OrderingMode::kFixed;
  MinorMode minor = MinorMode::kFirst;
  unsigned workers = 0;
  std::string output;  // CSV destination; empty means the data stream
  double bound_scale = 1.0;
  double c_bnd = 4.0;
  double alpha_slack = 0.05;
  double max_grid_points = 1e8;
  std::uint64_t search_cap = kDefaultMinorSearchCap;
};

/// The worked 3 x 2 example over C[Z^2]: rows (z1^3, 2 z1 z2^2 - 16), (-1, z2), (1, z1 z2).
PolyMatrix reference_example_matrix();
std::string reference_example_text();

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_example(std::ostream& out, std::ostream& err);

/// Shortest round-trip text for a double, 17 significant digits at most.
std::string format_double(double x, int precision = 17);

}  // namespace nsbound::cli
