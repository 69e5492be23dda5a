#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nsbound {

/// A point of the d-torus given by angles phi_j, i.e. z_j = exp(i * phi_j).
struct TorusPoint {
  std::vector<double> angles;
};

enum class GridScheme { kMidpoint, kLatticeShift };

/// Equal-weight quadrature nodes for the Haar measure on T^d.
///
/// Midpoint: the product of 1-d midpoint rules, N^d nodes.
/// Lattice-shift: a rank-1 Korobov lattice of M nodes with a random shift
/// drawn from `seed`; meant for d >= 3 where N^d is too large.
class TorusGrid {
 public:
  static TorusGrid midpoint(std::size_t dim, std::uint64_t points_per_dim);
  static TorusGrid lattice(std::size_t dim, std::uint64_t total_points, std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  GridScheme scheme() const { return scheme_; }
  std::uint64_t points_per_dim() const { return per_dim_; }
  std::uint64_t size() const { return total_; }

  /// Writes the angles of node `index` into `out` (length dim()).
  void point(std::uint64_t index, std::span<double> out) const;

  /// Boundary-crossing budget c_bnd * d / N. For lattice grids N is taken as M^(1/d).
  double quadrature_tolerance(double c_bnd = 4.0) const;

 private:
  TorusGrid() = default;

  std::size_t dim_ = 1;
  GridScheme scheme_ = GridScheme::kMidpoint;
  std::uint64_t per_dim_ = 1;
  std::uint64_t total_ = 1;
  std::vector<std::uint64_t> generator_;
  std::vector<double> shift_;
};

}  // namespace nsbound
