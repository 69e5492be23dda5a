#include "nsbound/torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "nsbound/errors.hpp"

namespace nsbound {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TorusGrid TorusGrid::midpoint(std::size_t dim, std::uint64_t points_per_dim) {
  if (dim == 0) throw DimensionMismatch("torus grid needs at least one dimension");
  if (points_per_dim == 0) throw Error("grid needs at least one point per dimension");
  TorusGrid g;
  g.dim_ = dim;
  g.scheme_ = GridScheme::kMidpoint;
  g.per_dim_ = points_per_dim;
  g.total_ = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (g.total_ > UINT64_MAX / points_per_dim) throw Error("grid size overflows");
    g.total_ *= points_per_dim;
  }
  return g;
}

TorusGrid TorusGrid::lattice(std::size_t dim, std::uint64_t total_points, std::uint64_t seed) {
  if (dim == 0) throw DimensionMismatch("torus grid needs at least one dimension");
  if (total_points == 0) throw Error("grid needs at least one point");
  TorusGrid g;
  g.dim_ = dim;
  g.scheme_ = GridScheme::kLatticeShift;
  g.total_ = total_points;
  g.per_dim_ = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(total_points), 1.0 / dim)));

  // Korobov generator (1, a, a^2, ...) mod M with a near M / golden ratio, nudged to be coprime with M.
  std::uint64_t a = static_cast<std::uint64_t>(static_cast<double>(total_points) / std::numbers::phi);
  if (a == 0) a = 1;
  while (std::gcd(a, total_points) != 1) ++a;
  g.generator_.resize(dim);
  unsigned __int128 power = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    g.generator_[i] = static_cast<std::uint64_t>(power % total_points);
    power = (power * a) % total_points;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  g.shift_.resize(dim);
  for (double& s : g.shift_) s = unit(rng);
  return g;
}

void TorusGrid::point(std::uint64_t index, std::span<double> out) const {
  if (scheme_ == GridScheme::kMidpoint) {
    const double step = kTwoPi / static_cast<double>(per_dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      out[i] = (static_cast<double>(index % per_dim_) + 0.5) * step;
      index /= per_dim_;
    }
    return;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto num = static_cast<std::uint64_t>((static_cast<unsigned __int128>(index) * generator_[i]) % total_);
    double frac = static_cast<double>(num) / static_cast<double>(total_) + shift_[i];
    frac -= std::floor(frac);
    out[i] = frac * kTwoPi;
  }
}

double TorusGrid::quadrature_tolerance(double c_bnd) const {
  return c_bnd * static_cast<double>(dim_) / static_cast<double>(per_dim_);
}

}  // namespace nsbound
