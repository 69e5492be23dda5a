#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nsbound/laurent_poly.hpp"

namespace nsbound {

/// p written as sum_{n = n_minus}^{n_plus} coeffs[n] * z_var^n, where the
/// coefficients live in the ring without z_var.
struct VariableSplit {
  int n_minus = 0;
  int n_plus = 0;
  std::map<int, LaurentPoly> coeffs;

  int width() const { return n_plus - n_minus; }
  /// The top coefficient q+(p).
  const LaurentPoly& top() const { return coeffs.at(n_plus); }
};

/// Collect p by powers of the variable at position `var` (0-based).
VariableSplit q_plus_decompose(const LaurentPoly& p, std::size_t var);

/// Variable elimination order. `order[j]` is a 0-based variable index; the
/// last entry is split off first.
using Ordering = std::vector<std::size_t>;

Ordering identity_ordering(std::size_t dim);

/// Width and leading coefficient of p for one ordering of the variables.
struct WidthProfile {
  Ordering order;
  std::vector<LaurentPoly> tower;  // p_0 = p, ..., p_d (a constant)
  std::vector<int> widths;         // w_0, ..., w_{d-1}
  int wd = 0;
  GaussianRational lead;
};

WidthProfile width_profile(const LaurentPoly& p, const Ordering& order);
WidthProfile width_profile(const LaurentPoly& p);

}  // namespace nsbound
