#include "nsbound/width.hpp"

#include <algorithm>
#include <numeric>

#include "nsbound/errors.hpp"

namespace nsbound {

VariableSplit q_plus_decompose(const LaurentPoly& p, std::size_t var) {
  if (p.is_zero()) throw ZeroInput("q_plus_decompose of the zero polynomial");
  if (var >= p.dim()) throw DimensionMismatch("variable index out of range");

  VariableSplit split;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest;
    rest.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var) rest.push_back(e[i]);
    }
    auto [it, inserted] = split.coeffs.try_emplace(e[var], LaurentPoly(p.dim() - 1));
    it->second.add_term(rest, c);
  }
  split.n_minus = split.coeffs.begin()->first;
  split.n_plus = split.coeffs.rbegin()->first;
  return split;
}

Ordering identity_ordering(std::size_t dim) {
  Ordering order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

WidthProfile width_profile(const LaurentPoly& p, const Ordering& order) {
  if (p.is_zero()) throw ZeroInput("width of the zero polynomial");
  if (order.size() != p.dim()) throw DimensionMismatch("ordering length does not match polynomial rank");
  {
    Ordering sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_ordering(p.dim())) throw Error("ordering is not a permutation");
  }

  WidthProfile profile;
  profile.order = order;
  profile.tower.push_back(p);

  // remaining[j] is the original index of the j-th variable of the current tower entry.
  std::vector<std::size_t> remaining = identity_ordering(p.dim());
  for (std::size_t step = 0; step < p.dim(); ++step) {
    const std::size_t var = order[p.dim() - 1 - step];
    const auto pos = static_cast<std::size_t>(std::find(remaining.begin(), remaining.end(), var) - remaining.begin());
    VariableSplit split = q_plus_decompose(profile.tower.back(), pos);
    profile.widths.push_back(split.width());
    profile.tower.push_back(split.top());
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  profile.wd = profile.widths.empty() ? 0 : *std::max_element(profile.widths.begin(), profile.widths.end());
  profile.lead = profile.tower.back().coefficient(Exponent{});
  return profile;
}

WidthProfile width_profile(const LaurentPoly& p) { return width_profile(p, identity_ordering(p.dim())); }

}  // namespace nsbound
