#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nsbound/errors.hpp"
#include "nsbound/laurent_poly.hpp"
#include "nsbound/poly_matrix.hpp"

namespace nsbound {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, end exclusive
  std::size_t end = 0;
  std::size_t line = 1;  // 1-based, of `start`
  std::size_t column = 1;
};

enum class ParseErrorKind { kUnexpectedToken, kBadExponent, kDimensionMismatch, kBadNumber, kUnbalancedBracket };

std::string to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
};

/// Parses one Laurent polynomial such as "z1^3*z2 + 2*z1*z2^2 - 16".
///
/// Without `expected_dim` the rank is the largest variable index seen (at
/// least 1). With it, smaller indices embed and larger ones are an error.
LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> expected_dim = std::nullopt);

/// Parses "[[a, b], [c, d]]". The rank is the largest variable index over all entries.
PolyMatrix parse_matrix(std::string_view text);

/// A polynomial document is read as a 1 x 1 matrix.
PolyMatrix parse_matrix_or_poly(std::string_view text);

/// Canonical text: terms in descending ExponentOrder, `a/b` rationals, `i`
/// for the imaginary unit, `*` between factors, unit coefficients and zero
/// exponents elided.
std::string format_poly(const LaurentPoly& p);
std::string format_matrix(const PolyMatrix& a);

}  // namespace nsbound
