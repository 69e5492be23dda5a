#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsbound/laurent_poly.hpp"

namespace nsbound {

/// Dense m x n matrix over the Laurent ring in d variables.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dim);
  /// Row-major construction; every entry must have the same rank and rows must agree in length.
  static PolyMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows);
  static PolyMatrix identity(std::size_t size, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return dim_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& row_set, const std::vector<std::size_t>& col_set) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t dim_;
  std::vector<LaurentPoly> entries_;
};

/// Determinant by Laplace expansion along the first row.
LaurentPoly determinant_cofactor(const PolyMatrix& b);
/// Fraction-free Bareiss elimination with exact Laurent division.
LaurentPoly determinant_bareiss(const PolyMatrix& b);
/// Cofactor expansion up to 3 x 3, Bareiss beyond.
LaurentPoly determinant(const PolyMatrix& b);

/// Determinant of the submatrix on rows I and columns J (0-based indices).
LaurentPoly minor(const PolyMatrix& a, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set);

/// A square submatrix of maximal size with non-zero determinant.
struct MinorCertificate {
  std::vector<std::size_t> row_set;  // 0-based, ascending
  std::vector<std::size_t> col_set;
  std::size_t k = 0;
  LaurentPoly det;
  double b_l1 = 0.0;
};

inline constexpr std::uint64_t kDefaultMinorSearchCap = 1'000'000;

/// The first non-vanishing minor of maximal size, scanning sizes from
/// min(m, n) down and index sets lexicographically. Throws ZeroInput for the
/// zero matrix and SearchCapExceeded when a size level has more than `cap`
/// candidate pairs.
MinorCertificate max_nonvanishing_minor(const PolyMatrix& a, std::uint64_t cap = kDefaultMinorSearchCap);

/// Every non-vanishing minor of size k, in lexicographic order of (I, J).
std::vector<MinorCertificate> nonvanishing_minors(const PolyMatrix& a, std::size_t k,
                                                  std::uint64_t cap = kDefaultMinorSearchCap);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// max over entries of their L1 norms.
double l1_norm_matrix(const PolyMatrix& a);
/// m * n * ||A||_1, an upper bound on the operator norm of right multiplication by A.
double op_norm_upper(const PolyMatrix& a);
/// Transpose with the involution applied entrywise.
PolyMatrix star_transpose(const PolyMatrix& a);

}  // namespace nsbound
