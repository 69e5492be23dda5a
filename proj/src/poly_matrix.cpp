#include "nsbound/poly_matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nsbound/errors.hpp"

namespace nsbound {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dim)
    : rows_(rows), cols_(cols), dim_(dim), entries_(rows * cols, LaurentPoly(dim)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix must have at least one row and one column");
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionMismatch("matrix must have at least one entry");
  PolyMatrix m(rows.size(), rows.front().size(), rows.front().front().dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].dim() != m.dim_) throw DimensionMismatch("matrix entries have different ranks");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t dim) {
  PolyMatrix m(size, size, dim);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = LaurentPoly::constant(dim, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_set,
                                 const std::vector<std::size_t>& col_set) const {
  if (row_set.empty() || col_set.empty()) throw DimensionMismatch("empty index set");
  PolyMatrix s(row_set.size(), col_set.size(), dim_);
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      if (row_set[i] >= rows_ || col_set[j] >= cols_) throw DimensionMismatch("submatrix index out of range");
      s(i, j) = (*this)(row_set[i], col_set[j]);
    }
  }
  return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_ || a.dim_ != b.dim_) throw DimensionMismatch("matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_, a.dim_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (std::size_t l = 0; l < a.cols_; ++l) c(i, j) += a(i, l) * b(l, j);
    }
  }
  return c;
}

namespace {

void require_square(const PolyMatrix& b) {
  if (!b.is_square()) {
    throw DimensionMismatch("determinant of a non-square " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()) + " matrix");
  }
}

LaurentPoly cofactor_rec(const PolyMatrix& b, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 1) return b(row, cols[0]);
  LaurentPoly total(b.dim());
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly& entry = b(row, cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j) rest.push_back(cols[l]);
    }
    LaurentPoly term = entry * cofactor_rec(b, rest, row + 1);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

LaurentPoly determinant_cofactor(const PolyMatrix& b) {
  require_square(b);
  std::vector<std::size_t> cols(b.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(b, cols, 0);
}

LaurentPoly determinant_bareiss(const PolyMatrix& b) {
  require_square(b);
  const std::size_t n = b.rows();
  PolyMatrix m = b;
  LaurentPoly previous = LaurentPoly::constant(b.dim(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return LaurentPoly(b.dim());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = LaurentPoly(b.dim());
    }
    previous = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly determinant(const PolyMatrix& b) {
  require_square(b);
  return b.rows() <= 3 ? determinant_cofactor(b) : determinant_bareiss(b);
}

LaurentPoly minor(const PolyMatrix& a, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set) {
  if (row_set.size() != col_set.size()) throw DimensionMismatch("minor needs |I| = |J|");
  return determinant(a.submatrix(row_set, col_set));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void check_cap(const PolyMatrix& a, std::size_t k, std::uint64_t cap) {
  const std::uint64_t rs = binomial(a.rows(), k);
  const std::uint64_t cs = binomial(a.cols(), k);
  if (rs != 0 && cs > cap / rs) {
    throw SearchCapExceeded("minor search of size " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(cap) + " candidate index sets");
  }
}

MinorCertificate certify(const PolyMatrix& a, std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                         LaurentPoly det) {
  MinorCertificate cert;
  cert.k = rows.size();
  cert.b_l1 = l1_norm_matrix(a.submatrix(rows, cols));
  cert.row_set = std::move(rows);
  cert.col_set = std::move(cols);
  cert.det = std::move(det);
  return cert;
}

}  // namespace

std::vector<MinorCertificate> nonvanishing_minors(const PolyMatrix& a, std::size_t k, std::uint64_t cap) {
  check_cap(a, k, cap);
  std::vector<MinorCertificate> found;
  const auto row_sets = index_subsets(a.rows(), k);
  const auto col_sets = index_subsets(a.cols(), k);
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      LaurentPoly det = minor(a, rows, cols);
      if (!det.is_zero()) found.push_back(certify(a, rows, cols, std::move(det)));
    }
  }
  return found;
}

MinorCertificate max_nonvanishing_minor(const PolyMatrix& a, std::uint64_t cap) {
  if (a.is_zero()) throw ZeroInput("the zero matrix has no non-vanishing minor");
  for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
    check_cap(a, k, cap);
    const auto row_sets = index_subsets(a.rows(), k);
    const auto col_sets = index_subsets(a.cols(), k);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        LaurentPoly det = minor(a, rows, cols);
        if (!det.is_zero()) return certify(a, rows, cols, std::move(det));
      }
    }
  }
  throw ZeroInput("no non-vanishing minor found");  // unreachable for a non-zero matrix
}

double l1_norm_matrix(const PolyMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, l1_norm(a(i, j)));
  }
  return best;
}

double op_norm_upper(const PolyMatrix& a) {
  return static_cast<double>(a.rows()) * static_cast<double>(a.cols()) * l1_norm_matrix(a);
}

PolyMatrix star_transpose(const PolyMatrix& a) {
  PolyMatrix t(a.cols(), a.rows(), a.dim());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = star(a(i, j));
  }
  return t;
}

}  // namespace nsbound
