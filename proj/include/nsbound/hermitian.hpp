#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nsbound {

/// Dense square complex matrix, row-major. Used for small Hermitian problems.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t size = 0) : size_(size), data_(size * size) {}

  std::size_t size() const { return size_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  double trace_real() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const;

 private:
  std::size_t size_;
  std::vector<std::complex<double>> data_;
};

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // ascending
  int sweeps = 0;
  double off_diagonal_residual = 0.0;
};

struct JacobiOptions {
  int max_sweeps = 30;
  /// Converged once the off-diagonal norm is at most tolerance * (1 + trace).
  double tolerance = 1e-13;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NumericalError if the sweep cap is hit before convergence.
HermitianSpectrum jacobi_eigenvalues(ComplexMatrix h, const JacobiOptions& options = {});

/// Jacobi eigenvalues of a positive semidefinite matrix, with rounding-level
/// negative values clamped to zero.
HermitianSpectrum psd_eigenvalues(const ComplexMatrix& h, const JacobiOptions& options = {});

}  // namespace nsbound
