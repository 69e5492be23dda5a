#include "nsbound/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "nsbound/errors.hpp"

namespace nsbound {

double ComplexMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i).real();
  return t;
}

double ComplexMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (i != j) s += std::norm((*this)(i, j));
    }
  }
  return std::sqrt(s);
}

namespace {

// Zero h(p, q) by the unitary G = diag-phase * real rotation acting on (p, q).
void rotate(ComplexMatrix& h, std::size_t p, std::size_t q) {
  const std::complex<double> hpq = h(p, q);
  const double g = std::abs(hpq);
  if (g == 0.0) return;
  const std::complex<double> w = hpq / g;
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::complex<double> wc = std::conj(w);
  const std::size_t n = h.size();

  // Columns: H <- H G.
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> hip = h(i, p);
    const std::complex<double> hiq = h(i, q);
    h(i, p) = c * hip - s * wc * hiq;
    h(i, q) = s * hip + c * wc * hiq;
  }
  // Rows: H <- G^* H.
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> hpj = h(p, j);
    const std::complex<double> hqj = h(q, j);
    h(p, j) = c * hpj - s * w * hqj;
    h(q, j) = s * hpj + c * w * hqj;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

HermitianSpectrum jacobi_eigenvalues(ComplexMatrix h, const JacobiOptions& options) {
  const std::size_t n = h.size();
  HermitianSpectrum out;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale += std::abs(h(i, i).real());
  const double threshold = options.tolerance * (1.0 + scale);

  double off = h.off_diagonal_norm();
  while (off > threshold && off > 1e-300) {
    if (out.sweeps == options.max_sweeps) {
      throw NumericalError("Jacobi iteration did not converge within " + std::to_string(options.max_sweeps) +
                           " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(h, p, q);
    }
    ++out.sweeps;
    off = h.off_diagonal_norm();
  }
  out.off_diagonal_residual = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = h(i, i).real();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

HermitianSpectrum psd_eigenvalues(const ComplexMatrix& h, const JacobiOptions& options) {
  HermitianSpectrum s = jacobi_eigenvalues(h, options);
  const double floor = -1e-10 * (1.0 + std::abs(h.trace_real()));
  for (double& v : s.eigenvalues) {
    if (v < floor) throw NumericalError("positive semidefinite matrix has a negative eigenvalue");
    v = std::max(v, 0.0);
  }
  return s;
}

}  // namespace nsbound
