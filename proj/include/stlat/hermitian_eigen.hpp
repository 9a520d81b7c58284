#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stlat {

/// Dense complex matrix, row-major, sized at construction.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }

  std::complex<double> &operator()(std::size_t i, std::size_t j) {
    return a_[i * n_ + j];
  }
  const std::complex<double> &operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  /// Sets (i,j) and mirrors the conjugate into (j,i).
  void set_hermitian_pair(std::size_t i, std::size_t j,
                          std::complex<double> v) {
    (*this)(i, j) = v;
    if (i != j)
      (*this)(j, i) = std::conj(v);
  }

private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> a_;
};

inline double frobenius_norm(const ComplexMatrix &m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s += std::norm(m(i, j));
  return std::sqrt(s);
}

inline double off_diagonal_norm(const ComplexMatrix &m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j)
        s += std::norm(m(i, j));
  return std::sqrt(s);
}

/// max_ij |a_ij - conj(a_ji)|.
inline double hermiticity_defect(const ComplexMatrix &m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

inline bool is_hermitian(const ComplexMatrix &m, double rel_tol = 1e-13) {
  return hermiticity_defect(m) <= rel_tol * frobenius_norm(m);
}

/// Thrown when the Jacobi sweep limit is hit before the off-diagonal norm
/// target; carries the worst remaining residual for diagnostics.
class EigensolverError : public std::runtime_error {
public:
  EigensolverError(const std::string &what, double off_norm)
      : std::runtime_error(what), off_norm_(off_norm) {}
  double off_norm() const { return off_norm_; }

private:
  double off_norm_;
};

struct JacobiInfo {
  int sweeps = 0;
  double initial_frobenius = 0.0;
  double final_off_norm = 0.0;
};

/// Full real spectrum of a complex Hermitian matrix by cyclic Jacobi
/// rotations, ascending. Deterministic for identical input: fixed pivot
/// order, no pivot search. Sweeps run until the off-diagonal norm falls to
/// the machine-level floor (1e-16 of the initial Frobenius norm); anything
/// above 1e-14 of it after the sweep limit is a hard failure.
inline std::vector<double> eigenvalues_hermitian(ComplexMatrix m,
                                                 JacobiInfo *info = nullptr,
                                                 int max_sweeps = 60) {
  const std::size_t n = m.size();
  if (n == 0)
    return {};
  if (!is_hermitian(m))
    throw std::invalid_argument("matrix is not Hermitian within 1e-13");

  const double frob0 = frobenius_norm(m);
  const double stop_target = 1e-16 * frob0;
  const double required = 1e-14 * frob0;

  int sweeps = 0;
  double off = off_diagonal_norm(m);
  while (off > stop_target && sweeps < max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::complex<double> apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0)
          continue;
        const std::complex<double> phase = apq / mag;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (app - aqq) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // rows/columns outside the pivot block
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q)
            continue;
          const std::complex<double> akp = m(k, p);
          const std::complex<double> akq = m(k, q);
          const std::complex<double> nkp = c * akp + s * std::conj(phase) * akq;
          const std::complex<double> nkq = -s * phase * akp + c * akq;
          m(k, p) = nkp;
          m(p, k) = std::conj(nkp);
          m(k, q) = nkq;
          m(q, k) = std::conj(nkq);
        }
        // pivot block
        m(p, p) = {c * c * app + 2.0 * c * s * mag + s * s * aqq, 0.0};
        m(q, q) = {s * s * app - 2.0 * c * s * mag + c * c * aqq, 0.0};
        m(p, q) = {0.0, 0.0};
        m(q, p) = {0.0, 0.0};
      }
    }
    ++sweeps;
    off = off_diagonal_norm(m);
  }

  if (off > required)
    throw EigensolverError("Jacobi eigensolver failed to converge", off);

  if (info)
    *info = {sweeps, frob0, off};

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i)
    ev[i] = m(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

} // namespace stlat
