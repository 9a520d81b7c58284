#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "stlat/brillouin.hpp"
#include "stlat/coupling.hpp"
#include "stlat/hermitian_eigen.hpp"
#include "stlat/lattice.hpp"
#include "stlat/spectra.hpp"

namespace stlat {

/// A set of mutually degenerate states with their coupling matrix.
struct DegenerateSubspace {
  std::vector<WaveVector4> states;
  ComplexMatrix couplings; // square, Hermitian, dim == states.size()
};

/// Eigenvalues of the coupling matrix, ascending. For the paper's 2x2 edge
/// blocks [[4b, +-2b], [+-2b, 4b]] this is {2b, 6b}.
inline std::vector<double> degenerate_shifts(const DegenerateSubspace &sub) {
  if (sub.couplings.size() != sub.states.size())
    throw std::invalid_argument("coupling matrix dimension != state count");
  if (!is_hermitian(sub.couplings))
    throw std::invalid_argument("coupling matrix is not Hermitian");
  return eigenvalues_hermitian(sub.couplings);
}

/// Truncated central-equation problem at Bloch offset kappa: basis states
/// kappa + K(n_E, n_p) for |n_E|, |n_p| <= N. The Hamiltonian diagonal
/// holds the bare Stueckelberg values; the potential's uniform (0,0)
/// Fourier component is kept out of the matrix and carried separately, so
/// eigenvalues are reported relative to the unshifted dispersion.
struct BlochProblem {
  WaveVector4 kappa;
  int truncation_N = 0;
  std::vector<LatticeTransfer> labels; // basis ordering
  std::vector<WaveVector4> basis;
  ComplexMatrix hamiltonian;
  double uniform_shift_ev = 0.0; // quadratic (0,0) component
};

inline BlochProblem build_bloch_problem(const WaveVector4 &kappa, int N,
                                        const LatticeConfig &cfg,
                                        bool include_linear) {
  if (N < 1)
    throw std::invalid_argument("truncation must be >= 1");
  BlochProblem p;
  p.kappa = kappa;
  p.truncation_N = N;
  const int side = 2 * N + 1;
  p.labels.reserve(static_cast<std::size_t>(side) * side);
  for (int nE = -N; nE <= N; ++nE)
    for (int np = -N; np <= N; ++np)
      p.labels.push_back({nE, np});
  for (const auto &t : p.labels)
    p.basis.push_back(kappa + transfer_wavevector(t, cfg));

  const std::size_t dim = p.basis.size();
  p.hamiltonian = ComplexMatrix(dim);
  p.uniform_shift_ev = quadratic_coupling({0, 0}, cfg);
  for (std::size_t i = 0; i < dim; ++i) {
    p.hamiltonian(i, i) = {stueckelberg_diagonal(p.basis[i], cfg), 0.0};
    for (std::size_t j = i + 1; j < dim; ++j) {
      const LatticeTransfer t{p.labels[j].n_E - p.labels[i].n_E,
                              p.labels[j].n_p - p.labels[i].n_p};
      std::complex<double> v{quadratic_coupling(t, cfg), 0.0};
      if (include_linear)
        v += linear_coupling(p.basis[i], t, cfg);
      p.hamiltonian.set_hermitian_pair(i, j, v);
    }
  }
  return p;
}

struct BandRow {
  double coordinate_ev = 0.0;
  double s_lower_ev = 0.0;
  double s_upper_ev = 0.0;
  double mass_lower_ev = 0.0;
  double mass_upper_ev = 0.0;
  double pt_lower_ev = 0.0;
  double pt_upper_ev = 0.0;
  std::string flag = "ok";
};

struct BandTable {
  EdgeLine line;
  int truncation_N = 0;
  std::vector<BandRow> rows;
};

/// Scan along a 3rd-zone edge line. Each row holds the two numerical
/// eigenvalues nearest the unperturbed electron shell s = M c^2 / 2 (the
/// physical pair), their implied masses, and the 2x2 degenerate-theory
/// prediction s0 + {2 beta, 6 beta}. Reported s values include the uniform
/// lattice shift, so they compare directly against the closed forms; the
/// pair is selected on the unshifted spectrum. Scan states carry no
/// transverse momentum, so the linear channel does not contribute.
inline BandTable band_scan(const EdgeLine &line,
                           const std::vector<double> &offsets, int N,
                           const LatticeConfig &cfg) {
  if (N < 2)
    throw std::invalid_argument("band_scan requires truncation >= 2");
  BandTable table;
  table.line = line;
  table.truncation_N = N;
  const double s_shell = cfg.particle_rest_energy_ev / 2.0;
  const double u = cfg.hbar_c_k_gamma_ev;

  for (double x : offsets) {
    WaveVector4 kappa = (line.axis == EdgeLine::Axis::momentum)
                            ? WaveVector4{x, 0.0, 0.0, line.level_ev}
                            : WaveVector4{line.level_ev, 0.0, 0.0, x};
    const BlochProblem prob = build_bloch_problem(kappa, N, cfg, false);
    const std::vector<double> ev = eigenvalues_hermitian(prob.hamiltonian);

    // two eigenvalues nearest the electron shell, on the unshifted spectrum
    std::size_t best = 0, second = 1;
    if (std::abs(ev[second] - s_shell) < std::abs(ev[best] - s_shell))
      std::swap(best, second);
    for (std::size_t i = 2; i < ev.size(); ++i) {
      const double d = std::abs(ev[i] - s_shell);
      if (d < std::abs(ev[best] - s_shell)) {
        second = best;
        best = i;
      } else if (d < std::abs(ev[second] - s_shell)) {
        second = i;
      }
    }
    const double lo = std::min(ev[best], ev[second]);
    const double hi = std::max(ev[best], ev[second]);

    BandRow row;
    row.coordinate_ev = x;
    row.s_lower_ev = lo + prob.uniform_shift_ev;
    row.s_upper_ev = hi + prob.uniform_shift_ev;
    row.mass_lower_ev =
        mass_c2_from_stueckelberg(row.s_lower_ev, cfg.particle_rest_energy_ev);
    row.mass_upper_ev =
        mass_c2_from_stueckelberg(row.s_upper_ev, cfg.particle_rest_energy_ev);
    const double s0 = stueckelberg_diagonal(kappa, cfg);
    row.pt_lower_ev = s0 + 2.0 * cfg.beta_ev;
    row.pt_upper_ev = s0 + 6.0 * cfg.beta_ev;
    const bool on_cone =
        std::abs(std::abs(kappa.E) - std::abs(kappa.cp_z)) <= 1e-9 * u;
    row.flag = on_cone ? "light_cone" : "ok";
    table.rows.push_back(row);
  }
  return table;
}

namespace detail {
inline std::string format_12g(double x) {
  if (std::isnan(x))
    return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}
} // namespace detail

inline std::string band_table_to_csv(const BandTable &table) {
  std::string out = "coordinate_eV,s_lower_eV,s_upper_eV,mass_lower_eV,"
                    "mass_upper_eV,pt_lower_eV,pt_upper_eV,flag\n";
  for (const auto &r : table.rows) {
    out += detail::format_12g(r.coordinate_ev) + ',';
    out += detail::format_12g(r.s_lower_ev) + ',';
    out += detail::format_12g(r.s_upper_ev) + ',';
    out += detail::format_12g(r.mass_lower_ev) + ',';
    out += detail::format_12g(r.mass_upper_ev) + ',';
    out += detail::format_12g(r.pt_lower_ev) + ',';
    out += detail::format_12g(r.pt_upper_ev) + ',';
    out += r.flag;
    out += '\n';
  }
  return out;
}

} // namespace stlat
