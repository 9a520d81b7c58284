#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "stlat/coupling.hpp"
#include "stlat/lattice.hpp"

namespace stlat {

/// Grid for direct integration of the matrix-element integral over one
/// spacetime unit cell (full fundamental period on each axis, so the
/// omega and 2*omega harmonics share one cell). The integrands are finite
/// trigonometric polynomials, so uniform-grid trapezoid integration is
/// exact once the points per axis exceed twice the highest harmonic; the
/// 512 default is pure margin (64 is the recommended production floor).
struct QuadratureSpec {
  int points_t = 512;
  int points_z = 512;
  double cell_t_s = 0.0; // 2*pi / omega_gamma
  double cell_z_m = 0.0; // 2*pi / k_gamma
};

inline QuadratureSpec make_quadrature_spec(const LatticeConfig &cfg,
                                           int points = 512) {
  if (points < 4 || points % 2 != 0)
    throw std::invalid_argument("quadrature points must be even and >= 4");
  QuadratureSpec spec;
  spec.points_t = points;
  spec.points_z = points;
  spec.cell_t_s = 2.0 * std::numbers::pi / cfg.omega_gamma_per_s;
  spec.cell_z_m = 2.0 * std::numbers::pi / (cfg.k_gamma_per_nm * 1e9);
  return spec;
}

struct QuadratureResult {
  enum class Status { integrated, transverse_mismatch };
  std::complex<double> value_ev{0.0, 0.0};
  Status status = Status::integrated;
};

/// Brute-force V_{k,k'} (bra k, ket k') by composite trapezoidal
/// integration of the exact integrand over one (t, z) cell, normalized by
/// the cell area. The transverse integrals act as momentum conservation:
/// a transverse mismatch short-circuits to exact zero with a reason code.
inline QuadratureResult quadrature_coupling(const WaveVector4 &k,
                                            const WaveVector4 &k_prime,
                                            const LatticeConfig &cfg,
                                            Channel channel,
                                            const QuadratureSpec &spec) {
  if (k.cp_x != k_prime.cp_x || k.cp_y != k_prime.cp_y)
    return {{0.0, 0.0}, QuadratureResult::Status::transverse_mismatch};

  const double u = cfg.hbar_c_k_gamma_ev;
  const double a = (k_prime.E - k.E) / u;        // energy transfer / hbar omega
  const double b = (k_prime.cp_z - k.cp_z) / u;  // momentum transfer / hbar k

  const int Pt = spec.points_t;
  const int Pz = spec.points_z;
  const double ht = 2.0 * std::numbers::pi / Pt;
  const double hz = 2.0 * std::numbers::pi / Pz;

  // per-axis samples of the integrand factors (theta = omega t, phi = k z)
  std::vector<std::complex<double>> phase_t(Pt + 1), phase_z(Pz + 1);
  std::vector<double> env_t(Pt + 1), env_z(Pz + 1);
  for (int m = 0; m <= Pt; ++m) {
    const double theta = m * ht;
    phase_t[m] = std::polar(1.0, a * theta);
    env_t[m] = std::sin(theta);
  }
  for (int n = 0; n <= Pz; ++n) {
    const double phi = n * hz;
    phase_z[n] = std::polar(1.0, -b * phi);
    env_z[n] = std::cos(phi);
  }

  double prefactor;
  if (channel == Channel::quadratic_A2) {
    prefactor =
        cfg.q_A_c_ev * cfg.q_A_c_ev / (2.0 * cfg.particle_rest_energy_ev);
    for (auto &e : env_t)
      e *= e;
    for (auto &e : env_z)
      e *= e;
  } else {
    prefactor =
        k_prime.cp_x * cfg.q_A_c_ev / cfg.particle_rest_energy_ev;
  }

  std::complex<double> sum{0.0, 0.0};
  for (int m = 0; m <= Pt; ++m) {
    const double wt = (m == 0 || m == Pt) ? 0.5 : 1.0;
    std::complex<double> row{0.0, 0.0};
    for (int n = 0; n <= Pz; ++n) {
      const double wz = (n == 0 || n == Pz) ? 0.5 : 1.0;
      row += wz * env_z[n] * phase_z[n];
    }
    sum += wt * env_t[m] * phase_t[m] * row;
  }
  const std::complex<double> avg = sum * (ht * hz) /
                                   (4.0 * std::numbers::pi * std::numbers::pi);
  return {prefactor * avg, QuadratureResult::Status::integrated};
}

struct ChannelScanReport {
  double max_on_inventory_rel_err = 0.0;
  double max_off_inventory_abs_ev = 0.0;
};

struct SelectionRuleReport {
  ChannelScanReport linear;
  ChannelScanReport quadratic;
  int points = 0;
  std::uint64_t seed = 0;
  int samples = 0;
};

inline constexpr double kOnInventoryRelTol = 1e-8;
inline constexpr double kOffInventoryScale = 1e-10; // x q^2 A^2/(8M)

inline bool selection_scan_passes(const SelectionRuleReport &r,
                                  const LatticeConfig &cfg) {
  const double off_tol = kOffInventoryScale * 4.0 * cfg.beta_ev;
  return r.linear.max_on_inventory_rel_err <= kOnInventoryRelTol &&
         r.quadratic.max_on_inventory_rel_err <= kOnInventoryRelTol &&
         r.linear.max_off_inventory_abs_ev <= off_tol &&
         r.quadratic.max_off_inventory_abs_ev <= off_tol;
}

namespace detail {
/// splitmix64: small, deterministic across standard libraries.
inline std::uint64_t splitmix64(std::uint64_t &state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t &state) {
  return std::ldexp(static_cast<double>(splitmix64(state) >> 11), -53);
}

inline int uniform_int(std::uint64_t &state, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(splitmix64(state) % span);
}
} // namespace detail

/// Cross-checks closed-form couplings against the quadrature oracle for the
/// full inventory plus n_random seeded lattice transfers in |n| <= 5
/// (alias-free down to 8 points per axis). On-inventory values are compared
/// relative to the closed form; off-inventory values must integrate to zero.
inline SelectionRuleReport selection_rule_scan(const LatticeConfig &cfg,
                                               int n_random,
                                               std::uint64_t seed,
                                               int points = 512) {
  if (n_random < 1)
    throw std::invalid_argument("selection_rule_scan requires n_random >= 1");
  const QuadratureSpec spec = make_quadrature_spec(cfg, points);
  SelectionRuleReport report;
  report.points = points;
  report.seed = seed;
  report.samples = n_random;

  std::uint64_t rng = seed ^ 0xa02bdbf7bb3c0a7ull;
  const double u = cfg.hbar_c_k_gamma_ev;

  std::vector<LatticeTransfer> transfers;
  for (const auto &fc : fourier_inventory(cfg, true, {0.0, 1.0, 0.0, 0.0}))
    transfers.push_back(fc.transfer);
  for (int i = 0; i < n_random; ++i)
    transfers.push_back({detail::uniform_int(rng, -5, 5),
                         detail::uniform_int(rng, -5, 5)});

  for (const auto &t : transfers) {
    // random base state; cp_x != 0 keeps the linear channel exercised
    const WaveVector4 k{(detail::uniform01(rng) - 0.5) * 6.0 * u,
                        0.5 + 1.5 * detail::uniform01(rng),
                        (detail::uniform01(rng) - 0.5) * 2.0,
                        (detail::uniform01(rng) - 0.5) * 6.0 * u};
    const WaveVector4 kp = k + transfer_wavevector(t, cfg);

    const auto quad_q =
        quadrature_coupling(k, kp, cfg, Channel::quadratic_A2, spec).value_ev;
    const double closed_q = quadratic_coupling(t, cfg);
    if (closed_q != 0.0) {
      const double rel = std::abs(quad_q - closed_q) / std::abs(closed_q);
      report.quadratic.max_on_inventory_rel_err =
          std::max(report.quadratic.max_on_inventory_rel_err, rel);
    } else {
      report.quadratic.max_off_inventory_abs_ev =
          std::max(report.quadratic.max_off_inventory_abs_ev,
                   std::abs(quad_q));
    }

    const auto quad_l =
        quadrature_coupling(k, kp, cfg, Channel::linear_A, spec).value_ev;
    const std::complex<double> closed_l = linear_coupling(k, t, cfg);
    if (closed_l != std::complex<double>{0.0, 0.0}) {
      const double rel = std::abs(quad_l - closed_l) / std::abs(closed_l);
      report.linear.max_on_inventory_rel_err =
          std::max(report.linear.max_on_inventory_rel_err, rel);
    } else {
      report.linear.max_off_inventory_abs_ev =
          std::max(report.linear.max_off_inventory_abs_ev, std::abs(quad_l));
    }
  }
  return report;
}

} // namespace stlat
