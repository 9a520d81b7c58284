#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stlat/constants.hpp"
#include "stlat/lattice.hpp"

namespace stlat {

enum class EnergyMode { exact, quadratic_approx };

/// Energy of a state of (shifted) mass mass_c2 at longitudinal momentum
/// cp_z, positive branch. The quadratic form is the small-momentum
/// expansion with the mass shift already folded into mass_c2.
inline double mass_to_energy(double mass_c2_ev, double cp_z_ev,
                             EnergyMode mode) {
  if (!(mass_c2_ev > 0.0))
    throw std::invalid_argument("mass must be positive");
  if (mode == EnergyMode::exact)
    return std::hypot(mass_c2_ev, cp_z_ev);
  return mass_c2_ev + cp_z_ev * cp_z_ev / (2.0 * mass_c2_ev);
}

/// mc^2 from a Stueckelberg eigenvalue s = m^2 c^4 / (2 M c^2); NaN for
/// spacelike (negative) s.
inline double mass_c2_from_stueckelberg(double s_ev, double rest_energy_ev) {
  if (s_ev < 0.0)
    return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(2.0 * rest_energy_ev * s_ev);
}

namespace detail {
/// q^2 I lambda^2 / (16 M c^3 eps0), evaluated in SI and returned in eV.
inline double gap_term_printed(double wavelength_nm, double intensity_W_cm2,
                               double rest_energy_ev, double charge_C) {
  const auto &c = constants();
  const double I = intensity_si(intensity_W_cm2);
  const double lambda_m = wavelength_nm * 1e-9;
  const double mass_kg =
      ev_to_joule(rest_energy_ev) / (c.speed_of_light_m_s * c.speed_of_light_m_s);
  const double c3 = c.speed_of_light_m_s * c.speed_of_light_m_s *
                    c.speed_of_light_m_s;
  const double joules = charge_C * charge_C * I * lambda_m * lambda_m /
                        (16.0 * mass_kg * c3 * c.vacuum_permittivity_F_m);
  return joule_to_ev(joules);
}

/// hbar^2 / (2 M lambda^2) == (hbar c / lambda)^2 / (2 M c^2), in eV.
inline double recoil_printed(double wavelength_nm, double rest_energy_ev) {
  const double u = constants().hbar_c_ev_nm / wavelength_nm;
  return u * u / (2.0 * rest_energy_ev);
}
} // namespace detail

/// The printed gap-term expression for an electron, with CODATA constants.
inline double gap_term_literal(double wavelength_nm, double intensity_W_cm2) {
  if (!(wavelength_nm > 0.0))
    throw std::invalid_argument("wavelength must be positive");
  const auto e = electron();
  return detail::gap_term_printed(wavelength_nm, intensity_W_cm2,
                                  e.rest_energy_ev, e.charge_C);
}

/// Forbidden kinetic-energy band [E_minus, E_plus] at the 3rd-zone edge.
/// Kinetic means E - mc^2: the reported values are net of rest energy.
struct GapReport {
  double E_minus_ev = 0.0;
  double E_plus_ev = 0.0;
  double recoil_term_ev = 0.0;
  double gap_term_ev = 0.0;
  double beta_ev = 0.0;
  GapFormulaMode formula_mode = GapFormulaMode::literal_eq26;
  WavenumberConvention convention = WavenumberConvention::paper_reciprocal;
  double exact_vs_approx_delta_ev = 0.0;
};

/// literal_eq26: the printed closed forms, E -+ = recoil + (2 -+ 1) * gap
/// with gap = q^2 I lambda^2 / (16 M c^3 eps0). chained: amplitude from the
/// intensity relation, beta = q^2 A^2/(32M), mass shifts (2 -+ 1) * 2 beta,
/// then the quadratic energy expansion. The chained gap term is exactly
/// twice the literal one under the paper wavenumber convention.
inline GapReport forbidden_band(const LatticeConfig &cfg) {
  GapReport r;
  r.formula_mode = cfg.formula_mode;
  r.convention = cfg.convention;
  r.beta_ev = cfg.beta_ev;

  double edge_cp_z; // momentum at which the band edge is evaluated
  if (cfg.formula_mode == GapFormulaMode::literal_eq26) {
    r.recoil_term_ev =
        detail::recoil_printed(cfg.wavelength_nm, cfg.particle_rest_energy_ev);
    r.gap_term_ev =
        detail::gap_term_printed(cfg.wavelength_nm, cfg.intensity_W_cm2,
                                 cfg.particle_rest_energy_ev,
                                 cfg.particle_charge_C);
    edge_cp_z = constants().hbar_c_ev_nm / cfg.wavelength_nm;
  } else {
    const double u = cfg.hbar_c_k_gamma_ev;
    r.recoil_term_ev = u * u / (2.0 * cfg.particle_rest_energy_ev);
    r.gap_term_ev = 2.0 * cfg.beta_ev; // half of (6 beta - 2 beta)
    edge_cp_z = u;
  }
  r.E_minus_ev = r.recoil_term_ev + r.gap_term_ev;
  r.E_plus_ev = r.recoil_term_ev + 3.0 * r.gap_term_ev;

  // exact (square-root) vs quadratic-expansion difference, worst branch
  const double M = cfg.particle_rest_energy_ev;
  double delta = 0.0;
  for (double shift : {1.0 * r.gap_term_ev, 3.0 * r.gap_term_ev}) {
    const double exact = mass_to_energy(M + shift, edge_cp_z, EnergyMode::exact);
    const double approx = M + shift + r.recoil_term_ev;
    delta = std::max(delta, std::abs(exact - approx));
  }
  r.exact_vs_approx_delta_ev = delta;
  return r;
}

} // namespace stlat
