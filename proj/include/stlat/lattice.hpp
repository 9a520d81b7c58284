#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stlat/constants.hpp"

namespace stlat {

/// k_gamma = 1/lambda reproduces the published numbers; 2*pi/lambda is the
/// conventional angular choice, kept for sensitivity studies.
enum class WavenumberConvention { paper_reciprocal, standard_angular };

/// literal_eq26 evaluates the printed forbidden-band expressions; chained
/// follows the amplitude -> beta -> mass-shift -> energy derivation, whose
/// gap term comes out exactly twice the literal one.
enum class GapFormulaMode { literal_eq26, chained };

struct Species {
  std::string name;
  double rest_energy_ev;
  double charge_C; // magnitude
};

inline Species electron() {
  return {"electron", constants().electron_rest_energy_ev,
          constants().elementary_charge_C};
}

/// Contravariant four-wave-vector of a plane-wave state, every component in
/// eV (E = hbar*c*k^0, cp_i = hbar*c*k^i). No mass-shell constraint is
/// imposed; off-shell states are legal.
struct WaveVector4 {
  double E = 0.0;
  double cp_x = 0.0;
  double cp_y = 0.0;
  double cp_z = 0.0;
};

inline WaveVector4 operator+(const WaveVector4 &a, const WaveVector4 &b) {
  return {a.E + b.E, a.cp_x + b.cp_x, a.cp_y + b.cp_y, a.cp_z + b.cp_z};
}

inline WaveVector4 operator-(const WaveVector4 &a, const WaveVector4 &b) {
  return {a.E - b.E, a.cp_x - b.cp_x, a.cp_y - b.cp_y, a.cp_z - b.cp_z};
}

/// Integer pair labelling a reciprocal-lattice transfer, in units of
/// hbar*c*k_gamma along the E and cp_z axes (transverse components are
/// always zero: the potential carries no transverse momentum).
struct LatticeTransfer {
  int n_E = 0;
  int n_p = 0;

  friend bool operator==(const LatticeTransfer &a,
                         const LatticeTransfer &b) = default;
};

inline LatticeTransfer negate(LatticeTransfer t) { return {-t.n_E, -t.n_p}; }

/// Standing-wave lattice configuration with all derived quantities fixed at
/// construction. Immutable after make_config; safe to share across threads.
struct LatticeConfig {
  double wavelength_nm = 0.0;
  double intensity_W_cm2 = 0.0;
  WavenumberConvention convention = WavenumberConvention::paper_reciprocal;
  GapFormulaMode formula_mode = GapFormulaMode::literal_eq26;
  std::string species_name;

  // derived
  double k_gamma_per_nm = 0.0;
  double omega_gamma_per_s = 0.0;
  double hbar_c_k_gamma_ev = 0.0;
  double amplitude_A_Vs_m = 0.0; // vector-potential amplitude
  double q_A_c_ev = 0.0;         // |q| * A * c expressed in eV
  double beta_ev = 0.0;          // q^2 A^2 / (32 M), in eV
  double particle_rest_energy_ev = 0.0;
  double particle_charge_C = 0.0;
};

inline LatticeConfig make_config(
    double wavelength_nm, double intensity_W_cm2,
    WavenumberConvention convention = WavenumberConvention::paper_reciprocal,
    GapFormulaMode formula_mode = GapFormulaMode::literal_eq26,
    const Species &species = electron()) {
  if (!(wavelength_nm > 0.0))
    throw std::invalid_argument("wavelength must be positive");
  if (intensity_W_cm2 < 0.0)
    throw std::invalid_argument("intensity must be non-negative");

  const auto &c = constants();
  LatticeConfig cfg;
  cfg.wavelength_nm = wavelength_nm;
  cfg.intensity_W_cm2 = intensity_W_cm2;
  cfg.convention = convention;
  cfg.formula_mode = formula_mode;
  cfg.species_name = species.name;
  cfg.particle_rest_energy_ev = species.rest_energy_ev;
  cfg.particle_charge_C = species.charge_C;

  cfg.k_gamma_per_nm = (convention == WavenumberConvention::paper_reciprocal)
                           ? 1.0 / wavelength_nm
                           : 2.0 * std::numbers::pi / wavelength_nm;
  cfg.omega_gamma_per_s = c.speed_of_light_m_s * cfg.k_gamma_per_nm * 1.0e9;
  cfg.hbar_c_k_gamma_ev = c.hbar_c_ev_nm * cfg.k_gamma_per_nm;

  if (intensity_W_cm2 > 0.0) {
    const double I = intensity_si(intensity_W_cm2);
    cfg.amplitude_A_Vs_m =
        std::sqrt(2.0 * I) /
        (std::sqrt(c.speed_of_light_m_s * c.vacuum_permittivity_F_m) *
         cfg.omega_gamma_per_s);
    cfg.q_A_c_ev = joule_to_ev(species.charge_C * cfg.amplitude_A_Vs_m *
                               c.speed_of_light_m_s);
    cfg.beta_ev = cfg.q_A_c_ev * cfg.q_A_c_ev / (32.0 * species.rest_energy_ev);
  }
  return cfg;
}

/// Unperturbed Stueckelberg diagonal s(k) = p_mu p^mu / (2M) in eV, with
/// signature (+,-,-,-). Negative for spacelike k.
inline double stueckelberg_diagonal(const WaveVector4 &k,
                                    const LatticeConfig &cfg) {
  const double q =
      k.E * k.E - k.cp_x * k.cp_x - k.cp_y * k.cp_y - k.cp_z * k.cp_z;
  return q / (2.0 * cfg.particle_rest_energy_ev);
}

/// m^2 c^4 = E^2 - (cp_z)^2 in eV^2. Transverse components are excluded:
/// degeneracy classes in the (E, cp_z) plane are defined this way.
inline double mass_squared_c4(const WaveVector4 &k) {
  return k.E * k.E - k.cp_z * k.cp_z;
}

/// Full four-component variant, for band-solver diagnostics.
inline double mass_squared_c4_full(const WaveVector4 &k) {
  return k.E * k.E - k.cp_x * k.cp_x - k.cp_y * k.cp_y - k.cp_z * k.cp_z;
}

/// Physical transfer K(t) = hbar*c*k_gamma * (n_E, 0, 0, n_p).
inline WaveVector4 transfer_wavevector(LatticeTransfer t,
                                       const LatticeConfig &cfg) {
  return {t.n_E * cfg.hbar_c_k_gamma_ev, 0.0, 0.0,
          t.n_p * cfg.hbar_c_k_gamma_ev};
}

} // namespace stlat
