#pragma once

#include <stdexcept>

namespace stlat {

/// Fixed CODATA-2018 reference set. All spectral quantities elsewhere in the
/// library are carried in eV (masses as mc^2, momenta as c*p); SI values
/// appear only at the intensity -> vector-potential boundary.
struct PhysicalConstants {
  double hbar_c_ev_nm;            // eV nm
  double electron_rest_energy_ev; // eV
  double elementary_charge_C;     // C
  double vacuum_permittivity_F_m; // F/m
  double speed_of_light_m_s;      // m/s
  double hbar_si_J_s;             // J s
};

inline const PhysicalConstants &constants() {
  static constexpr PhysicalConstants codata2018{
      197.3269804,      // hbar*c
      510998.95,        // electron mc^2
      1.602176634e-19,  // e (exact)
      8.8541878128e-12, // eps0
      2.99792458e8,     // c (exact)
      1.054571817e-34   // hbar
  };
  return codata2018;
}

inline double ev_to_joule(double ev) {
  return ev * constants().elementary_charge_C;
}

inline double joule_to_ev(double joule) {
  return joule / constants().elementary_charge_C;
}

/// W/cm^2 -> W/m^2.
inline double intensity_si(double intensity_W_cm2) {
  if (intensity_W_cm2 < 0.0)
    throw std::invalid_argument("intensity must be non-negative");
  return intensity_W_cm2 * 1.0e4;
}

} // namespace stlat
