#pragma once

#include <complex>
#include <cstdlib>
#include <vector>

#include "stlat/lattice.hpp"

namespace stlat {

enum class Channel { linear_A, quadratic_A2 };

/// One Fourier component of the potential. Both channels are indexed on the
/// integer (n_E, n_p) lattice: the linear channel occupies the four odd
/// steps (+-1,+-1), the quadratic channel the even steps. Together they live
/// on the lattice generated by (1,1) and (1,-1), the true reciprocal lattice.
struct FourierComponent {
  LatticeTransfer transfer;
  std::complex<double> coefficient_ev;
  Channel channel = Channel::quadratic_A2;
};

/// A^2-channel matrix element <k+K(t)|V|k> in eV. Independent of k.
/// Coefficients are 1, -1/2, +1/2, -1/4 of q^2 A^2/(8M) = 4*beta for the
/// transfers 0, (+-2,0), (0,+-2), (+-2,+-2); zero otherwise.
inline double quadratic_coupling(LatticeTransfer t, const LatticeConfig &cfg) {
  const int ae = std::abs(t.n_E);
  const int ap = std::abs(t.n_p);
  const double four_beta = 4.0 * cfg.beta_ev;
  if (ae == 0 && ap == 0)
    return four_beta;
  if (ae == 2 && ap == 0)
    return -0.5 * four_beta;
  if (ae == 0 && ap == 2)
    return +0.5 * four_beta;
  if (ae == 2 && ap == 2)
    return -0.25 * four_beta;
  return 0.0;
}

/// Linear-channel matrix element V_{k, k+K(t)} (bra k, ket k + K(t)) in eV.
/// Nonzero only for the four transfers (+-1,+-1); then
///   i * sign(n_E) * (c p_x) * (q A c) / (4 M c^2),
/// proportional to the state's transverse momentum, which the potential
/// conserves. The sign follows the energy-transfer component of K(t).
inline std::complex<double> linear_coupling(const WaveVector4 &k,
                                            LatticeTransfer t,
                                            const LatticeConfig &cfg) {
  if (std::abs(t.n_E) != 1 || std::abs(t.n_p) != 1)
    return {0.0, 0.0};
  const double sign = t.n_E > 0 ? 1.0 : -1.0;
  const double magnitude =
      k.cp_x * cfg.q_A_c_ev / (4.0 * cfg.particle_rest_energy_ev);
  return {0.0, sign * magnitude};
}

/// Complete list of transfers with a nonzero coefficient: 9 quadratic
/// components, plus 4 linear ones when requested and k has cp_x != 0.
inline std::vector<FourierComponent>
fourier_inventory(const LatticeConfig &cfg, bool include_linear,
                  const WaveVector4 &k) {
  std::vector<FourierComponent> out;
  static constexpr int quad[9][2] = {{0, 0},  {2, 0},  {-2, 0},
                                     {0, 2},  {0, -2}, {2, 2},
                                     {2, -2}, {-2, 2}, {-2, -2}};
  for (const auto &q : quad) {
    LatticeTransfer t{q[0], q[1]};
    out.push_back({t, {quadratic_coupling(t, cfg), 0.0}, Channel::quadratic_A2});
  }
  if (include_linear && k.cp_x != 0.0) {
    static constexpr int lin[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto &l : lin) {
      LatticeTransfer t{l[0], l[1]};
      out.push_back({t, linear_coupling(k, t, cfg), Channel::linear_A});
    }
  }
  return out;
}

} // namespace stlat
