#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stlat/lattice.hpp"

namespace stlat {

/// One rank of the zone-edge table: the set of reciprocal transfers whose
/// degenerate pairs bound that zone.
struct ZoneEdgeClass {
  int rank = 0;
  std::vector<LatticeTransfer> transfers; // sorted by (n_E, n_p)
};

struct EdgeLine {
  enum class Axis { energy, momentum };
  Axis axis = Axis::energy;
  double level_ev = 0.0; // +-hbar*c*k_gamma for 3rd-zone edges
};

/// Edge transfers of the first five Brillouin zones. The table is normative;
/// it is not derived from a lowest-|n| rule.
inline ZoneEdgeClass zone_edges(int rank) {
  auto make = [rank](std::vector<LatticeTransfer> ts) {
    std::sort(ts.begin(), ts.end(), [](const auto &a, const auto &b) {
      return std::pair{a.n_E, a.n_p} < std::pair{b.n_E, b.n_p};
    });
    return ZoneEdgeClass{rank, std::move(ts)};
  };
  switch (rank) {
  case 1:
    return make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  case 2:
    return make({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  case 3:
    return make({{2, 0}, {-2, 0}, {0, 2}, {0, -2}});
  case 4:
    return make({{2, 1}, {2, -1}, {-2, 1}, {-2, -1},
                 {1, 2}, {1, -2}, {-1, 2}, {-1, -2}});
  case 5:
    return make({{2, 2}, {2, -2}, {-2, 2}, {-2, -2}});
  default:
    throw std::out_of_range("zone rank must be in 1..5");
  }
}

/// Tolerance for degeneracy classification, relative to the lattice scale:
/// far below any physical splitting, far above double-rounding noise.
inline double default_degeneracy_tolerance_ev2(const LatticeConfig &cfg) {
  return 1.0e-9 * cfg.hbar_c_k_gamma_ev * cfg.hbar_c_k_gamma_ev;
}

/// True iff k and k + K(t) belong to the same degeneracy class, i.e. their
/// m^2 c^4 values agree within tolerance.
inline bool is_degenerate(const WaveVector4 &k, LatticeTransfer t,
                          const LatticeConfig &cfg, double tolerance_ev2) {
  if (!(tolerance_ev2 > 0.0))
    throw std::invalid_argument("degeneracy tolerance must be positive");
  const WaveVector4 shifted = k + transfer_wavevector(t, cfg);
  return std::abs(mass_squared_c4(shifted) - mass_squared_c4(k)) <=
         tolerance_ev2;
}

inline bool is_degenerate(const WaveVector4 &k, LatticeTransfer t,
                          const LatticeConfig &cfg) {
  return is_degenerate(k, t, cfg, default_degeneracy_tolerance_ev2(cfg));
}

/// The four 3rd-zone edge lines E = +-hbar*c*k_gamma, cp_z = +-hbar*c*k_gamma.
inline std::vector<EdgeLine> third_zone_edge_lines(const LatticeConfig &cfg) {
  const double u = cfg.hbar_c_k_gamma_ev;
  return {{EdgeLine::Axis::energy, +u},
          {EdgeLine::Axis::energy, -u},
          {EdgeLine::Axis::momentum, +u},
          {EdgeLine::Axis::momentum, -u}};
}

/// The four points where the 3rd-zone edge crosses the light cone, as
/// (E, cp_z) pairs.
inline std::vector<std::pair<double, double>>
light_cone_crossings(const LatticeConfig &cfg) {
  const double u = cfg.hbar_c_k_gamma_ev;
  return {{+u, +u}, {+u, -u}, {-u, +u}, {-u, -u}};
}

} // namespace stlat
