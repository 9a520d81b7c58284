#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "stlat/quadrature.hpp"

using namespace stlat;
using Catch::Approx;

namespace {
const LatticeConfig cfg = make_config(589.0, 3.13e12);
const QuadratureSpec spec512 = make_quadrature_spec(cfg, 512);

std::complex<double> oracle(const WaveVector4 &k, LatticeTransfer t,
                            Channel channel, const QuadratureSpec &spec) {
  const WaveVector4 kp = k + transfer_wavevector(t, cfg);
  const auto r = quadrature_coupling(k, kp, cfg, channel, spec);
  REQUIRE(r.status == QuadratureResult::Status::integrated);
  return r.value_ev;
}
} // namespace

TEST_CASE("quadrature spec validation") {
  CHECK_THROWS_AS(make_quadrature_spec(cfg, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_quadrature_spec(cfg, 7), std::invalid_argument);
  const auto s = make_quadrature_spec(cfg, 64);
  CHECK(s.points_t == 64);
  CHECK(s.cell_t_s == Approx(2.0 * std::numbers::pi / cfg.omega_gamma_per_s));
  CHECK(s.cell_z_m ==
        Approx(2.0 * std::numbers::pi / (cfg.k_gamma_per_nm * 1e9)));
}

TEST_CASE("quadratic channel matches the closed forms") {
  const WaveVector4 k{0.7, 0.0, 0.0, -0.2};
  const double four_beta = 4.0 * cfg.beta_ev;
  for (const auto &fc : fourier_inventory(cfg, false, k)) {
    const auto v = oracle(k, fc.transfer, Channel::quadratic_A2, spec512);
    const double closed = quadratic_coupling(fc.transfer, cfg);
    CHECK(std::abs(v - closed) <= 1e-8 * std::abs(closed));
  }
  // off-inventory transfers integrate to zero
  for (const LatticeTransfer t :
       {LatticeTransfer{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 3}, {0, 4},
        {4, 0}, {5, -5}}) {
    const auto v = oracle(k, t, Channel::quadratic_A2, spec512);
    CHECK(std::abs(v) <= 1e-10 * four_beta);
  }
}

TEST_CASE("linear channel matches the closed form including the phase") {
  const WaveVector4 k{0.3, 1.0, 0.0, 0.1}; // hbar c k_x = 1 eV
  for (int nE : {-1, 1})
    for (int np : {-1, 1}) {
      const LatticeTransfer t{nE, np};
      const auto v = oracle(k, t, Channel::linear_A, spec512);
      const auto closed = linear_coupling(k, t, cfg);
      CHECK(std::abs(v - closed) <= 1e-8 * std::abs(closed));
      // the sign of the imaginary part follows the energy transfer
      CHECK(v.imag() * nE > 0.0);
    }
  for (const LatticeTransfer t :
       {LatticeTransfer{0, 2}, {2, 0}, {1, 0}, {0, 1}, {2, 2}, {1, 2}}) {
    const auto v = oracle(k, t, Channel::linear_A, spec512);
    CHECK(std::abs(v) <= 1e-10 * 4.0 * cfg.beta_ev);
  }
}

TEST_CASE("transverse mismatch short-circuits") {
  const WaveVector4 k{1.0, 0.5, 0.0, 0.0};
  const WaveVector4 kp{1.0, 0.75, 0.0, 0.0};
  const auto r = quadrature_coupling(k, kp, cfg, Channel::linear_A, spec512);
  CHECK(r.status == QuadratureResult::Status::transverse_mismatch);
  CHECK(r.value_ev == std::complex<double>{0.0, 0.0});
}

TEST_CASE("doubling the grid leaves on-inventory values unchanged") {
  const auto spec256 = make_quadrature_spec(cfg, 256);
  const WaveVector4 k{0.4, 0.9, -0.1, 0.6};
  for (const auto &fc : fourier_inventory(cfg, true, k)) {
    const auto coarse = oracle(k, fc.transfer, fc.channel, spec256);
    const auto fine = oracle(k, fc.transfer, fc.channel, spec512);
    CHECK(std::abs(coarse - fine) <=
          1e-10 * (std::abs(fine) + 4.0 * cfg.beta_ev));
  }
}

TEST_CASE("oracle-level hermiticity") {
  std::uint64_t state = 55;
  auto rnd = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  };
  const auto spec = make_quadrature_spec(cfg, 128);
  for (int trial = 0; trial < 6; ++trial) {
    const WaveVector4 k{rnd() * 2, 0.5 + rnd(), rnd(), rnd() * 2};
    const LatticeTransfer t{static_cast<int>(rnd() * 8),
                            static_cast<int>(rnd() * 8)};
    const WaveVector4 kp = k + transfer_wavevector(t, cfg);
    for (auto ch : {Channel::linear_A, Channel::quadratic_A2}) {
      const auto forward = quadrature_coupling(k, kp, cfg, ch, spec).value_ev;
      const auto backward = quadrature_coupling(kp, k, cfg, ch, spec).value_ev;
      CHECK(std::abs(forward - std::conj(backward)) <=
            1e-12 * (std::abs(forward) + 4.0 * cfg.beta_ev));
    }
  }
}

TEST_CASE("selection rule scan") {
  const auto a = selection_rule_scan(cfg, 150, 7, 256);
  const auto b = selection_rule_scan(cfg, 150, 7, 256);
  CHECK(a.linear.max_on_inventory_rel_err ==
        b.linear.max_on_inventory_rel_err); // deterministic for a fixed seed
  CHECK(a.quadratic.max_off_inventory_abs_ev ==
        b.quadratic.max_off_inventory_abs_ev);
  CHECK(selection_scan_passes(a, cfg));
  CHECK(a.samples == 150);
  CHECK(a.points == 256);

  CHECK_THROWS_AS(selection_rule_scan(cfg, 0, 7, 256), std::invalid_argument);
}

TEST_CASE("scan stays exact at the Nyquist-margin floor") {
  // sampled transfers stay within |n| <= 5, so 8 points per axis already
  // integrate every harmonic exactly
  const auto r = selection_rule_scan(cfg, 120, 3, 8);
  CHECK(selection_scan_passes(r, cfg));
}
