#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stlat/spectra.hpp"

using namespace stlat;
using Catch::Approx;

namespace {
const double kMe = constants().electron_rest_energy_ev;

std::uint64_t g_state = 4242;
double uniform(double lo, double hi) {
  g_state = g_state * 6364136223846793005ull + 1442695040888963407ull;
  const double x = static_cast<double>(g_state >> 11) / 9007199254740992.0;
  return lo + x * (hi - lo);
}
} // namespace

TEST_CASE("mass to energy") {
  CHECK(mass_to_energy(kMe, 0.0, EnergyMode::exact) == kMe);
  CHECK(mass_to_energy(kMe, 0.0, EnergyMode::quadratic_approx) == kMe);
  CHECK_THROWS_AS(mass_to_energy(0.0, 1.0, EnergyMode::exact),
                  std::invalid_argument);
  CHECK_THROWS_AS(mass_to_energy(-1.0, 1.0, EnergyMode::exact),
                  std::invalid_argument);

  // recoil offset at the sodium-line lattice scale
  const double u = constants().hbar_c_ev_nm / 589.0;
  const double recoil =
      mass_to_energy(kMe, u, EnergyMode::quadratic_approx) - kMe;
  CHECK(recoil == Approx(1.10e-7).epsilon(0.01));

  const double exact = mass_to_energy(kMe, u, EnergyMode::exact);
  const double approx = mass_to_energy(kMe, u, EnergyMode::quadratic_approx);
  CHECK(std::abs(exact - approx) < 1e-13 * kMe);
}

TEST_CASE("mass from Stueckelberg eigenvalue") {
  CHECK(mass_c2_from_stueckelberg(kMe / 2.0, kMe) == Approx(kMe));
  CHECK(mass_c2_from_stueckelberg(0.0, kMe) == 0.0);
  CHECK(std::isnan(mass_c2_from_stueckelberg(-1.0, kMe)));
}

TEST_CASE("literal gap term") {
  CHECK(gap_term_literal(589.0, 3.13e12) == Approx(0.5).epsilon(0.01));
  CHECK(gap_term_literal(589.0, 0.0) == 0.0);
  CHECK(gap_term_literal(589.0, 2.0e12) ==
        Approx(2.0 * gap_term_literal(589.0, 1.0e12)).epsilon(1e-12));
  CHECK(gap_term_literal(1178.0, 1.0e12) ==
        Approx(4.0 * gap_term_literal(589.0, 1.0e12)).epsilon(1e-12));
  CHECK_THROWS_AS(gap_term_literal(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("forbidden band reproduces the published example") {
  const auto cfg = make_config(589.0, 3.13e12);
  const auto r = forbidden_band(cfg);
  CHECK(r.recoil_term_ev == Approx(1.10e-7).epsilon(0.01));
  CHECK(r.gap_term_ev == Approx(0.5).epsilon(0.01));
  CHECK(r.E_minus_ev == Approx(0.5).epsilon(0.01));
  CHECK(r.E_plus_ev == Approx(1.5).epsilon(0.01));
  CHECK(r.exact_vs_approx_delta_ev < 1e-10);
  CHECK(r.beta_ev == Approx(cfg.beta_ev));
}

TEST_CASE("gap closes at zero intensity") {
  const auto r = forbidden_band(make_config(589.0, 0.0));
  CHECK(r.gap_term_ev == 0.0);
  CHECK(r.E_minus_ev == r.E_plus_ev);
  CHECK(r.E_minus_ev == Approx(1.10e-7).epsilon(0.01));
  CHECK(r.E_minus_ev == r.recoil_term_ev);
}

TEST_CASE("chained mode yields twice the literal gap term") {
  const auto lit = forbidden_band(make_config(589.0, 3.13e12));
  const auto chain = forbidden_band(make_config(
      589.0, 3.13e12, WavenumberConvention::paper_reciprocal,
      GapFormulaMode::chained));
  CHECK(chain.gap_term_ev == Approx(1.0).epsilon(0.01));
  CHECK(chain.gap_term_ev / lit.gap_term_ev == Approx(2.0).epsilon(1e-10));
  CHECK(chain.gap_term_ev == Approx(2.0 * chain.beta_ev));
}

TEST_CASE("chained/literal ratio is the documented constant 2") {
  for (int i = 0; i < 20; ++i) {
    const double lambda = uniform(80.0, 2500.0);
    const double intensity = std::pow(10.0, uniform(6.0, 13.0));
    const auto lit = forbidden_band(make_config(lambda, intensity));
    const auto chain = forbidden_band(
        make_config(lambda, intensity,
                    WavenumberConvention::paper_reciprocal,
                    GapFormulaMode::chained));
    CHECK(chain.gap_term_ev / lit.gap_term_ev == Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("band structure of the report") {
  for (int i = 0; i < 50; ++i) {
    const double lambda = uniform(80.0, 2500.0);
    const double intensity = uniform(0.0, 5e12);
    for (auto mode : {GapFormulaMode::literal_eq26, GapFormulaMode::chained}) {
      const auto r = forbidden_band(make_config(
          lambda, intensity, WavenumberConvention::paper_reciprocal, mode));
      CHECK(r.E_plus_ev >= r.E_minus_ev);
      CHECK(r.E_plus_ev - r.E_minus_ev ==
            Approx(2.0 * r.gap_term_ev).margin(1e-18));
    }
  }
}

TEST_CASE("forbidden band is monotone in intensity") {
  const double lambda = 589.0;
  double prev_width = -1.0, prev_plus = -1.0;
  for (double intensity : {0.0, 1e10, 1e11, 1e12, 3.13e12, 1e13}) {
    const auto r = forbidden_band(make_config(lambda, intensity));
    const double width = r.E_plus_ev - r.E_minus_ev;
    CHECK(width >= prev_width);
    CHECK(r.E_plus_ev >= prev_plus);
    prev_width = width;
    prev_plus = r.E_plus_ev;
  }
}

TEST_CASE("standard angular convention shifts the chained numbers only") {
  const auto lit_std = forbidden_band(
      make_config(589.0, 3.13e12, WavenumberConvention::standard_angular));
  const auto lit_paper = forbidden_band(make_config(589.0, 3.13e12));
  // literal mode evaluates the printed formulas, independent of convention
  CHECK(lit_std.gap_term_ev == Approx(lit_paper.gap_term_ev));

  const auto chain_std = forbidden_band(
      make_config(589.0, 3.13e12, WavenumberConvention::standard_angular,
                  GapFormulaMode::chained));
  const auto chain_paper = forbidden_band(
      make_config(589.0, 3.13e12, WavenumberConvention::paper_reciprocal,
                  GapFormulaMode::chained));
  // beta scales with 1/omega^2, so the 2 pi convention divides it by (2 pi)^2
  const double two_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  CHECK(chain_std.gap_term_ev ==
        Approx(chain_paper.gap_term_ev / two_pi_sq).epsilon(1e-10));
}
