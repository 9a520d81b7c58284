#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "stlat/brillouin.hpp"
#include "stlat/lattice.hpp"
#include "stlat/quadrature.hpp"
#include "stlat/spectra.hpp"

namespace stlat {

using ordered_json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so emitted JSON numbers are short and
/// byte-stable across runs.
inline double round_12sig(double x) {
  if (!std::isfinite(x) || x == 0.0)
    return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string to_string(WavenumberConvention c) {
  return c == WavenumberConvention::paper_reciprocal ? "paper" : "standard";
}

inline std::string to_string(GapFormulaMode m) {
  return m == GapFormulaMode::literal_eq26 ? "literal" : "chained";
}

inline WavenumberConvention convention_from_string(const std::string &s) {
  if (s == "paper")
    return WavenumberConvention::paper_reciprocal;
  if (s == "standard")
    return WavenumberConvention::standard_angular;
  throw std::invalid_argument("convention must be 'paper' or 'standard'");
}

inline GapFormulaMode formula_mode_from_string(const std::string &s) {
  if (s == "literal")
    return GapFormulaMode::literal_eq26;
  if (s == "chained")
    return GapFormulaMode::chained;
  throw std::invalid_argument("formula mode must be 'literal' or 'chained'");
}

inline ordered_json config_to_json(const LatticeConfig &cfg) {
  return ordered_json{{"wavelength_nm", round_12sig(cfg.wavelength_nm)},
                      {"intensity_W_cm2", round_12sig(cfg.intensity_W_cm2)},
                      {"convention", to_string(cfg.convention)},
                      {"formula_mode", to_string(cfg.formula_mode)},
                      {"species", cfg.species_name}};
}

inline LatticeConfig config_from_json(const ordered_json &j) {
  Species sp = electron();
  if (j.contains("species")) {
    if (j.at("species").is_string()) {
      const std::string name = j.at("species").get<std::string>();
      if (name != "electron")
        throw std::invalid_argument("unknown species name: " + name);
    } else {
      const auto &s = j.at("species");
      sp = Species{s.at("name").get<std::string>(),
                   s.at("rest_energy_ev").get<double>(),
                   s.at("charge_C").get<double>()};
    }
  }
  return make_config(
      j.at("wavelength_nm").get<double>(),
      j.at("intensity_W_cm2").get<double>(),
      j.contains("convention")
          ? convention_from_string(j.at("convention").get<std::string>())
          : WavenumberConvention::paper_reciprocal,
      j.contains("formula_mode")
          ? formula_mode_from_string(j.at("formula_mode").get<std::string>())
          : GapFormulaMode::literal_eq26,
      sp);
}

inline ordered_json gap_report_to_json(const GapReport &r,
                                       const LatticeConfig &cfg) {
  return ordered_json{
      {"E_minus_eV", round_12sig(r.E_minus_ev)},
      {"E_plus_eV", round_12sig(r.E_plus_ev)},
      {"recoil_term_eV", round_12sig(r.recoil_term_ev)},
      {"gap_term_eV", round_12sig(r.gap_term_ev)},
      {"beta_eV", round_12sig(r.beta_ev)},
      {"formula_mode", to_string(r.formula_mode)},
      {"convention", to_string(r.convention)},
      {"exact_vs_approx_delta_eV", round_12sig(r.exact_vs_approx_delta_ev)},
      {"config", config_to_json(cfg)}};
}

inline ordered_json zones_to_json(int max_rank) {
  ordered_json zones = ordered_json::array();
  for (int rank = 1; rank <= max_rank; ++rank) {
    const ZoneEdgeClass z = zone_edges(rank);
    ordered_json transfers = ordered_json::array();
    for (const auto &t : z.transfers)
      transfers.push_back({t.n_E, t.n_p});
    zones.push_back(ordered_json{{"rank", rank}, {"transfers", transfers}});
  }
  return ordered_json{{"zones", zones}};
}

inline ordered_json verify_report_to_json(const SelectionRuleReport &r,
                                          const LatticeConfig &cfg) {
  auto channel = [](const char *name, const ChannelScanReport &c) {
    return ordered_json{
        {"channel", name},
        {"max_on_inventory_rel_err", round_12sig(c.max_on_inventory_rel_err)},
        {"max_off_inventory_abs_eV",
         round_12sig(c.max_off_inventory_abs_ev)}};
  };
  return ordered_json{
      {"channels", ordered_json::array({channel("linear_A", r.linear),
                                        channel("quadratic_A2", r.quadratic)})},
      {"points", r.points},
      {"seed", r.seed},
      {"samples", r.samples},
      {"pass", selection_scan_passes(r, cfg)},
      {"config", config_to_json(cfg)}};
}

} // namespace stlat
