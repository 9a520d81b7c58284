// stlat: band-structure and forbidden-band engine for a charged particle in
// the spacetime lattice of a standing electromagnetic wave.
//
// Subcommands: gaps, band, zones, verify. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 numerical failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stlat/json_io.hpp"
#include "stlat/quadrature.hpp"
#include "stlat/solver.hpp"
#include "stlat/spectra.hpp"
#include "stlat/svg.hpp"
#include "stlat/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct ConfigOptions {
  std::optional<double> wavelength_nm;
  std::optional<double> intensity_W_cm2;
  std::optional<std::string> convention;
  std::optional<std::string> formula;
  std::string config_path;
};

void add_config_options(CLI::App *cmd, ConfigOptions &opt) {
  cmd->add_option("--wavelength-nm", opt.wavelength_nm,
                  "beam wavelength in nm");
  cmd->add_option("--intensity-W-cm2", opt.intensity_W_cm2,
                  "beam intensity in W/cm^2");
  cmd->add_option("--convention", opt.convention,
                  "wavenumber convention: paper | standard");
  cmd->add_option("--formula", opt.formula,
                  "gap formula mode: literal | chained");
  cmd->add_option("--config", opt.config_path,
                  "JSON config file; explicit flags override file values");
}

/// Flags override config-file values; file values fill the gaps.
stlat::LatticeConfig resolve_config(const ConfigOptions &opt) {
  double wavelength = 0.0, intensity = 0.0;
  auto convention = stlat::WavenumberConvention::paper_reciprocal;
  auto formula = stlat::GapFormulaMode::literal_eq26;
  stlat::Species species = stlat::electron();
  bool have_wavelength = false, have_intensity = false;

  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in)
      throw std::invalid_argument("cannot open config file: " +
                                  opt.config_path);
    const auto j = stlat::ordered_json::parse(in);
    const stlat::LatticeConfig file_cfg = stlat::config_from_json(j);
    wavelength = file_cfg.wavelength_nm;
    intensity = file_cfg.intensity_W_cm2;
    convention = file_cfg.convention;
    formula = file_cfg.formula_mode;
    species = stlat::Species{file_cfg.species_name,
                             file_cfg.particle_rest_energy_ev,
                             file_cfg.particle_charge_C};
    have_wavelength = have_intensity = true;
  }
  if (opt.wavelength_nm) {
    wavelength = *opt.wavelength_nm;
    have_wavelength = true;
  }
  if (opt.intensity_W_cm2) {
    intensity = *opt.intensity_W_cm2;
    have_intensity = true;
  }
  if (!have_wavelength || !have_intensity)
    throw std::invalid_argument(
        "--wavelength-nm and --intensity-W-cm2 are required (directly or via "
        "--config)");
  if (opt.convention)
    convention = stlat::convention_from_string(*opt.convention);
  if (opt.formula)
    formula = stlat::formula_mode_from_string(*opt.formula);
  return stlat::make_config(wavelength, intensity, convention, formula,
                            species);
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomic(const std::string &path, const std::string &content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_manifest(const std::string &command_line,
                    const stlat::LatticeConfig &cfg,
                    const std::vector<std::string> &outputs,
                    const std::string &manifest_path) {
  stlat::ordered_json j{{"command", command_line},
                        {"config_echo", stlat::config_to_json(cfg)},
                        {"tool_version", stlat::kVersion},
                        {"timestamp", iso8601_now()},
                        {"outputs", outputs}};
  write_file_atomic(manifest_path, j.dump(2) + "\n");
}

stlat::EdgeLine parse_edge(const std::string &name,
                           const stlat::LatticeConfig &cfg) {
  const double u = cfg.hbar_c_k_gamma_ev;
  if (name == "E+")
    return {stlat::EdgeLine::Axis::energy, +u};
  if (name == "E-")
    return {stlat::EdgeLine::Axis::energy, -u};
  if (name == "P+")
    return {stlat::EdgeLine::Axis::momentum, +u};
  if (name == "P-")
    return {stlat::EdgeLine::Axis::momentum, -u};
  throw std::invalid_argument("--edge must be one of E+ E- P+ P-");
}

std::string join_args(int argc, char **argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i)
      s += ' ';
    s += argv[i];
  }
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"spacetime-lattice band structure engine"};
  app.set_version_flag("--version", stlat::kVersion);
  app.require_subcommand(1);

  // gaps
  auto *gaps = app.add_subcommand("gaps", "forbidden kinetic-energy band");
  ConfigOptions gaps_opt;
  add_config_options(gaps, gaps_opt);

  // band
  auto *band = app.add_subcommand("band", "edge scan -> CSV (+ SVG)");
  ConfigOptions band_opt;
  add_config_options(band, band_opt);
  std::string edge_name;
  int band_points = 200;
  int truncation = 4;
  double span_ev = 0.0;
  std::string svg_path, out_path = "band.csv";
  band->add_option("--edge", edge_name, "edge line: E+ E- P+ P-")->required();
  band->add_option("--points", band_points, "scan points (default 200)");
  band->add_option("--truncation", truncation,
                   "plane-wave truncation N (default 4)");
  band->add_option("--span-eV", span_ev, "scan span along the free coordinate")
      ->required();
  band->add_option("--svg", svg_path, "also render an SVG diagram");
  band->add_option("--out", out_path, "output CSV path (default band.csv)");

  // zones
  auto *zones = app.add_subcommand("zones", "Brillouin-zone edge table");
  int max_rank = 5;
  zones->add_option("--max-rank", max_rank, "highest rank to list (1..5)");

  // verify
  auto *verify = app.add_subcommand(
      "verify", "quadrature oracle vs closed-form couplings");
  ConfigOptions verify_opt;
  add_config_options(verify, verify_opt);
  int samples = 1000;
  std::uint64_t seed = 0;
  int points = 512;
  verify->add_option("--samples", samples, "random transfers (default 1000)");
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--points", points,
                     "quadrature points per axis (default 512)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gaps->parsed()) {
      const auto cfg = resolve_config(gaps_opt);
      const auto report = stlat::forbidden_band(cfg);
      const std::string out =
          stlat::gap_report_to_json(report, cfg).dump(2) + "\n";
      std::fputs(out.c_str(), stdout);
      return kExitOk;
    }

    if (zones->parsed()) {
      if (max_rank < 1 || max_rank > 5) {
        std::cerr << "--max-rank must be in 1..5\n";
        return kExitUsage;
      }
      const std::string out = stlat::zones_to_json(max_rank).dump(2) + "\n";
      std::fputs(out.c_str(), stdout);
      return kExitOk;
    }

    if (band->parsed()) {
      if (band_points < 1) {
        std::cerr << "--points must be >= 1\n";
        return kExitUsage;
      }
      if (truncation < 2) {
        std::cerr << "--truncation must be >= 2\n";
        return kExitUsage;
      }
      if (!(span_ev >= 0.0)) {
        std::cerr << "--span-eV must be non-negative\n";
        return kExitUsage;
      }
      const auto cfg = resolve_config(band_opt);
      const auto line = parse_edge(edge_name, cfg);
      // scan window centred on the electron-shell crossing of momentum-axis
      // edges; energy-axis edges are scanned symmetrically about cp_z = 0
      const double M = cfg.particle_rest_energy_ev;
      const double center =
          (line.axis == stlat::EdgeLine::Axis::momentum)
              ? std::hypot(M, cfg.hbar_c_k_gamma_ev)
              : 0.0;
      std::vector<double> offsets;
      for (int i = 0; i < band_points; ++i) {
        const double f =
            band_points == 1 ? 0.5
                             : static_cast<double>(i) / (band_points - 1);
        offsets.push_back(center - 0.5 * span_ev + f * span_ev);
      }
      const auto table = stlat::band_scan(line, offsets, truncation, cfg);
      write_file_atomic(out_path, stlat::band_table_to_csv(table));
      std::vector<std::string> outputs{out_path};
      if (!svg_path.empty()) {
        write_file_atomic(svg_path, stlat::render_band_svg(table));
        outputs.push_back(svg_path);
      }
      write_manifest(join_args(argc, argv), cfg, outputs,
                     out_path + ".manifest.json");
      return kExitOk;
    }

    if (verify->parsed()) {
      if (samples < 1) {
        std::cerr << "--samples must be >= 1\n";
        return kExitUsage;
      }
      if (points < 4 || points % 2 != 0) {
        std::cerr << "--points must be even and >= 4\n";
        return kExitUsage;
      }
      ConfigOptions opt = verify_opt;
      if (!opt.wavelength_nm && opt.config_path.empty())
        opt.wavelength_nm = 589.0;
      if (!opt.intensity_W_cm2 && opt.config_path.empty())
        opt.intensity_W_cm2 = 3.13e12;
      const auto cfg = resolve_config(opt);
      const auto report = stlat::selection_rule_scan(cfg, samples, seed, points);
      const std::string out =
          stlat::verify_report_to_json(report, cfg).dump(2) + "\n";
      std::fputs(out.c_str(), stdout);
      return stlat::selection_scan_passes(report, cfg) ? kExitOk
                                                       : kExitVerifyFail;
    }
  } catch (const stlat::EigensolverError &e) {
    std::cerr << "numerical failure: " << e.what()
              << " (worst off-diagonal residual " << e.off_norm() << " eV)\n";
    return kExitNumerical;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
