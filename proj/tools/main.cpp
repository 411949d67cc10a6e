// sfopt: design/analysis CLI for a gram-scale superfluid-helium
// optomechanical transducer (microwave cavity readout of first-sound modes).
//
// Exit codes: 0 success; 1 usage or I/O failure; 2 invalid configuration or
// parameters; 3 a numeric routine failed to converge or a fit degenerated;
// 4 the verification report ran but at least one row missed its tolerance.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfopt/acoustics.hpp"
#include "sfopt/config.hpp"
#include "sfopt/constants.hpp"
#include "sfopt/dissipation.hpp"
#include "sfopt/electromagnetics.hpp"
#include "sfopt/errors.hpp"
#include "sfopt/explorer.hpp"
#include "sfopt/format.hpp"
#include "sfopt/pipeline.hpp"
#include "sfopt/report.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace sfopt;

constexpr double kTwoPi = 2.0 * constants::kPi;

// Writes `content` either to stdout (no output directory configured) or to
// `filename` inside the directory, announcing the path on stderr.
void deliver(const OutputConfig& output, const std::string& filename,
             const std::string& content) {
  if (output.directory.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(output.directory);
  const fs::path path = fs::path(output.directory) / filename;
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << content;
  if (!file.good()) throw std::runtime_error("short write to " + path.string());
  std::cerr << "wrote " << path.string() << "\n";
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

// numbers -> JSON doubles; non-finite values would serialize as null, which
// never happens for the quantities emitted here (validated up front).

ordered_json coupling_json(const CouplingResult& c) {
  return ordered_json{
      {"acoustic_mode", c.acoustic.label()},
      {"em_mode", c.em.label()},
      {"acoustic_frequency_hz", c.acoustic_frequency_hz},
      {"em_frequency_hz", c.em_frequency_hz},
      {"v_eff_m3", c.v_eff_m3},
      {"omega_overlap", c.omega_overlap},
      {"dwc_dp_rad_s_per_pa", c.dwc_dp},
      {"dwc_dp_hz_per_pa", c.dwc_dp / kTwoPi},
      {"dp_sql_pa", c.dp_sql},
      {"g0_rad_s", c.g0},
      {"sideband_resolved", c.sideband_resolved},
  };
}

// ---- modes ----------------------------------------------------------------

int cmd_modes(const RunConfig& config, double f_max_hz) {
  const std::vector<AcousticMode> modes = enumerate_acoustic_modes(
      config.system.geometry, config.system.helium.sound_speed_m_s, f_max_hz,
      config.system.quadrature);
  if (config.output.format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const AcousticMode& mode : modes) {
      rows.push_back(ordered_json{{"m", mode.index.m},
                                  {"n", mode.index.n},
                                  {"k", mode.index.k},
                                  {"frequency_hz", mode.frequency_hz},
                                  {"v_eff_m3", mode.v_eff_m3},
                                  {"has_radial_node", mode.has_radial_node},
                                  {"degeneracy", mode.degeneracy}});
    }
    deliver(config.output, "modes.json",
            json_text(ordered_json{{"f_max_hz", f_max_hz}, {"modes", rows}}));
    return 0;
  }
  std::string csv = csv_line(
      {"m", "n", "k", "frequency_hz", "v_eff_m3", "has_radial_node", "degeneracy"});
  for (const AcousticMode& mode : modes) {
    csv += csv_line({std::to_string(mode.index.m), std::to_string(mode.index.n),
                     std::to_string(mode.index.k), format_double(mode.frequency_hz),
                     format_double(mode.v_eff_m3),
                     mode.has_radial_node ? "true" : "false",
                     std::to_string(mode.degeneracy)});
  }
  deliver(config.output, "modes.csv", csv);
  return 0;
}

// ---- em -------------------------------------------------------------------

int cmd_em(const RunConfig& config, double f_max_hz, bool vacuum) {
  const double eps_r = vacuum ? 1.0 : config.system.helium.epsilon_r;
  const std::vector<EmMode> modes =
      enumerate_em_modes(config.system.geometry, eps_r, f_max_hz);
  if (config.output.format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const EmMode& mode : modes) {
      rows.push_back(ordered_json{
          {"family", mode.index.family == EmFamily::TE ? "TE" : "TM"},
          {"m", mode.index.m},
          {"n", mode.index.n},
          {"p", mode.index.p},
          {"frequency_hz", mode.frequency_hz}});
    }
    deliver(config.output, "em.json",
            json_text(ordered_json{
                {"f_max_hz", f_max_hz}, {"eps_r", eps_r}, {"modes", rows}}));
    return 0;
  }
  std::string csv = csv_line({"family", "m", "n", "p", "frequency_hz"});
  for (const EmMode& mode : modes) {
    csv += csv_line({mode.index.family == EmFamily::TE ? "TE" : "TM",
                     std::to_string(mode.index.m), std::to_string(mode.index.n),
                     std::to_string(mode.index.p), format_double(mode.frequency_hz)});
  }
  deliver(config.output, "em.csv", csv);
  return 0;
}

// ---- couple -----------------------------------------------------------------

int cmd_couple(const RunConfig& config, const std::string& acoustic_label,
               const std::string& em_label) {
  const SystemParams& sys = config.system;
  const AcousticModeIndex acoustic = AcousticModeIndex::parse(acoustic_label);
  const EmModeIndex em = EmModeIndex::parse(em_label);
  const PointEvaluation point = evaluate_point(sys, acoustic, em);
  ordered_json j = coupling_json(point.coupling);
  j["sideband_margin"] = point.sideband_margin;
  j["q_total"] = point.budget.q_total;
  j["tau_n_s"] = point.budget.tau_n_s;
  if (point.p_min_pa) j["p_min_pa"] = *point.p_min_pa;
  if (point.noise_temperature_k) j["noise_temperature_k"] = *point.noise_temperature_k;
  deliver(config.output, "couple.json", json_text(j));
  return 0;
}

// ---- losses -----------------------------------------------------------------

int cmd_losses(const RunConfig& config, double t_min, double t_max, int points) {
  if (!(t_min > 0.0) || !(t_max > t_min)) {
    throw ValidationError("losses.tmin/tmax", "need 0 < tmin < tmax");
  }
  if (points < 2) throw ValidationError("losses.points", "need at least 2 points");
  std::vector<double> temps(points);
  for (int i = 0; i < points; ++i) {
    temps[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (points - 1));
  }
  temps.back() = t_max;
  const double omega_m = kTwoPi * config.system.operating.mode_frequency_hz;
  const std::vector<LossBudget> budgets = q_vs_temperature(
      temps, omega_m, config.system.losses, config.system.helium, config.system.niobium);

  if (config.output.format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const LossBudget& b : budgets) {
      ordered_json row{{"temperature_k", b.temperature_k}};
      if (b.q_three_phonon) row["q_three_phonon"] = *b.q_three_phonon;
      if (b.q_he3) row["q_he3"] = *b.q_he3;
      if (b.q_wall) row["q_wall"] = *b.q_wall;
      row["q_total"] = b.q_total;
      row["tau_n_s"] = b.tau_n_s;
      rows.push_back(row);
    }
    deliver(config.output, "losses.json",
            json_text(ordered_json{{"omega_m_rad_s", omega_m}, {"budgets", rows}}));
    return 0;
  }
  std::string csv =
      csv_line({"temperature_k", "q_three_phonon", "q_he3", "q_wall", "q_total", "tau_n_s"});
  for (const LossBudget& b : budgets) {
    csv += csv_line({format_double(b.temperature_k),
                     b.q_three_phonon ? format_double(*b.q_three_phonon) : "",
                     b.q_he3 ? format_double(*b.q_he3) : "",
                     b.q_wall ? format_double(*b.q_wall) : "",
                     format_double(b.q_total), format_double(b.tau_n_s)});
  }
  deliver(config.output, "losses.csv", csv);
  return 0;
}

// ---- sense ------------------------------------------------------------------

int cmd_sense(const RunConfig& config) {
  const SensitivityReport s = make_sensitivity_report(config.system);
  if (config.output.format == OutputFormat::Json) {
    deliver(config.output, "sense.json",
            json_text(ordered_json{
                {"mass_kg", s.mass_kg},
                {"omega_m_rad_s", s.omega_m},
                {"dwc_dp_rad_s_per_pa", s.dwc_dp},
                {"p_cavity_w", s.p_cavity_w},
                {"p_helium_w", s.p_helium_w},
                {"p_min_pa", s.p_min_pa},
                {"noise_temperature_k", s.t_noise_k},
                {"dp_sql_pa", s.dp_sql_pa},
                {"noise_temperature_sql_k", s.t_noise_sql_k},
                {"x_th_m", s.x_th_m},
                {"x0_m", s.x0_m},
                {"strain_h", s.strain_h},
                {"strain_baseline_m", s.strain_baseline_m},
                {"spring_constant_n_m", s.spring_constant_n_m},
                {"sideband_resolved", s.sideband_resolved}}));
    return 0;
  }
  std::string out;
  char line[160];
  auto row = [&](const char* name, double value, const char* unit) {
    std::snprintf(line, sizeof(line), "%-28s %14s %s\n", name,
                  format_double(value, 6).c_str(), unit);
    out += line;
  };
  row("helium_mass", s.mass_kg, "kg");
  row("mode_frequency", s.omega_m / kTwoPi, "Hz");
  row("dwc_dp", s.dwc_dp, "rad/s/Pa");
  row("cavity_heating", s.p_cavity_w, "W");
  row("helium_heating_bound", s.p_helium_w, "W");
  row("pressure_resolution", s.p_min_pa, "Pa");
  row("noise_temperature", s.t_noise_k, "K");
  row("zero_point_pressure", s.dp_sql_pa, "Pa");
  row("noise_temperature_sql", s.t_noise_sql_k, "K");
  row("thermal_displacement", s.x_th_m, "m");
  row("displacement_floor", s.x0_m, "m");
  row("strain_floor", s.strain_h, "");
  row("strain_baseline", s.strain_baseline_m, "m");
  row("spring_constant", s.spring_constant_n_m, "N/m");
  out += std::string("sideband_resolved            ") +
         (s.sideband_resolved ? "true" : "false") + "\n";
  deliver(config.output, "sense.txt", out);
  return 0;
}

// ---- sweep --------------------------------------------------------------------

ordered_json sweep_row_json(const SweepRow& row, const std::vector<SweepAxis>& axes) {
  ordered_json coords = ordered_json::object();
  for (size_t a = 0; a < axes.size(); ++a) {
    coords[to_string(axes[a].parameter)] = row.coordinates[a];
  }
  ordered_json j{{"coordinates", coords}, {"ok", row.ok}};
  if (!row.ok) {
    j["error"] = row.error;
    return j;
  }
  j["acoustic_mode"] = row.acoustic.label();
  j["em_mode"] = row.em.label();
  j["acoustic_frequency_hz"] = row.acoustic_frequency_hz;
  j["em_frequency_hz"] = row.em_frequency_hz;
  j["v_eff_m3"] = row.v_eff_m3;
  j["omega_overlap"] = row.omega_overlap;
  j["dwc_dp_rad_s_per_pa"] = row.dwc_dp;
  j["dp_sql_pa"] = row.dp_sql_pa;
  j["g0_rad_s"] = row.g0;
  j["sideband_resolved"] = row.sideband_resolved;
  j["q_total"] = row.q_total;
  j["tau_n_s"] = row.tau_n_s;
  j["sideband_margin"] = row.sideband_margin;
  if (row.noise_temperature_k) j["noise_temperature_k"] = *row.noise_temperature_k;
  j["fom_value"] = row.fom_value;
  return j;
}

std::string sweep_csv(const SweepResult& result) {
  std::vector<std::string> header;
  for (const SweepAxis& axis : result.axes) header.push_back(to_string(axis.parameter));
  for (const char* name :
       {"ok", "acoustic_m", "acoustic_n", "acoustic_k", "em_family", "em_m", "em_n",
        "em_p", "acoustic_frequency_hz", "em_frequency_hz", "v_eff_m3", "omega_overlap",
        "dwc_dp_rad_s_per_pa", "dp_sql_pa", "g0_rad_s", "sideband_resolved", "q_total",
        "tau_n_s", "sideband_margin", "noise_temperature_k", "fom_value"}) {
    header.push_back(name);
  }
  std::string csv = csv_line(header);
  for (const SweepRow& row : result.rows) {
    std::vector<std::string> cells;
    for (double c : row.coordinates) cells.push_back(format_double(c));
    if (!row.ok) {
      cells.push_back("false");
      cells.resize(header.size());  // empty data cells; reason goes to stderr/JSON
    } else {
      cells.push_back("true");
      cells.push_back(std::to_string(row.acoustic.m));
      cells.push_back(std::to_string(row.acoustic.n));
      cells.push_back(std::to_string(row.acoustic.k));
      cells.push_back(row.em.family == EmFamily::TE ? "TE" : "TM");
      cells.push_back(std::to_string(row.em.m));
      cells.push_back(std::to_string(row.em.n));
      cells.push_back(std::to_string(row.em.p));
      cells.push_back(format_double(row.acoustic_frequency_hz));
      cells.push_back(format_double(row.em_frequency_hz));
      cells.push_back(format_double(row.v_eff_m3));
      cells.push_back(format_double(row.omega_overlap));
      cells.push_back(format_double(row.dwc_dp));
      cells.push_back(format_double(row.dp_sql_pa));
      cells.push_back(format_double(row.g0));
      cells.push_back(row.sideband_resolved ? "true" : "false");
      cells.push_back(format_double(row.q_total));
      cells.push_back(format_double(row.tau_n_s));
      cells.push_back(format_double(row.sideband_margin));
      cells.push_back(row.noise_temperature_k ? format_double(*row.noise_temperature_k)
                                              : "");
      cells.push_back(format_double(row.fom_value));
    }
    csv += csv_line(cells);
  }
  return csv;
}

int cmd_sweep(const RunConfig& config) {
  if (!config.sweep) {
    throw ConfigError("the sweep command needs a [sweep] block in the config file");
  }
  const SweepConfig& sc = *config.sweep;
  const SweepResult result = run_sweep(config.system, sc.axes, sc.rule, sc.em, sc.fom,
                                       sc.max_evaluations);
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (!result.rows[i].ok) {
      std::cerr << "row " << i << " flagged: " << result.rows[i].error << "\n";
    }
  }

  ordered_json best;
  if (result.best_row) {
    best = sweep_row_json(result.rows[*result.best_row], result.axes);
    best["row_index"] = *result.best_row;
  }

  if (config.output.format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const SweepRow& row : result.rows) rows.push_back(sweep_row_json(row, result.axes));
    ordered_json j{{"figure_of_merit", to_string(result.fom)}, {"rows", rows}};
    if (result.best_row) j["best"] = best;
    deliver(config.output, "sweep.json", json_text(j));
    return 0;
  }

  deliver(config.output, "sweep.csv", sweep_csv(result));
  if (result.best_row) {
    if (config.output.directory.empty()) {
      std::cerr << "best row " << *result.best_row << ": " << to_string(result.fom)
                << " = " << format_double(result.rows[*result.best_row].fom_value) << "\n";
    } else {
      deliver(config.output, "sweep_best.json", json_text(best));
    }
  } else {
    std::cerr << "no row evaluated cleanly; no best row\n";
  }
  return 0;
}

// ---- optimize -------------------------------------------------------------------

int cmd_optimize(const RunConfig& config) {
  if (!config.optimize) {
    throw ConfigError("the optimize command needs an [optimize] block in the config file");
  }
  const OptimizeSpec& spec = config.optimize->spec;
  const OptimizeResult result = run_optimize(config.system, spec);
  deliver(config.output, "optimize.json",
          json_text(ordered_json{{"parameter", to_string(spec.parameter)},
                                 {"parameter_value", result.parameter_value},
                                 {"figure_of_merit", to_string(spec.fom)},
                                 {"fom_value", result.fom_value},
                                 {"evaluations", result.evaluations}}));
  return 0;
}

// ---- report ---------------------------------------------------------------------

int cmd_report(const RunConfig& config) {
  const Report report = build_report(config.system);
  if (config.output.format == OutputFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : report.rows) {
      rows.push_back(ordered_json{{"name", row.name},
                                  {"unit", row.unit},
                                  {"computed", row.computed},
                                  {"reference", row.reference},
                                  {"tolerance", row.tolerance},
                                  {"kind", to_string(row.kind)},
                                  {"rel_deviation", row.rel_deviation},
                                  {"pass", row.pass},
                                  {"note", row.note}});
    }
    deliver(config.output, "report.json",
            json_text(ordered_json{{"rows", rows}, {"all_pass", report.all_pass}}));
  } else {
    deliver(config.output, "report.txt", format_report_text(report));
  }
  if (!report.all_pass) {
    std::cerr << "report: at least one row missed its tolerance\n";
    return 4;
  }
  return 0;
}

// ---- defaults -------------------------------------------------------------------

int cmd_defaults(const RunConfig& config) {
  deliver(config.output, "defaults.ini", emit_config(default_config()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Design/analysis toolkit for a gram-scale superfluid-helium acoustic\n"
      "transducer read out by a microwave cavity."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format_name;
  app.add_option("-c,--config", config_path, "INI config file (see `sfopt defaults`)");
  app.add_option("-o,--out", out_dir,
                 "output directory (default: print to stdout)");
  app.add_option("-f,--format", format_name, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  double modes_fmax = 12.4e3;
  CLI::App* modes = app.add_subcommand(
      "modes", "enumerate acoustic modes up to a frequency cap");
  modes->add_option("--fmax", modes_fmax, "frequency cap [Hz]")
      ->capture_default_str();

  double em_fmax = 12e9;
  bool em_vacuum = false;
  CLI::App* em = app.add_subcommand(
      "em", "enumerate microwave modes up to a frequency cap");
  em->add_option("--fmax", em_fmax, "frequency cap [Hz]")->capture_default_str();
  em->add_flag("--vacuum", em_vacuum, "evacuated cell (eps_r = 1)");

  std::vector<std::string> pair;
  CLI::App* couple = app.add_subcommand(
      "couple", "parametric coupling of one acoustic/EM mode pair");
  couple->add_option("--pair", pair, "acoustic and EM mode, e.g. --pair 0,1,2 TE,0,1,1")
      ->expected(2)
      ->required();

  double t_min = 1e-3, t_max = 0.5;
  int t_points = 25;
  CLI::App* losses = app.add_subcommand(
      "losses", "acoustic loss budget over a temperature range");
  losses->add_option("--tmin", t_min, "lowest temperature [K]")->capture_default_str();
  losses->add_option("--tmax", t_max, "highest temperature [K]")->capture_default_str();
  losses->add_option("--points", t_points, "number of log-spaced points")
      ->capture_default_str();

  CLI::App* sense = app.add_subcommand(
      "sense", "operating-point sensitivity chain (needs phase_noise.bandwidth_hz)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Cartesian parameter sweep from the config's [sweep] block");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "1-D figure-of-merit maximization from the config's [optimize] block");

  CLI::App* report = app.add_subcommand(
      "report", "recompute every documented design figure and check tolerances");

  CLI::App* defaults = app.add_subcommand(
      "defaults", "emit the default config file");

  // Let the global --config/--out/--format options appear after the
  // subcommand name as well.
  for (CLI::App* sub : {modes, em, couple, losses, sense, sweep, optimize, report, defaults}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig config = config_path.empty() ? default_config() : load_config(config_path);
    if (!out_dir.empty()) config.output.directory = out_dir;
    if (!format_name.empty()) {
      config.output.format = format_name == "json" ? OutputFormat::Json : OutputFormat::Csv;
    }

    if (modes->parsed()) return cmd_modes(config, modes_fmax);
    if (em->parsed()) return cmd_em(config, em_fmax, em_vacuum);
    if (couple->parsed()) return cmd_couple(config, pair[0], pair[1]);
    if (losses->parsed()) return cmd_losses(config, t_min, t_max, t_points);
    if (sense->parsed()) return cmd_sense(config);
    if (sweep->parsed()) return cmd_sweep(config);
    if (optimize->parsed()) return cmd_optimize(config);
    if (report->parsed()) return cmd_report(config);
    if (defaults->parsed()) return cmd_defaults(config);
    std::cerr << "no subcommand\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedModeError& e) {
    std::cerr << "unsupported mode: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << " (estimate " << e.estimate()
              << ", bound " << e.error_bound() << ")\n";
    return 3;
  } catch (const FitError& e) {
    std::cerr << "fit failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
