#include "sfopt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"
#include "sfopt/format.hpp"

namespace sfopt {

namespace {

constexpr double kTwoPi = 2.0 * constants::kPi;

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& value, int line, const std::string& path) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError("expected a number, got an empty value", line, path);
  char* end = nullptr;
  const double parsed = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size()) {
    throw ConfigError("expected a number, got '" + v + "'", line, path);
  }
  return parsed;
}

long parse_int(const std::string& value, int line, const std::string& path) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError("expected an integer, got an empty value", line, path);
  char* end = nullptr;
  const long parsed = std::strtol(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size()) {
    throw ConfigError("expected an integer, got '" + v + "'", line, path);
  }
  return parsed;
}

bool parse_bool(const std::string& value, int line, const std::string& path) {
  const std::string v = trim(value);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("expected 'true' or 'false', got '" + v + "'", line, path);
}

std::vector<double> parse_double_list(const std::string& value, int line,
                                      const std::string& path) {
  std::vector<double> values;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) {
    values.push_back(parse_double(item, line, path));
  }
  if (values.empty()) {
    throw ConfigError("expected a comma-separated list of numbers", line, path);
  }
  return values;
}

// Raw per-section drafts for the blocks that need cross-key assembly.
struct AxisDraft {
  int line = 0;
  std::optional<std::string> parameter;
  std::optional<std::vector<double>> values;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<int> count;
  std::optional<std::string> scale;
};

struct SweepDraft {
  bool seen = false;
  int line = 0;
  std::optional<std::string> figure_of_merit;
  std::optional<std::string> mode_rule;
  std::optional<std::string> acoustic_mode;
  std::optional<std::string> em_mode;
  std::optional<double> track_target_hz;
  std::optional<long> max_evaluations;
};

struct OptimizeDraft {
  bool seen = false;
  int line = 0;
  std::optional<std::string> parameter;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<std::string> figure_of_merit;
  std::optional<std::string> mode_rule;
  std::optional<std::string> acoustic_mode;
  std::optional<std::string> em_mode;
  std::optional<double> track_target_hz;
  std::optional<double> rel_tol;
  std::optional<long> grid_points;
};

// Translates ValidationError (field-path flavored) thrown by domain parsers
// into ConfigError carrying the config line.
template <typename F>
auto at_line(int line, const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what(), line, path);
  }
}

ModeSelectionRule assemble_rule(const std::optional<std::string>& mode_rule,
                                const std::optional<std::string>& acoustic_mode,
                                const std::optional<double>& track_target_hz, int line,
                                const std::string& section) {
  ModeSelectionRule rule;
  if (mode_rule) {
    if (*mode_rule == "fixed") {
      rule.kind = ModeSelectionRule::Kind::Fixed;
    } else if (*mode_rule == "track") {
      rule.kind = ModeSelectionRule::Kind::Track;
    } else {
      throw ConfigError("expected 'fixed' or 'track', got '" + *mode_rule + "'", line,
                        section + ".mode_rule");
    }
  }
  if (acoustic_mode) {
    rule.fixed = at_line(line, section + ".acoustic_mode",
                         [&] { return AcousticModeIndex::parse(*acoustic_mode); });
  }
  if (track_target_hz) rule.track_target_hz = *track_target_hz;
  if (rule.kind == ModeSelectionRule::Kind::Track && !track_target_hz) {
    throw ConfigError("mode_rule = track needs track_target_hz", line,
                      section + ".track_target_hz");
  }
  return rule;
}

}  // namespace

RunConfig default_config() {
  RunConfig config;
  // The one mandatory-per-command field gets the documented reference value
  // in the emitted defaults: 0.042 Hz is the analysis bandwidth that makes
  // the default -110 dBc/Hz readout reproduce the canonical ~3 mPa pressure
  // resolution at a 10 kHz mode.
  config.system.phase_noise.bandwidth_hz = 0.042;
  return config;
}

RunConfig parse_config(const std::string& text, const std::string& source_name) {
  RunConfig config;  // starts from all defaults; keys overwrite
  std::string section;
  std::set<std::string> seen_keys;
  std::map<int, AxisDraft> axis_drafts;
  SweepDraft sweep_draft;
  OptimizeDraft optimize_draft;

  static const std::set<std::string> kSections = {
      "geometry", "helium",     "niobium",         "cavity",   "losses", "he3_loss",
      "wall_loss", "pump",      "phase_noise",     "operating_point",    "quadrature",
      "sweep",     "optimize",  "output"};

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("unterminated section header", line_no, "");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError("empty section name", line_no, "");
      if (section.rfind("sweep.axis.", 0) == 0) {
        const std::string tail = section.substr(std::string("sweep.axis.").size());
        const long n = parse_int(tail, line_no, section);
        if (n < 1 || n > 9) {
          throw ConfigError("axis number must lie in [1, 9]", line_no, section);
        }
        axis_drafts[static_cast<int>(n)].line = line_no;
      } else if (kSections.count(section) == 0) {
        throw ConfigError("unknown section '" + section + "'", line_no, section);
      } else if (section == "sweep") {
        sweep_draft.seen = true;
        sweep_draft.line = line_no;
      } else if (section == "optimize") {
        optimize_draft.seen = true;
        optimize_draft.line = line_no;
      }
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value' or '[section]'", line_no,
                        section.empty() ? "" : section);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line_no, section);
    const std::string path = section.empty() ? key : section + "." + key;
    if (!seen_keys.insert(path).second) {
      throw ConfigError("duplicate key", line_no, path);
    }

    auto number = [&] { return parse_double(value, line_no, path); };
    auto integer = [&] { return parse_int(value, line_no, path); };
    auto boolean = [&] { return parse_bool(value, line_no, path); };

    SystemParams& sys = config.system;
    bool handled = true;
    if (section.empty()) {
      if (key == "schema_version") {
        if (integer() != kConfigSchemaVersion) {
          throw ConfigError("unsupported schema version (expected " +
                                std::to_string(kConfigSchemaVersion) + ")",
                            line_no, path);
        }
      } else {
        handled = false;
      }
    } else if (section == "geometry") {
      if (key == "radius_m") sys.geometry.radius_m = number();
      else if (key == "length_m") sys.geometry.length_m = number();
      else handled = false;
    } else if (section == "helium") {
      if (key == "density_kg_m3") sys.helium.density_kg_m3 = number();
      else if (key == "sound_speed_m_s") sys.helium.sound_speed_m_s = number();
      else if (key == "compressibility_per_pa") sys.helium.compressibility_per_pa = number();
      else if (key == "epsilon_r") sys.helium.epsilon_r = number();
      else if (key == "grueneisen") sys.helium.grueneisen = number();
      else if (key == "dielectric_loss_max") sys.helium.dielectric_loss_max = number();
      else if (key == "he3_fraction") sys.helium.he3_fraction = number();
      else handled = false;
    } else if (section == "niobium") {
      if (key == "density_kg_m3") sys.niobium.density_kg_m3 = number();
      else if (key == "q_mech") sys.niobium.q_mech = number();
      else handled = false;
    } else if (section == "cavity") {
      if (key == "frequency_hz") sys.cavity.omega_c = kTwoPi * number();
      else if (key == "kappa_int_hz") sys.cavity.kappa_int = kTwoPi * number();
      else if (key == "kappa_in_hz") sys.cavity.kappa_in = kTwoPi * number();
      else if (key == "kappa_out_hz") sys.cavity.kappa_out = kTwoPi * number();
      else handled = false;
    } else if (section == "losses") {
      if (key == "three_phonon") sys.losses.three_phonon = boolean();
      else handled = false;
    } else if (section == "he3_loss") {
      if (key == "enabled") sys.losses.he3.enabled = boolean();
      else if (key == "coefficient_a") sys.losses.he3.coefficient_a = number();
      else handled = false;
    } else if (section == "wall_loss") {
      if (key == "energy_fraction") sys.losses.wall.energy_fraction = number();
      else handled = false;
    } else if (section == "pump") {
      if (key == "n_photons") sys.pump.n_photons = number();
      else if (key == "detuning_hz") sys.pump.detuning = kTwoPi * number();
      else handled = false;
    } else if (section == "phase_noise") {
      if (key == "level_dbc_hz") sys.phase_noise.level_dbc_hz = number();
      else if (key == "offset_hz") sys.phase_noise.offset_hz = number();
      else if (key == "bandwidth_hz") sys.phase_noise.bandwidth_hz = number();
      else handled = false;
    } else if (section == "operating_point") {
      if (key == "temperature_k") sys.operating.temperature_k = number();
      else if (key == "mode_frequency_hz") sys.operating.mode_frequency_hz = number();
      else if (key == "q_acoustic") sys.operating.q_acoustic = number();
      else if (key == "v_eff_m3") sys.operating.v_eff_m3 = number();
      else if (key == "omega_overlap") sys.operating.omega_overlap = number();
      else if (key == "strain_baseline_m") sys.operating.strain_baseline_m = number();
      else handled = false;
    } else if (section == "quadrature") {
      if (key == "rel_tol") sys.quadrature.rel_tol = number();
      else if (key == "max_panels") sys.quadrature.max_panels = static_cast<int>(integer());
      else handled = false;
    } else if (section == "sweep") {
      if (key == "figure_of_merit") sweep_draft.figure_of_merit = value;
      else if (key == "mode_rule") sweep_draft.mode_rule = value;
      else if (key == "acoustic_mode") sweep_draft.acoustic_mode = value;
      else if (key == "em_mode") sweep_draft.em_mode = value;
      else if (key == "track_target_hz") sweep_draft.track_target_hz = number();
      else if (key == "max_evaluations") sweep_draft.max_evaluations = integer();
      else handled = false;
    } else if (section.rfind("sweep.axis.", 0) == 0) {
      AxisDraft& draft = axis_drafts[static_cast<int>(
          parse_int(section.substr(std::string("sweep.axis.").size()), line_no, section))];
      if (key == "parameter") draft.parameter = value;
      else if (key == "values") draft.values = parse_double_list(value, line_no, path);
      else if (key == "min") draft.min = number();
      else if (key == "max") draft.max = number();
      else if (key == "count") draft.count = static_cast<int>(integer());
      else if (key == "scale") draft.scale = value;
      else handled = false;
    } else if (section == "optimize") {
      if (key == "parameter") optimize_draft.parameter = value;
      else if (key == "min") optimize_draft.min = number();
      else if (key == "max") optimize_draft.max = number();
      else if (key == "figure_of_merit") optimize_draft.figure_of_merit = value;
      else if (key == "mode_rule") optimize_draft.mode_rule = value;
      else if (key == "acoustic_mode") optimize_draft.acoustic_mode = value;
      else if (key == "em_mode") optimize_draft.em_mode = value;
      else if (key == "track_target_hz") optimize_draft.track_target_hz = number();
      else if (key == "rel_tol") optimize_draft.rel_tol = number();
      else if (key == "grid_points") optimize_draft.grid_points = integer();
      else handled = false;
    } else if (section == "output") {
      if (key == "directory") config.output.directory = value;
      else if (key == "format") {
        if (value == "csv") config.output.format = OutputFormat::Csv;
        else if (value == "json") config.output.format = OutputFormat::Json;
        else throw ConfigError("expected 'csv' or 'json', got '" + value + "'", line_no, path);
      } else handled = false;
    } else {
      handled = false;
    }
    if (!handled) {
      throw ConfigError("unknown key", line_no, path);
    }
  }

  // ---- assemble the sweep block -----------------------------------------
  if (sweep_draft.seen || !axis_drafts.empty()) {
    if (axis_drafts.empty()) {
      throw ConfigError("a [sweep] block needs at least one [sweep.axis.N] section",
                        sweep_draft.line, "sweep");
    }
    SweepConfig sweep;
    int expected = 1;
    for (const auto& [n, draft] : axis_drafts) {
      if (n != expected) {
        throw ConfigError("axis sections must be numbered 1..N without gaps", draft.line,
                          "sweep.axis." + std::to_string(n));
      }
      ++expected;
      const std::string axis_path = "sweep.axis." + std::to_string(n);
      if (!draft.parameter) {
        throw ConfigError("axis needs a parameter", draft.line, axis_path + ".parameter");
      }
      const SweepParameter parameter = at_line(
          draft.line, axis_path + ".parameter",
          [&] { return parse_sweep_parameter(*draft.parameter); });
      const bool has_grid = draft.min || draft.max || draft.count || draft.scale;
      if (draft.values && has_grid) {
        throw ConfigError("give either values or min/max/count, not both", draft.line,
                          axis_path);
      }
      SweepAxis axis;
      if (draft.values) {
        axis.parameter = parameter;
        axis.values = *draft.values;
        at_line(draft.line, axis_path + ".values", [&] { axis.validate(); return 0; });
      } else if (has_grid) {
        if (!draft.min || !draft.max || !draft.count) {
          throw ConfigError("grid axes need min, max, and count", draft.line, axis_path);
        }
        const std::string scale = draft.scale.value_or("linear");
        if (scale == "linear") {
          axis = at_line(draft.line, axis_path, [&] {
            return linspace_axis(parameter, *draft.min, *draft.max, *draft.count);
          });
        } else if (scale == "log") {
          axis = at_line(draft.line, axis_path, [&] {
            return logspace_axis(parameter, *draft.min, *draft.max, *draft.count);
          });
        } else {
          throw ConfigError("expected scale = linear or log, got '" + scale + "'", draft.line,
                            axis_path + ".scale");
        }
      } else {
        throw ConfigError("axis needs either values or min/max/count", draft.line, axis_path);
      }
      sweep.axes.push_back(std::move(axis));
    }
    if (sweep_draft.figure_of_merit) {
      sweep.fom = at_line(sweep_draft.line, "sweep.figure_of_merit",
                          [&] { return parse_figure_of_merit(*sweep_draft.figure_of_merit); });
    }
    sweep.rule = assemble_rule(sweep_draft.mode_rule, sweep_draft.acoustic_mode,
                               sweep_draft.track_target_hz, sweep_draft.line, "sweep");
    if (sweep_draft.em_mode) {
      sweep.em = at_line(sweep_draft.line, "sweep.em_mode",
                         [&] { return EmModeIndex::parse(*sweep_draft.em_mode); });
    }
    if (sweep_draft.max_evaluations) {
      if (*sweep_draft.max_evaluations < 1) {
        throw ConfigError("must be >= 1", sweep_draft.line, "sweep.max_evaluations");
      }
      sweep.max_evaluations = static_cast<size_t>(*sweep_draft.max_evaluations);
    }
    config.sweep = std::move(sweep);
  }

  // ---- assemble the optimize block ---------------------------------------
  if (optimize_draft.seen) {
    OptimizeConfig optimize;
    if (!optimize_draft.parameter || !optimize_draft.min || !optimize_draft.max) {
      throw ConfigError("[optimize] needs parameter, min, and max", optimize_draft.line,
                        "optimize");
    }
    optimize.spec.parameter =
        at_line(optimize_draft.line, "optimize.parameter",
                [&] { return parse_sweep_parameter(*optimize_draft.parameter); });
    optimize.spec.lo = *optimize_draft.min;
    optimize.spec.hi = *optimize_draft.max;
    if (optimize_draft.figure_of_merit) {
      optimize.spec.fom =
          at_line(optimize_draft.line, "optimize.figure_of_merit",
                  [&] { return parse_figure_of_merit(*optimize_draft.figure_of_merit); });
    }
    optimize.spec.rule =
        assemble_rule(optimize_draft.mode_rule, optimize_draft.acoustic_mode,
                      optimize_draft.track_target_hz, optimize_draft.line, "optimize");
    if (optimize_draft.em_mode) {
      optimize.spec.em = at_line(optimize_draft.line, "optimize.em_mode",
                                 [&] { return EmModeIndex::parse(*optimize_draft.em_mode); });
    }
    if (optimize_draft.rel_tol) optimize.spec.parameter_rel_tol = *optimize_draft.rel_tol;
    if (optimize_draft.grid_points) {
      optimize.spec.grid_points = static_cast<int>(*optimize_draft.grid_points);
    }
    at_line(optimize_draft.line, "optimize", [&] { optimize.spec.validate(); return 0; });
    config.optimize = std::move(optimize);
  }

  // Full semantic validation (positive quantities, ranges, ...). These
  // errors carry the key path in their message; the line is not tracked
  // through struct fields, which is fine for semantic (vs syntactic) errors.
  try {
    config.system.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(std::string(e.what()) + " (in " + source_name + ")", -1, "");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), path);
}

namespace {

void emit_axis(std::string& out, int n, const SweepAxis& axis) {
  out += "[sweep.axis." + std::to_string(n) + "]\n";
  out += "parameter = " + to_string(axis.parameter) + "\n";
  out += "values = ";
  for (size_t i = 0; i < axis.values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(axis.values[i]);
  }
  out += "\n\n";
}

}  // namespace

std::string emit_config(const RunConfig& config) {
  const SystemParams& sys = config.system;
  std::string out;
  auto kv = [&out](const char* key, double value) {
    out += key;
    out += " = ";
    out += format_double(value);
    out += '\n';
  };

  out += "# Gram-scale superfluid-helium optomechanics toolkit configuration.\n";
  out += "# Every value below is a default; delete anything you do not override.\n";
  out += "# Doubles are serialized shortest-round-trip, so reloading this file\n";
  out += "# reproduces bit-identical parameters.\n";
  out += "schema_version = " + std::to_string(kConfigSchemaVersion) + "\n\n";

  out += "# Cylindrical cell (shared by the acoustic and microwave cavities).\n";
  out += "[geometry]\n";
  kv("radius_m", sys.geometry.radius_m);
  kv("length_m", sys.geometry.length_m);
  out += '\n';

  out += "# Superfluid 4He near saturated vapor pressure, millikelvin regime.\n";
  out += "[helium]\n";
  kv("density_kg_m3", sys.helium.density_kg_m3);
  kv("sound_speed_m_s", sys.helium.sound_speed_m_s);
  kv("compressibility_per_pa", sys.helium.compressibility_per_pa);
  kv("epsilon_r", sys.helium.epsilon_r);
  kv("grueneisen", sys.helium.grueneisen);
  kv("dielectric_loss_max", sys.helium.dielectric_loss_max);
  kv("he3_fraction", sys.helium.he3_fraction);
  out += '\n';

  out += "# Niobium shell.\n";
  out += "[niobium]\n";
  kv("density_kg_m3", sys.niobium.density_kg_m3);
  kv("q_mech", sys.niobium.q_mech);
  out += '\n';

  out += "# Microwave readout mode: as-built frequency and linewidth parts (Hz).\n";
  out += "[cavity]\n";
  kv("frequency_hz", sys.cavity.omega_c / kTwoPi);
  kv("kappa_int_hz", sys.cavity.kappa_int / kTwoPi);
  kv("kappa_in_hz", sys.cavity.kappa_in / kTwoPi);
  kv("kappa_out_hz", sys.cavity.kappa_out / kTwoPi);
  out += '\n';

  out += "# Loss channels in the acoustic Q budget.\n";
  out += "[losses]\n";
  out += std::string("three_phonon = ") + (sys.losses.three_phonon ? "true" : "false") + "\n";
  out += '\n';

  out += "# Empirical 3He scattering channel: Q = coefficient_a / (x3 * omega_m^2).\n";
  out += "# coefficient_a [rad^2/s^2] is a calibration; enable once you have one.\n";
  out += "[he3_loss]\n";
  out += std::string("enabled = ") + (sys.losses.he3.enabled ? "true" : "false") + "\n";
  kv("coefficient_a", sys.losses.he3.coefficient_a);
  out += '\n';

  out += "# Wall channel: substrate Q diluted by the acoustic energy fraction\n";
  out += "# stored as elastic strain in the shell.\n";
  out += "[wall_loss]\n";
  kv("energy_fraction", sys.losses.wall.energy_fraction);
  out += '\n';

  out += "# Microwave drive (detuning_hz < 0 = red-detuned).\n";
  out += "[pump]\n";
  kv("n_photons", sys.pump.n_photons);
  kv("detuning_hz", sys.pump.detuning / kTwoPi);
  out += '\n';

  out += "# Readout phase noise: single-sideband level at the given offset.\n";
  out += "# bandwidth_hz is the analysis bandwidth for pressure-resolution\n";
  out += "# figures; it has no defensible universal default. The value below is\n";
  out += "# back-derived so the default -110 dBc/Hz chain resolves ~3e-3 Pa at\n";
  out += "# a 10 kHz mode. Commands that need it fail loudly when it is unset.\n";
  out += "[phase_noise]\n";
  kv("level_dbc_hz", sys.phase_noise.level_dbc_hz);
  kv("offset_hz", sys.phase_noise.offset_hz);
  if (sys.phase_noise.bandwidth_hz) {
    kv("bandwidth_hz", *sys.phase_noise.bandwidth_hz);
  } else {
    out += "# bandwidth_hz = <set me before running sense>\n";
  }
  out += '\n';

  out += "# Book values for the operating-point sensitivity chain (`sense`).\n";
  out += "# omega_overlap defaults to the computed overlap of the (0,1,2) x\n";
  out += "# TE(0,1,1) pair of the default cell. strain_baseline_m falls back to\n";
  out += "# the cell length when left unset.\n";
  out += "[operating_point]\n";
  kv("temperature_k", sys.operating.temperature_k);
  kv("mode_frequency_hz", sys.operating.mode_frequency_hz);
  kv("q_acoustic", sys.operating.q_acoustic);
  kv("v_eff_m3", sys.operating.v_eff_m3);
  kv("omega_overlap", sys.operating.omega_overlap);
  if (sys.operating.strain_baseline_m) {
    kv("strain_baseline_m", *sys.operating.strain_baseline_m);
  } else {
    out += "# strain_baseline_m = <defaults to geometry.length_m>\n";
  }
  out += '\n';

  out += "# Adaptive quadrature for overlap/volume integrals.\n";
  out += "[quadrature]\n";
  kv("rel_tol", sys.quadrature.rel_tol);
  out += "max_panels = " + std::to_string(sys.quadrature.max_panels) + "\n";
  out += '\n';

  out += "# Where command output goes: directory empty = stdout.\n";
  out += "[output]\n";
  out += "directory = " + config.output.directory + "\n";
  out += std::string("format = ") + (config.output.format == OutputFormat::Csv ? "csv" : "json") +
         "\n";

  if (config.sweep) {
    const SweepConfig& sweep = *config.sweep;
    out += '\n';
    out += "[sweep]\n";
    out += "figure_of_merit = " + to_string(sweep.fom) + "\n";
    out += std::string("mode_rule = ") +
           (sweep.rule.kind == ModeSelectionRule::Kind::Fixed ? "fixed" : "track") + "\n";
    out += "acoustic_mode = " + sweep.rule.fixed.label() + "\n";
    out += "em_mode = " + sweep.em.label() + "\n";
    if (sweep.rule.kind == ModeSelectionRule::Kind::Track) {
      kv("track_target_hz", sweep.rule.track_target_hz);
    }
    out += "max_evaluations = " + std::to_string(sweep.max_evaluations) + "\n";
    out += '\n';
    for (size_t i = 0; i < sweep.axes.size(); ++i) {
      emit_axis(out, static_cast<int>(i) + 1, sweep.axes[i]);
    }
  } else {
    out += '\n';
    out += "# Uncomment to define a sweep (up to 3 axes; grids may also use\n";
    out += "# min/max/count and scale = linear|log instead of explicit values):\n";
    out += "# [sweep]\n";
    out += "# figure_of_merit = g0_magnitude\n";
    out += "# mode_rule = fixed\n";
    out += "# acoustic_mode = 0,1,2\n";
    out += "# em_mode = TE,0,1,1\n";
    out += "# max_evaluations = 1000000\n";
    out += "# [sweep.axis.1]\n";
    out += "# parameter = c4\n";
    out += "# values = 238, 357\n";
  }

  if (config.optimize) {
    const OptimizeSpec& spec = config.optimize->spec;
    out += '\n';
    out += "[optimize]\n";
    out += "parameter = " + to_string(spec.parameter) + "\n";
    kv("min", spec.lo);
    kv("max", spec.hi);
    out += "figure_of_merit = " + to_string(spec.fom) + "\n";
    out += std::string("mode_rule = ") +
           (spec.rule.kind == ModeSelectionRule::Kind::Fixed ? "fixed" : "track") + "\n";
    out += "acoustic_mode = " + spec.rule.fixed.label() + "\n";
    out += "em_mode = " + spec.em.label() + "\n";
    if (spec.rule.kind == ModeSelectionRule::Kind::Track) {
      kv("track_target_hz", spec.rule.track_target_hz);
    }
    kv("rel_tol", spec.parameter_rel_tol);
    out += "grid_points = " + std::to_string(spec.grid_points) + "\n";
  } else {
    out += '\n';
    out += "# Uncomment to define a 1-D optimization:\n";
    out += "# [optimize]\n";
    out += "# parameter = length\n";
    out += "# min = 0.02\n";
    out += "# max = 0.06\n";
    out += "# figure_of_merit = sideband_margin\n";
    out += "# acoustic_mode = 0,0,2\n";
    out += "# em_mode = TE,0,1,1\n";
  }

  return out;
}

}  // namespace sfopt
