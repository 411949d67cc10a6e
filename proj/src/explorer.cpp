#include "sfopt/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

bool is_continuous(SweepParameter p) {
  switch (p) {
    case SweepParameter::Radius:
    case SweepParameter::Length:
    case SweepParameter::Temperature:
    case SweepParameter::SoundSpeed:
      return true;
    case SweepParameter::He3Fraction:
    case SweepParameter::ModeIndexBound:
      return false;
  }
  return false;
}

void apply_parameter(SystemParams& params, SweepParameter parameter, double value) {
  switch (parameter) {
    case SweepParameter::Radius:
      params.geometry.radius_m = value;
      return;
    case SweepParameter::Length:
      params.geometry.length_m = value;
      return;
    case SweepParameter::Temperature:
      params.operating.temperature_k = value;
      return;
    case SweepParameter::SoundSpeed:
      params.helium.sound_speed_m_s = value;
      return;
    case SweepParameter::He3Fraction:
      params.helium.he3_fraction = value;
      return;
    case SweepParameter::ModeIndexBound:
      return;  // handled by mode selection, not by SystemParams
  }
}

// Selects the acoustic index for one grid point. `rank` (from a
// mode_index_bound axis) overrides the rule.
AcousticModeIndex select_acoustic_mode(const SystemParams& params, const ModeSelectionRule& rule,
                                       std::optional<int> rank) {
  const double f1 = params.helium.sound_speed_m_s /
                    (2.0 * std::max(params.geometry.length_m, params.geometry.radius_m));
  if (rank) {
    // B-th lowest mode: enumerate (frequencies only) with a growing ceiling
    // until the list is long enough.
    double f_max = f1 * 2.0;
    for (int attempt = 0; attempt < 48; ++attempt) {
      const auto lines = acoustic_spectrum(params.geometry, params.helium.sound_speed_m_s, f_max);
      if (static_cast<int>(lines.size()) >= *rank) {
        return lines[static_cast<size_t>(*rank) - 1].index;
      }
      f_max *= 1.6;
    }
    throw NumericError("mode_index_bound rank " + std::to_string(*rank) +
                           " not reached while growing the enumeration ceiling",
                       0.0, f_max);
  }
  if (rule.kind == ModeSelectionRule::Kind::Fixed) {
    return rule.fixed;
  }
  // Track: nearest line to the target. Anything within the 1% window lies
  // below 1.02x the target, so one bounded enumeration suffices.
  const double target = rule.track_target_hz;
  const auto lines =
      acoustic_spectrum(params.geometry, params.helium.sound_speed_m_s, 1.02 * target);
  const AcousticLine* best = nullptr;
  for (const auto& line : lines) {
    if (!best ||
        std::fabs(line.frequency_hz - target) < std::fabs(best->frequency_hz - target)) {
      best = &line;
    }
  }
  if (!best || std::fabs(best->frequency_hz - target) > 0.01 * target) {
    throw ValidationError("sweep.track_target_hz",
                          "no acoustic mode within 1% of " + std::to_string(target) + " Hz");
  }
  return best->index;
}

double extract_fom(const PointEvaluation& point, FigureOfMerit fom) {
  switch (fom) {
    case FigureOfMerit::G0Magnitude:
      return std::fabs(point.coupling.g0);
    case FigureOfMerit::QTotal:
      return point.budget.q_total;
    case FigureOfMerit::NoiseTemperatureInverse:
      if (!point.noise_temperature_k) {
        // A zero-coupled pair has no readout: its noise temperature is
        // infinite, so the inverse figure is 0 rather than an error.
        if (point.coupling.dwc_dp == 0.0) return 0.0;
        throw ValidationError("phase_noise.bandwidth_hz",
                              "noise_temperature_inverse needs a configured analysis bandwidth");
      }
      return 1.0 / *point.noise_temperature_k;
    case FigureOfMerit::SidebandMargin:
      return point.sideband_margin;
  }
  throw ValidationError("figure_of_merit", "unknown figure of merit");
}

SweepRow evaluate_row(const SystemParams& base, const std::vector<SweepAxis>& axes,
                      const std::vector<double>& coordinates, const ModeSelectionRule& rule,
                      const EmModeIndex& em, FigureOfMerit fom) {
  SweepRow row;
  row.coordinates = coordinates;
  try {
    SystemParams params = base;
    std::optional<int> rank;
    for (size_t a = 0; a < axes.size(); ++a) {
      if (axes[a].parameter == SweepParameter::ModeIndexBound) {
        rank = static_cast<int>(std::llround(coordinates[a]));
      } else {
        apply_parameter(params, axes[a].parameter, coordinates[a]);
      }
    }
    const AcousticModeIndex acoustic = select_acoustic_mode(params, rule, rank);
    const PointEvaluation point = evaluate_point(params, acoustic, em);
    row.acoustic = point.acoustic.index;
    row.em = point.em.index;
    row.acoustic_frequency_hz = point.acoustic.frequency_hz;
    row.em_frequency_hz = point.em.frequency_hz;
    row.v_eff_m3 = point.acoustic.v_eff_m3;
    row.omega_overlap = point.coupling.omega_overlap;
    row.dwc_dp = point.coupling.dwc_dp;
    row.dp_sql_pa = point.coupling.dp_sql;
    row.g0 = point.coupling.g0;
    row.sideband_resolved = point.coupling.sideband_resolved;
    row.q_total = point.budget.q_total;
    row.tau_n_s = point.budget.tau_n_s;
    row.sideband_margin = point.sideband_margin;
    row.noise_temperature_k = point.noise_temperature_k;
    row.fom_value = extract_fom(point, fom);
    row.ok = true;
  } catch (const Error& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::string to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::Radius: return "radius";
    case SweepParameter::Length: return "length";
    case SweepParameter::Temperature: return "temperature";
    case SweepParameter::SoundSpeed: return "c4";
    case SweepParameter::He3Fraction: return "x3";
    case SweepParameter::ModeIndexBound: return "mode_index_bound";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(const std::string& text) {
  if (text == "radius") return SweepParameter::Radius;
  if (text == "length") return SweepParameter::Length;
  if (text == "temperature") return SweepParameter::Temperature;
  if (text == "c4") return SweepParameter::SoundSpeed;
  if (text == "x3") return SweepParameter::He3Fraction;
  if (text == "mode_index_bound") return SweepParameter::ModeIndexBound;
  throw ValidationError("sweep.parameter",
                        "unknown parameter '" + text +
                            "' (expected radius, length, temperature, c4, x3, or "
                            "mode_index_bound)");
}

std::string to_string(FigureOfMerit fom) {
  switch (fom) {
    case FigureOfMerit::G0Magnitude: return "g0_magnitude";
    case FigureOfMerit::QTotal: return "q_total";
    case FigureOfMerit::NoiseTemperatureInverse: return "noise_temperature_inverse";
    case FigureOfMerit::SidebandMargin: return "sideband_margin";
  }
  return "?";
}

FigureOfMerit parse_figure_of_merit(const std::string& text) {
  if (text == "g0_magnitude") return FigureOfMerit::G0Magnitude;
  if (text == "q_total") return FigureOfMerit::QTotal;
  if (text == "noise_temperature_inverse") return FigureOfMerit::NoiseTemperatureInverse;
  if (text == "sideband_margin") return FigureOfMerit::SidebandMargin;
  throw ValidationError("figure_of_merit",
                        "unknown figure of merit '" + text +
                            "' (expected g0_magnitude, q_total, noise_temperature_inverse, or "
                            "sideband_margin)");
}

void SweepAxis::validate() const {
  if (values.empty()) {
    throw ValidationError("sweep.axis.values", "axis needs at least one value");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError("sweep.axis.values", "values must be finite and positive");
    }
    if (i > 0 && !(v > values[i - 1])) {
      throw ValidationError("sweep.axis.values", "values must be strictly ascending");
    }
    if (parameter == SweepParameter::ModeIndexBound &&
        (v != std::floor(v) || v < 1.0 || v > 1e6)) {
      throw ValidationError("sweep.axis.values",
                            "mode_index_bound values must be integers >= 1");
    }
  }
}

SweepAxis linspace_axis(SweepParameter parameter, double lo, double hi, int count) {
  if (count < 2) throw ValidationError("sweep.axis.count", "grids need at least 2 points");
  if (!(lo < hi)) throw ValidationError("sweep.axis", "grid needs min < max");
  SweepAxis axis;
  axis.parameter = parameter;
  axis.values.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    axis.values.push_back(lo + (hi - lo) * i / (count - 1));
  }
  axis.values.back() = hi;  // land exactly on the endpoint
  axis.validate();
  return axis;
}

SweepAxis logspace_axis(SweepParameter parameter, double lo, double hi, int count) {
  if (count < 2) throw ValidationError("sweep.axis.count", "grids need at least 2 points");
  if (!(lo < hi) || lo <= 0.0) {
    throw ValidationError("sweep.axis", "log grid needs 0 < min < max");
  }
  SweepAxis axis;
  axis.parameter = parameter;
  axis.values.reserve(static_cast<size_t>(count));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    axis.values.push_back(std::exp(llo + (lhi - llo) * i / (count - 1)));
  }
  axis.values.front() = lo;
  axis.values.back() = hi;
  axis.validate();
  return axis;
}

void ModeSelectionRule::validate() const {
  if (kind == Kind::Fixed) {
    fixed.validate();
    return;
  }
  if (!std::isfinite(track_target_hz) || track_target_hz <= 0.0) {
    throw ValidationError("sweep.track_target_hz",
                          "tracking rule needs a positive target frequency");
  }
}

SweepResult run_sweep(const SystemParams& base, const std::vector<SweepAxis>& axes,
                      const ModeSelectionRule& rule, const EmModeIndex& em, FigureOfMerit fom,
                      size_t max_evaluations) {
  base.validate();
  rule.validate();
  em.validate();
  if (axes.empty() || axes.size() > 3) {
    throw ValidationError("sweep.axes", "sweeps take 1 to 3 axes");
  }
  size_t total = 1;
  for (size_t a = 0; a < axes.size(); ++a) {
    axes[a].validate();
    for (size_t b = 0; b < a; ++b) {
      if (axes[b].parameter == axes[a].parameter) {
        throw ValidationError("sweep.axes", "duplicate axis over parameter '" +
                                                to_string(axes[a].parameter) + "'");
      }
    }
    total *= axes[a].values.size();
  }
  if (total > max_evaluations) {
    throw ValidationError("sweep.max_evaluations",
                          "grid has " + std::to_string(total) +
                              " points; raise max_evaluations to at least that (cap is " +
                              std::to_string(max_evaluations) + ")");
  }
  if (fom == FigureOfMerit::NoiseTemperatureInverse && !base.phase_noise.bandwidth_hz) {
    throw ValidationError("phase_noise.bandwidth_hz",
                          "noise_temperature_inverse needs a configured analysis bandwidth");
  }

  SweepResult result;
  result.axes = axes;
  result.fom = fom;
  result.rows.reserve(total);

  // Cartesian product, last axis fastest (odometer order).
  std::vector<size_t> idx(axes.size(), 0);
  std::vector<double> coordinates(axes.size());
  for (size_t flat = 0; flat < total; ++flat) {
    for (size_t a = 0; a < axes.size(); ++a) coordinates[a] = axes[a].values[idx[a]];
    result.rows.push_back(evaluate_row(base, axes, coordinates, rule, em, fom));
    for (size_t a = axes.size(); a-- > 0;) {
      if (++idx[a] < axes[a].values.size()) break;
      idx[a] = 0;
    }
  }

  for (size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    if (!row.ok || !std::isfinite(row.fom_value)) continue;
    if (!result.best_row || row.fom_value > result.rows[*result.best_row].fom_value) {
      result.best_row = i;
    }
  }
  return result;
}

void OptimizeSpec::validate() const {
  if (!is_continuous(parameter)) {
    throw ValidationError("optimize.parameter",
                          "golden-section search needs a continuous parameter (radius, "
                          "length, temperature, or c4)");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || hi < lo) {
    throw ValidationError("optimize.interval", "needs 0 < min <= max");
  }
  if (!std::isfinite(parameter_rel_tol) || parameter_rel_tol <= 0.0) {
    throw ValidationError("optimize.rel_tol", "must be positive");
  }
  if (grid_points < 2) {
    throw ValidationError("optimize.grid_points", "must be >= 2");
  }
  rule.validate();
  em.validate();
}

OptimizeResult run_optimize(const SystemParams& base, const OptimizeSpec& spec) {
  base.validate();
  spec.validate();
  if (spec.fom == FigureOfMerit::NoiseTemperatureInverse && !base.phase_noise.bandwidth_hz) {
    throw ValidationError("phase_noise.bandwidth_hz",
                          "noise_temperature_inverse needs a configured analysis bandwidth");
  }

  int evaluations = 0;
  auto objective = [&](double value) {
    ++evaluations;
    SystemParams params = base;
    apply_parameter(params, spec.parameter, value);
    const AcousticModeIndex acoustic = select_acoustic_mode(params, spec.rule, std::nullopt);
    const PointEvaluation point = evaluate_point(params, acoustic, spec.em);
    const double fom = extract_fom(point, spec.fom);
    if (!std::isfinite(fom)) {
      throw NumericError("figure of merit is non-finite at " + to_string(spec.parameter) +
                             " = " + std::to_string(value),
                         value, 0.0);
    }
    return fom;
  };

  if (spec.lo == spec.hi) {
    return OptimizeResult{spec.lo, objective(spec.lo), evaluations};
  }

  // Bootstrap grid: dodges secondary lobes before the local search starts.
  double best_x = spec.lo;
  double best_f = -std::numeric_limits<double>::infinity();
  const int grid_n = spec.grid_points;
  for (int i = 0; i < grid_n; ++i) {
    const double x = spec.lo + (spec.hi - spec.lo) * i / (grid_n - 1);
    const double f = objective(x);
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }
  }

  // Golden-section refinement of the bracket around the best grid point.
  const double step = (spec.hi - spec.lo) / (grid_n - 1);
  double a = std::max(spec.lo, best_x - step);
  double b = std::min(spec.hi, best_x + step);
  const double tol = spec.parameter_rel_tol * std::max(std::fabs(spec.lo), std::fabs(spec.hi));

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double invphi2 = 1.0 - invphi;
  double h = b - a;
  double x1 = a + invphi2 * h;
  double x2 = a + invphi * h;
  double f1 = objective(x1);
  double f2 = objective(x2);
  if (f1 > best_f) { best_f = f1; best_x = x1; }
  if (f2 > best_f) { best_f = f2; best_x = x2; }
  for (int it = 0; it < 200 && h > tol; ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      h = b - a;
      x1 = a + invphi2 * h;
      f1 = objective(x1);
      if (f1 > best_f) { best_f = f1; best_x = x1; }
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      h = b - a;
      x2 = a + invphi * h;
      f2 = objective(x2);
      if (f2 > best_f) { best_f = f2; best_x = x2; }
    }
  }

  // Never worse than the best point actually evaluated (grid included).
  return OptimizeResult{best_x, best_f, evaluations};
}

}  // namespace sfopt
