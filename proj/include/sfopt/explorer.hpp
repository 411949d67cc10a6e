#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfopt/pipeline.hpp"
#include "sfopt/system.hpp"

namespace sfopt {

// Scalar knobs a sweep can move. The first four mutate SystemParams
// directly; mode_index_bound instead selects the B-th lowest-frequency
// acoustic mode at each grid point (B = 1 is the fundamental), which stays
// well-defined as geometry axes reshuffle the spectrum.
enum class SweepParameter {
  Radius,
  Length,
  Temperature,
  SoundSpeed,    // c4: pressurization moves first sound, nothing else here
  He3Fraction,   // x3
  ModeIndexBound,
};

std::string to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(const std::string& text);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::Radius;
  std::vector<double> values;

  // Finite, positive, strictly ascending; mode_index_bound additionally
  // integral and >= 1.
  void validate() const;
};

SweepAxis linspace_axis(SweepParameter parameter, double lo, double hi, int count);
SweepAxis logspace_axis(SweepParameter parameter, double lo, double hi, int count);

// All figures of merit are maximized.
enum class FigureOfMerit {
  G0Magnitude,
  QTotal,
  NoiseTemperatureInverse,  // needs phase_noise.bandwidth_hz configured
  SidebandMargin,           // omega_m / kappa_total
};

std::string to_string(FigureOfMerit fom);
FigureOfMerit parse_figure_of_merit(const std::string& text);

// How each grid point picks its acoustic mode: a fixed index, or the mode
// nearest a target frequency (within a 1% window, else the row is flagged).
struct ModeSelectionRule {
  enum class Kind { Fixed, Track };
  Kind kind = Kind::Fixed;
  AcousticModeIndex fixed{0, 1, 2};
  double track_target_hz = 0.0;

  void validate() const;
};

struct SweepRow {
  std::vector<double> coordinates;  // one per axis, same order as the axes
  bool ok = false;
  std::string error;                // populated when !ok
  AcousticModeIndex acoustic;
  EmModeIndex em;
  double acoustic_frequency_hz = 0.0;
  double em_frequency_hz = 0.0;
  double v_eff_m3 = 0.0;
  double omega_overlap = 0.0;
  double dwc_dp = 0.0;
  double dp_sql_pa = 0.0;
  double g0 = 0.0;
  bool sideband_resolved = false;
  double q_total = 0.0;
  double tau_n_s = 0.0;
  double sideband_margin = 0.0;
  std::optional<double> noise_temperature_k;
  double fom_value = 0.0;  // meaningful when ok
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  FigureOfMerit fom = FigureOfMerit::G0Magnitude;
  std::vector<SweepRow> rows;        // Cartesian order, last axis fastest
  std::optional<size_t> best_row;    // argmax of fom over ok rows, first on ties
};

inline constexpr size_t kDefaultSweepCap = 1'000'000;

// Full Cartesian evaluation. Refuses up front (ValidationError stating the
// required cap) when the grid size exceeds max_evaluations. A row whose
// evaluation throws a library error is flagged and the sweep continues.
SweepResult run_sweep(const SystemParams& base, const std::vector<SweepAxis>& axes,
                      const ModeSelectionRule& rule, const EmModeIndex& em, FigureOfMerit fom,
                      size_t max_evaluations = kDefaultSweepCap);

struct OptimizeSpec {
  SweepParameter parameter = SweepParameter::Length;
  double lo = 0.0;
  double hi = 0.0;
  FigureOfMerit fom = FigureOfMerit::G0Magnitude;
  ModeSelectionRule rule;
  EmModeIndex em;
  double parameter_rel_tol = 1e-4;
  int grid_points = 32;

  void validate() const;  // continuous parameter only; positive interval
};

struct OptimizeResult {
  double parameter_value = 0.0;
  double fom_value = 0.0;
  int evaluations = 0;
};

// Deterministic scalar maximization: a 32-point bootstrap grid (to dodge
// side lobes) followed by golden-section refinement of the bracket around
// the best grid point, to a relative parameter tolerance of 1e-4. The result
// is never worse than the best grid point. Non-finite objective values throw
// NumericError naming the offending parameter value.
OptimizeResult run_optimize(const SystemParams& base, const OptimizeSpec& spec);

}  // namespace sfopt
