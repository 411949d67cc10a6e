#pragma once

#include <optional>

#include "sfopt/system.hpp"

namespace sfopt {

// One fully-computed instrument evaluation: the selected acoustic/EM pair,
// its parametric coupling, the loss budget at the operating temperature, and
// the phase-noise-limited resolution chain. The resolution figures are set
// only when an analysis bandwidth is configured AND the pair actually
// transduces (dwc_dp != 0); a zero-overlap mode reads out nothing, so its
// resolution stays unset rather than being an error. This is the unit of
// work sweeps repeat.
struct PointEvaluation {
  AcousticMode acoustic;
  EmMode em;
  CouplingResult coupling;
  LossBudget budget;
  double sideband_margin = 0.0;  // omega_m / kappa_total
  std::optional<double> p_min_pa;
  std::optional<double> noise_temperature_k;
};

PointEvaluation evaluate_point(const SystemParams& params, const AcousticModeIndex& acoustic,
                               const EmModeIndex& em);

// Operating-point sensitivity summary: the book-value noise chain computed
// from the configured OperatingPoint rather than the enumerated spectrum.
struct SensitivityReport {
  double mass_kg = 0.0;
  double omega_m = 0.0;          // 2 pi * configured mode frequency
  double dwc_dp = 0.0;           // rad/s per Pa, from the configured overlap
  double p_cavity_w = 0.0;
  double p_helium_w = 0.0;
  double p_min_pa = 0.0;
  double t_noise_k = 0.0;        // at p_min
  double dp_sql_pa = 0.0;
  double t_noise_sql_k = 0.0;    // at dp_sql; equals hbar omega / k_B
  double x_th_m = 0.0;
  double x0_m = 0.0;
  double strain_h = 0.0;
  double strain_baseline_m = 0.0;
  double spring_constant_n_m = 0.0;
  bool sideband_resolved = false;
};

// Requires phase_noise.bandwidth_hz to be configured (ValidationError naming
// the key otherwise).
SensitivityReport make_sensitivity_report(const SystemParams& params);

}  // namespace sfopt
