#pragma once

#include <optional>

#include "sfopt/coupling.hpp"
#include "sfopt/dissipation.hpp"
#include "sfopt/materials.hpp"
#include "sfopt/measurement.hpp"
#include "sfopt/quadrature.hpp"

namespace sfopt {

// Documented operating-point inputs for the sensitivity report: the nominal
// monitored mode and the book values used for back-of-envelope noise
// numbers. These are deliberately independent of the computed spectrum so
// that `sense` reproduces as-quoted figures; the computed chain lives in
// evaluate_point().
struct OperatingPoint {
  double temperature_k = 0.1;
  double mode_frequency_hz = 1e4;
  double q_acoustic = 3e6;
  double v_eff_m3 = 1.95e-5;
  // Overlap used to form the transduction slope for `sense`. Defaults to the
  // computed overlap of the (0,1,2) x TE(0,1,1) pair of the default cell.
  double omega_overlap = -0.0833204621310601;
  // Baseline for strain figures; when unset the cell length is used.
  std::optional<double> strain_baseline_m;

  void validate() const;
};

// Phase-noise settings as configured. The analysis bandwidth is optional
// here precisely because there is no defensible default for an arbitrary
// experiment; operations that need it fail loudly when it is missing.
struct PhaseNoiseSettings {
  double level_dbc_hz = -110.0;
  double offset_hz = 1e4;
  std::optional<double> bandwidth_hz;

  // Builds the validated spec; throws ValidationError naming the missing
  // bandwidth key if it was never configured.
  PhaseNoiseSpec require_bandwidth() const;
};

// Everything a single evaluation of the instrument depends on. This is the
// struct sweeps mutate and the config file populates.
struct SystemParams {
  CylinderGeometry geometry;
  HeliumProperties helium;
  NiobiumProperties niobium;
  MicrowaveCavityParams cavity;
  LossChannels losses;
  PumpConfig pump;
  PhaseNoiseSettings phase_noise;
  OperatingPoint operating;
  QuadratureSpec quadrature;

  void validate() const;
};

}  // namespace sfopt
