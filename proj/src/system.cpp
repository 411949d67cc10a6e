#include "sfopt/system.hpp"

#include <cmath>

#include "sfopt/errors.hpp"

namespace sfopt {

void OperatingPoint::validate() const {
  if (!std::isfinite(temperature_k) || temperature_k <= 0.0) {
    throw ValidationError("operating_point.temperature_k", "must be positive and finite");
  }
  if (!std::isfinite(mode_frequency_hz) || mode_frequency_hz <= 0.0) {
    throw ValidationError("operating_point.mode_frequency_hz", "must be positive and finite");
  }
  if (!std::isfinite(q_acoustic) || q_acoustic <= 0.0) {
    throw ValidationError("operating_point.q_acoustic", "must be positive and finite");
  }
  if (!std::isfinite(v_eff_m3) || v_eff_m3 <= 0.0) {
    throw ValidationError("operating_point.v_eff_m3", "must be positive and finite");
  }
  if (!std::isfinite(omega_overlap) || std::fabs(omega_overlap) > 1.0) {
    throw ValidationError("operating_point.omega_overlap",
                          "must be finite with magnitude <= 1");
  }
  if (strain_baseline_m &&
      (!std::isfinite(*strain_baseline_m) || *strain_baseline_m <= 0.0)) {
    throw ValidationError("operating_point.strain_baseline_m", "must be positive and finite");
  }
}

PhaseNoiseSpec PhaseNoiseSettings::require_bandwidth() const {
  if (!bandwidth_hz) {
    throw ValidationError("phase_noise.bandwidth_hz",
                          "no analysis bandwidth configured; set phase_noise.bandwidth_hz "
                          "(there is no defensible default)");
  }
  PhaseNoiseSpec spec;
  spec.level_dbc_hz = level_dbc_hz;
  spec.offset_hz = offset_hz;
  spec.bandwidth_hz = *bandwidth_hz;
  spec.validate();
  return spec;
}

void SystemParams::validate() const {
  geometry.validate();
  helium.validate();
  niobium.validate();
  cavity.validate();
  losses.he3.validate();
  losses.wall.validate();
  pump.validate();
  operating.validate();
  quadrature.validate();
  if (!std::isfinite(phase_noise.level_dbc_hz) || phase_noise.level_dbc_hz >= 0.0) {
    throw ValidationError("phase_noise.level_dbc_hz",
                          "single-sideband level must be finite and negative (dBc/Hz)");
  }
  if (!std::isfinite(phase_noise.offset_hz) || phase_noise.offset_hz <= 0.0) {
    throw ValidationError("phase_noise.offset_hz", "must be positive and finite");
  }
  if (phase_noise.bandwidth_hz &&
      (!std::isfinite(*phase_noise.bandwidth_hz) || *phase_noise.bandwidth_hz <= 0.0)) {
    throw ValidationError("phase_noise.bandwidth_hz", "must be positive and finite when set");
  }
}

}  // namespace sfopt
