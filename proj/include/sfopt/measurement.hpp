#pragma once

#include <cstdint>
#include <vector>

#include "sfopt/coupling.hpp"
#include "sfopt/materials.hpp"

namespace sfopt {

// Microwave drive: mean intracavity photon number and pump detuning
// (rad/s, negative = red-detuned). The detuning is carried for documentation
// and future dynamical-backaction work; the steady-state heating and
// resolution formulas below depend only on the photon number.
struct PumpConfig {
  double n_photons = 4.5e8;
  double detuning = 0.0;

  void validate() const;
};

// Single-point phase-noise model of the readout chain: the single-sideband
// level L (dBc/Hz) quoted at `offset_hz` from the carrier (the offset should
// be the mechanical frequency being monitored), integrated over an analysis
// bandwidth `bandwidth_hz`. The bandwidth has no sensible universal default;
// config loading treats it as mandatory for any resolution calculation.
struct PhaseNoiseSpec {
  double level_dbc_hz = -110.0;
  double offset_hz = 1e4;
  double bandwidth_hz = 0.0;

  void validate() const;
};

// Power deposited in the refrigerator by internal cavity loss [W]:
//   P = n hbar omega_c kappa_int.
double cavity_heating_w(const PumpConfig& pump, const MicrowaveCavityParams& cavity);

// Power absorbed in the helium itself through dielectric loss [W], using the
// upper-bound loss tangent:
//   P = n hbar omega_c^2 tan(delta) / eps_r.
double helium_heating_w(const PumpConfig& pump, double omega_c,
                        const HeliumProperties& helium);

// Smallest resolvable pressure amplitude [Pa] when the readout is limited by
// oscillator phase noise: the phase jitter sqrt(2 * 10^(L/10) * B) referred
// through the fractional-frequency lever arm omega_m / |d omega_c / dP|.
double pressure_resolution_pa(const PhaseNoiseSpec& noise, double dwc_dp, double omega_m);

// Effective mode temperature corresponding to a pressure amplitude [K]:
//   T = P^2 kappa V_eff / k_B
// (the acoustic energy P^2 kappa V_eff expressed in temperature units).
double noise_temperature_k(double p_rms_pa, const HeliumProperties& helium, double v_eff_m3);

// RMS thermal displacement of a mode of effective mass m [m]:
//   x_th = sqrt( k_B T / (m omega_m^2) ).
double thermal_displacement_m(double temperature_k, double mass_kg, double omega_m);

// Thermal-noise-limited displacement floor after averaging over the mode's
// coherence: x_th diluted by the quality factor.
double displacement_floor_m(double x_th_m, double q);

// Dimensionless strain floor for a displacement floor over a baseline.
double strain_floor(double x0_m, double baseline_m);

// Equivalent spring constant k = m omega_m^2 [N/m].
double spring_constant_n_m(double mass_kg, double omega_m);

// ---- Ringdown synthesis and fitting ------------------------------------

// Sampled decay envelope a(t) = a0 exp(-t / tau) + Gaussian noise, with the
// amplitude time constant tau = 2 Q / omega_m. The carrier is not sampled;
// mechanical ringdowns at these Q values are demodulated long before
// digitization anyway.
struct RingdownSeries {
  double frequency_hz = 0.0;
  double sample_rate_hz = 0.0;
  double noise_rms = 0.0;
  std::vector<double> time_s;
  std::vector<double> amplitude;
};

// Deterministic synthesis: the noise stream is a fixed function of `seed`
// (hand-rolled Box-Muller over mt19937_64, so the stream is identical on
// every platform; std::normal_distribution is implementation-defined and
// would not be).
RingdownSeries synthesize_ringdown(double q, double frequency_hz, double a0,
                                   double sample_rate_hz, double duration_s,
                                   double noise_rms, std::uint64_t seed);

struct RingdownFit {
  double q = 0.0;
  double q_std_error = 0.0;
  double tau_s = 0.0;
  double log_slope = 0.0;      // fitted d ln(a) / dt  [1/s]
  double log_intercept = 0.0;  // fitted ln(a0)
  int points_used = 0;
};

// Least-squares line through ln(a_i) vs t_i for samples above
// `amplitude_floor` (pass ~3x the noise RMS so the log transform stays
// honest; non-positive samples are always skipped). Q = omega / (2 |slope|),
// with the one-sigma statistical error propagated from the slope. Throws
// FitError when fewer than 8 usable points remain or the fit degenerates.
RingdownFit fit_ringdown(const RingdownSeries& series, double amplitude_floor);

}  // namespace sfopt
