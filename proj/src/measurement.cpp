#include "sfopt/measurement.hpp"

#include <cmath>
#include <random>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

void check_positive(double value, const char* field) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(field, "must be a positive finite number");
  }
}

// Uniform double in [0, 1) from the top 53 bits of the generator word;
// bit-for-bit reproducible anywhere IEEE doubles and mt19937_64 exist.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller, cosine branch only: one uniform pair per deviate keeps the
  // stream layout trivial to reason about in tests.
  const double u1 = uniform53(rng);
  const double u2 = uniform53(rng);
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * constants::kPi * u2);
}

}  // namespace

void PumpConfig::validate() const {
  if (!std::isfinite(n_photons) || n_photons < 0.0) {
    throw ValidationError("pump.n_photons", "must be >= 0 and finite");
  }
  if (!std::isfinite(detuning)) {
    throw ValidationError("pump.detuning", "must be finite");
  }
}

void PhaseNoiseSpec::validate() const {
  if (!std::isfinite(level_dbc_hz) || level_dbc_hz >= 0.0) {
    throw ValidationError("phase_noise.level_dbc_hz",
                          "single-sideband level must be finite and negative (dBc/Hz)");
  }
  check_positive(offset_hz, "phase_noise.offset_hz");
  check_positive(bandwidth_hz, "phase_noise.bandwidth_hz");
}

double cavity_heating_w(const PumpConfig& pump, const MicrowaveCavityParams& cavity) {
  pump.validate();
  cavity.validate();
  return pump.n_photons * constants::kHbar * cavity.omega_c * cavity.kappa_int;
}

double helium_heating_w(const PumpConfig& pump, double omega_c,
                        const HeliumProperties& helium) {
  pump.validate();
  helium.validate();
  check_positive(omega_c, "omega_c");
  return pump.n_photons * constants::kHbar * omega_c * omega_c *
         helium.dielectric_loss_max / helium.epsilon_r;
}

double pressure_resolution_pa(const PhaseNoiseSpec& noise, double dwc_dp, double omega_m) {
  noise.validate();
  check_positive(omega_m, "omega_m");
  if (!std::isfinite(dwc_dp) || dwc_dp == 0.0) {
    throw ValidationError("dwc_dp", "transduction slope must be finite and nonzero");
  }
  const double phase_jitter =
      std::sqrt(2.0 * std::pow(10.0, noise.level_dbc_hz / 10.0) * noise.bandwidth_hz);
  return omega_m / std::fabs(dwc_dp) * phase_jitter;
}

double noise_temperature_k(double p_rms_pa, const HeliumProperties& helium, double v_eff_m3) {
  helium.validate();
  check_positive(v_eff_m3, "v_eff_m3");
  if (!std::isfinite(p_rms_pa) || p_rms_pa < 0.0) {
    throw ValidationError("p_rms_pa", "must be >= 0 and finite");
  }
  return p_rms_pa * p_rms_pa * helium.compressibility_per_pa * v_eff_m3 /
         constants::kBoltzmann;
}

double thermal_displacement_m(double temperature_k, double mass_kg, double omega_m) {
  check_positive(temperature_k, "temperature_k");
  check_positive(mass_kg, "mass_kg");
  check_positive(omega_m, "omega_m");
  return std::sqrt(constants::kBoltzmann * temperature_k / (mass_kg * omega_m * omega_m));
}

double displacement_floor_m(double x_th_m, double q) {
  check_positive(x_th_m, "x_th_m");
  check_positive(q, "q");
  return x_th_m / q;
}

double strain_floor(double x0_m, double baseline_m) {
  check_positive(x0_m, "x0_m");
  check_positive(baseline_m, "baseline_m");
  return x0_m / baseline_m;
}

double spring_constant_n_m(double mass_kg, double omega_m) {
  check_positive(mass_kg, "mass_kg");
  check_positive(omega_m, "omega_m");
  return mass_kg * omega_m * omega_m;
}

RingdownSeries synthesize_ringdown(double q, double frequency_hz, double a0,
                                   double sample_rate_hz, double duration_s,
                                   double noise_rms, std::uint64_t seed) {
  check_positive(q, "q");
  check_positive(frequency_hz, "frequency_hz");
  check_positive(a0, "a0");
  check_positive(sample_rate_hz, "sample_rate_hz");
  check_positive(duration_s, "duration_s");
  if (!std::isfinite(noise_rms) || noise_rms < 0.0) {
    throw ValidationError("noise_rms", "must be >= 0 and finite");
  }
  const auto count = static_cast<size_t>(duration_s * sample_rate_hz) + 1;
  if (count > 50'000'000) {
    throw ValidationError("duration_s", "requested series exceeds 5e7 samples");
  }

  const double omega_m = 2.0 * constants::kPi * frequency_hz;
  const double tau = 2.0 * q / omega_m;

  RingdownSeries series;
  series.frequency_hz = frequency_hz;
  series.sample_rate_hz = sample_rate_hz;
  series.noise_rms = noise_rms;
  series.time_s.reserve(count);
  series.amplitude.reserve(count);
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / sample_rate_hz;
    const double noise = noise_rms > 0.0 ? noise_rms * gaussian(rng) : 0.0;
    series.time_s.push_back(t);
    series.amplitude.push_back(a0 * std::exp(-t / tau) + noise);
  }
  return series;
}

RingdownFit fit_ringdown(const RingdownSeries& series, double amplitude_floor) {
  check_positive(series.frequency_hz, "series.frequency_hz");
  if (series.time_s.size() != series.amplitude.size()) {
    throw ValidationError("series", "time and amplitude arrays differ in length");
  }
  if (!std::isfinite(amplitude_floor) || amplitude_floor < 0.0) {
    throw ValidationError("amplitude_floor", "must be >= 0 and finite");
  }

  // Ordinary least squares on (t, ln a) for usable samples.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (size_t i = 0; i < series.time_s.size(); ++i) {
    const double a = series.amplitude[i];
    if (!(a > amplitude_floor) || a <= 0.0) continue;
    const double x = series.time_s[i];
    const double y = std::log(a);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 8) {
    throw FitError("ringdown fit needs at least 8 samples above the floor, found " +
                   std::to_string(n));
  }
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) {
    throw FitError("ringdown fit is degenerate (no spread in sample times)");
  }
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  if (!(slope < 0.0)) {
    throw FitError("ringdown fit found a non-decaying envelope");
  }

  // Residual variance -> one-sigma slope error -> Q error.
  double ss_res = 0.0;
  for (size_t i = 0; i < series.time_s.size(); ++i) {
    const double a = series.amplitude[i];
    if (!(a > amplitude_floor) || a <= 0.0) continue;
    const double r = std::log(a) - (intercept + slope * series.time_s[i]);
    ss_res += r * r;
  }
  const double slope_var = n > 2 ? (ss_res / (n - 2)) * (n / denom) : 0.0;

  const double omega_m = 2.0 * constants::kPi * series.frequency_hz;
  RingdownFit fit;
  fit.log_slope = slope;
  fit.log_intercept = intercept;
  fit.tau_s = -1.0 / slope;
  fit.q = omega_m / (2.0 * std::fabs(slope));
  fit.q_std_error = fit.q * std::sqrt(slope_var) / std::fabs(slope);
  fit.points_used = n;

  // A fit extrapolated from a sliver of the decay is numerology, not a
  // measurement; demand at least a tenth of a time constant of data.
  const double span = series.time_s.back() - series.time_s.front();
  if (span < 0.1 * fit.tau_s) {
    throw FitError("series spans " + std::to_string(span) +
                   " s, less than 0.1 of the fitted decay time " + std::to_string(fit.tau_s) +
                   " s");
  }
  return fit;
}

}  // namespace sfopt
