#include "sfopt/dissipation.hpp"

#include <cmath>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

constexpr double kThreePhononCeilingK = 0.5;

void check_temperature(double t) {
  if (!std::isfinite(t) || t <= 0.0) {
    throw ValidationError("temperature_k", "must be a positive finite temperature");
  }
}

void check_omega(double omega_m) {
  if (!std::isfinite(omega_m) || omega_m <= 0.0) {
    throw ValidationError("omega_m", "mechanical angular frequency must be positive");
  }
}

// alpha / omega, the frequency-stripped attenuation [s/m]. Keeping omega out
// of the arithmetic entirely is what makes q_three_phonon exactly
// frequency-independent in floating point, not just analytically.
double attenuation_per_omega(double temperature_k, const HeliumProperties& helium) {
  check_temperature(temperature_k);
  helium.validate();
  if (temperature_k > kThreePhononCeilingK) {
    throw ValidationError("temperature_k",
                          "three-phonon attenuation is only valid in the phonon-dominated "
                          "regime (T <= 0.5 K); higher temperatures need roton physics this "
                          "model does not include");
  }
  const double g1 = helium.grueneisen + 1.0;
  const double kt = constants::kBoltzmann * temperature_k;
  const double kt2 = kt * kt;
  const double hbar = constants::kHbar;
  const double c = helium.sound_speed_m_s;
  const double c2 = c * c;
  const double c6 = c2 * c2 * c2;
  const double pi3 = constants::kPi * constants::kPi * constants::kPi;
  return (pi3 / 60.0) * g1 * g1 * (kt2 * kt2) /
         (helium.density_kg_m3 * hbar * hbar * hbar * c6);
}

}  // namespace

void WallLossParams::validate() const {
  if (!std::isfinite(energy_fraction) || energy_fraction <= 0.0 || energy_fraction >= 1.0) {
    throw ValidationError("wall_loss.energy_fraction", "must lie in (0, 1)");
  }
}

void He3LossModel::validate() const {
  if (enabled && (!std::isfinite(coefficient_a) || coefficient_a <= 0.0)) {
    throw ValidationError("he3_loss.coefficient_a",
                          "must be a positive finite rate-squared when the channel is enabled");
  }
}

double attenuation_three_phonon(double temperature_k, double omega_m,
                                const HeliumProperties& helium) {
  check_omega(omega_m);
  return attenuation_per_omega(temperature_k, helium) * omega_m;
}

double q_three_phonon(double temperature_k, double omega_m, const HeliumProperties& helium) {
  check_omega(omega_m);
  // Q = omega / (alpha c4) with alpha = (alpha/omega) * omega; omega cancels
  // before any arithmetic happens.
  return 1.0 / (attenuation_per_omega(temperature_k, helium) * helium.sound_speed_m_s);
}

double q_he3(const He3LossModel& model, double x3, double omega_m) {
  model.validate();
  check_omega(omega_m);
  if (!model.enabled) {
    throw ValidationError("he3_loss.enabled", "channel is disabled; no Q to report");
  }
  if (!std::isfinite(x3) || x3 <= 0.0 || x3 > 1.0) {
    throw ValidationError("helium.he3_fraction",
                          "3He fraction must lie in (0, 1] for the impurity channel");
  }
  return model.coefficient_a / (x3 * omega_m * omega_m);
}

double q_wall(const NiobiumProperties& niobium, const WallLossParams& wall) {
  niobium.validate();
  wall.validate();
  return niobium.q_mech / wall.energy_fraction;
}

LossBudget combine_budget(const std::vector<std::pair<std::string, double>>& channels) {
  if (channels.empty()) {
    throw ValidationError("budget.channels", "need at least one loss channel");
  }
  LossBudget budget;
  double inverse_sum = 0.0;
  for (const auto& [name, q] : channels) {
    if (!std::isfinite(q) || q <= 0.0) {
      throw ValidationError("budget." + name, "channel Q must be positive and finite");
    }
    inverse_sum += 1.0 / q;
    budget.channels.emplace_back(name, q);
    if (name == "three_phonon") budget.q_three_phonon = q;
    if (name == "he3") budget.q_he3 = q;
    if (name == "wall") budget.q_wall = q;
  }
  budget.q_total = 1.0 / inverse_sum;
  return budget;
}

double number_state_lifetime_s(double q, double temperature_k) {
  check_temperature(temperature_k);
  if (!std::isfinite(q) || q <= 0.0) {
    throw ValidationError("q", "quality factor must be positive and finite");
  }
  return constants::kHbar * q / (constants::kBoltzmann * temperature_k);
}

std::vector<LossBudget> q_vs_temperature(const std::vector<double>& temperatures_k,
                                         double omega_m, const LossChannels& channels,
                                         const HeliumProperties& helium,
                                         const NiobiumProperties& niobium) {
  check_omega(omega_m);
  helium.validate();
  if (temperatures_k.empty()) {
    throw ValidationError("temperatures_k", "need at least one temperature");
  }
  for (size_t i = 0; i < temperatures_k.size(); ++i) {
    check_temperature(temperatures_k[i]);
    if (i > 0 && !(temperatures_k[i] > temperatures_k[i - 1])) {
      throw ValidationError("temperatures_k", "must be strictly ascending");
    }
  }
  std::vector<LossBudget> rows;
  rows.reserve(temperatures_k.size());
  for (const double t : temperatures_k) {
    std::vector<std::pair<std::string, double>> parts;
    if (channels.three_phonon) {
      parts.emplace_back("three_phonon", q_three_phonon(t, omega_m, helium));
    }
    if (channels.he3.enabled) {
      parts.emplace_back("he3", q_he3(channels.he3, helium.he3_fraction, omega_m));
    }
    parts.emplace_back("wall", q_wall(niobium, channels.wall));
    LossBudget budget = combine_budget(parts);
    budget.temperature_k = t;
    budget.omega_m = omega_m;
    budget.tau_n_s = number_state_lifetime_s(budget.q_total, t);
    rows.push_back(std::move(budget));
  }
  return rows;
}

}  // namespace sfopt
