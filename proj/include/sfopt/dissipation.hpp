#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfopt/materials.hpp"

namespace sfopt {

// Wall participation: the fraction of acoustic mode energy stored as elastic
// strain in the niobium shell (compliance ratio). The channel's Q is the
// substrate Q diluted by this fraction.
struct WallLossParams {
  double energy_fraction = 4e-4;

  void validate() const;
};

// Empirical 3He scattering channel: Q = coefficient_a / (x3 * omega_m^2)
// with coefficient_a in rad^2 s^-2 (so Q comes out dimensionless). Disabled
// by default; the coefficient is a calibration, not a first-principles
// number.
struct He3LossModel {
  bool enabled = false;
  double coefficient_a = 3.95e11;

  void validate() const;
};

// Which loss channels contribute to the budget.
struct LossChannels {
  bool three_phonon = true;
  He3LossModel he3;
  WallLossParams wall;
};

// One temperature point of the loss budget: per-channel quality factors, the
// combined Q (reciprocal sum), and the number-state lifetime.
struct LossBudget {
  double temperature_k = 0.0;
  double omega_m = 0.0;
  std::vector<std::pair<std::string, double>> channels;  // (name, Q), input order
  std::optional<double> q_three_phonon;
  std::optional<double> q_he3;
  std::optional<double> q_wall;
  double q_total = 0.0;
  double tau_n_s = 0.0;
};

// Phonon-phonon (Landau-Beliaev three-phonon) amplitude attenuation of first
// sound in the low-temperature collisionless regime [1/m]:
//   alpha = (pi^3 / 60) (G + 1)^2 (k_B T)^4 omega / (rho4 hbar^3 c4^6).
// Valid only in the phonon-dominated regime; temperatures above 0.5 K throw
// ValidationError (the model would be silently wrong there, not just
// inaccurate).
double attenuation_three_phonon(double temperature_k, double omega_m,
                                const HeliumProperties& helium);

// Q of the three-phonon channel under the energy-attenuation convention
//   Q = omega / (alpha c4),
// which is frequency-independent because alpha is linear in omega. The
// omega_m argument is validated but cancels exactly (asserted in tests).
double q_three_phonon(double temperature_k, double omega_m, const HeliumProperties& helium);

// Q of the 3He impurity channel at number fraction x3.
double q_he3(const He3LossModel& model, double x3, double omega_m);

// Q of the wall (substrate participation) channel.
double q_wall(const NiobiumProperties& niobium, const WallLossParams& wall);

// Reciprocal combination 1/Q_total = sum_i 1/Q_i. Channel names are kept;
// recognized names ("three_phonon", "he3", "wall") also fill the typed
// slots. Throws ValidationError on an empty list or any non-positive Q.
LossBudget combine_budget(const std::vector<std::pair<std::string, double>>& channels);

// Mean lifetime of a phonon number state in a mode of quality factor Q:
//   tau_N = hbar Q / (k_B T),
// i.e. the energy decay time referred to the thermal occupation.
double number_state_lifetime_s(double q, double temperature_k);

// Budget rows over a temperature sweep (ascending, all positive). omega_m is
// the mechanical angular frequency the 3He channel sees.
std::vector<LossBudget> q_vs_temperature(const std::vector<double>& temperatures_k,
                                         double omega_m, const LossChannels& channels,
                                         const HeliumProperties& helium,
                                         const NiobiumProperties& niobium);

}  // namespace sfopt
