#pragma once

#include "sfopt/acoustics.hpp"
#include "sfopt/electromagnetics.hpp"
#include "sfopt/materials.hpp"
#include "sfopt/quadrature.hpp"

namespace sfopt {

// Operating parameters of the microwave readout mode: the as-built resonance
// frequency and its linewidth decomposition. All rates in rad/s. The
// operating frequency is a measured quantity and may differ from the
// ideal-cylinder eigenfrequency by the usual ~0.5% machining/seam shifts, so
// it is configured rather than derived.
struct MicrowaveCavityParams {
  double omega_c = 2.0 * constants::kPi * 10.6e9;     // pump mode, filled cell
  double kappa_int = 2.0 * constants::kPi * 31.0;     // internal loss rate
  double kappa_in = 2.0 * constants::kPi * 633.0;     // input coupling rate
  double kappa_out = 2.0 * constants::kPi * 633.0;    // output coupling rate

  double kappa_total() const { return kappa_int + kappa_in + kappa_out; }
  void validate() const;
};

// Dimensionless overlap of an acoustic pressure profile f (unit peak) with
// the normalized electric energy density of an EM mode:
//   Omega = int f |E|^2 dV / int eps_r |E|^2 dV.
// All three directions separate. The azimuthal and axial factors are done
// analytically -- the overlap vanishes identically for acoustic m >= 1
// (against the axisymmetric TE_0np family) and for every axial order except
// k = 0 and k = 2p -- and only the radial factor is integrated numerically.
// Requires an EM mode with a scalar intensity profile (TE_0np), else
// UnsupportedModeError.
double overlap_omega(const AcousticMode& acoustic, const EmMode& em,
                     const HeliumProperties& helium, const QuadratureSpec& spec);

// Cavity pull per unit pressure at the overlap hot spot [rad/s per Pa]:
//   d omega_c / dP = -(omega_c kappa / 6) (eps_r + 2)(eps_r - 1) Omega,
// the Clausius-Mossotti response of the dielectric to adiabatic compression.
double pressure_transduction(double omega_c, const HeliumProperties& helium,
                             double omega_overlap);

// Zero-point pressure amplitude of an acoustic mode [Pa]:
//   dP_SQL = sqrt( hbar omega_m / (kappa V_eff) ).
double zero_point_pressure(double omega_m, const HeliumProperties& helium, double v_eff_m3);

// Single-photon optomechanical coupling rate [rad/s]: the cavity shift per
// zero-point pressure quantum.
double single_quantum_shift(double dwc_dp, double dp_sql);

// True when the mechanical frequency exceeds the total cavity linewidth.
bool is_sideband_resolved(double omega_m, const MicrowaveCavityParams& cavity);

struct CouplingResult {
  AcousticModeIndex acoustic;
  EmModeIndex em;
  double acoustic_frequency_hz = 0.0;
  double em_frequency_hz = 0.0;
  double v_eff_m3 = 0.0;
  double omega_overlap = 0.0;
  double dwc_dp = 0.0;    // rad/s per Pa
  double dp_sql = 0.0;    // Pa
  double g0 = 0.0;        // rad/s
  bool sideband_resolved = false;
};

// Full parametric-coupling evaluation of one acoustic/EM mode pair. Both
// modes must have been built on the same geometry, and the EM mode on the
// helium's permittivity. The transduction slope uses the configured
// operating frequency in `cavity`.
CouplingResult couple_modes(const AcousticMode& acoustic, const EmMode& em,
                            const HeliumProperties& helium,
                            const MicrowaveCavityParams& cavity, const QuadratureSpec& spec);

}  // namespace sfopt
