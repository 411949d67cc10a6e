#include "sfopt/coupling.hpp"

#include <cmath>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"
#include "sfopt/quadrature.hpp"

namespace sfopt {

namespace {

void check_same_geometry(const AcousticMode& acoustic, const EmMode& em) {
  if (acoustic.geometry.radius_m != em.geometry.radius_m ||
      acoustic.geometry.length_m != em.geometry.length_m) {
    throw ValidationError("geometry",
                          "acoustic and EM modes were built on different cylinders");
  }
}

void check_omega_m(double omega_m) {
  if (!std::isfinite(omega_m) || omega_m <= 0.0) {
    throw ValidationError("omega_m", "mechanical angular frequency must be positive");
  }
}

}  // namespace

void MicrowaveCavityParams::validate() const {
  if (!std::isfinite(omega_c) || omega_c <= 0.0) {
    throw ValidationError("cavity.omega_c", "must be a positive finite rate");
  }
  for (const auto& [value, name] :
       {std::pair{kappa_int, "cavity.kappa_int"}, std::pair{kappa_in, "cavity.kappa_in"},
        std::pair{kappa_out, "cavity.kappa_out"}}) {
    if (!std::isfinite(value) || value < 0.0) {
      throw ValidationError(name, "loss/coupling rates must be >= 0 and finite");
    }
  }
  if (kappa_total() <= 0.0) {
    throw ValidationError("cavity.kappa", "total linewidth must be positive");
  }
}

double overlap_omega(const AcousticMode& acoustic, const EmMode& em,
                     const HeliumProperties& helium, const QuadratureSpec& spec) {
  check_same_geometry(acoustic, em);
  helium.validate();
  spec.validate();
  if (!em.has_intensity_profile()) {
    throw UnsupportedModeError("overlap integrals need a scalar |E|^2 profile; only the "
                               "TE_0np family provides one (got " + em.index.label() + ")");
  }
  if (em.eps_r != helium.epsilon_r) {
    throw ValidationError("eps_r",
                          "EM mode was built with a different permittivity than the helium "
                          "properties in use");
  }

  // Azimuthal part, exact: the intensity is phi-independent, so the
  // numerator carries int_0^{2pi} cos(m phi) d phi, which is 2 pi for m = 0
  // and identically zero otherwise.
  if (acoustic.index.m != 0) return 0.0;

  // Axial part, also exact: int_0^L cos(k pi z/L) sin^2(p pi z/L) dz is L/2
  // for k = 0 and -L/4 for k = 2p, and vanishes for every other k (expand
  // sin^2 to (1 - cos(2 p pi z/L))/2; distinct cosine harmonics are
  // orthogonal over the cell). Taking the z direction analytically matters:
  // for the vanishing parities the volume integral is pure cancellation,
  // which adaptive quadrature cannot converge on -- it would chase rounding
  // noise left over from the inner passes.
  const int k = acoustic.index.k;
  const int p = em.index.p;
  double axial_ratio;  // numerator z-factor over the denominator's L/2
  if (k == 0) {
    axial_ratio = 1.0;
  } else if (k == 2 * p) {
    axial_ratio = -0.5;
  } else {
    return 0.0;
  }

  // Radial factors, taken on lines where the axial parts are unity:
  // cos(k pi z/L) = 1 at z = 0, sin^2(p pi z/L) = 1 at z = L/(2p).
  const double radius = acoustic.geometry.radius_m;
  const double z_antinode = acoustic.geometry.length_m / (2.0 * p);
  const double radial_num = integrate_1d(
      [&](double r) { return acoustic.profile(r, 0.0) * em.intensity(r, z_antinode) * r; },
      0.0, radius, spec);
  const double radial_den = integrate_1d(
      [&](double r) { return em.intensity(r, z_antinode) * r; }, 0.0, radius, spec);
  return axial_ratio * radial_num / (helium.epsilon_r * radial_den);
}

double pressure_transduction(double omega_c, const HeliumProperties& helium,
                             double omega_overlap) {
  if (!std::isfinite(omega_c) || omega_c <= 0.0) {
    throw ValidationError("omega_c", "cavity angular frequency must be positive");
  }
  helium.validate();
  if (!std::isfinite(omega_overlap) || std::fabs(omega_overlap) > 1.0) {
    throw ValidationError("omega_overlap",
                          "overlap must be finite with magnitude <= 1 (it is a normalized "
                          "spatial average)");
  }
  const double eps = helium.epsilon_r;
  return -(omega_c * helium.compressibility_per_pa / 6.0) * (eps + 2.0) * (eps - 1.0) *
         omega_overlap;
}

double zero_point_pressure(double omega_m, const HeliumProperties& helium, double v_eff_m3) {
  check_omega_m(omega_m);
  helium.validate();
  if (!std::isfinite(v_eff_m3) || v_eff_m3 <= 0.0) {
    throw ValidationError("v_eff_m3", "effective volume must be positive");
  }
  return std::sqrt(constants::kHbar * omega_m /
                   (helium.compressibility_per_pa * v_eff_m3));
}

double single_quantum_shift(double dwc_dp, double dp_sql) {
  if (!std::isfinite(dwc_dp) || !std::isfinite(dp_sql) || dp_sql < 0.0) {
    throw ValidationError("g0", "inputs must be finite with dp_sql >= 0");
  }
  return std::fabs(dwc_dp * dp_sql);
}

bool is_sideband_resolved(double omega_m, const MicrowaveCavityParams& cavity) {
  check_omega_m(omega_m);
  cavity.validate();
  return omega_m > cavity.kappa_total();
}

CouplingResult couple_modes(const AcousticMode& acoustic, const EmMode& em,
                            const HeliumProperties& helium,
                            const MicrowaveCavityParams& cavity, const QuadratureSpec& spec) {
  cavity.validate();

  CouplingResult result;
  result.acoustic = acoustic.index;
  result.em = em.index;
  result.acoustic_frequency_hz = acoustic.frequency_hz;
  result.em_frequency_hz = em.frequency_hz;
  result.v_eff_m3 = acoustic.v_eff_m3;
  result.omega_overlap = overlap_omega(acoustic, em, helium, spec);
  result.dwc_dp = pressure_transduction(cavity.omega_c, helium, result.omega_overlap);
  const double omega_m = 2.0 * constants::kPi * acoustic.frequency_hz;
  result.dp_sql = zero_point_pressure(omega_m, helium, acoustic.v_eff_m3);
  result.g0 = single_quantum_shift(result.dwc_dp, result.dp_sql);
  result.sideband_resolved = is_sideband_resolved(omega_m, cavity);
  return result;
}

}  // namespace sfopt
