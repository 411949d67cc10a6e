#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sfopt/materials.hpp"
#include "sfopt/quadrature.hpp"

namespace sfopt {

// First-sound standing waves of helium in a rigid closed cylinder (velocity
// normal to every wall vanishes, i.e. Neumann condition on the pressure
// profile). Index (m, n, k):
//   m  azimuthal order            (>= 0)
//   n  radial order: n-th solution of J'_m(alpha) = 0, where n = 0 denotes
//      the uniform radial profile alpha = 0 (allowed for m = 0 only)
//   k  axial half-wavelength count (>= 0; (0,0,0) is the trivial constant
//      and is rejected)
struct AcousticModeIndex {
  int m = 0;
  int n = 0;
  int k = 0;

  void validate() const;
  int degeneracy() const { return m == 0 ? 1 : 2; }  // cos/sin azimuthal pair
  std::string label() const;                         // "m,n,k"
  static AcousticModeIndex parse(const std::string& text);

  auto operator<=>(const AcousticModeIndex&) const = default;
};

// Radial eigenvalue alpha for the index (dimensionless; pressure goes as
// J_m(alpha r / R)). Zero for n = 0.
double acoustic_eigenvalue(const AcousticModeIndex& index);

// Mode frequency in Hz:
//   f = (c4 / 2 pi) * sqrt( (alpha/R)^2 + (k pi / L)^2 ).
double acoustic_frequency_hz(const CylinderGeometry& geometry, double c4_m_s,
                             const AcousticModeIndex& index);

// A fully evaluated mode: frequency, pressure profile (normalized to unit
// peak amplitude), and the effective volume V_eff = integral of the squared
// normalized profile over the cell.
struct AcousticMode {
  AcousticModeIndex index;
  CylinderGeometry geometry;
  double alpha = 0.0;
  double frequency_hz = 0.0;
  double v_eff_m3 = 0.0;
  bool has_radial_node = false;  // true when the profile crosses zero in r in (0, R)
  int degeneracy = 1;
  double peak_norm = 1.0;  // max_r |J_m(alpha r / R)|, the unit-peak divisor

  // (r, z) part of the pressure profile, unit peak. The azimuthal cos(m phi)
  // factor is separable and handled by whoever integrates over phi.
  double profile(double r, double z) const;
  // Partial derivatives of the profile, for boundary-condition checks.
  double profile_dr(double r, double z) const;
  double profile_dz(double r, double z) const;
};

AcousticMode make_acoustic_mode(const CylinderGeometry& geometry, double c4_m_s,
                                const AcousticModeIndex& index, const QuadratureSpec& spec);

// Index/frequency pairs only -- no profile integrals. This is what mode
// selection inside sweeps uses, where building full modes for the whole
// spectrum at every grid point would be wasted work.
struct AcousticLine {
  AcousticModeIndex index;
  double frequency_hz = 0.0;
};
std::vector<AcousticLine> acoustic_spectrum(const CylinderGeometry& geometry, double c4_m_s,
                                            double f_max_hz);

// All modes with frequency <= f_max_hz, sorted by (frequency, m, n, k).
// Degenerate m >= 1 pairs appear once with degeneracy = 2.
std::vector<AcousticMode> enumerate_acoustic_modes(const CylinderGeometry& geometry,
                                                   double c4_m_s, double f_max_hz,
                                                   const QuadratureSpec& spec);

// Effective volume of an arbitrary separable profile f(r, z) * cos(m phi):
//   V_eff = A_theta(m) * int_0^R int_0^L f(r,z)^2 r dz dr,
// with A_theta = 2 pi for m = 0 and pi for m >= 1 (mean of cos^2).
double effective_volume_m3(const std::function<double(double, double)>& f_rz, int azimuthal_m,
                           const CylinderGeometry& geometry, const QuadratureSpec& spec);

}  // namespace sfopt
