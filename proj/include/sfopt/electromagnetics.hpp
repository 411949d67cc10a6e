#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sfopt/materials.hpp"

namespace sfopt {

// Microwave eigenmodes of the same cylinder, treated as a perfectly
// conducting can filled with a uniform dielectric (the helium). TE_mnp uses
// the n-th positive root of J'_m for its radial eigenvalue and needs p >= 1;
// TM_mnp uses the n-th positive root of J_m and allows p >= 0.
enum class EmFamily { TE, TM };

struct EmModeIndex {
  EmFamily family = EmFamily::TE;
  int m = 0;
  int n = 1;
  int p = 1;

  void validate() const;
  std::string label() const;  // "TE,m,n,p"
  static EmModeIndex parse(const std::string& text);

  auto operator<=>(const EmModeIndex&) const = default;
};

// Radial eigenvalue chi (dimensionless).
double em_eigenvalue(const EmModeIndex& index);

// Resonance frequency in Hz for a cavity filled with relative permittivity
// eps_r (eps_r = 1 gives the evacuated cavity):
//   f = c / (2 pi sqrt(eps_r)) * sqrt( (chi/R)^2 + (p pi / L)^2 ).
double em_frequency_hz(const CylinderGeometry& geometry, double eps_r,
                       const EmModeIndex& index);

struct EmMode {
  EmModeIndex index;
  CylinderGeometry geometry;
  double chi = 0.0;
  double frequency_hz = 0.0;      // at the eps_r the mode was built with
  double eps_r = 1.0;
  double peak_intensity = 1.0;    // raw |E|^2 peak, the unit-peak divisor

  // Normalized electric energy density |E(r,z)|^2 (unit peak) for the
  // azimuthally symmetric TE_0np family, whose single E_phi component gives
  //   |E|^2 ~ J_1(chi r / R)^2 sin^2(p pi z / L).
  // Other families mix components with different angular structure; asking
  // for their scalar profile throws UnsupportedModeError.
  double intensity(double r, double z) const;
  bool has_intensity_profile() const {
    return index.family == EmFamily::TE && index.m == 0;
  }
};

EmMode make_em_mode(const CylinderGeometry& geometry, double eps_r, const EmModeIndex& index);

// All TE and TM modes with frequency <= f_max_hz, sorted by
// (frequency, family, m, n, p).
std::vector<EmMode> enumerate_em_modes(const CylinderGeometry& geometry, double eps_r,
                                       double f_max_hz);

}  // namespace sfopt
