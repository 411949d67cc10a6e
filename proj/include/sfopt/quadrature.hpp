#pragma once

#include <functional>

#include "sfopt/materials.hpp"

namespace sfopt {

// Tolerance/budget knobs for the adaptive integrator. The defaults are tight
// enough that every overlap/volume integral in the toolkit converges to well
// below its consumer's tolerance.
struct QuadratureSpec {
  double rel_tol = 1e-9;   // target |error| <= rel_tol * integral magnitude scale
  int max_panels = 20000;  // refinement budget; exceeded -> NumericError

  void validate() const;
};

// Adaptive composite 15-point Gauss-Legendre integration of f over [a, b].
//
// The interval is split recursively; a panel is accepted when halving it
// changes the estimate by less than its share of the error budget (the
// budget divides with the interval, so the bound is global). The budget is
// rel_tol times a first-pass estimate of the integral of |f|, which keeps
// the criterion meaningful for integrals that vanish by cancellation.
//
// Deterministic: same inputs, same evaluation points, same result, every
// time. Throws NumericError (with the current estimate and the local error
// bound) if the panel budget or the recursion depth cap is exhausted, and
// ValidationError for a malformed interval or spec.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec);

// Integral of g(r, z) over the cylinder volume:
//   2 pi * int_0^R int_0^L g(r, z) r dz dr.
// The azimuthal direction is assumed already reduced (profiles here are
// separable, so the caller folds its own cos^2/sin^2 factor). Implemented as
// nested 1-D passes with the inner (z) tolerance tightened 100x so inner
// noise cannot masquerade as outer structure.
double integrate_cylinder(const std::function<double(double, double)>& g,
                          const CylinderGeometry& geometry, const QuadratureSpec& spec);

}  // namespace sfopt
