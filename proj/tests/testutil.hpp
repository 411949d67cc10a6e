#pragma once

#include <doctest.h>

// Strictly relative comparison: |lhs - value| < eps * max(|lhs|, |value|).
// doctest's Approx defaults to scale = 1.0, which turns comparisons of
// small-magnitude quantities (mode volumes ~1e-6 m^3, couplings ~1e-8 rad/s)
// into absolute ones; zeroing the scale restores the intended meaning.
inline doctest::Approx rel(double value, double eps) {
  return doctest::Approx(value).epsilon(eps).scale(0.0);
}
