#pragma once

#include <vector>

namespace sfopt {

// Bessel functions of the first kind J_m and their derivatives, for the
// integer orders a cylindrical cavity calculation ever touches (0..20).
// Accuracy target: absolute error < 1e-12 for x in [0, 100] (checked in the
// test suite against an independent long-double series oracle and a frozen
// high-precision reference table).
//
// Implementation: Miller's backward recurrence with the even-order
// normalization sum for small/moderate arguments, switching to the Hankel
// asymptotic expansion (plus stable forward recurrence in order) for large
// arguments where the backward start order would get expensive.

inline constexpr int kMaxBesselOrder = 20;

// J_m(x). Requires 0 <= m <= kMaxBesselOrder and x >= 0.
double bessel_j(int m, double x);

// d/dx J_m(x), same domain.
double bessel_j_prime(int m, double x);

// d^2/dx^2 J_m(x) for x > 0, from the defining ODE:
//   J'' = (m^2/x^2 - 1) J - J'/x.
// Used to polish derivative roots with one Newton step.
double bessel_j_second(int m, double x);

// First `count` positive roots of J_m (ascending). For m >= 1 the root at
// x = 0 is not included.
std::vector<double> bessel_j_roots(int m, int count);

// First `count` positive roots of J'_m (ascending). For m = 0 the stationary
// point at x = 0 is NOT included (J'_0(0) = 0); callers that need the
// uniform-pressure radial solution handle the zero eigenvalue themselves.
// Each returned root r satisfies |J'_m(r)| < 1e-10 and the list is strictly
// ascending (both are asserted before returning).
std::vector<double> bessel_j_prime_roots(int m, int count);

// Cached variants: the root tables are tiny and reused constantly by mode
// enumeration, so they are memoized per order (thread-safe). Returns exactly
// `count` roots by value.
std::vector<double> cached_j_roots(int m, int count);
std::vector<double> cached_j_prime_roots(int m, int count);

}  // namespace sfopt
