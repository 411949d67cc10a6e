#include <doctest.h>

#include "testutil.hpp"

#include <cmath>

#include "sfopt/bessel.hpp"
#include "sfopt/errors.hpp"

#include "bessel_reference.inc"
#include "bessel_roots_reference.inc"
#include "oracles.hpp"

using namespace sfopt;

TEST_CASE("bessel_j matches the frozen high-precision table to 1e-12") {
  for (const BesselRef& ref : kBesselReference) {
    CHECK(std::abs(bessel_j(ref.m, ref.x) - ref.value) < 1e-12);
  }
}

TEST_CASE("bessel_j matches an independent power-series evaluation for x <= 20") {
  for (int m : {0, 1, 2, 3, 5, 10, 20}) {
    for (double x = 0.0; x <= 20.0; x += 0.37) {
      const double series = static_cast<double>(oracles::bessel_j_series(m, x));
      CHECK(std::abs(bessel_j(m, x) - series) < 2e-12);
    }
  }
}

TEST_CASE("bessel_j special values and symmetries") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(7, 0.0) == 0.0);
  // derivative identity J0' = -J1
  for (double x : {0.5, 1.7, 4.2, 11.0, 30.0, 77.5}) {
    CHECK(bessel_j_prime(0, x) == rel(-bessel_j(1, x), 1e-12));
  }
  // three-term recurrence J_{m-1}(x) + J_{m+1}(x) = (2m/x) J_m(x)
  for (int m : {1, 2, 5, 12}) {
    for (double x : {0.9, 3.3, 9.7, 26.0, 60.0}) {
      const double lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
      const double rhs = 2.0 * m / x * bessel_j(m, x);
      CHECK(std::abs(lhs - rhs) < 1e-11);
    }
  }
}

TEST_CASE("bessel argument and order validation") {
  CHECK_THROWS_AS(bessel_j(-1, 1.0), ValidationError);
  CHECK_THROWS_AS(bessel_j(21, 1.0), ValidationError);
  CHECK_THROWS_AS(bessel_j(0, -1.0), ValidationError);
  CHECK_THROWS_AS(bessel_j(0, std::nan("")), ValidationError);
  CHECK(bessel_j_roots(0, 0).empty());
  CHECK_THROWS_AS(bessel_j_roots(0, -1), ValidationError);
  CHECK_THROWS_AS(bessel_j_prime_roots(21, 3), ValidationError);
}

TEST_CASE("roots of J_m match the frozen table") {
  for (int m = 0; m <= 8; ++m) {
    const std::vector<double> roots = bessel_j_roots(m, 6);
    REQUIRE(roots.size() == 6);
    for (int i = 0; i < 6; ++i) {
      CHECK(std::abs(roots[i] - kJRootReference[m][i]) < 1e-10);
    }
  }
}

TEST_CASE("roots of J'_m match the frozen table") {
  for (int m = 0; m <= 8; ++m) {
    const std::vector<double> roots = bessel_j_prime_roots(m, 6);
    REQUIRE(roots.size() == 6);
    for (int i = 0; i < 6; ++i) {
      CHECK(std::abs(roots[i] - kJPrimeRootReference[m][i]) < 1e-10);
    }
  }
}

TEST_CASE("roots agree with a brute-force sign scan of the series oracle") {
  // Scan J'_m via the series (J'_m = (J_{m-1} - J_{m+1})/2, or -J_1 for
  // m = 0) on a 1e-3 grid and bisect. Valid up to x ~ 20.
  for (int m = 0; m <= 5; ++m) {
    auto jprime = [m](double x) {
      if (m == 0) return -static_cast<double>(oracles::bessel_j_series(1, x));
      return static_cast<double>(oracles::bessel_j_series(m - 1, x) -
                                 oracles::bessel_j_series(m + 1, x)) /
             2.0;
    };
    const std::vector<double> scanned = oracles::scan_roots(jprime, 0.05, 19.0, 1e-3);
    const std::vector<double> lib = bessel_j_prime_roots(m, 4);
    REQUIRE(scanned.size() >= 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(lib[i] - scanned[i]) < 1e-8);
    }
  }
}

TEST_CASE("root values actually sit on sign changes of the library function") {
  for (int m : {0, 3, 8, 15, 20}) {
    for (double r : bessel_j_roots(m, 5)) {
      CHECK(std::abs(bessel_j(m, r)) < 1e-10);
      CHECK(bessel_j(m, r - 1e-4) * bessel_j(m, r + 1e-4) < 0.0);
    }
    for (double r : bessel_j_prime_roots(m, 5)) {
      CHECK(std::abs(bessel_j_prime(m, r)) < 1e-10);
      CHECK(bessel_j_prime(m, r - 1e-4) * bessel_j_prime(m, r + 1e-4) < 0.0);
    }
  }
}

TEST_CASE("J'_0 roots exclude the stationary point at x = 0") {
  const std::vector<double> roots = bessel_j_prime_roots(0, 1);
  CHECK(roots[0] == rel(3.8317059702075123, 1e-13));
}

TEST_CASE("cached root access returns exactly the requested count") {
  CHECK(cached_j_roots(2, 3).size() == 3);
  CHECK(cached_j_prime_roots(2, 5).size() == 5);
  CHECK(cached_j_prime_roots(2, 2).size() == 2);  // shrinking request after a longer one
  CHECK(cached_j_prime_roots(2, 5)[4] == bessel_j_prime_roots(2, 5)[4]);
}

TEST_CASE("second derivative from the defining ODE") {
  // x^2 J'' + x J' + (x^2 - m^2) J = 0
  for (int m : {0, 1, 4}) {
    for (double x : {0.7, 2.9, 8.1, 19.5}) {
      const double residual = x * x * bessel_j_second(m, x) + x * bessel_j_prime(m, x) +
                              (x * x - m * m) * bessel_j(m, x);
      CHECK(std::abs(residual) < 1e-9);
    }
  }
}
