#include <doctest.h>

#include "testutil.hpp"

#include <cmath>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"
#include "sfopt/materials.hpp"
#include "sfopt/quadrature.hpp"

using namespace sfopt;

namespace {
const QuadratureSpec kSpec{};  // library defaults
constexpr double kPi = constants::kPi;
}  // namespace

TEST_CASE("polynomials integrate to closed form at machine precision") {
  CHECK(integrate_1d([](double x) { return x * x; }, 0.0, 1.0, kSpec) ==
        rel(1.0 / 3.0, 1e-14));
  CHECK(integrate_1d([](double x) { return x * x * x - 2.0 * x; }, -1.0, 3.0, kSpec) ==
        rel(12.0, 1e-14));
  CHECK(integrate_1d([](double) { return 4.5; }, 2.0, 7.0, kSpec) ==
        rel(22.5, 1e-14));
}

TEST_CASE("transcendental integrals meet 1e-6 relative against closed forms") {
  struct Case {
    double (*f)(double);
    double a, b, exact;
  };
  const Case cases[] = {
      {[](double x) { return std::sin(x); }, 0.0, kPi, 2.0},
      {[](double x) { return std::exp(x); }, 0.0, 3.0, std::exp(3.0) - 1.0},
      {[](double x) { return 1.0 / x; }, 1.0, 100.0, std::log(100.0)},
      {[](double x) { return std::exp(-x * x); }, -6.0, 6.0, std::sqrt(kPi)},
      {[](double x) { return std::sqrt(x); }, 0.0, 4.0, 16.0 / 3.0},
  };
  for (const Case& c : cases) {
    CHECK(integrate_1d(c.f, c.a, c.b, kSpec) == rel(c.exact, 1e-6));
  }
}

TEST_CASE("heavy cancellation is resolved against the absolute scale of |f|") {
  // int_0^{20 pi} sin = 0; the tolerance budget comes from int |sin| = 40.
  const double v = integrate_1d([](double x) { return std::sin(x); }, 0.0, 20.0 * kPi, kSpec);
  CHECK(std::abs(v) < 1e-7);
}

TEST_CASE("oscillatory integral with many periods") {
  // int_0^{10 pi} sin^2 = 5 pi
  const double v =
      integrate_1d([](double x) { return std::sin(x) * std::sin(x); }, 0.0, 10.0 * kPi, kSpec);
  CHECK(v == rel(5.0 * kPi, 1e-8));
}

TEST_CASE("interval conventions") {
  CHECK(integrate_1d([](double x) { return x; }, 2.0, 2.0, kSpec) == 0.0);
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 3.0, 2.0, kSpec),
                  ValidationError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 0.0, inf, kSpec),
                  ValidationError);
}

TEST_CASE("spec validation") {
  QuadratureSpec bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 0.0, 1.0, bad), ValidationError);
  bad = QuadratureSpec{};
  bad.max_panels = 0;
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 0.0, 1.0, bad), ValidationError);
}

TEST_CASE("panel budget exhaustion raises NumericError with a usable estimate") {
  QuadratureSpec tiny;
  tiny.rel_tol = 1e-13;
  tiny.max_panels = 3;  // far too few for this integrand at this tolerance
  try {
    integrate_1d([](double x) { return std::sin(40.0 * x) + 1.0; }, 0.0, 10.0, tiny);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    // estimate/bound describe the subinterval whose budget died, so they are
    // finite and positive, not necessarily close to the global value
    CHECK(std::isfinite(e.estimate()));
    CHECK(std::isfinite(e.error_bound()));
    CHECK(e.error_bound() > 0.0);
  }
}

TEST_CASE("non-finite integrand values are reported, not propagated") {
  CHECK_THROWS_AS(integrate_1d([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, kSpec),
                  NumericError);
}

TEST_CASE("cylinder integration against closed forms") {
  const CylinderGeometry geom{0.0178, 0.0395};
  const double R = geom.radius_m, L = geom.length_m;
  // f = 1 -> V
  CHECK(integrate_cylinder([](double, double) { return 1.0; }, geom, kSpec) ==
        rel(geom.volume_m3(), 1e-12));
  // f = z -> V * L / 2
  CHECK(integrate_cylinder([](double, double z) { return z; }, geom, kSpec) ==
        rel(geom.volume_m3() * L / 2.0, 1e-10));
  // f = r^2 -> 2 pi L R^4 / 4
  CHECK(integrate_cylinder([](double r, double) { return r * r; }, geom, kSpec) ==
        rel(2.0 * kPi * L * R * R * R * R / 4.0, 1e-10));
  // separable trig: f = cos^2(pi z / L) -> V / 2
  CHECK(integrate_cylinder(
            [&](double, double z) { return std::cos(kPi * z / L) * std::cos(kPi * z / L); },
            geom, kSpec) == rel(geom.volume_m3() / 2.0, 1e-9));
}

TEST_CASE("tightening rel_tol does not move a converged result") {
  QuadratureSpec loose;
  loose.rel_tol = 1e-6;
  QuadratureSpec tight;
  tight.rel_tol = 1e-12;
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const double a = integrate_1d(f, 0.0, 5.0, loose);
  const double b = integrate_1d(f, 0.0, 5.0, tight);
  CHECK(a == rel(b, 1e-6));
}
