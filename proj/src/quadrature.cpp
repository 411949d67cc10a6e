#include "sfopt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

// 15-point Gauss-Legendre rule on [-1, 1]: positive-half abscissae and
// weights (the rule is symmetric; node 0 is listed with half usage handled
// explicitly). Values carry ~22 significant digits.
struct GlPoint {
  double node;
  double weight;
};

constexpr std::array<GlPoint, 8> kGl15Half = {{
    {0.0000000000000000000000, 0.2025782419255612728806},
    {0.2011940939974345223006, 0.1984314853271115764561},
    {0.3941513470775633698972, 0.1861610000155622110268},
    {0.5709721726085388475372, 0.1662692058169939335532},
    {0.7244177313601700474162, 0.1395706779261543144478},
    {0.8482065834104272162006, 0.1071592204671719350119},
    {0.9372733924007059043078, 0.0703660474881081247093},
    {0.9879925180204854284896, 0.0307532419961172683546},
}};

constexpr int kMaxDepth = 48;

template <typename F>
double gl15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = kGl15Half[0].weight * f(mid);
  for (size_t i = 1; i < kGl15Half.size(); ++i) {
    const double dx = half * kGl15Half[i].node;
    sum += kGl15Half[i].weight * (f(mid - dx) + f(mid + dx));
  }
  return sum * half;
}

struct AdaptState {
  const std::function<double(double)>* f;
  int panels_used = 0;
  int max_panels = 0;
};

// Recursive bisection. `budget` is this interval's share of the global
// absolute error allowance; it halves with the interval so the shares sum to
// the global budget no matter how lopsided the tree gets.
double refine(AdaptState& st, double a, double b, double whole, double budget, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl15(*st.f, a, mid);
  const double right = gl15(*st.f, mid, b);
  const double delta = (left + right) - whole;
  if (std::fabs(delta) <= budget) {
    return left + right;
  }
  if (depth >= kMaxDepth) {
    throw NumericError(
        "adaptive quadrature hit its recursion depth cap (integrand too rough "
        "or tolerance too tight)",
        left + right, std::fabs(delta));
  }
  st.panels_used += 2;
  if (st.panels_used > st.max_panels) {
    throw NumericError("adaptive quadrature exhausted its panel budget", left + right,
                       std::fabs(delta));
  }
  return refine(st, a, mid, left, 0.5 * budget, depth + 1) +
         refine(st, mid, b, right, 0.5 * budget, depth + 1);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!std::isfinite(rel_tol) || rel_tol <= 0.0 || rel_tol >= 1.0) {
    throw ValidationError("quadrature.rel_tol", "must lie in (0, 1)");
  }
  if (max_panels < 2) {
    throw ValidationError("quadrature.max_panels", "must be >= 2");
  }
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
  spec.validate();
  if (!f) throw ValidationError("quadrature.integrand", "must be callable");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("quadrature.interval", "endpoints must be finite");
  }
  if (!(a <= b)) {
    throw ValidationError("quadrature.interval", "requires a <= b");
  }
  if (a == b) return 0.0;

  // Scale for the absolute budget: one coarse pass over |f|. Using |f| (not
  // f) keeps cancelling integrals honest -- their tolerance is measured
  // against the mass moved around, not against a near-zero result.
  const double scale = gl15([&f](double x) { return std::fabs(f(x)); }, a, b);
  if (!std::isfinite(scale)) {
    // An infinite budget would make the very first refinement "converge".
    throw NumericError("integrand produced a non-finite value", scale,
                       std::numeric_limits<double>::infinity());
  }
  const double budget = spec.rel_tol * std::max(scale, 1e-300);

  AdaptState st{&f, 0, spec.max_panels};
  const double whole = gl15(f, a, b);
  const double result = refine(st, a, b, whole, budget, 0);
  if (!std::isfinite(result)) {
    throw NumericError("integrand produced a non-finite value", result, budget);
  }
  return result;
}

double integrate_cylinder(const std::function<double(double, double)>& g,
                          const CylinderGeometry& geometry, const QuadratureSpec& spec) {
  spec.validate();
  geometry.validate();
  if (!g) throw ValidationError("quadrature.integrand", "must be callable");

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 1e-2, 5e-15);

  const double length = geometry.length_m;
  auto radial = [&](double r) {
    return r * integrate_1d([&](double z) { return g(r, z); }, 0.0, length, inner);
  };
  return 2.0 * constants::kPi * integrate_1d(radial, 0.0, geometry.radius_m, spec);
}

}  // namespace sfopt
