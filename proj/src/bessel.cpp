#include "sfopt/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

// Above this argument Miller's start order (and hence cost) keeps climbing,
// while the Hankel expansion is already good to ~1e-17; switch there.
constexpr double kAsymptoticCrossover = 25.0;

// Orders above the public cap are needed internally for derivative formulas
// (J'_20 wants J_21).
constexpr int kMaxInternalOrder = kMaxBesselOrder + 1;

void check_argument(double x) {
  if (!(x >= 0.0)) {  // catches NaN as well
    throw ValidationError("bessel.x", "argument must be >= 0 and not NaN");
  }
}

void check_order(int m) {
  if (m < 0 || m > kMaxBesselOrder) {
    throw ValidationError("bessel.order",
                          "order must lie in [0, " + std::to_string(kMaxBesselOrder) + "]");
  }
}

// Hankel asymptotic expansion for J_nu(x), nu in {0, 1}, x >= crossover:
//   J_nu(x) = sqrt(2/(pi x)) [ P(nu,x) cos(chi) - Q(nu,x) sin(chi) ],
//   chi = x - (2 nu + 1) pi / 4,
//   a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k),
//   P = a_0 - a_2/x^2 + a_4/x^4 - ...,  Q = a_1/x - a_3/x^3 + ...
// The series is truncated at its smallest term; at x >= 25 that term is far
// below 1e-16, so the truncation never limits the advertised accuracy.
double asymptotic_j01(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;     // a_k(nu) / x^k, starting at k = 0
  double prev_mag = 1.0;
  for (int k = 1; k <= 20; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double mag = std::fabs(term);
    if (mag > prev_mag) break;  // past the smallest term: stop before diverging
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (mag < 1e-18) break;
    prev_mag = mag;
  }
  const double chi = x - (2.0 * nu + 1.0) * constants::kPi / 4.0;
  return std::sqrt(2.0 / (constants::kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// J_m(x) for any internal order, no public-range check. Dispatches between
// Miller's backward recurrence (small x) and asymptotics + forward recurrence
// in order (large x, where m < x keeps the upward pass stable).
double eval_j(int m, double x) {
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;

  if (x > kAsymptoticCrossover) {
    const double j0 = asymptotic_j01(0, x);
    if (m == 0) return j0;
    const double j1 = asymptotic_j01(1, x);
    if (m == 1) return j1;
    double jkm1 = j0;
    double jk = j1;
    for (int k = 1; k < m; ++k) {
      const double jkp1 = (2.0 * k / x) * jk - jkm1;
      jkm1 = jk;
      jk = jkp1;
    }
    return jk;
  }

  // Miller's algorithm: run the three-term recurrence downward from a start
  // order well above both m and x (where J decays superexponentially), then
  // normalize with the identity J_0(x) + 2 sum_{k>=1} J_{2k}(x) = 1.
  int start = std::max(m, static_cast<int>(x)) + 36;
  if (start % 2 != 0) ++start;

  double jkp1 = 0.0;    // unnormalized J_{k+1}
  double jk = 1e-30;    // unnormalized J_k, arbitrary small seed
  double norm = 0.0;    // accumulates J_0 + 2 * (even orders >= 2)
  double result = 0.0;  // unnormalized J_m
  for (int k = start; k >= 1; --k) {
    const double jkm1 = (2.0 * k / x) * jk - jkp1;
    jkp1 = jk;
    jk = jkm1;  // now holds J_{k-1}
    const int order = k - 1;
    if (order == m) result = jk;
    if (order >= 2 && order % 2 == 0) norm += 2.0 * jk;
    if (std::fabs(jk) > 1e250) {  // rescale everything together; ratios survive
      jk *= 1e-250;
      jkp1 *= 1e-250;
      norm *= 1e-250;
      result *= 1e-250;
    }
  }
  norm += jk;  // jk now holds unnormalized J_0
  return result / norm;
}

double eval_j_prime(int m, double x) {
  if (x == 0.0) {
    if (m == 1) return 0.5;
    return 0.0;  // J'_0(0) = 0 and J'_m(0) = 0 for m >= 2
  }
  if (m == 0) return -eval_j(1, x);
  return 0.5 * (eval_j(m - 1, x) - eval_j(m + 1, x));
}

// Brackets sign changes of `f` on a 0.01-step scan starting just above zero,
// refines each by bisection, then polishes with Newton using `df`. Returns
// the first `count` roots.
template <typename F, typename DF>
std::vector<double> scan_roots(const F& f, const DF& df, int count, const char* what) {
  if (count < 0) throw ValidationError("roots.count", "must be >= 0");
  std::vector<double> roots;
  roots.reserve(static_cast<size_t>(count));
  if (count == 0) return roots;

  constexpr double kStep = 0.01;
  constexpr double kScanLimit = 400.0;  // far beyond any order-21 root we ask for
  double x_prev = kStep;
  double f_prev = f(x_prev);
  for (double x = 2.0 * kStep; x <= kScanLimit && static_cast<int>(roots.size()) < count;
       x += kStep) {
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
      x_prev = x + kStep;
      f_prev = f(x_prev);
      x += kStep;
      continue;
    }
    if ((f_prev < 0.0) != (fx < 0.0)) {
      // Bisect the bracket down to ~1e-13, then two Newton steps for the
      // remaining digits (all these roots are simple, so Newton is safe).
      double lo = x_prev, hi = x, flo = f_prev;
      while (hi - lo > 1e-13 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) == (fmid < 0.0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 2; ++it) {
        const double d = df(root);
        if (d == 0.0) break;
        const double step = f(root) / d;
        const double next = root - step;
        if (next < x_prev - kStep || next > x + kStep) break;  // safeguard
        root = next;
        if (std::fabs(step) < 1e-15 * root) break;
      }
      roots.push_back(root);
    }
    f_prev = fx;
    x_prev = x;
  }

  if (static_cast<int>(roots.size()) < count) {
    throw NumericError(std::string("root scan for ") + what +
                           " exhausted its search interval before finding the "
                           "requested number of roots",
                       roots.empty() ? 0.0 : roots.back(), kScanLimit);
  }
  // Contract checks: strictly ascending, and each root actually kills f.
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i > 0 && !(roots[i] > roots[i - 1])) {
      throw NumericError(std::string("root table for ") + what + " is not ascending",
                         roots[i], 0.0);
    }
    if (std::fabs(f(roots[i])) >= 1e-10) {
      throw NumericError(std::string("root of ") + what + " failed its residual check",
                         roots[i], std::fabs(f(roots[i])));
    }
  }
  return roots;
}

std::vector<double> cached_roots(std::map<int, std::vector<double>>& cache, int m, int count,
                                 std::vector<double> (*compute)(int, int)) {
  static std::mutex mu;
  if (count < 0) throw ValidationError("roots.count", "must be >= 0");
  std::scoped_lock lock(mu);
  auto& entry = cache[m];
  if (static_cast<int>(entry.size()) < count) {
    entry = compute(m, std::max(count, static_cast<int>(entry.size()) + 8));
  }
  return std::vector<double>(entry.begin(), entry.begin() + count);
}

}  // namespace

double bessel_j(int m, double x) {
  check_order(m);
  check_argument(x);
  return eval_j(m, x);
}

double bessel_j_prime(int m, double x) {
  check_order(m);
  check_argument(x);
  return eval_j_prime(m, x);
}

double bessel_j_second(int m, double x) {
  check_order(m);
  check_argument(x);
  if (x == 0.0) {
    if (m == 0) return -0.5;
    if (m == 2) return 0.25;
    return 0.0;
  }
  const double jm = eval_j(m, x);
  const double jp = eval_j_prime(m, x);
  return (static_cast<double>(m) * m / (x * x) - 1.0) * jm - jp / x;
}

std::vector<double> bessel_j_roots(int m, int count) {
  check_order(m);
  auto f = [m](double x) { return eval_j(m, x); };
  auto df = [m](double x) { return eval_j_prime(m, x); };
  return scan_roots(f, df, count, "J_m");
}

std::vector<double> bessel_j_prime_roots(int m, int count) {
  check_order(m);
  if (m + 1 > kMaxInternalOrder) {
    throw ValidationError("bessel.order", "derivative roots need order + 1 internally");
  }
  auto f = [m](double x) { return eval_j_prime(m, x); };
  auto df = [m](double x) {
    return (static_cast<double>(m) * m / (x * x) - 1.0) * eval_j(m, x) - eval_j_prime(m, x) / x;
  };
  return scan_roots(f, df, count, "J'_m");
}

std::vector<double> cached_j_roots(int m, int count) {
  check_order(m);
  static std::map<int, std::vector<double>> cache;
  return cached_roots(cache, m, count, &bessel_j_roots);
}

std::vector<double> cached_j_prime_roots(int m, int count) {
  check_order(m);
  static std::map<int, std::vector<double>> cache;
  return cached_roots(cache, m, count, &bessel_j_prime_roots);
}

}  // namespace sfopt
