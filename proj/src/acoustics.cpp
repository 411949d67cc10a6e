#include "sfopt/acoustics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sfopt/bessel.hpp"
#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

void check_sound_speed(double c4) {
  if (!std::isfinite(c4) || c4 <= 0.0) {
    throw ValidationError("helium.sound_speed_m_s", "must be a positive finite number");
  }
}

// Strict integer field parse for "m,n,k"-style labels.
int parse_int_field(const std::string& text, size_t begin, size_t end, const char* what) {
  int value = 0;
  const char* first = text.data() + begin;
  const char* last = text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ValidationError(what, "expected an integer, got '" + text.substr(begin, end - begin) +
                                    "'");
  }
  return value;
}

}  // namespace

void AcousticModeIndex::validate() const {
  if (m < 0 || m > kMaxBesselOrder) {
    throw ValidationError("acoustic_mode.m",
                          "azimuthal order must lie in [0, " +
                              std::to_string(kMaxBesselOrder) + "]");
  }
  if (n < 0) throw ValidationError("acoustic_mode.n", "radial order must be >= 0");
  if (k < 0) throw ValidationError("acoustic_mode.k", "axial order must be >= 0");
  if (n == 0 && m != 0) {
    throw ValidationError("acoustic_mode.n",
                          "the uniform radial profile (n = 0) exists only for m = 0");
  }
  if (m == 0 && n == 0 && k == 0) {
    throw ValidationError("acoustic_mode",
                          "(0,0,0) is the constant solution, not an oscillating mode");
  }
}

std::string AcousticModeIndex::label() const {
  return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k);
}

AcousticModeIndex AcousticModeIndex::parse(const std::string& text) {
  const size_t c1 = text.find(',');
  const size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      text.find(',', c2 + 1) != std::string::npos) {
    throw ValidationError("acoustic_mode",
                          "expected 'm,n,k' (three comma-separated integers), got '" + text + "'");
  }
  AcousticModeIndex index;
  index.m = parse_int_field(text, 0, c1, "acoustic_mode.m");
  index.n = parse_int_field(text, c1 + 1, c2, "acoustic_mode.n");
  index.k = parse_int_field(text, c2 + 1, text.size(), "acoustic_mode.k");
  index.validate();
  return index;
}

double acoustic_eigenvalue(const AcousticModeIndex& index) {
  index.validate();
  if (index.n == 0) return 0.0;
  return cached_j_prime_roots(index.m, index.n)[static_cast<size_t>(index.n) - 1];
}

double acoustic_frequency_hz(const CylinderGeometry& geometry, double c4_m_s,
                             const AcousticModeIndex& index) {
  geometry.validate();
  check_sound_speed(c4_m_s);
  const double alpha = acoustic_eigenvalue(index);
  const double kr = alpha / geometry.radius_m;
  const double kz = index.k * constants::kPi / geometry.length_m;
  return c4_m_s / (2.0 * constants::kPi) * std::hypot(kr, kz);
}

double AcousticMode::profile(double r, double z) const {
  return bessel_j(index.m, alpha * r / geometry.radius_m) *
         std::cos(index.k * constants::kPi * z / geometry.length_m) / peak_norm;
}

double AcousticMode::profile_dr(double r, double z) const {
  return (alpha / geometry.radius_m) *
         bessel_j_prime(index.m, alpha * r / geometry.radius_m) *
         std::cos(index.k * constants::kPi * z / geometry.length_m) / peak_norm;
}

double AcousticMode::profile_dz(double r, double z) const {
  const double kz = index.k * constants::kPi / geometry.length_m;
  return -kz * bessel_j(index.m, alpha * r / geometry.radius_m) *
         std::sin(index.k * constants::kPi * z / geometry.length_m) / peak_norm;
}

AcousticMode make_acoustic_mode(const CylinderGeometry& geometry, double c4_m_s,
                                const AcousticModeIndex& index, const QuadratureSpec& spec) {
  geometry.validate();
  check_sound_speed(c4_m_s);
  index.validate();
  spec.validate();

  AcousticMode mode;
  mode.index = index;
  mode.geometry = geometry;
  mode.alpha = acoustic_eigenvalue(index);
  mode.frequency_hz = acoustic_frequency_hz(geometry, c4_m_s, index);
  mode.degeneracy = index.degeneracy();
  // |J_m| over [0, alpha] peaks at the first extremum of J_m: the origin for
  // m = 0, the first root of J'_m otherwise.
  if (index.m == 0) {
    mode.peak_norm = 1.0;
  } else {
    const double first_extremum = cached_j_prime_roots(index.m, 1)[0];
    mode.peak_norm = std::fabs(bessel_j(index.m, first_extremum));
  }
  // The profile crosses zero in r iff the first zero of J_m sits inside
  // (0, alpha). (J_m and J'_m never vanish together, so the endpoint is safe.)
  mode.has_radial_node =
      index.n > 0 && cached_j_roots(index.m, 1)[0] < mode.alpha;
  mode.v_eff_m3 = effective_volume_m3(
      [&mode](double r, double z) { return mode.profile(r, z); }, index.m, geometry, spec);
  return mode;
}

std::vector<AcousticLine> acoustic_spectrum(const CylinderGeometry& geometry, double c4_m_s,
                                            double f_max_hz) {
  geometry.validate();
  check_sound_speed(c4_m_s);
  if (!std::isfinite(f_max_hz) || f_max_hz <= 0.0) {
    throw ValidationError("f_max_hz", "must be a positive finite number");
  }

  const double alpha_max = 2.0 * constants::kPi * f_max_hz * geometry.radius_m / c4_m_s;
  const int k_max = static_cast<int>(std::floor(2.0 * geometry.length_m * f_max_hz / c4_m_s));

  // The first radial eigenvalue grows monotonically with m. If alpha_max
  // reaches the first eigenvalue of the highest supported order, orders
  // beyond the cap could contribute too; refuse rather than return a
  // silently incomplete spectrum.
  if (alpha_max >= cached_j_prime_roots(kMaxBesselOrder, 1)[0]) {
    throw ValidationError("f_max_hz",
                          "frequency ceiling requires azimuthal orders beyond the supported "
                          "range (m > " + std::to_string(kMaxBesselOrder) + ")");
  }

  std::vector<AcousticLine> lines;
  for (int m = 0; m <= kMaxBesselOrder; ++m) {
    if (m >= 1 && cached_j_prime_roots(m, 1)[0] > alpha_max) break;
    // Eigenvalues for this order, ascending, up to alpha_max. n = 0 (the
    // uniform profile, alpha = 0) exists for m = 0 only.
    std::vector<std::pair<int, double>> eigen;
    if (m == 0) eigen.emplace_back(0, 0.0);
    int want = static_cast<int>(alpha_max / constants::kPi) + 3;
    std::vector<double> roots = cached_j_prime_roots(m, want);
    while (!roots.empty() && roots.back() <= alpha_max) {
      want += 4;
      roots = cached_j_prime_roots(m, want);
    }
    for (size_t i = 0; i < roots.size(); ++i) {
      if (roots[i] > alpha_max) break;
      eigen.emplace_back(static_cast<int>(i) + 1, roots[i]);
    }

    for (const auto& [n, alpha] : eigen) {
      (void)alpha;
      for (int k = 0; k <= k_max; ++k) {
        if (m == 0 && n == 0 && k == 0) continue;
        AcousticModeIndex index{m, n, k};
        const double f = acoustic_frequency_hz(geometry, c4_m_s, index);
        if (f > f_max_hz) continue;
        lines.push_back(AcousticLine{index, f});
      }
    }
  }

  std::sort(lines.begin(), lines.end(), [](const AcousticLine& a, const AcousticLine& b) {
    if (a.frequency_hz != b.frequency_hz) return a.frequency_hz < b.frequency_hz;
    return a.index < b.index;
  });
  return lines;
}

std::vector<AcousticMode> enumerate_acoustic_modes(const CylinderGeometry& geometry,
                                                   double c4_m_s, double f_max_hz,
                                                   const QuadratureSpec& spec) {
  spec.validate();
  const std::vector<AcousticLine> lines = acoustic_spectrum(geometry, c4_m_s, f_max_hz);
  std::vector<AcousticMode> modes;
  modes.reserve(lines.size());
  for (const AcousticLine& line : lines) {
    modes.push_back(make_acoustic_mode(geometry, c4_m_s, line.index, spec));
  }
  return modes;
}

double effective_volume_m3(const std::function<double(double, double)>& f_rz, int azimuthal_m,
                           const CylinderGeometry& geometry, const QuadratureSpec& spec) {
  if (azimuthal_m < 0) {
    throw ValidationError("azimuthal_m", "must be >= 0");
  }
  const double a_theta_over_2pi = azimuthal_m == 0 ? 1.0 : 0.5;
  return a_theta_over_2pi *
         integrate_cylinder(
             [&f_rz](double r, double z) {
               const double f = f_rz(r, z);
               return f * f;
             },
             geometry, spec);
}

}  // namespace sfopt
