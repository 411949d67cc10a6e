#include "sfopt/electromagnetics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sfopt/bessel.hpp"
#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

void check_eps_r(double eps_r) {
  if (!std::isfinite(eps_r) || eps_r < 1.0) {
    throw ValidationError("eps_r", "relative permittivity must be >= 1 and finite");
  }
}

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

void EmModeIndex::validate() const {
  if (m < 0 || m > kMaxBesselOrder) {
    throw ValidationError("em_mode.m", "azimuthal order must lie in [0, " +
                                           std::to_string(kMaxBesselOrder) + "]");
  }
  if (n < 1) throw ValidationError("em_mode.n", "radial order must be >= 1");
  if (family == EmFamily::TE) {
    if (p < 1) {
      throw ValidationError("em_mode.p", "TE modes need at least one axial half-wave (p >= 1)");
    }
  } else {
    if (p < 0) throw ValidationError("em_mode.p", "axial order must be >= 0");
  }
}

std::string EmModeIndex::label() const {
  return std::string(family == EmFamily::TE ? "TE" : "TM") + "," + std::to_string(m) + "," +
         std::to_string(n) + "," + std::to_string(p);
}

EmModeIndex EmModeIndex::parse(const std::string& text) {
  const size_t c1 = text.find(',');
  const size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
  const size_t c3 = c2 == std::string::npos ? std::string::npos : text.find(',', c2 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos ||
      text.find(',', c3 + 1) != std::string::npos) {
    throw ValidationError("em_mode",
                          "expected 'TE,m,n,p' or 'TM,m,n,p', got '" + text + "'");
  }
  EmModeIndex index;
  const std::string fam = text.substr(0, c1);
  if (fam == "TE" || fam == "te") {
    index.family = EmFamily::TE;
  } else if (fam == "TM" || fam == "tm") {
    index.family = EmFamily::TM;
  } else {
    throw ValidationError("em_mode.family", "expected TE or TM, got '" + fam + "'");
  }
  index.m = parse_int_field(text, c1 + 1, c2, "em_mode.m");
  index.n = parse_int_field(text, c2 + 1, c3, "em_mode.n");
  index.p = parse_int_field(text, c3 + 1, text.size(), "em_mode.p");
  index.validate();
  return index;
}

double em_eigenvalue(const EmModeIndex& index) {
  index.validate();
  // Both families index from the first positive root; the tables already
  // exclude the trivial zeros (x = 0 of J'_0, and of J_m for m >= 1).
  if (index.family == EmFamily::TE) {
    return cached_j_prime_roots(index.m, index.n)[static_cast<size_t>(index.n) - 1];
  }
  return cached_j_roots(index.m, index.n)[static_cast<size_t>(index.n) - 1];
}

double em_frequency_hz(const CylinderGeometry& geometry, double eps_r,
                       const EmModeIndex& index) {
  geometry.validate();
  check_eps_r(eps_r);
  const double chi = em_eigenvalue(index);
  const double kr = chi / geometry.radius_m;
  const double kz = index.p * constants::kPi / geometry.length_m;
  return constants::kSpeedOfLight / (2.0 * constants::kPi * std::sqrt(eps_r)) *
         std::hypot(kr, kz);
}

double EmMode::intensity(double r, double z) const {
  if (!has_intensity_profile()) {
    throw UnsupportedModeError(
        "scalar |E|^2 profile is only provided for the TE_0np family (mode " + index.label() +
        " mixes field components with different angular structure)");
  }
  const double radial = bessel_j(1, chi * r / geometry.radius_m);
  const double axial = std::sin(index.p * constants::kPi * z / geometry.length_m);
  return radial * radial * axial * axial / peak_intensity;
}

EmMode make_em_mode(const CylinderGeometry& geometry, double eps_r, const EmModeIndex& index) {
  geometry.validate();
  check_eps_r(eps_r);
  index.validate();

  EmMode mode;
  mode.index = index;
  mode.geometry = geometry;
  mode.eps_r = eps_r;
  mode.chi = em_eigenvalue(index);
  mode.frequency_hz = em_frequency_hz(geometry, eps_r, index);
  if (mode.has_intensity_profile()) {
    // J_1^2 over [0, chi] peaks at the first extremum of J_1; every TE_0np
    // eigenvalue (>= 3.83) lies beyond it, so the peak is always interior.
    const double first_extremum = cached_j_prime_roots(1, 1)[0];
    const double j1 = bessel_j(1, first_extremum);
    mode.peak_intensity = j1 * j1;
  }
  return mode;
}

std::vector<EmMode> enumerate_em_modes(const CylinderGeometry& geometry, double eps_r,
                                       double f_max_hz) {
  geometry.validate();
  check_eps_r(eps_r);
  if (!std::isfinite(f_max_hz) || f_max_hz <= 0.0) {
    throw ValidationError("f_max_hz", "must be a positive finite number");
  }

  // chi/R and p*pi/L enter the frequency in quadrature, so a mode can fit
  // only if its radial eigenvalue alone fits.
  const double chi_max = 2.0 * constants::kPi * f_max_hz * std::sqrt(eps_r) *
                         geometry.radius_m / constants::kSpeedOfLight;
  const double p_max_real =
      2.0 * geometry.length_m * f_max_hz * std::sqrt(eps_r) / constants::kSpeedOfLight;
  const int p_max = static_cast<int>(std::floor(p_max_real));

  if (chi_max >= cached_j_prime_roots(kMaxBesselOrder, 1)[0]) {
    throw ValidationError("f_max_hz",
                          "frequency ceiling requires azimuthal orders beyond the supported "
                          "range (m > " + std::to_string(kMaxBesselOrder) + ")");
  }

  std::vector<EmMode> modes;
  for (EmFamily family : {EmFamily::TE, EmFamily::TM}) {
    const int p_min = family == EmFamily::TE ? 1 : 0;
    for (int m = 0; m <= kMaxBesselOrder; ++m) {
      std::vector<double> roots;
      {
        int want = static_cast<int>(chi_max / constants::kPi) + 3;
        roots = family == EmFamily::TE ? cached_j_prime_roots(m, want)
                                       : cached_j_roots(m, want);
        while (!roots.empty() && roots.back() <= chi_max) {
          want += 4;
          roots = family == EmFamily::TE ? cached_j_prime_roots(m, want)
                                         : cached_j_roots(m, want);
        }
      }
      if (roots.empty() || roots.front() > chi_max) {
        if (m >= 1) break;  // first eigenvalue grows with m within each family
        continue;
      }
      for (size_t i = 0; i < roots.size(); ++i) {
        if (roots[i] > chi_max) break;
        for (int p = p_min; p <= p_max; ++p) {
          EmModeIndex index{family, m, static_cast<int>(i) + 1, p};
          if (em_frequency_hz(geometry, eps_r, index) > f_max_hz) break;
          modes.push_back(make_em_mode(geometry, eps_r, index));
        }
      }
    }
  }

  std::sort(modes.begin(), modes.end(), [](const EmMode& a, const EmMode& b) {
    if (a.frequency_hz != b.frequency_hz) return a.frequency_hz < b.frequency_hz;
    return a.index < b.index;
  });
  return modes;
}

}  // namespace sfopt
