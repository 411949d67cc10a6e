#include "sfopt/report.hpp"

#include <cmath>
#include <cstdio>

#include "sfopt/acoustics.hpp"
#include "sfopt/constants.hpp"
#include "sfopt/coupling.hpp"
#include "sfopt/dissipation.hpp"
#include "sfopt/electromagnetics.hpp"
#include "sfopt/format.hpp"
#include "sfopt/measurement.hpp"

namespace sfopt {

namespace {

constexpr double kTwoPi = 2.0 * constants::kPi;

ReportRow judge(ReportRow row) {
  row.rel_deviation =
      row.reference != 0.0 ? row.computed / row.reference - 1.0 : row.computed;
  switch (row.kind) {
    case CheckKind::Relative:
      row.pass = std::isfinite(row.computed) &&
                 std::abs(row.rel_deviation) <= row.tolerance;
      break;
    case CheckKind::Exact:
      row.pass = row.computed == row.reference;
      break;
    case CheckKind::UpperBound:
      row.pass = std::isfinite(row.computed) && row.computed <= row.reference;
      break;
    case CheckKind::OrderOfMagnitude:
      row.pass = std::isfinite(row.computed) && row.computed >= 0.1 * row.reference &&
                 row.computed <= 10.0 * row.reference;
      break;
    case CheckKind::Boolean:
      row.pass = (row.computed != 0.0) == (row.reference != 0.0);
      break;
  }
  return row;
}

}  // namespace

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Relative: return "relative";
    case CheckKind::Exact: return "exact";
    case CheckKind::UpperBound: return "upper_bound";
    case CheckKind::OrderOfMagnitude: return "order_of_magnitude";
    case CheckKind::Boolean: return "boolean";
  }
  return "?";
}

Report build_report(const SystemParams& params) {
  const CylinderGeometry& geom = params.geometry;
  const HeliumProperties& he = params.helium;
  Report report;
  auto add = [&report](std::string name, std::string unit, double computed,
                       double reference, double tolerance, CheckKind kind,
                       std::string note = "") {
    ReportRow row;
    row.name = std::move(name);
    row.unit = std::move(unit);
    row.computed = computed;
    row.reference = reference;
    row.tolerance = tolerance;
    row.kind = kind;
    row.note = std::move(note);
    report.rows.push_back(judge(std::move(row)));
  };

  // ---- geometry and fill ---------------------------------------------
  const double mass_kg = helium_mass_kg(geom, he);
  add("cell_volume", "cm^3", geom.volume_m3() * 1e6, 39.3, 0.005, CheckKind::Relative);
  add("helium_mass", "g", mass_kg * 1e3, 5.70, 0.005, CheckKind::Relative);

  // ---- microwave mode ---------------------------------------------------
  const EmModeIndex te011{EmFamily::TE, 0, 1, 1};
  add("te011_vacuum", "GHz", em_frequency_hz(geom, 1.0, te011) / 1e9, 10.89, 0.01,
      CheckKind::Relative, "evacuated cell");
  add("te011_filled", "GHz", em_frequency_hz(geom, he.epsilon_r, te011) / 1e9, 10.60,
      0.01, CheckKind::Relative, "helium-filled cell");

  // ---- acoustic spectrum -------------------------------------------------
  const double c4 = he.sound_speed_m_s;
  add("acoustic_002", "Hz", acoustic_frequency_hz(geom, c4, {0, 0, 2}), 6020.0, 0.01,
      CheckKind::Relative);
  add("acoustic_012", "Hz", acoustic_frequency_hz(geom, c4, {0, 1, 2}), 10138.0, 0.01,
      CheckKind::Relative);
  add("acoustic_013", "Hz", acoustic_frequency_hz(geom, c4, {0, 1, 3}), 12201.0, 0.01,
      CheckKind::Relative);

  // ---- parametric coupling ------------------------------------------------
  const AcousticMode ac012 = make_acoustic_mode(geom, c4, {0, 1, 2}, params.quadrature);
  const EmMode em011 = make_em_mode(geom, he.epsilon_r, te011);
  const double omega_overlap = overlap_omega(ac012, em011, he, params.quadrature);
  add("overlap_012_te011", "", omega_overlap, -0.083, 0.05, CheckKind::Relative,
      "(0,1,2) pressure profile against the TE(0,1,1) energy density");

  // The reference quotes dP_SQL and g0 at the book operating point: the
  // 10 kHz monitored mode with a 19.5 cm^3 mode volume (the
  // uniform-radial-profile value V/2; the (0,1,2) mode's own V_eff is
  // ~3.2 cm^3), so those inputs are pinned here.
  const double book_omega_m = kTwoPi * params.operating.mode_frequency_hz;
  const double book_v_eff = params.operating.v_eff_m3;
  const double dp_sql = zero_point_pressure(book_omega_m, he, book_v_eff);
  add("zero_point_pressure", "Pa", dp_sql, 2e-9, 0.20, CheckKind::Relative,
      "book operating mode and mode volume; the reference rounds 1.7e-9 up");
  const double dwc_dp = pressure_transduction(params.cavity.omega_c, he, omega_overlap);
  add("g0", "rad/s", single_quantum_shift(dwc_dp, dp_sql), 3.3e-8, 0.10,
      CheckKind::Relative, "computed overlap, book operating mode and mode volume");
  add("sideband_resolved", "", is_sideband_resolved(book_omega_m, params.cavity) ? 1.0 : 0.0,
      1.0, 0.0, CheckKind::Boolean, "book operating mode vs total cavity linewidth");

  // ---- dissipation budget --------------------------------------------------
  const double q3ph_10mk = q_three_phonon(0.010, book_omega_m, he);
  add("q_three_phonon_10mk", "", q3ph_10mk, 5e10, 0.10, CheckKind::Relative,
      "10 mK bath; energy-attenuation convention Q = omega / (alpha c4)");
  add("q_3ph_frequency_independence", "",
      q_three_phonon(0.010, kTwoPi * 12201.0, he) - q3ph_10mk, 0.0, 0.0, CheckKind::Exact,
      "same Q at 10 kHz and 12201 Hz, exact in floating point");
  add("q_3ph_t4_scaling", "", q_three_phonon(0.005, book_omega_m, he) / q3ph_10mk, 16.0,
      0.0, CheckKind::Exact, "halving T multiplies Q by exactly 2^4");
  add("tau_n_10mk", "s", number_state_lifetime_s(q3ph_10mk, 0.010), 36.0, 0.10,
      CheckKind::Relative, "number-state lifetime hbar Q / (k_B T) at 10 mK");
  const double q_wall_value = q_wall(params.niobium, params.losses.wall);
  add("q_wall", "", q_wall_value, 1e11, 0.0, CheckKind::Exact,
      "substrate Q diluted by the wall energy fraction");

  // ---- heating -------------------------------------------------------------
  add("cavity_heating", "pW", cavity_heating_w(params.pump, params.cavity) * 1e12, 0.6,
      0.05, CheckKind::Relative, "internal cavity loss at the default drive");
  add("helium_heating", "W", helium_heating_w(params.pump, params.cavity.omega_c, he),
      2e-14, 0.0, CheckKind::UpperBound,
      "dielectric absorption bound at the loss-tangent upper limit");

  // ---- pressure readout -----------------------------------------------------
  add("noise_temperature", "K", noise_temperature_k(3e-3, he, book_v_eff), 1.5e6, 0.05,
      CheckKind::Relative,
      "book 3 mPa resolution referred to mode temperature, book mode volume");
  const double omega_op = kTwoPi * params.operating.mode_frequency_hz;
  const double half_quantum =
      noise_temperature_k(zero_point_pressure(omega_op, he, book_v_eff), he, book_v_eff) *
      constants::kBoltzmann / (constants::kHbar * omega_op);
  add("half_quantum_identity", "", half_quantum, 1.0, 1e-12, CheckKind::Relative,
      "T_n at the zero-point pressure equals hbar omega / k_B identically");

  // ---- displacement and strain ----------------------------------------------
  const double x_th =
      thermal_displacement_m(params.operating.temperature_k, mass_kg, omega_op);
  add("x_th_100mk", "m", x_th, 2e-16, 0.30, CheckKind::Relative,
      "RMS thermal motion at the operating point; the reference rounds "
      "aggressively and its displayed exponent only balances dimensionally "
      "with the form used here");
  add("x0", "m", displacement_floor_m(x_th, params.operating.q_acoustic), 8e-23, 0.10,
      CheckKind::Relative, "thermal floor diluted by the operating Q");
  const double x0_sql =
      displacement_floor_m(thermal_displacement_m(0.010, mass_kg, omega_op), q_wall_value);
  add("x0_sql", "m", x0_sql, 8e-28, 0.10, CheckKind::Relative,
      "10 mK bath, wall-limited Q");
  const double baseline =
      params.operating.strain_baseline_m.value_or(geom.length_m);
  add("strain_h", "", strain_floor(x0_sql, baseline), 2e-26, 0.10, CheckKind::Relative,
      "x0_sql over the cell length");
  add("spring_constant", "N/m", spring_constant_n_m(mass_kg, omega_op), 1e7, 0.0,
      CheckKind::OrderOfMagnitude,
      "reference quotes the round order of magnitude for the full fill mass");

  // ---- ringdown round trip ----------------------------------------------------
  const RingdownSeries ringdown =
      synthesize_ringdown(7e6, 12201.0, 1.0, 5.0, 400.0, 0.01, 20260814ull);
  const RingdownFit fit = fit_ringdown(ringdown, 0.05);
  add("ringdown_q_fit", "", fit.q, 7e6, 0.01, CheckKind::Relative,
      "synthesized at Q = 7e6, 12201 Hz, 1% amplitude noise, fixed seed");

  report.all_pass = true;
  for (const ReportRow& row : report.rows) report.all_pass = report.all_pass && row.pass;
  return report;
}

std::string format_report_text(const Report& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-30s %14s %14s %10s  %-6s\n", "row", "computed",
                "reference", "deviation", "status");
  out += line;
  out += std::string(79, '-') + "\n";
  int failures = 0;
  for (const ReportRow& row : report.rows) {
    const std::string name =
        row.unit.empty() ? row.name : row.name + " [" + row.unit + "]";
    std::string deviation;
    if (row.kind == CheckKind::UpperBound) {
      deviation = "<= bound";
    } else if (row.kind == CheckKind::Boolean) {
      deviation = "match";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%+.3g%%", row.rel_deviation * 100.0);
      deviation = buf;
    }
    std::snprintf(line, sizeof(line), "%-30s %14s %14s %10s  %-6s\n", name.c_str(),
                  format_double(row.computed, 6).c_str(),
                  format_double(row.reference, 6).c_str(), deviation.c_str(),
                  row.pass ? "pass" : "FAIL");
    out += line;
    if (!row.note.empty()) out += "    note: " + row.note + "\n";
    if (!row.pass) ++failures;
  }
  out += std::string(79, '-') + "\n";
  if (report.all_pass) {
    out += "all " + std::to_string(report.rows.size()) + " rows pass\n";
  } else {
    out += std::to_string(failures) + " of " + std::to_string(report.rows.size()) +
           " rows FAIL\n";
  }
  return out;
}

}  // namespace sfopt
