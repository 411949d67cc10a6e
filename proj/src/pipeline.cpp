#include "sfopt/pipeline.hpp"

#include "sfopt/constants.hpp"

namespace sfopt {

PointEvaluation evaluate_point(const SystemParams& params, const AcousticModeIndex& acoustic,
                               const EmModeIndex& em) {
  params.validate();

  PointEvaluation point;
  point.acoustic = make_acoustic_mode(params.geometry, params.helium.sound_speed_m_s, acoustic,
                                      params.quadrature);
  point.em = make_em_mode(params.geometry, params.helium.epsilon_r, em);
  point.coupling =
      couple_modes(point.acoustic, point.em, params.helium, params.cavity, params.quadrature);

  const double omega_m = 2.0 * constants::kPi * point.acoustic.frequency_hz;
  point.budget = q_vs_temperature({params.operating.temperature_k}, omega_m, params.losses,
                                  params.helium, params.niobium)
                     .front();
  point.sideband_margin = omega_m / params.cavity.kappa_total();

  // Resolution needs a pair that actually transduces: a zero-overlap mode
  // reads out nothing, so its resolution figures stay unset instead of
  // tripping the dwc_dp validation.
  if (params.phase_noise.bandwidth_hz && point.coupling.dwc_dp != 0.0) {
    const PhaseNoiseSpec noise = params.phase_noise.require_bandwidth();
    point.p_min_pa = pressure_resolution_pa(noise, point.coupling.dwc_dp, omega_m);
    point.noise_temperature_k =
        noise_temperature_k(*point.p_min_pa, params.helium, point.acoustic.v_eff_m3);
  }
  return point;
}

SensitivityReport make_sensitivity_report(const SystemParams& params) {
  params.validate();
  const PhaseNoiseSpec noise = params.phase_noise.require_bandwidth();

  SensitivityReport report;
  report.mass_kg = helium_mass_kg(params.geometry, params.helium);
  report.omega_m = 2.0 * constants::kPi * params.operating.mode_frequency_hz;
  report.dwc_dp =
      pressure_transduction(params.cavity.omega_c, params.helium, params.operating.omega_overlap);
  report.p_cavity_w = cavity_heating_w(params.pump, params.cavity);
  report.p_helium_w = helium_heating_w(params.pump, params.cavity.omega_c, params.helium);
  report.p_min_pa = pressure_resolution_pa(noise, report.dwc_dp, report.omega_m);
  report.t_noise_k =
      noise_temperature_k(report.p_min_pa, params.helium, params.operating.v_eff_m3);
  report.dp_sql_pa =
      zero_point_pressure(report.omega_m, params.helium, params.operating.v_eff_m3);
  report.t_noise_sql_k =
      noise_temperature_k(report.dp_sql_pa, params.helium, params.operating.v_eff_m3);
  report.x_th_m = thermal_displacement_m(params.operating.temperature_k, report.mass_kg,
                                         report.omega_m);
  report.x0_m = displacement_floor_m(report.x_th_m, params.operating.q_acoustic);
  report.strain_baseline_m =
      params.operating.strain_baseline_m.value_or(params.geometry.length_m);
  report.strain_h = strain_floor(report.x0_m, report.strain_baseline_m);
  report.spring_constant_n_m = spring_constant_n_m(report.mass_kg, report.omega_m);
  report.sideband_resolved = is_sideband_resolved(report.omega_m, params.cavity);
  return report;
}

}  // namespace sfopt
