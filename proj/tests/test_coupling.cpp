#include <doctest.h>

#include <cmath>

#include "sfopt/constants.hpp"
#include "sfopt/coupling.hpp"
#include "sfopt/errors.hpp"

#include "oracles.hpp"
#include "testutil.hpp"

using namespace sfopt;

namespace {
const CylinderGeometry kGeom{};
const HeliumProperties kHe{};
const QuadratureSpec kSpec{};
constexpr double kTwoPi = 2.0 * constants::kPi;
const EmModeIndex kTe011{EmFamily::TE, 0, 1, 1};

AcousticMode acoustic(int m, int n, int k) {
  return make_acoustic_mode(kGeom, kHe.sound_speed_m_s, {m, n, k}, kSpec);
}
EmMode te011() { return make_em_mode(kGeom, kHe.epsilon_r, kTe011); }
}  // namespace

TEST_CASE("overlap of the working pair matches its frozen value") {
  const double omega = overlap_omega(acoustic(0, 1, 2), te011(), kHe, kSpec);
  CHECK(omega == rel(-0.0833204621310601, 1e-9));
}

TEST_CASE("overlap agrees with an independent Riemann-sum oracle") {
  const AcousticMode ac = acoustic(0, 1, 2);
  const EmMode em = te011();
  const double omega = overlap_omega(ac, em, kHe, kSpec);
  const double riemann = oracles::overlap_riemann(ac.alpha, ac.index.k, em.chi,
                                                  em.index.p, kHe.epsilon_r, 4000);
  CHECK(omega == rel(riemann, 1e-4));
}

TEST_CASE("uniform-radial acoustic modes reduce to the closed-form z overlap") {
  // (0,0,2) x TE011: radial factors cancel, the z integral gives -1/2, so
  // Omega = -1/(2 eps_r) exactly.
  const double omega = overlap_omega(acoustic(0, 0, 2), te011(), kHe, kSpec);
  CHECK(omega == rel(-0.5 / kHe.epsilon_r, 1e-9));
}

TEST_CASE("azimuthal orthogonality gives exact zero for m >= 1") {
  CHECK(overlap_omega(acoustic(1, 1, 0), te011(), kHe, kSpec) == 0.0);
  CHECK(overlap_omega(acoustic(2, 1, 1), te011(), kHe, kSpec) == 0.0);
  CHECK(overlap_omega(acoustic(5, 2, 3), te011(), kHe, kSpec) == 0.0);
}

TEST_CASE("odd axial parity integrates to zero against TE0n1") {
  CHECK(std::abs(overlap_omega(acoustic(0, 1, 1), te011(), kHe, kSpec)) < 1e-9);
  CHECK(std::abs(overlap_omega(acoustic(0, 0, 3), te011(), kHe, kSpec)) < 1e-9);
}

TEST_CASE("overlap magnitude is bounded by 1/eps_r for unit-peak profiles") {
  for (int k : {0, 1, 2, 4}) {
    for (int n : {0, 1, 2}) {
      if (n == 0 && k == 0) continue;
      const double omega = overlap_omega(acoustic(0, n, k), te011(), kHe, kSpec);
      CHECK(std::abs(omega) <= 1.0 / kHe.epsilon_r + 1e-12);
    }
  }
}

TEST_CASE("overlap is invariant under uniform geometry scaling") {
  const double base = overlap_omega(acoustic(0, 1, 2), te011(), kHe, kSpec);
  const CylinderGeometry big{kGeom.radius_m * 3.0, kGeom.length_m * 3.0};
  const AcousticMode ac = make_acoustic_mode(big, kHe.sound_speed_m_s, {0, 1, 2}, kSpec);
  const EmMode em = make_em_mode(big, kHe.epsilon_r, kTe011);
  CHECK(overlap_omega(ac, em, kHe, kSpec) == rel(base, 1e-9));
}

TEST_CASE("overlap rejects inconsistent inputs") {
  const CylinderGeometry other{0.02, 0.0395};
  const AcousticMode mismatched =
      make_acoustic_mode(other, kHe.sound_speed_m_s, {0, 1, 2}, kSpec);
  CHECK_THROWS_AS(overlap_omega(mismatched, te011(), kHe, kSpec), ValidationError);

  const EmMode wrong_eps = make_em_mode(kGeom, 2.0, kTe011);
  CHECK_THROWS_AS(overlap_omega(acoustic(0, 1, 2), wrong_eps, kHe, kSpec), ValidationError);

  const EmMode tm = make_em_mode(kGeom, kHe.epsilon_r, {EmFamily::TM, 0, 1, 0});
  CHECK_THROWS_AS(overlap_omega(acoustic(0, 1, 2), tm, kHe, kSpec), UnsupportedModeError);
}

TEST_CASE("pressure transduction slope") {
  const double omega_c = kTwoPi * 10.60e9;
  // documented value for the book overlap
  CHECK(pressure_transduction(omega_c, kHe, -0.083) ==
        rel(kTwoPi * 3.07, 2e-3));
  // direct arithmetic oracle
  const double expected = -(omega_c * kHe.compressibility_per_pa / 6.0) *
                          (kHe.epsilon_r + 2.0) * (kHe.epsilon_r - 1.0) * (-0.083);
  CHECK(pressure_transduction(omega_c, kHe, -0.083) == rel(expected, 1e-15));
  // sign: a mode that lowers permittivity under compression raises omega_c
  CHECK(pressure_transduction(omega_c, kHe, -0.083) > 0.0);
  CHECK(pressure_transduction(omega_c, kHe, 0.083) < 0.0);
  CHECK(pressure_transduction(omega_c, kHe, 0.0) == 0.0);
  // linear in kappa
  HeliumProperties doubled = kHe;
  doubled.compressibility_per_pa *= 2.0;
  CHECK(pressure_transduction(omega_c, doubled, -0.083) ==
        rel(2.0 * pressure_transduction(omega_c, kHe, -0.083), 1e-15));
  // overlap is dimensionless and bounded
  CHECK_THROWS_AS(pressure_transduction(omega_c, kHe, 1.5), ValidationError);
}

TEST_CASE("zero-point pressure amplitude") {
  const double omega_m = kTwoPi * 1e4;
  const double v_eff = 1.95e-5;
  CHECK(zero_point_pressure(omega_m, kHe, v_eff) == rel(1.6827518856092e-9, 1e-9));
  // closed form
  const double expected =
      std::sqrt(constants::kHbar * omega_m / (kHe.compressibility_per_pa * v_eff));
  CHECK(zero_point_pressure(omega_m, kHe, v_eff) == rel(expected, 1e-15));
  // scalings
  CHECK(zero_point_pressure(4.0 * omega_m, kHe, v_eff) ==
        rel(2.0 * zero_point_pressure(omega_m, kHe, v_eff), 1e-15));
  CHECK(zero_point_pressure(omega_m, kHe, 4.0 * v_eff) ==
        rel(0.5 * zero_point_pressure(omega_m, kHe, v_eff), 1e-15));
  CHECK_THROWS_AS(zero_point_pressure(-omega_m, kHe, v_eff), ValidationError);
  CHECK_THROWS_AS(zero_point_pressure(omega_m, kHe, 0.0), ValidationError);
}

TEST_CASE("single-quantum shift is the commutative product magnitude") {
  CHECK(single_quantum_shift(19.26, 1.68e-9) == rel(19.26 * 1.68e-9, 1e-15));
  CHECK(single_quantum_shift(-19.26, 1.68e-9) == rel(19.26 * 1.68e-9, 1e-15));
  CHECK(single_quantum_shift(0.0, 1.68e-9) == 0.0);
  CHECK(single_quantum_shift(1.68e-9, 19.26) == single_quantum_shift(19.26, 1.68e-9));
}

TEST_CASE("documented single-quantum shift at the book operating point") {
  const double dwc_dp = pressure_transduction(kTwoPi * 10.60e9, kHe, -0.083);
  const double dp_sql = zero_point_pressure(kTwoPi * 1e4, kHe, 1.95e-5);
  CHECK(single_quantum_shift(dwc_dp, dp_sql) == rel(3.3e-8, 0.10));
}

TEST_CASE("sideband resolution uses the total linewidth with strict inequality") {
  const MicrowaveCavityParams cavity{};
  CHECK(cavity.kappa_total() == rel(kTwoPi * 1297.0, 1e-12));
  CHECK(is_sideband_resolved(kTwoPi * 1e4, cavity));
  CHECK_FALSE(is_sideband_resolved(kTwoPi * 1e3, cavity));
  CHECK_FALSE(is_sideband_resolved(cavity.kappa_total(), cavity));
}

TEST_CASE("cavity parameter validation") {
  MicrowaveCavityParams cavity{};
  cavity.omega_c = 0.0;
  CHECK_THROWS_AS(cavity.validate(), ValidationError);
  cavity = MicrowaveCavityParams{};
  cavity.kappa_int = -1.0;
  CHECK_THROWS_AS(cavity.validate(), ValidationError);
}

TEST_CASE("couple_modes assembles the full result consistently") {
  const AcousticMode ac = acoustic(0, 1, 2);
  const EmMode em = te011();
  const MicrowaveCavityParams cavity{};
  const CouplingResult result = couple_modes(ac, em, kHe, cavity, kSpec);
  CHECK(result.acoustic == ac.index);
  CHECK(result.em == em.index);
  CHECK(result.acoustic_frequency_hz == rel(10138.6247554988, 1e-10));
  CHECK(result.em_frequency_hz == rel(1.0650303e10, 1e-6));
  CHECK(result.v_eff_m3 == rel(3.1889546148864e-6, 1e-9));
  CHECK(result.omega_overlap == rel(-0.0833204621310601, 1e-9));
  CHECK(result.dwc_dp == rel(19.3391638855247, 1e-9));
  CHECK(result.dp_sql == rel(zero_point_pressure(kTwoPi * result.acoustic_frequency_hz,
                                                 kHe, result.v_eff_m3),
                             1e-12));
  CHECK(result.g0 == rel(std::abs(result.dwc_dp) * result.dp_sql, 1e-12));
  CHECK(result.g0 == rel(8.1028992846480e-8, 1e-9));
  CHECK(result.sideband_resolved);
}
