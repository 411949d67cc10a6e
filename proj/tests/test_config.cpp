#include <doctest.h>

#include <string>

#include "sfopt/config.hpp"
#include "sfopt/constants.hpp"
#include "sfopt/errors.hpp"

#include "testutil.hpp"

using namespace sfopt;

namespace {

constexpr double kTwoPi = 2.0 * constants::kPi;

// Parse and hand back the ConfigError for inspection.
ConfigError capture(const std::string& text) {
  try {
    parse_config(text, "test.ini");
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError");
  return ConfigError("unreachable");
}

}  // namespace

TEST_CASE("empty config yields pure defaults with the bandwidth unset") {
  const RunConfig config = parse_config("", "empty.ini");
  CHECK(config.system.geometry.radius_m == 0.0178);
  CHECK(config.system.geometry.length_m == 0.0395);
  CHECK(config.system.helium.epsilon_r == 1.057);
  CHECK(config.system.operating.temperature_k == 0.1);
  CHECK_FALSE(config.system.phase_noise.bandwidth_hz.has_value());
  CHECK_FALSE(config.system.operating.strain_baseline_m.has_value());
  CHECK_FALSE(config.sweep.has_value());
  CHECK_FALSE(config.optimize.has_value());
  CHECK(config.output.directory.empty());
  CHECK(config.output.format == OutputFormat::Csv);
}

TEST_CASE("the reference config carries the documented analysis bandwidth") {
  const RunConfig config = default_config();
  REQUIRE(config.system.phase_noise.bandwidth_hz.has_value());
  CHECK(*config.system.phase_noise.bandwidth_hz == 0.042);
}

TEST_CASE("emit and parse are exact inverses for the reference config") {
  const RunConfig config = default_config();
  const std::string text = emit_config(config);
  const RunConfig reparsed = parse_config(text, "emitted.ini");
  CHECK(emit_config(reparsed) == text);  // byte-identical round trip
  CHECK(reparsed.system.geometry.radius_m == config.system.geometry.radius_m);
  CHECK(reparsed.system.helium.compressibility_per_pa ==
        config.system.helium.compressibility_per_pa);
  CHECK(reparsed.system.cavity.omega_c == config.system.cavity.omega_c);
  CHECK(*reparsed.system.phase_noise.bandwidth_hz == 0.042);
}

TEST_CASE("emit and parse round-trip a config with sweep and optimize blocks") {
  RunConfig config = default_config();
  config.system.geometry.radius_m = 0.0211;
  config.system.losses.he3.enabled = true;
  config.system.operating.strain_baseline_m = 0.05;
  config.output.format = OutputFormat::Json;

  SweepConfig sweep;
  SweepAxis axis;
  axis.parameter = SweepParameter::SoundSpeed;
  axis.values = {238.0, 301.5, 357.0};
  sweep.axes.push_back(axis);
  sweep.fom = FigureOfMerit::SidebandMargin;
  sweep.rule.kind = ModeSelectionRule::Kind::Track;
  sweep.rule.track_target_hz = 12201.0;
  sweep.max_evaluations = 5000;
  config.sweep = sweep;

  OptimizeConfig optimize;
  optimize.spec.parameter = SweepParameter::Length;
  optimize.spec.lo = 0.02;
  optimize.spec.hi = 0.06;
  optimize.spec.fom = FigureOfMerit::QTotal;
  config.optimize = optimize;

  const std::string text = emit_config(config);
  const RunConfig reparsed = parse_config(text, "emitted.ini");
  CHECK(emit_config(reparsed) == text);

  REQUIRE(reparsed.sweep.has_value());
  REQUIRE(reparsed.sweep->axes.size() == 1);
  CHECK(reparsed.sweep->axes[0].parameter == SweepParameter::SoundSpeed);
  CHECK(reparsed.sweep->axes[0].values == axis.values);
  CHECK(reparsed.sweep->fom == FigureOfMerit::SidebandMargin);
  CHECK(reparsed.sweep->rule.kind == ModeSelectionRule::Kind::Track);
  CHECK(reparsed.sweep->rule.track_target_hz == 12201.0);
  CHECK(reparsed.sweep->max_evaluations == 5000);
  REQUIRE(reparsed.optimize.has_value());
  CHECK(reparsed.optimize->spec.parameter == SweepParameter::Length);
  CHECK(reparsed.optimize->spec.lo == 0.02);
  CHECK(reparsed.optimize->spec.hi == 0.06);
  CHECK(reparsed.optimize->spec.fom == FigureOfMerit::QTotal);
  REQUIRE(reparsed.system.operating.strain_baseline_m.has_value());
  CHECK(*reparsed.system.operating.strain_baseline_m == 0.05);
  CHECK(reparsed.system.losses.he3.enabled);
  CHECK(reparsed.output.format == OutputFormat::Json);
}

TEST_CASE("frequencies configured in Hz are stored as angular rates") {
  const RunConfig config = parse_config(
      "[cavity]\n"
      "frequency_hz = 1.06e10\n"
      "kappa_int_hz = 31\n"
      "[pump]\n"
      "detuning_hz = -1e4\n",
      "t.ini");
  CHECK(config.system.cavity.omega_c == rel(kTwoPi * 1.06e10, 1e-15));
  CHECK(config.system.cavity.kappa_int == rel(kTwoPi * 31.0, 1e-15));
  CHECK(config.system.pump.detuning == rel(-kTwoPi * 1e4, 1e-15));
}

TEST_CASE("full-line comments are skipped; inline trailers are not comments") {
  const RunConfig config = parse_config(
      "# a comment\n"
      "; another comment style\n"
      "[geometry]\n"
      "radius_m = 0.02\n",
      "t.ini");
  CHECK(config.system.geometry.radius_m == 0.02);

  const ConfigError e = capture(
      "[geometry]\n"
      "radius_m = 0.02 # meters\n");
  CHECK(e.line() == 2);
  CHECK(e.key_path() == "geometry.radius_m");
}

TEST_CASE("duplicate keys are rejected with line and path") {
  const ConfigError e = capture(
      "[geometry]\n"
      "radius_m = 0.02\n"
      "radius_m = 0.03\n");
  CHECK(e.line() == 3);
  CHECK(e.key_path() == "geometry.radius_m");
  CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
}

TEST_CASE("unknown sections and keys are rejected") {
  CHECK(capture("[warp_drive]\n").line() == 1);
  const ConfigError key = capture(
      "[geometry]\n"
      "bogus = 1\n");
  CHECK(key.line() == 2);
  CHECK(key.key_path() == "geometry.bogus");
  // top-level keys other than schema_version are unknown too
  CHECK(capture("radius_m = 0.02\n").key_path() == "radius_m");
}

TEST_CASE("malformed values carry their location") {
  CHECK(capture("[geometry]\nradius_m = fast\n").line() == 2);
  CHECK(capture("[losses]\nthree_phonon = yes\n").line() == 2);
  CHECK(capture("[quadrature]\nmax_panels = 1e3\n").line() == 2);
  CHECK(capture("[geometry]\nradius_m\n").line() == 2);        // no '='
  CHECK(capture("[geometry\nradius_m = 0.02\n").line() == 1);  // unterminated header
  CHECK(capture("= 0.02\n").line() == 1);                      // empty key
}

TEST_CASE("schema version gate") {
  CHECK_NOTHROW(parse_config("schema_version = 1\n", "t.ini"));
  const ConfigError e = capture("schema_version = 2\n");
  CHECK(e.line() == 1);
  CHECK(std::string(e.what()).find("schema") != std::string::npos);
}

TEST_CASE("semantic validation failures name the source") {
  const ConfigError e = capture(
      "[geometry]\n"
      "radius_m = -0.5\n");
  CHECK(e.line() == -1);  // semantic, not tied to one line
  CHECK(std::string(e.what()).find("geometry.radius_m") != std::string::npos);
  CHECK(std::string(e.what()).find("test.ini") != std::string::npos);
}

TEST_CASE("sweep axes assemble from numbered sections") {
  const RunConfig config = parse_config(
      "[sweep]\n"
      "figure_of_merit = q_total\n"
      "[sweep.axis.1]\n"
      "parameter = temperature\n"
      "min = 0.01\n"
      "max = 0.1\n"
      "count = 4\n"
      "scale = log\n"
      "[sweep.axis.2]\n"
      "parameter = radius\n"
      "values = 0.016, 0.018, 0.020\n",
      "t.ini");
  REQUIRE(config.sweep.has_value());
  REQUIRE(config.sweep->axes.size() == 2);
  CHECK(config.sweep->axes[0].parameter == SweepParameter::Temperature);
  REQUIRE(config.sweep->axes[0].values.size() == 4);
  CHECK(config.sweep->axes[0].values.front() == 0.01);
  CHECK(config.sweep->axes[0].values.back() == 0.1);
  CHECK(config.sweep->axes[1].values == std::vector<double>{0.016, 0.018, 0.020});
  CHECK(config.sweep->fom == FigureOfMerit::QTotal);
  // defaults for the unspecified evaluation settings
  CHECK(config.sweep->rule.kind == ModeSelectionRule::Kind::Fixed);
  CHECK(config.sweep->em == EmModeIndex{EmFamily::TE, 0, 1, 1});
}

TEST_CASE("sweep block validation") {
  // a [sweep] header with no axes
  CHECK(std::string(capture("[sweep]\nfigure_of_merit = q_total\n").what())
            .find("at least one") != std::string::npos);

  // axis numbering must be 1..N
  const ConfigError gap = capture(
      "[sweep.axis.2]\n"
      "parameter = radius\n"
      "values = 0.016, 0.018\n");
  CHECK(std::string(gap.what()).find("numbered 1..N") != std::string::npos);

  // values and a grid are mutually exclusive
  const ConfigError both = capture(
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "values = 0.016, 0.018\n"
      "min = 0.016\n"
      "max = 0.018\n"
      "count = 2\n");
  CHECK(std::string(both.what()).find("not both") != std::string::npos);

  // a grid needs all three of min/max/count
  const ConfigError partial = capture(
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "min = 0.016\n"
      "max = 0.018\n");
  CHECK(std::string(partial.what()).find("min, max, and count") != std::string::npos);

  // neither values nor a grid
  const ConfigError none = capture(
      "[sweep.axis.1]\n"
      "parameter = radius\n");
  CHECK(std::string(none.what()).find("either values or") != std::string::npos);

  // parameter is mandatory
  const ConfigError no_param = capture(
      "[sweep.axis.1]\n"
      "values = 0.016, 0.018\n");
  CHECK(no_param.key_path() == "sweep.axis.1.parameter");

  // unknown axis scale
  const ConfigError scale = capture(
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "min = 0.016\n"
      "max = 0.018\n"
      "count = 2\n"
      "scale = cubic\n");
  CHECK(scale.key_path() == "sweep.axis.1.scale");

  // axis numbers outside [1, 9]
  CHECK_THROWS_AS(parse_config("[sweep.axis.0]\n", "t.ini"), ConfigError);
  CHECK_THROWS_AS(parse_config("[sweep.axis.abc]\n", "t.ini"), ConfigError);

  // tracking needs a target
  const ConfigError track = capture(
      "[sweep]\n"
      "mode_rule = track\n"
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "values = 0.016, 0.018\n");
  CHECK(track.key_path() == "sweep.track_target_hz");

  // cap must be positive
  const ConfigError cap = capture(
      "[sweep]\n"
      "max_evaluations = 0\n"
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "values = 0.016, 0.018\n");
  CHECK(cap.key_path() == "sweep.max_evaluations");

  // domain validation routed through the axis path
  const ConfigError descending = capture(
      "[sweep.axis.1]\n"
      "parameter = radius\n"
      "values = 0.018, 0.016\n");
  CHECK(descending.key_path() == "sweep.axis.1.values");
}

TEST_CASE("optimize block validation") {
  const RunConfig config = parse_config(
      "[optimize]\n"
      "parameter = length\n"
      "min = 0.02\n"
      "max = 0.06\n"
      "figure_of_merit = sideband_margin\n"
      "acoustic_mode = 0,0,2\n"
      "em_mode = TE,0,1,1\n"
      "grid_points = 16\n"
      "rel_tol = 1e-5\n",
      "t.ini");
  REQUIRE(config.optimize.has_value());
  const OptimizeSpec& spec = config.optimize->spec;
  CHECK(spec.parameter == SweepParameter::Length);
  CHECK(spec.fom == FigureOfMerit::SidebandMargin);
  CHECK(spec.rule.fixed == AcousticModeIndex{0, 0, 2});
  CHECK(spec.grid_points == 16);
  CHECK(spec.parameter_rel_tol == 1e-5);

  CHECK(std::string(capture("[optimize]\nparameter = length\nmin = 0.02\n").what())
            .find("needs parameter, min, and max") != std::string::npos);

  // discrete parameters cannot be optimized
  const ConfigError discrete = capture(
      "[optimize]\n"
      "parameter = x3\n"
      "min = 1e-10\n"
      "max = 1e-8\n");
  CHECK(std::string(discrete.what()).find("continuous") != std::string::npos);

  const ConfigError bad_mode = capture(
      "[optimize]\n"
      "parameter = length\n"
      "min = 0.02\n"
      "max = 0.06\n"
      "acoustic_mode = 0;0;2\n");
  CHECK(bad_mode.key_path() == "optimize.acoustic_mode");
}

TEST_CASE("output section") {
  const RunConfig config = parse_config(
      "[output]\n"
      "directory = out/run1\n"
      "format = json\n",
      "t.ini");
  CHECK(config.output.directory == "out/run1");
  CHECK(config.output.format == OutputFormat::Json);
  CHECK(capture("[output]\nformat = yaml\n").key_path() == "output.format");
}

TEST_CASE("loading a missing file fails cleanly") {
  CHECK_THROWS_AS(load_config("/nonexistent/nowhere.ini"), ConfigError);
}
