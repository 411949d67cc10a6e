#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfopt/explorer.hpp"
#include "sfopt/system.hpp"

namespace sfopt {

inline constexpr int kConfigSchemaVersion = 1;

// Sweep request as configured: axes plus the shared evaluation settings.
struct SweepConfig {
  std::vector<SweepAxis> axes;
  FigureOfMerit fom = FigureOfMerit::G0Magnitude;
  ModeSelectionRule rule;
  EmModeIndex em{EmFamily::TE, 0, 1, 1};
  size_t max_evaluations = kDefaultSweepCap;
};

struct OptimizeConfig {
  OptimizeSpec spec;
};

enum class OutputFormat { Csv, Json };

struct OutputConfig {
  std::string directory;  // empty -> stdout
  OutputFormat format = OutputFormat::Csv;
};

// Everything a run needs. Loaded from an INI-style file:
//
//   # comment
//   schema_version = 1
//   [section]
//   key = value
//
// Unknown sections/keys are rejected with their key path and line number;
// value type errors likewise. An empty file yields the defaults below
// (fields that have no defensible default, like the phase-noise analysis
// bandwidth, stay unset until a command needs them).
struct RunConfig {
  SystemParams system;
  std::optional<SweepConfig> sweep;
  std::optional<OptimizeConfig> optimize;
  OutputConfig output;
};

// The reference configuration `defaults` emits: the default cell with the
// documented analysis bandwidth filled in.
RunConfig default_config();

// Parse + validate. source_name appears in error messages.
RunConfig parse_config(const std::string& text, const std::string& source_name);
RunConfig load_config(const std::string& path);

// Serialize a config back to the file format (commented, stable field
// order). parse_config(emit_config(c)) reproduces c exactly: doubles are
// written shortest-round-trip.
std::string emit_config(const RunConfig& config);

}  // namespace sfopt
