#pragma once

#include <string>
#include <vector>

#include "sfopt/system.hpp"

namespace sfopt {

// How a report row is judged against its reference value.
enum class CheckKind {
  Relative,          // |computed/reference - 1| <= tolerance
  Exact,             // computed == reference, bit-for-bit
  UpperBound,        // computed <= reference
  OrderOfMagnitude,  // reference/10 <= computed <= 10*reference
  Boolean,           // truthiness matches
};

const char* to_string(CheckKind kind);

struct ReportRow {
  std::string name;  // stable identifier, e.g. "q_three_phonon_10mk"
  std::string unit;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;  // used by Relative rows only
  CheckKind kind = CheckKind::Relative;
  double rel_deviation = 0.0;  // computed/reference - 1 (0 when reference is 0)
  bool pass = false;
  std::string note;  // input pinning / convention note, may be empty
};

struct Report {
  std::vector<ReportRow> rows;
  bool all_pass = false;
};

// Recomputes every headline figure of the reference design from `params` and
// checks each against its book value at a pinned tolerance. With the default
// parameter set every row passes; against a modified parameter set the
// failing rows show exactly which claims moved. Rows that the reference
// quotes under specific conditions (10 mK bath, the 12201 Hz mode, the
// 19.5 cm^3 book mode volume, ...) pin those inputs and say so in the note.
Report build_report(const SystemParams& params);

// Plain-text table, one row per line plus indented notes and a pass/fail
// footer.
std::string format_report_text(const Report& report);

}  // namespace sfopt
