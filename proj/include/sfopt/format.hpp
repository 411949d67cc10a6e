#pragma once

#include <string>
#include <vector>

#include "sfopt/measurement.hpp"

namespace sfopt {

// Shortest decimal string that parses back to exactly the same double
// (tries increasing %g precision until the round trip is bit-exact). This is
// what makes emitted config files and CSV output both human-readable and
// deterministic down to the byte.
std::string format_double(double value);

// Fixed-significant-digit form for aligned human tables ("%.6g" style).
std::string format_double(double value, int significant_digits);

// One CSV line from preformatted cells (no quoting needed: every cell this
// toolkit emits is a number, a bare identifier, or empty).
std::string csv_line(const std::vector<std::string>& cells);

// Two-column CSV (time_s, amplitude) for a ringdown series.
std::string ringdown_to_csv(const RingdownSeries& series);

}  // namespace sfopt
