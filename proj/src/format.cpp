#include "sfopt/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sfopt/errors.hpp"

namespace sfopt {

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("format_double", "refusing to serialize a non-finite value");
  }
  char buffer[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

std::string format_double(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
  return buffer;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::string ringdown_to_csv(const RingdownSeries& series) {
  std::string out = "time_s,amplitude\n";
  for (size_t i = 0; i < series.time_s.size(); ++i) {
    out += format_double(series.time_s[i]);
    out += ',';
    out += format_double(series.amplitude[i]);
    out += '\n';
  }
  return out;
}

}  // namespace sfopt
