#include "ks13/notation.hpp"

#include <cmath>
#include <cstdio>

namespace ks13 {

std::string format_value_err(double value, double sigma) {
  char buf[64];
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
  }
  int exp10 = static_cast<int>(std::floor(std::log10(sigma)));
  const int leading = static_cast<int>(sigma / std::pow(10.0, exp10));
  const int digits = (leading == 1) ? 2 : 1;
  int place = exp10 - (digits - 1);  // decimal place of the last digit
  long long bracket =
      std::llround(sigma / std::pow(10.0, place));
  if (bracket >= std::llround(std::pow(10.0, digits))) {
    bracket /= 10;  // rounding carried into the next decade
    ++place;
  }
  if (place >= 0) {
    // Uncertainty at or above the ones place: integer rendering.
    const double scale = std::pow(10.0, place);
    std::snprintf(buf, sizeof(buf), "%.0f(%lld)",
                  std::round(value / scale) * scale, bracket * std::llround(scale));
  } else {
    std::snprintf(buf, sizeof(buf), "%.*f(%lld)", -place, value, bracket);
  }
  return buf;
}

}  // namespace ks13
