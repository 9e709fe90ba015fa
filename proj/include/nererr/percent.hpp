#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace nererr {

/// 100 * num / den in hundredths of a percent, rounded half up with integer
/// arithmetic (142/428 -> 3318). Returns 0 when den is 0.
inline std::int64_t percent_hundredths(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return 0;
  // floor((num * 10000 + den / 2) / den), doubled to keep the half exact
  return static_cast<std::int64_t>((2 * num * 10000 + den) / (2 * den));
}

/// Half-up rounding of an already computed percentage to hundredths. The
/// nudge absorbs binary representation error (86.705 stored as 86.70499...).
inline std::int64_t round_hundredths(double percent) {
  const double scaled = percent * 100.0;
  return static_cast<std::int64_t>(std::floor(scaled + 0.5 + 1e-9 * std::max(1.0, std::fabs(scaled))));
}

/// "33.18" style rendering, independent of the C locale.
inline std::string format_hundredths(std::int64_t h) {
  const bool neg = h < 0;
  const std::uint64_t a = static_cast<std::uint64_t>(neg ? -h : h);
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (neg ? "-" : "") + std::to_string(a / 100) + "." + frac;
}

inline std::string format_percent(double percent) { return format_hundredths(round_hundredths(percent)); }

}  // namespace nererr
