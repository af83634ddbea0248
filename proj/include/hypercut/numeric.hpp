#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace hypercut {

// log2 rounded up, as an integer count; by convention >= 1 for x >= 2 and 0
// for x <= 1.  Used wherever a repetition or budget count needs a log factor.
inline int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(x - 1);
}

// Saturating arithmetic for threshold formulas whose nominal values can blow
// past 64 bits; anything that saturates is "effectively infinite" and only
// ever sits on the forgiving side of a comparison.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    return std::numeric_limits<std::uint64_t>::max();
  return out;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    return std::numeric_limits<std::uint64_t>::max();
  return out;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

// C(n, k) with saturation; values that overflow come back as "huge", which
// is the forgiving direction for every feasibility check using this.
inline std::uint64_t sat_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = sat_mul(out, n - k + i);
    if (out != std::numeric_limits<std::uint64_t>::max()) out /= i;
  }
  return out;
}

}  // namespace hypercut
