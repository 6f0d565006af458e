#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace overfix {

/// Mathematical integer used by the analyzer. 128 bits hold every product of
/// two 64-bit operands, which is the widest value a single C operation yields.
using Int = __int128;

inline constexpr Int kIntInfinity = (static_cast<Int>(1) << 120);

std::string toString(Int v);
std::optional<Int> parseInt(std::string_view text);

/// Greatest k with k*k <= n. Pure integer arithmetic.
Int floorSqrt(Int n);

/// C99 truncating division and remainder. Callers guarantee rhs != 0.
inline Int truncDiv(Int lhs, Int rhs) { return lhs / rhs; }
inline Int truncMod(Int lhs, Int rhs) { return lhs % rhs; }

/// Saturating helpers: results are clamped to [-kIntInfinity, kIntInfinity].
Int satAdd(Int a, Int b);
Int satMul(Int a, Int b);
inline Int clampInf(Int v) {
  if (v > kIntInfinity) return kIntInfinity;
  if (v < -kIntInfinity) return -kIntInfinity;
  return v;
}

}  // namespace overfix
