#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "overfix/support/int128.hpp"

namespace overfix::frontend {

/// The five supported integer types, plus Void and an opaque pointer used
/// only for string literals and the handle returned by malloc.
enum class CType { Char, Short, Int, UInt, Int64, Void, Ptr };

inline constexpr CType kIntegerTypes[] = {CType::Char, CType::Short, CType::Int, CType::UInt, CType::Int64};

std::string_view typeName(CType t);
std::optional<CType> typeFromName(std::string_view name);
bool isInteger(CType t);
bool isSigned(CType t);
/// Conversion rank; char < short < int == unsigned int < int64_t.
int rank(CType t);

/// Integer promotion and usual arithmetic conversions restricted to the
/// supported types.
CType promote(CType t);
CType commonType(CType a, CType b);

struct IntBounds {
  CType type = CType::Int;
  Int maxVal = 0;
  Int minVal = 0;
  std::string maxName;  // e.g. "INT_MAX"
  std::string minName;  // e.g. "INT_MIN"; "0" for unsigned
};

/// Fixed limits table. `standard()` holds the two's-complement limits;
/// `analog(bits)` maps every type proportionally onto a small bit width
/// (signed -> [-2^(b-1), 2^(b-1)-1], unsigned -> [0, 2^b-1]).
class LimitsTable {
 public:
  static LimitsTable standard();
  static LimitsTable analog(int bits = 8);

  IntBounds bounds(CType t) const;
  /// Resolves CHAR_MAX, SHRT_MAX (alias SHORT_MAX), INT_MAX, UINT_MAX,
  /// LLONG_MAX and the signed *_MIN counterparts.
  std::optional<Int> namedConstant(std::string_view name) const;
  bool isAnalog() const noexcept { return bits_ != 0; }
  int analogBits() const noexcept { return bits_; }
  /// Lower bound computed as -MAX + 1 instead of -MAX - 1.
  void setPaperLiteralMin(bool on) { paperLiteralMin_ = on; }
  bool paperLiteralMin() const noexcept { return paperLiteralMin_; }

 private:
  int bits_ = 0;
  bool paperLiteralMin_ = false;
};

/// Type of a named limit constant (INT_MAX -> int, UINT_MAX -> unsigned int...).
std::optional<CType> namedConstantType(std::string_view name);
/// The MAX constant name associated with an integer type.
std::string_view maxConstantName(CType t);

}  // namespace overfix::frontend
