#include "overfix/frontend/types.hpp"

namespace overfix::frontend {

std::string_view typeName(CType t) {
  switch (t) {
    case CType::Char: return "char";
    case CType::Short: return "short";
    case CType::Int: return "int";
    case CType::UInt: return "unsigned int";
    case CType::Int64: return "int64_t";
    case CType::Void: return "void";
    case CType::Ptr: return "pointer";
  }
  return "?";
}

std::optional<CType> typeFromName(std::string_view name) {
  if (name == "char") return CType::Char;
  if (name == "short") return CType::Short;
  if (name == "int") return CType::Int;
  if (name == "unsigned int" || name == "unsigned") return CType::UInt;
  if (name == "int64_t") return CType::Int64;
  if (name == "void") return CType::Void;
  return std::nullopt;
}

bool isInteger(CType t) { return t != CType::Void && t != CType::Ptr; }
bool isSigned(CType t) { return t != CType::UInt; }

int rank(CType t) {
  switch (t) {
    case CType::Char: return 1;
    case CType::Short: return 2;
    case CType::Int:
    case CType::UInt: return 3;
    case CType::Int64: return 4;
    default: return 0;
  }
}

CType promote(CType t) {
  if (t == CType::Char || t == CType::Short) return CType::Int;
  return t;
}

CType commonType(CType a, CType b) {
  a = promote(a);
  b = promote(b);
  if (a == CType::Int64 || b == CType::Int64) return CType::Int64;
  if (a == CType::UInt || b == CType::UInt) return CType::UInt;
  return CType::Int;
}

LimitsTable LimitsTable::standard() { return LimitsTable{}; }

LimitsTable LimitsTable::analog(int bits) {
  LimitsTable t;
  t.bits_ = bits;
  return t;
}

std::string_view maxConstantName(CType t) {
  switch (t) {
    case CType::Char: return "CHAR_MAX";
    case CType::Short: return "SHRT_MAX";
    case CType::UInt: return "UINT_MAX";
    case CType::Int64: return "LLONG_MAX";
    default: return "INT_MAX";
  }
}

static std::string_view minConstantName(CType t) {
  switch (t) {
    case CType::Char: return "CHAR_MIN";
    case CType::Short: return "SHRT_MIN";
    case CType::UInt: return "0";
    case CType::Int64: return "LLONG_MIN";
    default: return "INT_MIN";
  }
}

IntBounds LimitsTable::bounds(CType t) const {
  IntBounds b;
  b.type = t;
  b.maxName = std::string(maxConstantName(t));
  b.minName = std::string(minConstantName(t));
  if (bits_ != 0) {
    Int one = 1;
    b.maxVal = isSigned(t) ? (one << (bits_ - 1)) - 1 : (one << bits_) - 1;
  } else {
    switch (t) {
      case CType::Char: b.maxVal = 127; break;
      case CType::Short: b.maxVal = 32767; break;
      case CType::UInt: b.maxVal = 4294967295LL; break;
      case CType::Int64: b.maxVal = static_cast<Int>(9223372036854775807LL); break;
      default: b.maxVal = 2147483647; break;
    }
  }
  if (!isSigned(t)) {
    b.minVal = 0;
  } else {
    b.minVal = paperLiteralMin_ ? -b.maxVal + 1 : -b.maxVal - 1;
  }
  return b;
}

std::optional<CType> namedConstantType(std::string_view name) {
  if (name == "CHAR_MAX" || name == "CHAR_MIN") return CType::Char;
  if (name == "SHRT_MAX" || name == "SHORT_MAX" || name == "SHRT_MIN") return CType::Short;
  if (name == "INT_MAX" || name == "INT_MIN") return CType::Int;
  if (name == "UINT_MAX") return CType::UInt;
  if (name == "LLONG_MAX" || name == "LLONG_MIN") return CType::Int64;
  return std::nullopt;
}

std::optional<Int> LimitsTable::namedConstant(std::string_view name) const {
  auto t = namedConstantType(name);
  if (!t) return std::nullopt;
  // The MIN constants always carry the two's-complement value; the
  // -MAX + 1 flag only affects the analyzer's lower bound.
  LimitsTable plain = *this;
  plain.paperLiteralMin_ = false;
  IntBounds b = plain.bounds(*t);
  if (name.size() > 4 && name.substr(name.size() - 4) == "_MIN") return b.minVal;
  return b.maxVal;
}

}  // namespace overfix::frontend
