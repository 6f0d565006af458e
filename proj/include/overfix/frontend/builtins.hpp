#pragma once

#include <optional>
#include <string_view>

#include "overfix/frontend/types.hpp"

namespace overfix::frontend {

/// What a library call does to the analyzed state.
enum class StubEffect {
  FreshReturn,  ///< returns a fresh symbolic value of `returnType`
  HavocTarget,  ///< every `&x` argument receives a fresh symbolic value
  Noop,         ///< no effect on the integer environment
  Terminate,    ///< ends the path (abort-like sink)
  Handler,      ///< log_or_die: terminates when its last argument is non-zero
};

enum class StubRange {
  None,       ///< unconstrained within the declared type
  TypeLimits, ///< bounded by the declared type (fscanf-like sources)
  RandLike,   ///< [0, INT_MAX] (or [0, LLONG_MAX] for 64-bit sources)
};

struct StubInfo {
  std::string_view name;
  StubEffect effect;
  CType returnType;
  StubRange range;
};

/// Library functions known to the analyzer. Returns nullopt for any other
/// name; such calls raise UnknownExtern during symbolic execution.
std::optional<StubInfo> lookupStub(std::string_view name);

/// Name of the handler call emitted inside generated repairs.
inline constexpr std::string_view kHandlerName = "log_or_die";

}  // namespace overfix::frontend
