#include "overfix/frontend/builtins.hpp"

#include <array>

namespace overfix::frontend {

namespace {

constexpr std::array kStubs = {
    StubInfo{"rand", StubEffect::FreshReturn, CType::Int, StubRange::RandLike},
    StubInfo{"RAND32", StubEffect::FreshReturn, CType::Int, StubRange::RandLike},
    StubInfo{"RAND64", StubEffect::FreshReturn, CType::Int64, StubRange::RandLike},
    StubInfo{"atoi", StubEffect::FreshReturn, CType::Int, StubRange::TypeLimits},
    StubInfo{"fscanf", StubEffect::HavocTarget, CType::Int, StubRange::TypeLimits},
    StubInfo{"scanf", StubEffect::HavocTarget, CType::Int, StubRange::TypeLimits},
    StubInfo{"malloc", StubEffect::Noop, CType::Ptr, StubRange::None},
    StubInfo{"free", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"memset", StubEffect::Noop, CType::Ptr, StubRange::None},
    StubInfo{"memcpy", StubEffect::Noop, CType::Ptr, StubRange::None},
    StubInfo{"printf", StubEffect::Noop, CType::Int, StubRange::None},
    StubInfo{"puts", StubEffect::Noop, CType::Int, StubRange::None},
    StubInfo{"printLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"printIntLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"printShortLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"printUnsignedLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"printLongLongLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"printHexCharLine", StubEffect::Noop, CType::Void, StubRange::None},
    StubInfo{"abort", StubEffect::Terminate, CType::Void, StubRange::None},
    StubInfo{"exit", StubEffect::Terminate, CType::Void, StubRange::None},
    StubInfo{kHandlerName, StubEffect::Handler, CType::Void, StubRange::None},
};

}  // namespace

std::optional<StubInfo> lookupStub(std::string_view name) {
  for (const auto& s : kStubs) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace overfix::frontend
