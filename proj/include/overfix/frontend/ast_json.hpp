#pragma once

#include "json.hpp"
#include "overfix/frontend/ast.hpp"

namespace overfix::frontend {

/// Deterministic JSON tree: {kind, span, type, children} plus op/name/value
/// where the node carries them.
nlohmann::json dumpAst(const SourceUnit& unit);
nlohmann::json dumpNode(const SourceUnit& unit, const AstNode& node);

}  // namespace overfix::frontend
