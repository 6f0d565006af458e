#pragma once

#include <string>
#include <string_view>

#include "overfix/frontend/ast.hpp"
#include "overfix/frontend/types.hpp"
#include "overfix/support/error.hpp"

namespace overfix::frontend {

/// Lexes and parses the supported C subset. Lines starting with `#include`
/// are skipped; `#define` of a limits constant is accepted and ignored.
/// Throws SyntaxError or UnsupportedConstruct.
SourceUnit parse(std::string path, std::string text);

/// Resolves identifiers and assigns resolvedType to every expression.
/// Throws TypeError.
SourceUnit resolveTypes(SourceUnit unit);

/// parse + resolveTypes on a file read from disk.
SourceUnit loadFile(const std::string& path);
SourceUnit loadText(std::string path, std::string text);

/// Canonical C rendering of an expression or a whole unit.
std::string printExpr(const AstNode& expr);
std::string printUnit(const SourceUnit& unit);

/// Compares kind/op/name/value/type fields and children, ignoring spans.
bool structurallyEqual(const AstNode& a, const AstNode& b);
bool structurallyEqual(const SourceUnit& a, const SourceUnit& b);

/// True when the expression contains a call (user or library) or other
/// construct that must not be evaluated twice.
bool hasSideEffects(const AstNode& expr);

}  // namespace overfix::frontend
