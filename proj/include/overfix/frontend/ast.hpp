#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "overfix/frontend/types.hpp"
#include "overfix/support/int128.hpp"

namespace overfix::frontend {

/// Half-open byte range into SourceUnit::text.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t size() const noexcept { return end - begin; }
  bool operator==(const Span&) const = default;
};

enum class NodeKind {
  FunctionDef,
  VarDecl,
  Assign,
  BinaryExpr,
  UnaryExpr,
  Call,
  If,
  While,
  For,
  Return,
  Block,
  IntLiteral,
  Ident,
  Cast,
  StringLiteral,
};

std::string_view kindName(NodeKind k);

/// One node of the parsed program.
///
/// Child layout by kind:
///   FunctionDef   params (VarDecl, isParam) ... [body Block unless prototype]
///   VarDecl       [initializer]
///   Assign        target Ident, value   ("++"/"--": target only)
///   BinaryExpr    lhs, rhs
///   UnaryExpr     operand               (op: "-", "+", "!", "&")
///   Call          arguments
///   If            cond, then, [else]
///   While         cond, body
///   For           init?, cond?, step?, body   (missing parts are null)
///   Return        [value]
///   Block         statements
///   Cast          operand
struct AstNode {
  NodeKind kind = NodeKind::Block;
  Span span;
  CType resolvedType = CType::Void;

  std::string op;
  std::string name;
  std::string text;  // literal spelling
  Int value = 0;
  CType declType = CType::Void;

  bool isGlobal = false;
  bool isParam = false;
  bool isPrototype = false;
  bool isNamedConstant = false;  // INT_MAX and friends
  bool isBuiltinObject = false;  // stdin, stdout, stderr, NULL

  /// Ident -> declaring VarDecl; Call -> FunctionDef with body (null for stubs
  /// and prototype-only externs). Filled by resolveTypes.
  const AstNode* decl = nullptr;
  /// Unique per function for locals, the plain name for globals.
  std::string slot;

  std::vector<std::unique_ptr<AstNode>> children;

  AstNode* child(std::size_t i) const { return i < children.size() ? children[i].get() : nullptr; }
  std::size_t paramCount() const;
  const AstNode* body() const;
};

/// Byte offset -> (line, column) index; both 1-based.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);
  int lineOf(std::uint32_t offset) const;
  int columnOf(std::uint32_t offset) const;
  std::uint32_t lineStart(int line) const;
  int lineCount() const noexcept { return static_cast<int>(starts_.size()); }

 private:
  std::vector<std::uint32_t> starts_;
};

struct SourceUnit {
  std::string path;
  std::string text;
  LineIndex lines;
  std::vector<std::unique_ptr<AstNode>> ast;
  /// 1-based lines that carry a `/* FAULT */` annotation.
  std::vector<int> faultAnnotations;
  /// 1-based lines of `#include` directives, skipped by the parser.
  std::vector<int> includeLines;

  std::string_view spanText(Span s) const { return std::string_view(text).substr(s.begin, s.size()); }
  int lineOf(const AstNode& n) const { return lines.lineOf(n.span.begin); }
  const AstNode* findFunction(std::string_view name) const;
  /// Innermost statement whose span starts at `offset` (Assign or VarDecl).
  const AstNode* statementAt(std::uint32_t offset) const;
  /// Function definition whose body contains the given line.
  const AstNode* functionAtLine(int line) const;
};

}  // namespace overfix::frontend
