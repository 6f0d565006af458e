#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "overfix/frontend/ast.hpp"

namespace overfix::cfg {

using frontend::AstNode;
using NodeId = std::uint32_t;

enum class CfgNodeKind { Entry, Exit, Stmt, Call, Branch, Join, Return };
enum class BranchLabel { None, True, False };

std::string_view nodeKindName(CfgNodeKind k);

/// One CFG node. Stmt nodes hold a VarDecl, Assign or library-call
/// statement; Call nodes hold a call to a user-defined function (hoisted
/// out of the enclosing statement in evaluation order); Branch nodes hold
/// the condition expression.
struct CfgNode {
  NodeId id = 0;
  CfgNodeKind kind = CfgNodeKind::Stmt;
  const AstNode* ast = nullptr;
  frontend::Span span;
  bool loopHead = false;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  BranchLabel label = BranchLabel::None;
};

class Cfg {
 public:
  std::string functionName;
  const AstNode* function = nullptr;
  std::vector<CfgNode> nodes;
  std::vector<Edge> edges;
  NodeId entry = 0;
  NodeId exit = 0;

  const CfgNode& node(NodeId id) const { return nodes.at(id); }
  std::vector<Edge> successors(NodeId id) const;
  /// Target of the edge leaving `id` with the given label.
  NodeId successor(NodeId id, BranchLabel label = BranchLabel::None) const;

 private:
  friend class CfgBuilder;
  std::vector<std::vector<std::size_t>> out_;
};

/// Builds the CFG of one function definition. `for` loops are lowered to
/// the `while` shape: init, then a loop-head branch whose body ends with
/// the step statement and a back-edge.
Cfg buildCfg(const AstNode& function);

/// Every function definition of a unit, keyed by name.
struct Program {
  const frontend::SourceUnit* unit = nullptr;
  std::map<std::string, Cfg, std::less<>> cfgs;
  const Cfg* find(std::string_view name) const;
  /// `main` when defined, otherwise every function no other function calls.
  std::vector<std::string> entryPoints() const;
};

Program buildProgram(const frontend::SourceUnit& unit);

/// Graphviz rendering for inspection.
std::string toDot(const Cfg& cfg, const frontend::SourceUnit& unit);

}  // namespace overfix::cfg
