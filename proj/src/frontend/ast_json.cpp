#include "overfix/frontend/ast_json.hpp"

namespace overfix::frontend {

nlohmann::json dumpNode(const SourceUnit& unit, const AstNode& n) {
  nlohmann::json j;
  j["kind"] = std::string(kindName(n.kind));
  j["span"] = {{"begin", n.span.begin},
               {"end", n.span.end},
               {"line", unit.lines.lineOf(n.span.begin)},
               {"col", unit.lines.columnOf(n.span.begin)}};
  j["type"] = std::string(typeName(n.resolvedType));
  if (!n.op.empty() && n.kind != NodeKind::IntLiteral) j["op"] = n.op;
  if (!n.name.empty()) j["name"] = n.name;
  if (n.kind == NodeKind::IntLiteral) j["value"] = toString(n.value);
  if (n.kind == NodeKind::VarDecl || n.kind == NodeKind::FunctionDef || n.kind == NodeKind::Cast) {
    j["declType"] = std::string(typeName(n.declType));
  }
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : n.children) {
    children.push_back(c ? dumpNode(unit, *c) : nlohmann::json(nullptr));
  }
  j["children"] = std::move(children);
  return j;
}

nlohmann::json dumpAst(const SourceUnit& unit) {
  nlohmann::json j;
  j["file"] = unit.path;
  nlohmann::json decls = nlohmann::json::array();
  for (const auto& top : unit.ast) decls.push_back(dumpNode(unit, *top));
  j["decls"] = std::move(decls);
  return j;
}

}  // namespace overfix::frontend
