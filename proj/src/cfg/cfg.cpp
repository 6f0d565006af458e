#include "overfix/cfg/cfg.hpp"

#include <set>
#include <sstream>

#include "overfix/frontend/frontend.hpp"

namespace overfix::cfg {

using frontend::NodeKind;

std::string_view nodeKindName(CfgNodeKind k) {
  switch (k) {
    case CfgNodeKind::Entry: return "entry";
    case CfgNodeKind::Exit: return "exit";
    case CfgNodeKind::Stmt: return "stmt";
    case CfgNodeKind::Call: return "call";
    case CfgNodeKind::Branch: return "branch";
    case CfgNodeKind::Join: return "join";
    case CfgNodeKind::Return: return "return";
  }
  return "?";
}

std::vector<Edge> Cfg::successors(NodeId id) const {
  std::vector<Edge> out;
  if (id < out_.size()) {
    for (std::size_t e : out_[id]) out.push_back(edges[e]);
  }
  return out;
}

NodeId Cfg::successor(NodeId id, BranchLabel label) const {
  for (std::size_t e : out_.at(id)) {
    if (edges[e].label == label) return edges[e].to;
  }
  throw Error("cfg: node " + std::to_string(id) + " has no such successor in " + functionName);
}

class CfgBuilder {
 public:
  explicit CfgBuilder(const AstNode& fn) {
    cfg_.functionName = fn.name;
    cfg_.function = &fn;
  }

  Cfg build() {
    const AstNode& fn = *cfg_.function;
    cfg_.entry = add(CfgNodeKind::Entry, nullptr, fn.span);
    frontier_ = {{cfg_.entry, BranchLabel::None}};
    statement(*fn.body());
    std::vector<Pending> tail = frontier_;
    cfg_.exit = add(CfgNodeKind::Exit, nullptr, fn.span, /*connect=*/false);
    for (const auto& p : tail) link(p.from, cfg_.exit, p.label);
    for (NodeId r : returns_) link(r, cfg_.exit, BranchLabel::None);
    return std::move(cfg_);
  }

 private:
  struct Pending {
    NodeId from;
    BranchLabel label;
  };

  NodeId add(CfgNodeKind kind, const AstNode* ast, frontend::Span span, bool connect = true) {
    NodeId id = static_cast<NodeId>(cfg_.nodes.size());
    cfg_.nodes.push_back({id, kind, ast, span, false});
    cfg_.out_.emplace_back();
    if (connect) {
      for (const auto& p : frontier_) link(p.from, id, p.label);
      frontier_ = {{id, BranchLabel::None}};
    }
    return id;
  }

  void link(NodeId from, NodeId to, BranchLabel label) {
    cfg_.out_[from].push_back(cfg_.edges.size());
    cfg_.edges.push_back({from, to, label});
  }

  // Emits Call nodes for user-defined calls inside `e`, innermost first,
  // left to right.
  void hoistCalls(const AstNode& e) {
    for (const auto& c : e.children) {
      if (c) hoistCalls(*c);
    }
    if (e.kind == NodeKind::Call && e.decl != nullptr) add(CfgNodeKind::Call, &e, e.span);
  }

  void statement(const AstNode& s) {
    switch (s.kind) {
      case NodeKind::Block:
        for (const auto& c : s.children) statement(*c);
        break;
      case NodeKind::VarDecl:
        if (s.child(0)) hoistCalls(*s.child(0));
        add(CfgNodeKind::Stmt, &s, s.span);
        break;
      case NodeKind::Assign:
        for (const auto& c : s.children) hoistCalls(*c);
        add(CfgNodeKind::Stmt, &s, s.span);
        break;
      case NodeKind::Call:
        for (const auto& c : s.children) hoistCalls(*c);
        if (s.decl != nullptr) {
          add(CfgNodeKind::Call, &s, s.span);
        } else {
          add(CfgNodeKind::Stmt, &s, s.span);
        }
        break;
      case NodeKind::Return: {
        if (s.child(0)) hoistCalls(*s.child(0));
        NodeId r = add(CfgNodeKind::Return, &s, s.span);
        returns_.push_back(r);
        frontier_.clear();
        break;
      }
      case NodeKind::If: {
        hoistCalls(*s.child(0));
        NodeId b = add(CfgNodeKind::Branch, s.child(0), s.child(0)->span);
        frontier_ = {{b, BranchLabel::True}};
        statement(*s.child(1));
        std::vector<Pending> thenOut = frontier_;
        frontier_ = {{b, BranchLabel::False}};
        if (s.child(2)) statement(*s.child(2));
        std::vector<Pending> joined = frontier_;
        joined.insert(joined.end(), thenOut.begin(), thenOut.end());
        frontier_ = joined;
        add(CfgNodeKind::Join, nullptr, {s.span.end, s.span.end});
        break;
      }
      case NodeKind::While: loop(s.child(0), s, *s.child(1), nullptr); break;
      case NodeKind::For:
        if (s.child(0)) statement(*s.child(0));
        loop(s.child(1), s, *s.child(3), s.child(2));
        break;
      default: break;
    }
  }

  // A missing condition (`for (;;)`) is modelled as the constant 1 by the
  // interpreter; the branch node then carries a null AST.
  void loop(const AstNode* cond, const AstNode& stmt, const AstNode& body, const AstNode* step) {
    NodeId head = static_cast<NodeId>(cfg_.nodes.size());
    if (cond) hoistCalls(*cond);
    NodeId b = add(CfgNodeKind::Branch, cond, cond ? cond->span : frontend::Span{stmt.span.begin, stmt.span.begin});
    cfg_.nodes[b].loopHead = true;
    frontier_ = {{b, BranchLabel::True}};
    statement(body);
    if (step) statement(*step);
    for (const auto& p : frontier_) link(p.from, head, p.label);
    frontier_ = {{b, BranchLabel::False}};
  }

  Cfg cfg_;
  std::vector<Pending> frontier_;
  std::vector<NodeId> returns_;
};

Cfg buildCfg(const AstNode& function) { return CfgBuilder(function).build(); }

const Cfg* Program::find(std::string_view name) const {
  auto it = cfgs.find(name);
  return it == cfgs.end() ? nullptr : &it->second;
}

namespace {

void collectCallees(const AstNode& n, std::set<std::string>& out) {
  if (n.kind == NodeKind::Call && n.decl != nullptr) out.insert(n.name);
  for (const auto& c : n.children) {
    if (c) collectCallees(*c, out);
  }
}

}  // namespace

std::vector<std::string> Program::entryPoints() const {
  if (cfgs.count("main")) return {"main"};
  std::set<std::string> called;
  for (const auto& [name, cfg] : cfgs) collectCallees(*cfg.function, called);
  std::vector<std::string> out;
  for (const auto& [name, cfg] : cfgs) {
    if (!called.count(name)) out.push_back(name);
  }
  return out;
}

Program buildProgram(const frontend::SourceUnit& unit) {
  Program p;
  p.unit = &unit;
  for (const auto& top : unit.ast) {
    if (top->kind == NodeKind::FunctionDef && !top->isPrototype) {
      p.cfgs.emplace(top->name, buildCfg(*top));
    }
  }
  return p;
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string toDot(const Cfg& cfg, const frontend::SourceUnit& unit) {
  std::ostringstream os;
  os << "digraph \"" << escape(cfg.functionName) << "\" {\n";
  for (const auto& n : cfg.nodes) {
    std::string label = std::string(nodeKindName(n.kind));
    if (n.ast) label += ": " + std::string(unit.spanText(n.span));
    label += " (L" + std::to_string(unit.lines.lineOf(n.span.begin)) + ")";
    os << "  n" << n.id << " [label=\"" << escape(label) << "\"";
    if (n.kind == CfgNodeKind::Branch) os << ", shape=diamond";
    os << "];\n";
  }
  for (const auto& e : cfg.edges) {
    os << "  n" << e.from << " -> n" << e.to;
    if (e.label == BranchLabel::True) os << " [label=\"T\"]";
    if (e.label == BranchLabel::False) os << " [label=\"F\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace overfix::cfg
