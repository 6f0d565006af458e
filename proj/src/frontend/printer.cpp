#include <sstream>

#include "overfix/frontend/frontend.hpp"

namespace overfix::frontend {

namespace {

std::string typeSpelling(CType t) {
  if (t == CType::Ptr) return "char *";
  return std::string(typeName(t));
}

std::string operand(const AstNode& e) {
  std::string s = printExpr(e);
  if (e.kind == NodeKind::BinaryExpr || e.kind == NodeKind::UnaryExpr || e.kind == NodeKind::Cast) {
    return "(" + s + ")";
  }
  return s;
}

class Printer {
 public:
  std::string unit(const SourceUnit& u) {
    for (const auto& top : u.ast) {
      if (top->kind == NodeKind::FunctionDef) {
        function(*top);
      } else {
        line(decl(*top) + ";");
      }
    }
    return out_.str();
  }

 private:
  void line(const std::string& s) { out_ << std::string(static_cast<std::size_t>(indent_ * 4), ' ') << s << '\n'; }

  std::string decl(const AstNode& d) {
    std::string s = typeSpelling(d.declType);
    if (d.declType != CType::Ptr) s += " ";
    s += d.name;
    if (const AstNode* init = d.child(0)) s += " = " + printExpr(*init);
    return s;
  }

  std::string simple(const AstNode& s) {
    if (s.kind == NodeKind::VarDecl) return decl(s);
    if (s.kind == NodeKind::Call) return printExpr(s);
    if (s.op == "++" || s.op == "--") return s.child(0)->name + s.op;
    return s.child(0)->name + " " + s.op + " " + printExpr(*s.child(1));
  }

  void function(const AstNode& fn) {
    std::string head = typeSpelling(fn.declType);
    if (fn.declType != CType::Ptr) head += " ";
    head += fn.name + "(";
    bool first = true;
    for (const auto& p : fn.children) {
      if (!p->isParam) continue;
      if (!first) head += ", ";
      first = false;
      head += typeSpelling(p->declType);
      if (p->declType != CType::Ptr) head += " ";
      head += p->name.rfind("$param", 0) == 0 ? "" : p->name;
    }
    if (first) head += "void";
    head += ")";
    if (fn.isPrototype) {
      line(head + ";");
      return;
    }
    line(head);
    statement(*fn.body());
  }

  void statement(const AstNode& s) {
    switch (s.kind) {
      case NodeKind::Block:
        line("{");
        ++indent_;
        for (const auto& c : s.children) statement(*c);
        --indent_;
        line("}");
        break;
      case NodeKind::VarDecl:
      case NodeKind::Assign:
      case NodeKind::Call: line(simple(s) + ";"); break;
      case NodeKind::Return: line(s.child(0) ? "return " + printExpr(*s.child(0)) + ";" : "return;"); break;
      case NodeKind::If:
        line("if (" + printExpr(*s.child(0)) + ")");
        nested(*s.child(1));
        if (s.child(2)) {
          line("else");
          nested(*s.child(2));
        }
        break;
      case NodeKind::While:
        line("while (" + printExpr(*s.child(0)) + ")");
        nested(*s.child(1));
        break;
      case NodeKind::For: {
        std::string head = "for (";
        head += s.child(0) ? simple(*s.child(0)) : "";
        head += "; ";
        head += s.child(1) ? printExpr(*s.child(1)) : "";
        head += "; ";
        head += s.child(2) ? simple(*s.child(2)) : "";
        line(head + ")");
        nested(*s.child(3));
        break;
      }
      default: break;
    }
  }

  void nested(const AstNode& s) {
    if (s.kind == NodeKind::Block) {
      statement(s);
      return;
    }
    ++indent_;
    statement(s);
    --indent_;
  }

  std::ostringstream out_;
  int indent_ = 0;
};

}  // namespace

std::string printExpr(const AstNode& e) {
  switch (e.kind) {
    case NodeKind::IntLiteral: return e.text.empty() ? toString(e.value) : e.text;
    case NodeKind::StringLiteral: return e.text;
    case NodeKind::Ident: return e.name;
    case NodeKind::Cast: return "(" + typeSpelling(e.declType) + ")" + operand(*e.child(0));
    case NodeKind::UnaryExpr: return e.op + operand(*e.child(0));
    case NodeKind::BinaryExpr: return operand(*e.child(0)) + " " + e.op + " " + operand(*e.child(1));
    case NodeKind::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += ", ";
        s += printExpr(*e.children[i]);
      }
      return s + ")";
    }
    default: return "";
  }
}

std::string printUnit(const SourceUnit& unit) { return Printer().unit(unit); }

bool structurallyEqual(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.op != b.op || a.name != b.name || a.value != b.value || a.declType != b.declType ||
      a.resolvedType != b.resolvedType || a.isPrototype != b.isPrototype || a.isParam != b.isParam ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    const AstNode* x = a.children[i].get();
    const AstNode* y = b.children[i].get();
    if ((x == nullptr) != (y == nullptr)) return false;
    if (x && !structurallyEqual(*x, *y)) return false;
  }
  return true;
}

bool structurallyEqual(const SourceUnit& a, const SourceUnit& b) {
  if (a.ast.size() != b.ast.size()) return false;
  for (std::size_t i = 0; i < a.ast.size(); ++i) {
    if (!structurallyEqual(*a.ast[i], *b.ast[i])) return false;
  }
  return true;
}

bool hasSideEffects(const AstNode& e) {
  if (e.kind == NodeKind::Call) return e.name != "sqrt";
  for (const auto& c : e.children) {
    if (c && hasSideEffects(*c)) return true;
  }
  return false;
}

}  // namespace overfix::frontend
