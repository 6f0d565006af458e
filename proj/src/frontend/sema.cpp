// Name resolution and expression typing.

#include <map>

#include "overfix/frontend/builtins.hpp"
#include "overfix/frontend/frontend.hpp"

namespace overfix::frontend {

namespace {

class Resolver {
 public:
  explicit Resolver(SourceUnit& unit) : unit_(unit) {}

  void run() {
    for (auto& top : unit_.ast) {
      if (top->kind != NodeKind::FunctionDef) continue;
      auto& slot = functions_[top->name];
      if (!slot || slot->isPrototype) slot = top.get();
    }
    for (auto& top : unit_.ast) {
      if (top->kind == NodeKind::VarDecl) {
        globalDecl(*top);
      } else {
        function(*top);
      }
    }
  }

 private:
  [[noreturn]] void fail(const AstNode& at, const std::string& msg) const {
    throw TypeError(unit_.lines.lineOf(at.span.begin), unit_.lines.columnOf(at.span.begin), msg);
  }

  void globalDecl(AstNode& decl) {
    decl.slot = decl.name;
    if (auto* init = decl.child(0)) {
      expr(*init);
      checkAssignable(decl, decl.declType, *init);
    }
    globals_[decl.name] = &decl;
  }

  void function(AstNode& fn) {
    if (fn.isPrototype) return;
    current_ = &fn;
    slotCounts_.clear();
    scopes_.clear();
    scopes_.emplace_back();
    for (auto& c : fn.children) {
      if (c->kind == NodeKind::VarDecl && c->isParam) declare(*c);
    }
    statement(*fn.children.back());
    scopes_.clear();
    current_ = nullptr;
  }

  void declare(AstNode& decl) {
    int& count = slotCounts_[decl.name];
    ++count;
    decl.slot = count == 1 ? decl.name : decl.name + "." + std::to_string(count);
    scopes_.back()[decl.name] = &decl;
  }

  const AstNode* lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    auto g = globals_.find(name);
    return g == globals_.end() ? nullptr : g->second;
  }

  void statement(AstNode& s) {
    switch (s.kind) {
      case NodeKind::Block:
        scopes_.emplace_back();
        for (auto& c : s.children) statement(*c);
        scopes_.pop_back();
        break;
      case NodeKind::VarDecl:
        if (auto* init = s.child(0)) {
          expr(*init);
          checkAssignable(s, s.declType, *init);
        }
        declare(s);
        break;
      case NodeKind::Assign: assign(s); break;
      case NodeKind::Call: expr(s); break;
      case NodeKind::If:
        condition(*s.child(0));
        statement(*s.child(1));
        if (s.child(2)) statement(*s.child(2));
        break;
      case NodeKind::While:
        condition(*s.child(0));
        statement(*s.child(1));
        break;
      case NodeKind::For:
        scopes_.emplace_back();
        if (s.child(0)) statement(*s.child(0));
        if (s.child(1)) condition(*s.child(1));
        if (s.child(2)) statement(*s.child(2));
        statement(*s.child(3));
        scopes_.pop_back();
        break;
      case NodeKind::Return:
        if (auto* v = s.child(0)) {
          expr(*v);
          if (current_->declType == CType::Void) fail(s, "return with a value in void function");
          checkAssignable(s, current_->declType, *v);
        }
        break;
      default: fail(s, "unexpected statement");
    }
    s.resolvedType = CType::Void;
  }

  void condition(AstNode& e) {
    expr(e);
    if (!isInteger(e.resolvedType)) fail(e, "condition is not an integer");
  }

  void assign(AstNode& a) {
    AstNode& target = *a.child(0);
    expr(target);
    if (target.isNamedConstant || target.isBuiltinObject) fail(target, "assignment to a constant");
    if (a.op == "++" || a.op == "--") {
      if (!isInteger(target.resolvedType)) fail(a, "increment of a non-integer");
    } else {
      AstNode& value = *a.child(1);
      expr(value);
      if (a.op == "=") {
        checkAssignable(a, target.resolvedType, value);
      } else if (!isInteger(target.resolvedType) || !isInteger(value.resolvedType)) {
        fail(a, "non-integer operands in arithmetic");
      }
    }
    a.resolvedType = CType::Void;
  }

  void checkAssignable(const AstNode& at, CType to, const AstNode& value) const {
    bool valuePtr = value.resolvedType == CType::Ptr;
    if ((to == CType::Ptr) != valuePtr) {
      bool nullLiteral = to == CType::Ptr && value.kind == NodeKind::IntLiteral && value.value == 0;
      if (!nullLiteral) fail(at, "incompatible assignment between pointer and integer");
    }
    if (value.resolvedType == CType::Void) fail(at, "use of a void value");
  }

  static CType literalType(const AstNode& lit) {
    bool isUnsigned = lit.op.find_first_of("uU") != std::string::npos;
    bool isLong = lit.op.find_first_of("lL") != std::string::npos;
    bool hex = lit.text.size() > 1 && lit.text[0] == '0' && (lit.text[1] == 'x' || lit.text[1] == 'X');
    if (isLong) return CType::Int64;
    if (isUnsigned) return lit.value <= 4294967295LL ? CType::UInt : CType::Int64;
    if (lit.value <= 2147483647) return CType::Int;
    if (hex && lit.value <= 4294967295LL) return CType::UInt;
    return CType::Int64;
  }

  void expr(AstNode& e) {
    switch (e.kind) {
      case NodeKind::IntLiteral:
        if (e.value > static_cast<Int>(9223372036854775807LL)) fail(e, "integer literal too large");
        e.resolvedType = e.text.size() && e.text[0] == '\'' ? CType::Int : literalType(e);
        break;
      case NodeKind::StringLiteral: e.resolvedType = CType::Ptr; break;
      case NodeKind::Ident: ident(e); break;
      case NodeKind::Cast:
        expr(*e.child(0));
        if (e.declType == CType::Void) fail(e, "cast to void");
        e.resolvedType = e.declType;
        break;
      case NodeKind::UnaryExpr: {
        AstNode& operand = *e.child(0);
        expr(operand);
        if (e.op == "&") {
          if (operand.kind != NodeKind::Ident || operand.isNamedConstant || operand.isBuiltinObject) {
            fail(e, "address of non-variable");
          }
          e.resolvedType = CType::Ptr;
        } else if (e.op == "!") {
          e.resolvedType = CType::Int;
        } else {
          if (!isInteger(operand.resolvedType)) fail(e, "non-integer operand in arithmetic");
          e.resolvedType = promote(operand.resolvedType);
        }
        break;
      }
      case NodeKind::BinaryExpr: {
        AstNode& lhs = *e.child(0);
        AstNode& rhs = *e.child(1);
        expr(lhs);
        expr(rhs);
        const std::string& op = e.op;
        bool arithmetic = op == "+" || op == "-" || op == "*" || op == "/" || op == "%";
        if (arithmetic) {
          if (!isInteger(lhs.resolvedType) || !isInteger(rhs.resolvedType)) {
            fail(e, "non-integer operands in arithmetic");
          }
          e.resolvedType = commonType(lhs.resolvedType, rhs.resolvedType);
        } else {
          bool ptrCompare = (op == "==" || op == "!=") &&
                            (lhs.resolvedType == CType::Ptr || rhs.resolvedType == CType::Ptr);
          if (!ptrCompare && (!isInteger(lhs.resolvedType) || !isInteger(rhs.resolvedType))) {
            fail(e, "non-integer operands in comparison");
          }
          e.resolvedType = CType::Int;
        }
        break;
      }
      case NodeKind::Call: call(e); break;
      default: fail(e, "unexpected expression");
    }
  }

  void ident(AstNode& e) {
    if (const AstNode* d = lookup(e.name)) {
      e.decl = d;
      e.resolvedType = d->declType;
      return;
    }
    if (auto t = namedConstantType(e.name)) {
      e.isNamedConstant = true;
      e.resolvedType = promote(*t);
      return;
    }
    if (e.name == "stdin" || e.name == "stdout" || e.name == "stderr" || e.name == "NULL") {
      e.isBuiltinObject = true;
      e.resolvedType = CType::Ptr;
      return;
    }
    fail(e, "use of undeclared identifier '" + e.name + "'");
  }

  void call(AstNode& e) {
    for (auto& arg : e.children) expr(*arg);
    if (e.name == "sqrt") {
      if (e.children.size() != 1 || !isInteger(e.child(0)->resolvedType)) fail(e, "sqrt expects one integer argument");
      // Real-valued in C; the analyzer only admits it as a comparison operand.
      e.resolvedType = CType::Int64;
      return;
    }
    auto fn = functions_.find(e.name);
    if (fn != functions_.end() && !fn->second->isPrototype) {
      const AstNode* def = fn->second;
      if (def->paramCount() != e.children.size()) fail(e, "wrong number of arguments to '" + e.name + "'");
      std::size_t i = 0;
      for (const auto& p : def->children) {
        if (!p->isParam) continue;
        checkAssignable(*e.child(i), p->declType, *e.child(i));
        ++i;
      }
      e.decl = def;
      e.resolvedType = def->declType;
      return;
    }
    if (auto stub = lookupStub(e.name)) {
      e.resolvedType = stub->returnType;
      return;
    }
    e.resolvedType = fn != functions_.end() ? fn->second->declType : CType::Int;
  }

  SourceUnit& unit_;
  std::map<std::string, AstNode*> functions_;
  std::map<std::string, const AstNode*> globals_;
  std::vector<std::map<std::string, const AstNode*>> scopes_;
  std::map<std::string, int> slotCounts_;
  const AstNode* current_ = nullptr;
};

}  // namespace

SourceUnit resolveTypes(SourceUnit unit) {
  Resolver(unit).run();
  return unit;
}

}  // namespace overfix::frontend
