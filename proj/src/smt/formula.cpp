#include "overfix/smt/formula.hpp"

#include "overfix/support/error.hpp"

namespace overfix::smt {

bool isBoolOp(Op op) {
  switch (op) {
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge:
    case Op::Eq:
    case Op::Ne:
    case Op::And:
    case Op::Or:
    case Op::Not: return true;
    default: return false;
  }
}

namespace {

Formula make(Op op, std::vector<Formula> args) {
  auto n = std::make_shared<FormulaNode>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

}  // namespace

Formula constant(Int v) {
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

Formula var(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->op = Op::Var;
  n->var = std::move(name);
  return n;
}

Formula binary(Op op, Formula a, Formula b) { return make(op, {std::move(a), std::move(b)}); }
Formula add(Formula a, Formula b) { return binary(Op::Add, std::move(a), std::move(b)); }
Formula sub(Formula a, Formula b) { return binary(Op::Sub, std::move(a), std::move(b)); }
Formula mul(Formula a, Formula b) { return binary(Op::Mul, std::move(a), std::move(b)); }
Formula div(Formula a, Formula b) { return binary(Op::Div, std::move(a), std::move(b)); }
Formula mod(Formula a, Formula b) { return binary(Op::Mod, std::move(a), std::move(b)); }
Formula neg(Formula a) {
  if (a->op == Op::Const) return constant(-a->value);
  return make(Op::Neg, {std::move(a)});
}
Formula lt(Formula a, Formula b) { return binary(Op::Lt, std::move(a), std::move(b)); }
Formula le(Formula a, Formula b) { return binary(Op::Le, std::move(a), std::move(b)); }
Formula gt(Formula a, Formula b) { return binary(Op::Gt, std::move(a), std::move(b)); }
Formula ge(Formula a, Formula b) { return binary(Op::Ge, std::move(a), std::move(b)); }
Formula eq(Formula a, Formula b) { return binary(Op::Eq, std::move(a), std::move(b)); }
Formula ne(Formula a, Formula b) { return binary(Op::Ne, std::move(a), std::move(b)); }
Formula land(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
Formula lor(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
Formula lnot(Formula a) { return make(Op::Not, {std::move(a)}); }
Formula ite(Formula c, Formula t, Formula e) { return make(Op::Ite, {std::move(c), std::move(t), std::move(e)}); }

Formula sqrtApprox(Formula n) {
  if (n->op != Op::Const) throw Error("sqrtApprox over a non-constant term");
  return constant(floorSqrt(n->value));
}

Formula truthy(Formula f) {
  if (isBoolOp(f->op)) return f;
  return ne(std::move(f), constant(0));
}

Formula asInt(Formula f) {
  if (!isBoolOp(f->op)) return f;
  return ite(std::move(f), constant(1), constant(0));
}

namespace {

std::string smtConst(Int v) {
  if (v < 0) return "(- " + toString(-v) + ")";
  return toString(v);
}

std::string call(const char* head, const std::vector<Formula>& args) {
  std::string s = "(";
  s += head;
  for (const auto& a : args) s += " " + toSmt(a);
  return s + ")";
}

}  // namespace

std::string toSmt(const Formula& f) {
  const auto& a = f->args;
  switch (f->op) {
    case Op::Const: return smtConst(f->value);
    case Op::Var: return f->var;
    case Op::Add: return call("+", a);
    case Op::Sub: return call("-", a);
    case Op::Mul: return call("*", a);
    case Op::Neg: return call("-", a);
    case Op::Div: {
      std::string x = toSmt(a[0]);
      std::string y = toSmt(a[1]);
      return "(ite (>= " + x + " 0) (div " + x + " " + y + ") (- (div (- " + x + ") " + y + ")))";
    }
    case Op::Mod: {
      std::string x = toSmt(a[0]);
      std::string y = toSmt(a[1]);
      return "(- " + x + " (* " + y + " (ite (>= " + x + " 0) (div " + x + " " + y + ") (- (div (- " + x + ") " + y +
             ")))))";
    }
    case Op::Lt: return call("<", a);
    case Op::Le: return call("<=", a);
    case Op::Gt: return call(">", a);
    case Op::Ge: return call(">=", a);
    case Op::Eq: return call("=", a);
    case Op::Ne: return call("distinct", a);
    case Op::And: return call("and", a);
    case Op::Or: return call("or", a);
    case Op::Not: return call("not", a);
    case Op::Ite: return call("ite", a);
    case Op::SqrtApprox: throw Error("unfolded sqrtApprox in emitted term");
  }
  return "";
}

void collectVars(const Formula& f, std::set<std::string>& out) {
  if (f->op == Op::Var) {
    out.insert(f->var);
    return;
  }
  for (const auto& a : f->args) collectVars(a, out);
}

std::optional<Int> evaluate(const Formula& f, const Model& m) {
  const auto& a = f->args;
  auto ev = [&](std::size_t i) { return evaluate(a[i], m); };
  switch (f->op) {
    case Op::Const: return f->value;
    case Op::Var: {
      auto it = m.find(f->var);
      if (it == m.end()) return std::nullopt;
      return it->second;
    }
    case Op::Neg: {
      auto x = ev(0);
      if (!x) return std::nullopt;
      return -*x;
    }
    case Op::Not: {
      auto x = ev(0);
      if (!x) return std::nullopt;
      return Int(*x == 0);
    }
    case Op::And: {
      auto x = ev(0);
      if (!x) return std::nullopt;
      if (*x == 0) return Int(0);
      auto y = ev(1);
      if (!y) return std::nullopt;
      return Int(*y != 0);
    }
    case Op::Or: {
      auto x = ev(0);
      if (!x) return std::nullopt;
      if (*x != 0) return Int(1);
      auto y = ev(1);
      if (!y) return std::nullopt;
      return Int(*y != 0);
    }
    case Op::Ite: {
      auto c = ev(0);
      if (!c) return std::nullopt;
      return *c != 0 ? ev(1) : ev(2);
    }
    case Op::SqrtApprox: {
      auto x = ev(0);
      if (!x || *x < 0) return std::nullopt;
      return floorSqrt(*x);
    }
    default: break;
  }
  auto x = ev(0);
  auto y = ev(1);
  if (!x || !y) return std::nullopt;
  switch (f->op) {
    case Op::Add: return satAdd(*x, *y);
    case Op::Sub: return satAdd(*x, -*y);
    case Op::Mul: return satMul(*x, *y);
    case Op::Div:
      if (*y == 0) return std::nullopt;
      return truncDiv(*x, *y);
    case Op::Mod:
      if (*y == 0) return std::nullopt;
      return truncMod(*x, *y);
    case Op::Lt: return Int(*x < *y);
    case Op::Le: return Int(*x <= *y);
    case Op::Gt: return Int(*x > *y);
    case Op::Ge: return Int(*x >= *y);
    case Op::Eq: return Int(*x == *y);
    case Op::Ne: return Int(*x != *y);
    default: return std::nullopt;
  }
}

}  // namespace overfix::smt
