#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "overfix/support/int128.hpp"

namespace overfix::smt {

enum class Op {
  Const,
  Var,
  Add,
  Sub,
  Mul,
  Div,  // C truncating division
  Mod,  // C remainder (sign of the dividend)
  Neg,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,
  Ne,
  And,
  Or,
  Not,
  Ite,
  SqrtApprox,  // floor square root; only over constants, folded on construction
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Op op = Op::Const;
  Int value = 0;
  std::string var;
  std::vector<Formula> args;
};

bool isBoolOp(Op op);

Formula constant(Int v);
Formula var(std::string name);
Formula add(Formula a, Formula b);
Formula sub(Formula a, Formula b);
Formula mul(Formula a, Formula b);
Formula div(Formula a, Formula b);
Formula mod(Formula a, Formula b);
Formula neg(Formula a);
Formula lt(Formula a, Formula b);
Formula le(Formula a, Formula b);
Formula gt(Formula a, Formula b);
Formula ge(Formula a, Formula b);
Formula eq(Formula a, Formula b);
Formula ne(Formula a, Formula b);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula lnot(Formula a);
Formula ite(Formula c, Formula t, Formula e);
/// Folds to the constant floorSqrt(n); throws for a non-constant argument.
Formula sqrtApprox(Formula n);
Formula binary(Op op, Formula a, Formula b);

/// C truth value of an integer term (`e != 0`); boolean formulas pass through.
Formula truthy(Formula f);
/// Integer value of a boolean formula (`ite(f, 1, 0)`); integer terms pass through.
Formula asInt(Formula f);

/// Canonical SMT-LIB v2 term. Div/Mod expand to `ite` over `div` so the
/// solver sees truncating semantics.
std::string toSmt(const Formula& f);

void collectVars(const Formula& f, std::set<std::string>& out);

using Model = std::map<std::string, Int, std::less<>>;

/// Concrete evaluation. Booleans are 1/0. Returns nullopt when a variable is
/// unbound or a division by zero is reached.
std::optional<Int> evaluate(const Formula& f, const Model& m);

}  // namespace overfix::smt
