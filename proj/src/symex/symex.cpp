#include "overfix/symex/symex.hpp"

#include "overfix/frontend/builtins.hpp"
#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::symex {

using frontend::NodeKind;
using frontend::StubEffect;
using frontend::StubRange;
namespace smt = overfix::smt;

std::optional<SsaVar> PathState::lookup(const AstNode& decl) const {
  if (decl.isGlobal) {
    auto it = globals.find(decl.name);
    if (it == globals.end()) return std::nullopt;
    return it->second;
  }
  const auto& locals = frame().locals;
  auto it = locals.find(decl.slot);
  if (it == locals.end()) return std::nullopt;
  return it->second;
}

PathState::Checkpoint PathState::save() const {
  return {frames, globals, namedConstants, ssa.mark(), script.decls().size(), script.asserts().size(), reportsOnPath};
}

void PathState::restore(const Checkpoint& c) {
  frames = c.frames;
  globals = c.globals;
  namedConstants = c.namedConstants;
  ssa.reset(c.ssa);
  script.truncate(c.declCount, c.assertCount);
  reportsOnPath = c.reportsOnPath;
  terminated = false;
}

namespace {

bool isArithmetic(const AstNode& e) {
  if (e.kind == NodeKind::BinaryExpr) {
    return e.op == "+" || e.op == "-" || e.op == "*" || e.op == "/" || e.op == "%";
  }
  return e.kind == NodeKind::UnaryExpr && e.op == "-";
}

// Builds a binary term, folding when both sides are constants.
Formula arith(char op, const Formula& a, const Formula& b) {
  if (a->op == smt::Op::Const && b->op == smt::Op::Const) {
    Int x = a->value, y = b->value;
    switch (op) {
      case '+': return smt::constant(x + y);
      case '-': return smt::constant(x - y);
      case '*': return smt::constant(x * y);
      case '/':
        if (y != 0) return smt::constant(truncDiv(x, y));
        break;
      case '%':
        if (y != 0) return smt::constant(truncMod(x, y));
        break;
      default: break;
    }
  }
  switch (op) {
    case '+': return smt::add(a, b);
    case '-': return smt::sub(a, b);
    case '*': return smt::mul(a, b);
    case '/': return smt::div(a, b);
    case '%': return smt::mod(a, b);
    default: throw Error(std::string("unsupported arithmetic operator ") + op);
  }
}

Formula comparison(const std::string& op, Formula a, Formula b) {
  if (op == "<") return smt::lt(std::move(a), std::move(b));
  if (op == "<=") return smt::le(std::move(a), std::move(b));
  if (op == ">") return smt::gt(std::move(a), std::move(b));
  if (op == ">=") return smt::ge(std::move(a), std::move(b));
  if (op == "==") return smt::eq(std::move(a), std::move(b));
  return smt::ne(std::move(a), std::move(b));
}

bool isComparison(const std::string& op) {
  return op == "<" || op == "<=" || op == ">" || op == ">=" || op == "==" || op == "!=";
}

std::string flip(const std::string& op) {
  if (op == "<") return ">";
  if (op == "<=") return ">=";
  if (op == ">") return "<";
  if (op == ">=") return "<=";
  return op;
}

Formula boolConst(bool v) { return smt::ne(smt::constant(v ? 1 : 0), smt::constant(0)); }

}  // namespace

Interpreter::Interpreter(const frontend::SourceUnit& unit, AnalysisConfig config, smt::Solver& solver)
    : unit_(unit), config_(std::move(config)), solver_(solver) {}

std::string Interpreter::baseName(const PathState& s, const AstNode& decl) const {
  if (decl.isGlobal) return "G." + decl.name;
  return s.frame().prefix + decl.slot;
}

SsaVar Interpreter::bindFresh(PathState& s, const std::string& base, CType type) {
  SsaVar v = s.ssa.fresh(base, type);
  s.script.declare(v);
  return v;
}

void Interpreter::addTypeBounds(PathState& s, const SsaVar& v, CType type) {
  if (!frontend::isInteger(type)) return;
  auto b = config_.table.bounds(type);
  s.script.add(smt::ge(smt::var(v.name), smt::constant(b.minVal)));
  s.script.add(smt::le(smt::var(v.name), smt::constant(b.maxVal)));
}

PathState Interpreter::initialState(const cfg::Cfg& entry) {
  PathState s;
  s.frames.push_back({entry.functionName, 0, "", {}, {}, std::nullopt, nullptr});
  for (const auto& top : unit_.ast) {
    if (top->kind != NodeKind::VarDecl) continue;
    Formula init = top->child(0) ? evaluate(s, *top->child(0)) : smt::constant(0);
    SsaVar v = bindFresh(s, baseName(s, *top), top->declType);
    s.script.define(v.name, smt::eq(smt::var(v.name), init));
    s.globals[top->name] = v;
  }
  for (const auto& p : entry.function->children) {
    if (p->kind != NodeKind::VarDecl || !p->isParam) continue;
    SsaVar v = bindFresh(s, baseName(s, *p), p->declType);
    addTypeBounds(s, v, p->declType);
    s.frame().locals[p->slot] = v;
  }
  return s;
}

Formula Interpreter::stubValue(PathState& s, const AstNode& call) {
  if (call.name == "sqrt") {
    Formula arg = evaluate(s, *call.child(0));
    if (arg->op != smt::Op::Const) throw Error("sqrt of a non-constant argument is not supported");
    return smt::sqrtApprox(arg);
  }
  auto stub = frontend::lookupStub(call.name);
  if (!stub) throw UnknownExtern(call.name);
  if (stub->effect == StubEffect::HavocTarget) {
    applyStub(s, call);
  } else {
    for (const auto& a : call.children) {
      if (a->kind != NodeKind::UnaryExpr) evaluate(s, *a);
    }
  }
  if (stub->effect != StubEffect::FreshReturn && stub->effect != StubEffect::HavocTarget) return smt::constant(0);
  CType t = stub->returnType;
  SsaVar v = bindFresh(s, s.frame().prefix + "$" + call.name, t);
  if (config_.boundStubs && stub->range == StubRange::RandLike) {
    s.script.add(smt::ge(smt::var(v.name), smt::constant(0)));
    s.script.add(smt::le(smt::var(v.name), smt::constant(config_.table.bounds(t).maxVal)));
  } else {
    addTypeBounds(s, v, t);
  }
  return smt::var(v.name);
}

Formula Interpreter::evaluate(PathState& s, const AstNode& e) {
  switch (e.kind) {
    case NodeKind::IntLiteral: return smt::constant(e.value);
    case NodeKind::StringLiteral: return smt::constant(0);
    case NodeKind::Ident: {
      if (e.isNamedConstant) {
        auto v = config_.table.namedConstant(e.name);
        if (!v) throw Error("unknown named constant " + e.name);
        s.namedConstants.insert(e.name);
        return smt::constant(*v);
      }
      if (e.isBuiltinObject || e.decl == nullptr) return smt::constant(0);
      if (auto v = s.lookup(*e.decl)) return smt::var(v->name);
      SsaVar v = bindFresh(s, baseName(s, *e.decl), e.decl->declType);
      addTypeBounds(s, v, e.decl->declType);
      if (e.decl->isGlobal) {
        s.globals[e.decl->name] = v;
      } else {
        s.frame().locals[e.decl->slot] = v;
      }
      return smt::var(v.name);
    }
    case NodeKind::Cast: return evaluate(s, *e.child(0));
    case NodeKind::UnaryExpr: {
      if (e.op == "&") return smt::constant(0);
      Formula x = evaluate(s, *e.child(0));
      if (e.op == "-") return smt::neg(x);
      if (e.op == "!") return smt::asInt(smt::lnot(smt::truthy(x)));
      return x;
    }
    case NodeKind::BinaryExpr: {
      if (e.op == "&&" || e.op == "||" || isComparison(e.op)) return smt::asInt(condition(s, &e));
      Formula a = evaluate(s, *e.child(0));
      Formula b = evaluate(s, *e.child(1));
      return arith(e.op[0], a, b);
    }
    case NodeKind::Call: {
      if (e.decl != nullptr) {
        auto& results = s.frame().callResults;
        auto it = results.find(&e);
        if (it == results.end()) throw Error("call to " + e.name + " evaluated before its call node");
        return it->second;
      }
      return stubValue(s, e);
    }
    default: throw Error("cannot evaluate " + std::string(frontend::kindName(e.kind)));
  }
}

namespace {

// Floor and ceiling of a `sqrt(constant)` operand, or of its negation.
std::optional<std::pair<Int, Int>> realSqrt(const AstNode& e, const frontend::LimitsTable& table) {
  if (e.kind == NodeKind::UnaryExpr && e.op == "-") {
    auto inner = realSqrt(*e.child(0), table);
    if (!inner) return std::nullopt;
    return std::pair{-inner->second, -inner->first};
  }
  if (e.kind != NodeKind::Call || e.name != "sqrt" || e.decl != nullptr) return std::nullopt;
  const AstNode& arg = *e.child(0);
  Int m = 0;
  if (arg.kind == NodeKind::IntLiteral) {
    m = arg.value;
  } else if (arg.kind == NodeKind::Ident && arg.isNamedConstant) {
    auto v = table.namedConstant(arg.name);
    if (!v) return std::nullopt;
    m = *v;
  } else {
    return std::nullopt;
  }
  if (m < 0) return std::nullopt;
  Int k = floorSqrt(m);
  return std::pair{k, k * k == m ? k : k + 1};
}

}  // namespace

Formula Interpreter::condition(PathState& s, const AstNode* cond) {
  if (cond == nullptr) return boolConst(true);
  const AstNode& e = *cond;
  if (e.kind == NodeKind::BinaryExpr && e.op == "&&") {
    return smt::land(condition(s, e.child(0)), condition(s, e.child(1)));
  }
  if (e.kind == NodeKind::BinaryExpr && e.op == "||") {
    return smt::lor(condition(s, e.child(0)), condition(s, e.child(1)));
  }
  if (e.kind == NodeKind::UnaryExpr && e.op == "!") return smt::lnot(condition(s, e.child(0)));
  if (e.kind == NodeKind::BinaryExpr && isComparison(e.op)) {
    std::string op = e.op;
    const AstNode* intSide = e.child(0);
    auto real = realSqrt(*e.child(1), config_.table);
    if (!real) {
      real = realSqrt(*e.child(0), config_.table);
      intSide = e.child(1);
      op = flip(op);
    }
    if (real) {
      // Integer x against a real s with floor f and ceiling c.
      for (const auto& arg : (intSide == e.child(0) ? e.child(1) : e.child(0))->children) {
        evaluate(s, *arg);
      }
      Formula x = evaluate(s, *intSide);
      auto [f, c] = *real;
      if (op == ">") return smt::gt(x, smt::constant(f));
      if (op == ">=") return smt::ge(x, smt::constant(c));
      if (op == "<") return smt::lt(x, smt::constant(c));
      if (op == "<=") return smt::le(x, smt::constant(f));
      if (op == "==") return f == c ? smt::eq(x, smt::constant(f)) : boolConst(false);
      return f == c ? smt::ne(x, smt::constant(f)) : boolConst(true);
    }
    return comparison(e.op, evaluate(s, *e.child(0)), evaluate(s, *e.child(1)));
  }
  return smt::truthy(evaluate(s, e));
}

Operand Interpreter::operand(PathState& s, const AstNode& e) {
  Operand o;
  o.node = &e;
  o.formula = evaluate(s, e);
  if (o.formula->op == smt::Op::Const) o.constant = o.formula->value;
  o.text = trim(unit_.spanText(e.span));
  o.sideEffect = frontend::hasSideEffects(e);
  return o;
}

std::size_t Interpreter::notify(PathState& s, const AstNode& stmt, char op, Operand left, Operand right,
                                const SsaVar& target, CType lhsType, CType rhsType) {
  if (checkers_.empty()) return 0;
  std::vector<bool> decisions;
  std::vector<int> decisionLines;
  if (cursor_) {
    for (const auto& d : cursor_->decisions()) {
      decisions.push_back(d.taken);
      decisionLines.push_back(unit_.lines.lineOf(d.cfg->node(d.branch).span.begin));
    }
  }
  Formula value = arith(op, left.formula, right.formula);
  const AstNode* fn = unit_.functionAtLine(unit_.lineOf(stmt));
  CheckSite site{s,
                 unit_,
                 stmt,
                 op,
                 std::move(left),
                 std::move(right),
                 value,
                 target,
                 lhsType,
                 rhsType,
                 fn ? fn->name : s.frame().function,
                 unit_.lineOf(stmt),
                 std::move(decisions),
                 std::move(decisionLines)};
  std::size_t n = 0;
  for (Checker* c : checkers_) n += c->check(site, solver_);
  s.reportsOnPath += n;
  totalReports_ += n;
  return n;
}

bool Interpreter::fits(CType from, CType to) const {
  if (!frontend::isInteger(from) || !frontend::isInteger(to)) return true;
  auto a = config_.table.bounds(from);
  auto b = config_.table.bounds(to);
  return b.minVal <= a.minVal && a.maxVal <= b.maxVal;
}

void Interpreter::assign(PathState& s, const AstNode& stmt, const AstNode& targetDecl, CType lhsType,
                         const AstNode* rhs, const std::string& compoundOp) {
  Formula value;
  std::optional<Operand> left, right;
  char op = 0;
  CType rhsType = lhsType;
  bool arithmetic = false;
  if (compoundOp.empty()) {
    rhsType = rhs->resolvedType;
    arithmetic = isArithmetic(*rhs);
    if (rhs->kind == NodeKind::BinaryExpr && (rhs->op == "+" || rhs->op == "*")) {
      op = rhs->op[0];
      left = operand(s, *rhs->child(0));
      right = operand(s, *rhs->child(1));
      value = arith(op, left->formula, right->formula);
    } else {
      value = evaluate(s, *rhs);
    }
  } else {
    op = compoundOp[0];
    arithmetic = true;
    left = operand(s, *stmt.child(0));
    if (rhs) {
      right = operand(s, *rhs);
      rhsType = frontend::commonType(frontend::promote(lhsType), rhs->resolvedType);
    } else {
      Operand one;
      one.formula = smt::constant(1);
      one.constant = 1;
      one.text = "1";
      right = one;
      rhsType = frontend::promote(lhsType);
    }
    value = arith(op, left->formula, right->formula);
  }
  SsaVar target = s.ssa.fresh(baseName(s, targetDecl), lhsType);
  if (left && right && (op == '+' || op == '*')) notify(s, stmt, op, *left, *right, target, lhsType, rhsType);
  s.script.declare(target);
  Formula t = smt::var(target.name);
  bool wraps = false;
  if (config_.assumeInRange && frontend::isInteger(lhsType)) {
    auto b = config_.table.bounds(lhsType);
    if (value->op == smt::Op::Const) {
      wraps = value->value < b.minVal || value->value > b.maxVal;
    } else {
      wraps = arithmetic || !fits(rhsType, lhsType);
    }
  }
  if (wraps) {
    // The stored value equals the mathematical one only when it fits;
    // otherwise it is some value of the type.
    auto b = config_.table.bounds(lhsType);
    s.script.define(target.name, smt::lor(smt::lor(smt::lt(value, smt::constant(b.minVal)),
                                                   smt::gt(value, smt::constant(b.maxVal))),
                                          smt::eq(t, value)));
    addTypeBounds(s, target, lhsType);
  } else {
    s.script.define(target.name, smt::eq(t, value));
  }
  if (targetDecl.isGlobal) {
    s.globals[targetDecl.name] = target;
  } else {
    s.frame().locals[targetDecl.slot] = target;
  }
}

void Interpreter::applyStub(PathState& s, const AstNode& call) {
  if (call.name == "sqrt") return;
  auto stub = frontend::lookupStub(call.name);
  if (!stub) throw UnknownExtern(call.name);
  switch (stub->effect) {
    case StubEffect::HavocTarget:
      for (const auto& a : call.children) {
        if (a->kind != NodeKind::UnaryExpr || a->op != "&") continue;
        const AstNode& id = *a->child(0);
        if (id.decl == nullptr) continue;
        CType t = id.decl->declType;
        SsaVar v = bindFresh(s, baseName(s, *id.decl), t);
        addTypeBounds(s, v, config_.boundStubs ? t : CType::Int64);
        if (id.decl->isGlobal) {
          s.globals[id.decl->name] = v;
        } else {
          s.frame().locals[id.decl->slot] = v;
        }
      }
      break;
    case StubEffect::Terminate: s.terminated = true; break;
    case StubEffect::Handler: {
      if (call.children.empty()) break;
      Formula die = evaluate(s, *call.children.back());
      if (die->op == smt::Op::Const && die->value != 0) s.terminated = true;
      break;
    }
    case StubEffect::FreshReturn:
    case StubEffect::Noop:
      for (const auto& a : call.children) {
        if (a->kind != NodeKind::UnaryExpr) evaluate(s, *a);
      }
      break;
  }
}

void Interpreter::interpretStatement(PathState& s, const cfg::CfgNode& node) {
  const AstNode& st = *node.ast;
  switch (st.kind) {
    case NodeKind::VarDecl:
      if (st.child(0)) {
        assign(s, st, st, st.declType, st.child(0), "");
      } else {
        // Bound lazily on first read, so a re-entered declaration starts over.
        s.frame().locals.erase(st.slot);
      }
      break;
    case NodeKind::Assign: {
      const AstNode& decl = *st.child(0)->decl;
      if (st.op == "=") {
        assign(s, st, decl, decl.declType, st.child(1), "");
      } else if (st.op == "++" || st.op == "--") {
        assign(s, st, decl, decl.declType, nullptr, st.op.substr(0, 1));
      } else {
        assign(s, st, decl, decl.declType, st.child(1), st.op.substr(0, 1));
      }
      break;
    }
    case NodeKind::Call: applyStub(s, st); break;
    default: throw Error("unexpected statement node " + std::string(frontend::kindName(st.kind)));
  }
}

Feasibility Interpreter::validateBranch(PathState& s, const cfg::CfgNode& branch, bool taken) {
  Formula f = condition(s, branch.ast);
  Formula g = taken ? f : smt::lnot(f);
  std::set<std::string> vars;
  smt::collectVars(g, vars);
  if (vars.empty()) {
    auto v = smt::evaluate(g, {});
    return v && *v != 0 ? Feasibility::Feasible : Feasibility::Infeasible;
  }
  s.script.add(g, smt::Tag::Path);
  ++result_.stats.branchQueries;
  smt::SolveResult r;
  try {
    r = solver_.check(s.script.slice(vars));
  } catch (const Error& e) {
    result_.warnings.push_back(std::string("line ") + std::to_string(unit_.lines.lineOf(branch.span.begin)) +
                               ": solver error treated as feasible: " + e.what());
    return Feasibility::Feasible;
  }
  Feasibility verdict = r.status == smt::Status::Unsat ? Feasibility::Infeasible : Feasibility::Feasible;
  if (onBranch) onBranch(s, vars, verdict);
  if (verdict == Feasibility::Infeasible) return verdict;
  if (r.status == smt::Status::Unknown) {
    ++result_.stats.unknown;
    result_.warnings.push_back("line " + std::to_string(unit_.lines.lineOf(branch.span.begin)) +
                               ": unknown branch verdict treated as feasible (" + r.reason + ")");
  }
  return Feasibility::Feasible;
}

void Interpreter::enterCall(PathState& s, const AstNode& call, const cfg::Cfg& callee, std::uint32_t activation) {
  std::vector<Formula> args;
  for (const auto& a : call.children) args.push_back(evaluate(s, *a));
  SymFrame f;
  f.function = callee.functionName;
  f.activation = activation;
  f.prefix = callee.functionName + "@" + std::to_string(activation) + ".";
  f.callSite = &call;
  s.frames.push_back(std::move(f));
  std::size_t i = 0;
  for (const auto& p : callee.function->children) {
    if (p->kind != NodeKind::VarDecl || !p->isParam) continue;
    SsaVar v = bindFresh(s, baseName(s, *p), p->declType);
    s.script.define(v.name, smt::eq(smt::var(v.name), args.at(i++)));
    s.frame().locals[p->slot] = v;
  }
}

void Interpreter::havocCall(PathState& s, const AstNode& call) {
  for (const auto& a : call.children) evaluate(s, *a);
  CType t = call.decl ? call.decl->declType : CType::Int;
  if (!frontend::isInteger(t)) {
    s.frame().callResults[&call] = smt::constant(0);
    return;
  }
  SsaVar v = bindFresh(s, s.frame().prefix + "$" + call.name, t);
  addTypeBounds(s, v, t);
  s.frame().callResults[&call] = smt::var(v.name);
  result_.warnings.push_back("line " + std::to_string(unit_.lineOf(call)) + ": call depth bound reached at " +
                             call.name + ", result havocked");
}

void Interpreter::interpretReturn(PathState& s, const AstNode& ret) {
  if (!ret.child(0)) return;
  Formula value = evaluate(s, *ret.child(0));
  if (s.frames.size() == 1) return;
  const AstNode* fn = unit_.findFunction(s.frame().function);
  CType t = fn ? fn->declType : CType::Int;
  SsaVar v = bindFresh(s, s.frame().prefix + "$ret", t);
  s.script.define(v.name, smt::eq(smt::var(v.name), value));
  s.frame().returned = smt::var(v.name);
}

void Interpreter::leaveCall(PathState& s) {
  SymFrame done = std::move(s.frames.back());
  s.frames.pop_back();
  Formula result = smt::constant(0);
  if (done.returned) {
    result = *done.returned;
  } else if (done.callSite && done.callSite->decl && frontend::isInteger(done.callSite->decl->declType)) {
    CType t = done.callSite->decl->declType;
    SsaVar v = bindFresh(s, done.prefix + "$ret", t);
    addTypeBounds(s, v, t);
    result = smt::var(v.name);
  }
  if (done.callSite) s.frame().callResults[done.callSite] = result;
}

AnalysisResult Interpreter::run() {
  result_ = {};
  totalReports_ = 0;
  program_ = cfg::buildProgram(unit_);
  std::vector<std::string> entries = config_.entries.empty() ? program_.entryPoints() : config_.entries;
  bool stop = false;
  for (const auto& name : entries) {
    if (stop) break;
    const cfg::Cfg* entry = program_.find(name);
    if (!entry) throw Error("no function named " + name);
    cfg::PathCursor cur(program_, *entry, config_.limits);
    cursor_ = &cur;
    PathState st = initialState(*entry);
    std::vector<PathState::Checkpoint> snaps;
    auto backtrack = [&]() {
      if (!cfg::nextPath(cur, cfg::Verdict::Infeasible)) return false;
      std::size_t idx = cur.decisions().back().checkpoint;
      st.restore(snaps[idx]);
      snaps.resize(idx + 1);
      return true;
    };
    for (;;) {
      if (config_.maxFaults && totalReports_ >= config_.maxFaults) {
        stop = true;
        result_.stats.truncated = true;
        break;
      }
      if (config_.firstNPerPath && st.reportsOnPath >= config_.firstNPerPath && !cur.finished()) cur.abandon();
      if (cur.finished()) {
        if (onPathEnd) onPathEnd(st, cur.labels());
        ++result_.stats.paths;
        if (result_.stats.paths >= config_.maxPaths) {
          result_.stats.truncated = true;
          result_.warnings.push_back("path limit reached in " + name);
          break;
        }
        if (!backtrack()) break;
        continue;
      }
      const cfg::CfgNode& node = cur.current();
      switch (node.kind) {
        case cfg::CfgNodeKind::Entry:
        case cfg::CfgNodeKind::Join: cur.step(); break;
        case cfg::CfgNodeKind::Stmt:
          interpretStatement(st, node);
          if (st.terminated) {
            cur.abandon();
          } else {
            cur.step();
          }
          break;
        case cfg::CfgNodeKind::Return:
          interpretReturn(st, *node.ast);
          cur.step();
          break;
        case cfg::CfgNodeKind::Call: {
          const cfg::Cfg* callee = program_.find(node.ast->name);
          if (callee && cur.canEnterCall()) {
            cur.enterCall(*callee);
            enterCall(st, *node.ast, *callee, cur.frame().activation);
          } else {
            havocCall(st, *node.ast);
            cur.step();
          }
          break;
        }
        case cfg::CfgNodeKind::Exit:
          if (cur.depth() > 1) leaveCall(st);
          cur.step();
          break;
        case cfg::CfgNodeKind::Branch: {
          if (!cur.hasPendingDecision()) {
            std::size_t idx = snaps.size();
            snaps.push_back(st.save());
            cur.decide(idx);
          }
          if (validateBranch(st, node, cur.pendingSide()) == Feasibility::Feasible) {
            cur.follow();
          } else {
            ++result_.stats.infeasible;
            if (!backtrack()) goto exhausted;
          }
          break;
        }
      }
    }
  exhausted:
    result_.stats.traversed += cur.traversed();
    cursor_ = nullptr;
  }
  return result_;
}

}  // namespace overfix::symex
