#include "overfix/repair/repair.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::repair {

using frontend::NodeKind;
using frontend::SourceUnit;

std::string_view operandKindName(OperandKind k) {
  switch (k) {
    case OperandKind::Constant: return "constant";
    case OperandKind::Variable: return "variable";
    case OperandKind::SideEffect: return "sideEffect";
  }
  return "?";
}

std::string_view handlerStyleName(HandlerStyle h) { return h == HandlerStyle::LogOnly ? "logOnly" : "logOrDie"; }

std::optional<HandlerStyle> handlerStyleFromName(std::string_view name) {
  if (name == "logOnly" || name == "log") return HandlerStyle::LogOnly;
  if (name == "logOrDie" || name == "die") return HandlerStyle::LogOrDie;
  return std::nullopt;
}

std::string_view correctnessName(Correctness c) {
  switch (c) {
    case Correctness::Correct: return "correct";
    case Correctness::FaultPersists: return "faultPersists";
    case Correctness::NewFaultIntroduced: return "newFaultIntroduced";
  }
  return "?";
}

namespace {

std::optional<Int> constValue(const AstNode& e, const frontend::LimitsTable& table) {
  switch (e.kind) {
    case NodeKind::IntLiteral: return e.value;
    case NodeKind::Ident:
      if (e.isNamedConstant) return table.namedConstant(e.name);
      return std::nullopt;
    case NodeKind::Cast: return constValue(*e.child(0), table);
    case NodeKind::UnaryExpr: {
      auto v = constValue(*e.child(0), table);
      if (!v) return std::nullopt;
      if (e.op == "-") return -*v;
      if (e.op == "+") return *v;
      return std::nullopt;
    }
    case NodeKind::BinaryExpr: {
      auto a = constValue(*e.child(0), table);
      auto b = constValue(*e.child(1), table);
      if (!a || !b) return std::nullopt;
      if (e.op == "+") return *a + *b;
      if (e.op == "-") return *a - *b;
      if (e.op == "*") return satMul(*a, *b);
      if (e.op == "/" && *b != 0) return truncDiv(*a, *b);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

OperandKind kindOf(const AstNode* e, const frontend::LimitsTable& table) {
  if (!e) return OperandKind::Constant;
  if (constValue(*e, table)) return OperandKind::Constant;
  if (frontend::hasSideEffects(*e)) return OperandKind::SideEffect;
  return OperandKind::Variable;
}

/// The operand nodes of a faulty statement; rhs is null for `x++`.
struct Operands {
  char op = 0;
  const AstNode* lhs = nullptr;
  const AstNode* rhs = nullptr;
  const AstNode* valueExpr = nullptr;  // the BinaryExpr, when there is one
  StatementFacts::Form form = StatementFacts::Form::Assignment;
  CType resultType = CType::Int;
};

Operands operandsOf(const AstNode& stmt) {
  Operands o;
  const AstNode* value = nullptr;
  if (stmt.kind == NodeKind::VarDecl) {
    o.form = StatementFacts::Form::Declaration;
    o.resultType = stmt.declType;
    value = stmt.child(0);
  } else if (stmt.kind == NodeKind::Assign) {
    o.resultType = stmt.child(0)->resolvedType;
    if (stmt.op == "=") {
      value = stmt.child(1);
    } else if (stmt.op == "++") {
      o.form = StatementFacts::Form::Increment;
      o.op = '+';
      o.lhs = stmt.child(0);
      return o;
    } else {
      o.form = StatementFacts::Form::Compound;
      o.op = stmt.op[0];
      o.lhs = stmt.child(0);
      o.rhs = stmt.child(1);
      return o;
    }
  } else {
    throw NoRepairProposed("not an assignment");
  }
  if (!value || value->kind != NodeKind::BinaryExpr || value->op.size() != 1) {
    throw NoRepairProposed("no binary operator on the right-hand side");
  }
  o.op = value->op[0];
  o.lhs = value->child(0);
  o.rhs = value->child(1);
  o.valueExpr = value;
  return o;
}

bool oneConst(const StatementFacts& f) {
  return (f.lhsKind == OperandKind::Constant) != (f.rhsKind == OperandKind::Constant);
}
std::optional<Int> theConst(const StatementFacts& f) {
  if (!oneConst(f)) return std::nullopt;
  return f.lhsKind == OperandKind::Constant ? f.lhsConst : f.rhsConst;
}

bool findParent(const AstNode& n, const AstNode* target, const AstNode*& parent) {
  for (const auto& c : n.children) {
    if (!c) continue;
    if (c.get() == target) {
      parent = &n;
      return true;
    }
    if (findParent(*c, target, parent)) return true;
  }
  return false;
}

const AstNode* parentOf(const SourceUnit& unit, const AstNode* target) {
  const AstNode* parent = nullptr;
  for (const auto& top : unit.ast) {
    if (findParent(*top, target, parent)) return parent;
  }
  return nullptr;
}

std::string lineIndent(const SourceUnit& unit, std::uint32_t offset) {
  std::uint32_t start = unit.lines.lineStart(unit.lines.lineOf(offset));
  std::string ind;
  for (std::uint32_t i = start; i < unit.text.size() && (unit.text[i] == ' ' || unit.text[i] == '\t'); ++i) {
    ind += unit.text[i];
  }
  return ind;
}

bool isSimple(const AstNode& e) {
  return e.kind == NodeKind::Ident || e.kind == NodeKind::IntLiteral;
}

std::string intText(Int v) { return toString(v); }

Formula arith(char op, const Formula& a, const Formula& b) { return op == '+' ? smt::add(a, b) : smt::mul(a, b); }

smt::SmtScript baseSystem(const Capture& c) {
  const FaultReport& r = *c.report;
  smt::SmtScript s = c.detectionScript.without(smt::Tag::Checker);
  s.declare(c.target);
  s.define(c.target.name, smt::eq(smt::var(c.target.name), arith(r.op, r.leftValue, r.rightValue)),
           smt::Tag::Repair);
  return s;
}

Formula violation(const FaultReport& r) {
  Formula t = smt::var(r.targetVar.name);
  Formula v = smt::gt(t, smt::constant(r.bounds.maxVal));
  if (checker::canUnderflow(r.shape)) v = smt::lor(v, smt::lt(t, smt::constant(r.bounds.minVal)));
  return v;
}

}  // namespace

StatementFacts factsOf(const AstNode& stmt, const frontend::LimitsTable& table) {
  Operands o = operandsOf(stmt);
  StatementFacts f;
  f.op = o.op;
  f.form = o.form;
  f.resultType = o.resultType;
  f.lhsKind = kindOf(o.lhs, table);
  f.rhsKind = kindOf(o.rhs, table);
  if (o.lhs) f.lhsConst = constValue(*o.lhs, table);
  f.rhsConst = o.rhs ? constValue(*o.rhs, table) : std::optional<Int>(1);
  f.operandsTextuallyEqual = o.lhs && o.rhs && frontend::printExpr(*o.lhs) == frontend::printExpr(*o.rhs);
  return f;
}

const std::vector<PatternCriterion>& criteria() {
  using F = StatementFacts;
  using K = OperandKind;
  static const std::vector<PatternCriterion> table = {
      {"C1", "operator is +", [](const F& f) { return f.op == '+'; }},
      {"C2", "left operand is a variable", [](const F& f) { return f.lhsKind == K::Variable; }},
      {"C3", "left operand is a constant", [](const F& f) { return f.lhsKind == K::Constant; }},
      {"C4", "left operand has side effects", [](const F& f) { return f.lhsKind == K::SideEffect; }},
      {"C5", "right operand is a variable", [](const F& f) { return f.rhsKind == K::Variable; }},
      {"C6", "right operand is a constant", [](const F& f) { return f.rhsKind == K::Constant; }},
      {"C7", "right operand has side effects", [](const F& f) { return f.rhsKind == K::SideEffect; }},
      {"C8", "constant operand is positive", [](const F& f) { return theConst(f).value_or(0) > 0; }},
      {"C9", "constant operand is negative", [](const F& f) { return theConst(f).value_or(0) < 0; }},
      {"C10", "result type is char", [](const F& f) { return f.resultType == CType::Char; }},
      {"C11", "result type is short", [](const F& f) { return f.resultType == CType::Short; }},
      {"C12", "result type is int", [](const F& f) { return f.resultType == CType::Int; }},
      {"C13", "result type is unsigned int", [](const F& f) { return f.resultType == CType::UInt; }},
      {"C14", "result type is int64_t", [](const F& f) { return f.resultType == CType::Int64; }},
      {"C15", "operands are textually equal and free of side effects",
       [](const F& f) {
         return f.operandsTextuallyEqual && f.lhsKind == K::Variable && f.rhsKind == K::Variable;
       }},
      {"C16", "operands may hold different values",
       [](const F& f) {
         return !f.operandsTextuallyEqual || f.lhsKind == K::SideEffect || f.rhsKind == K::SideEffect;
       }},
      {"C17", "exactly one operand is constant", [](const F& f) { return oneConst(f); }},
      {"C18", "no operand is constant",
       [](const F& f) { return f.lhsKind != K::Constant && f.rhsKind != K::Constant; }},
      {"C19", "operator is *", [](const F& f) { return f.op == '*'; }},
      {"C20", "statement is a declaration", [](const F& f) { return f.form == F::Form::Declaration; }},
      {"C21", "statement is a compound assignment or increment",
       [](const F& f) { return f.form == F::Form::Compound || f.form == F::Form::Increment; }},
      {"C22", "statement is a plain assignment", [](const F& f) { return f.form == F::Form::Assignment; }},
      {"C23", "result type is signed", [](const F& f) { return frontend::isSigned(f.resultType); }},
      {"C24", "result type is unsigned", [](const F& f) { return !frontend::isSigned(f.resultType); }},
  };
  return table;
}

const std::vector<RepairPattern>& patternCatalog() {
  static const std::vector<RepairPattern> catalog = [] {
    struct Family {
      Shape shape;
      std::vector<std::string> criteria;
    };
    const std::vector<Family> families = {
        {Shape::MulEqual, {"C19", "C15", "C18"}},
        {Shape::AddConst, {"C1", "C17", "C8"}},
        {Shape::MulNegConst, {"C19", "C17", "C9"}},
        {Shape::GenericAdd, {"C1", "C16"}},
        {Shape::GenericMul, {"C19", "C16"}},
    };
    std::vector<RepairPattern> out;
    for (HandlerStyle h : {HandlerStyle::LogOnly, HandlerStyle::LogOrDie}) {
      for (const auto& f : families) {
        out.push_back({std::string(checker::shapeName(f.shape)) + "." + std::string(handlerStyleName(h)), f.shape, h,
                       f.criteria});
      }
    }
    return out;
  }();
  return catalog;
}

const RepairPattern* findPattern(std::string_view id) {
  for (const auto& p : patternCatalog()) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

IntBounds determineBounds(const frontend::LimitsTable& table, const FaultReport& report) {
  std::string typeMax(frontend::maxConstantName(report.bounds.type));
  std::optional<std::string> chosen;
  for (const auto& name : report.namedConstants) {
    if (name.size() < 4 || name.compare(name.size() - 4, 4, "_MAX") != 0) continue;
    auto t = frontend::namedConstantType(name);
    if (!t) continue;
    if (std::string(frontend::maxConstantName(*t)) == typeMax) {
      chosen = name;
      break;
    }
    if (!chosen) chosen = name;
  }
  if (chosen) return table.bounds(*frontend::namedConstantType(*chosen));
  return table.bounds(report.bounds.type);
}

Capture captureSystem(const FaultReport& report) {
  return {report.statement, report.detectionScript, report.checkerId, report.targetVar, report.dependentVars, &report};
}

std::vector<SsaVar> selectConstraintVars(const Capture& capture) {
  std::vector<SsaVar> out{capture.target};
  for (const auto& v : capture.report->operandVars) out.push_back(v);
  return out;
}

Reconstrained reconstrainAndCheck(const Capture& capture, const IntBounds& bounds, smt::Solver& solver) {
  const FaultReport& r = *capture.report;
  smt::SmtScript base = baseSystem(capture);
  Formula t = smt::var(capture.target.name);

  if (r.shape == Shape::MulEqual && !r.operandVars.empty()) {
    const SsaVar& b = r.operandVars.front();
    Int k = floorSqrt(bounds.maxVal);
    smt::SmtScript q = base;
    q.add(smt::le(smt::var(b.name), smt::constant(k)), smt::Tag::Repair);
    q.add(smt::ge(smt::var(b.name), smt::constant(-k)), smt::Tag::Repair);
    smt::SmtScript feasible = q;
    q.add(violation(r), smt::Tag::Checker);
    auto v = solver.check(q);
    if (v.status == smt::Status::Unsat && solver.check(feasible).status != smt::Status::Unsat) {
      return SafeInterval{b, -k, k};
    }
    return StillOverflows{v.model};
  }

  smt::SmtScript negated = base;
  negated.add(smt::le(t, smt::constant(bounds.maxVal)), smt::Tag::Repair);
  negated.add(smt::ge(t, smt::constant(bounds.minVal)), smt::Tag::Repair);
  auto feasible = solver.check(negated);
  if (feasible.status == smt::Status::Unsat) {
    auto w = solver.check(base);
    return StillOverflows{w.model};
  }
  smt::SmtScript q = negated;
  q.add(violation(r), smt::Tag::Checker);
  auto v = solver.check(q);
  if (v.status != smt::Status::Unsat) return StillOverflows{v.model};
  return SafeInterval{capture.target, bounds.minVal, bounds.maxVal};
}

FaultFamily classifyFault(const Capture& capture) {
  if (capture.checkerId.empty()) throw Error("fault report carries no checker id");
  if (capture.checkerId != checker::kOverflowCheckerId) throw NoPatternsApplicable(capture.checkerId);
  return FaultFamily::IntegerOverflow;
}

std::vector<RankedPattern> selectPattern(const StatementFacts& facts, HandlerStyle handler) {
  if (facts.op != '+' && facts.op != '*') {
    throw NoRepairProposed(std::string("operator ") + facts.op + " is outside the repair families");
  }
  std::map<std::string, bool> holds;
  for (const auto& c : criteria()) holds[c.id] = c.holds(facts);
  // Key: every required criterion met, then number met.
  std::vector<std::pair<std::pair<bool, std::size_t>, RankedPattern>> ranked;
  for (const auto& p : patternCatalog()) {
    if (p.handler != handler) continue;
    RankedPattern rp{&p, {}};
    for (const auto& id : p.requiredCriteria) {
      if (holds[id]) rp.criteriaMatched.push_back(id);
    }
    std::size_t n = rp.criteriaMatched.size();
    if (n >= 2) ranked.push_back({{n == p.requiredCriteria.size(), n}, std::move(rp)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (ranked.empty()) throw NoRepairProposed("no repair pattern matches two criteria");
  std::vector<RankedPattern> out;
  for (auto& [n, rp] : ranked) out.push_back(std::move(rp));
  return out;
}

Validation validateNewSystem(const Capture& capture, const Formula& guard, smt::Solver& solver) {
  const FaultReport& r = *capture.report;
  smt::SmtScript guarded = baseSystem(capture);
  guarded.add(smt::lnot(guard), smt::Tag::Repair);

  smt::SmtScript q = guarded;
  q.add(violation(r), smt::Tag::Checker);
  auto v = solver.check(q);
  Validation out;
  if (v.status == smt::Status::Sat) {
    out.details = "violation survives the guard";
    out.witness = v.model;
    return out;
  }
  if (v.status == smt::Status::Unknown) {
    out.details = "violation query unknown: " + v.reason;
    return out;
  }
  Formula t = smt::var(r.targetVar.name);
  smt::SmtScript inRange = guarded;
  inRange.add(smt::le(t, smt::constant(r.bounds.maxVal)), smt::Tag::Repair);
  inRange.add(smt::ge(t, smt::constant(r.bounds.minVal)), smt::Tag::Repair);
  auto s = solver.check(inRange);
  if (s.status == smt::Status::Unsat) {
    out.details = "guard blocks every input of the path";
    return out;
  }
  if (s.status == smt::Status::Unknown) {
    out.details = "guarded path query unknown: " + s.reason;
    return out;
  }
  out.valid = true;
  out.details = "no violation under the guard; guarded path satisfiable";
  return out;
}

Formula guardFormula(Shape family, const Formula& x, const Formula& y, std::optional<Int> xc, std::optional<Int> yc,
                     const IntBounds& b) {
  using namespace smt;
  Formula zero = constant(0);
  Formula mx = constant(b.maxVal);
  Formula mn = constant(b.minVal);
  // The variable operand and the constant, for the one-constant families.
  const Formula& s = xc && !yc ? y : x;
  Int c = xc && !yc ? *xc : yc.value_or(0);
  switch (family) {
    case Shape::AddConst: return land(gt(s, zero), gt(s, constant(b.maxVal - c)));
    case Shape::MulNegConst:
      return lor(land(gt(s, zero), lt(mul(s, constant(c)), mn)), land(lt(s, zero), gt(mul(s, constant(c)), mx)));
    case Shape::MulEqual: {
      Int k = floorSqrt(b.maxVal);
      Int ceil = k * k == b.maxVal ? k : k + 1;
      return lor(land(gt(x, zero), ge(x, constant(ceil))), land(lt(x, zero), lt(x, constant(-k))));
    }
    case Shape::GenericAdd:
      return lor(land(gt(y, zero), gt(x, sub(mx, y))), land(lt(y, zero), lt(x, sub(mn, y))));
    case Shape::GenericMul: {
      Formula p = mul(x, y);
      return lor(lor(land(land(gt(x, zero), gt(y, zero)), gt(p, mx)), land(land(gt(x, zero), lt(y, zero)), lt(p, mn))),
                 lor(land(land(lt(x, zero), gt(y, zero)), lt(p, mn)), land(land(lt(x, zero), lt(y, zero)), gt(p, mx))));
    }
  }
  throw Error("unknown repair family");
}

RepairCandidate renderRepair(const RepairPattern& pattern, const SourceUnit& unit, const FaultReport& report,
                             const IntBounds& bounds, const RenderOptions& options) {
  const AstNode* stmt = unit.statementAt(report.span.begin);
  if (!stmt || stmt->span != report.span) throw NoRepairProposed("statement not found at the reported span");
  Operands ops = operandsOf(*stmt);
  StatementFacts facts = factsOf(*stmt);
  const AstNode* parent = parentOf(unit, stmt);
  if (!parent) throw NoRepairProposed("statement has no enclosing function");
  bool inBlock = parent->kind == NodeKind::Block;
  if (!inBlock) {
    bool isBody = (parent->kind == NodeKind::For && parent->child(3) == stmt) ||
                  (parent->kind == NodeKind::While && parent->child(1) == stmt) ||
                  (parent->kind == NodeKind::If && parent->child(0) != stmt);
    if (!isBody) throw NoRepairProposed("statement is part of a loop header");
  }

  bool lc = facts.lhsKind == OperandKind::Constant;
  bool rc = facts.rhsKind == OperandKind::Constant;
  switch (pattern.family) {
    case Shape::AddConst:
      if (facts.op != '+' || lc == rc) throw NoRepairProposed(pattern.id + " needs one constant addend");
      break;
    case Shape::MulNegConst:
      if (facts.op != '*' || lc == rc) throw NoRepairProposed(pattern.id + " needs one constant factor");
      break;
    case Shape::MulEqual:
      if (facts.op != '*' || !criteria()[14].holds(facts)) throw NoRepairProposed(pattern.id + " needs equal factors");
      break;
    case Shape::GenericAdd:
      if (facts.op != '+') throw NoRepairProposed(pattern.id + " needs an addition");
      break;
    case Shape::GenericMul:
      if (facts.op != '*') throw NoRepairProposed(pattern.id + " needs a multiplication");
      break;
  }

  std::string ind = lineIndent(unit, stmt->span.begin);
  std::vector<std::string> pre;
  std::map<const AstNode*, std::string> hoisted;
  int k = 0;
  for (const AstNode* o : {ops.lhs, ops.rhs}) {
    if (!o || !frontend::hasSideEffects(*o) || hoisted.count(o)) continue;
    if (!frontend::isInteger(o->resolvedType)) throw NoRepairProposed("side-effect operand is not an integer");
    std::string name = "ovf_tmp" + std::to_string(report.line) + (k++ ? "b" : "");
    pre.push_back(std::string(frontend::typeName(o->resolvedType)) + " " + name + " = " +
                  trim(unit.spanText(o->span)) + ";");
    hoisted[o] = name;
  }

  auto text = [&](const AstNode* o, std::optional<Int> c) -> std::string {
    if (!o) return "1";
    if (auto it = hoisted.find(o); it != hoisted.end()) return it->second;
    if (isSimple(*o)) return trim(unit.spanText(o->span));
    if (o->kind == NodeKind::UnaryExpr && o->op == "-" && isSimple(*o->child(0)) && c) return intText(*c);
    return "(" + trim(unit.spanText(o->span)) + ")";
  };
  std::string x = text(ops.lhs, facts.lhsConst);
  std::string y = text(ops.rhs, facts.rhsConst);
  const std::string& maxN = bounds.maxName;
  const std::string& minN = bounds.minName;

  std::string guard;
  bool usesSqrt = false;
  switch (pattern.family) {
    case Shape::AddConst: {
      const std::string& s = lc ? y : x;
      const std::string& c = lc ? x : y;
      guard = "(" + s + " > 0 && " + s + " > (" + maxN + " - " + c + "))";
      break;
    }
    case Shape::MulNegConst: {
      const std::string& s = lc ? y : x;
      const std::string& c = lc ? x : y;
      Int cv = lc ? *facts.lhsConst : *facts.rhsConst;
      std::string under = "(" + s + " < 0 && " + s + " < (" + maxN + " / " + c + "))";
      // MIN / -1 is itself an overflow; a positive operand cannot go below MIN then.
      if (cv == -1) {
        guard = under;
      } else {
        guard = "((" + s + " > 0 && " + s + " > (" + minN + " / " + c + ")) || " + under + ")";
      }
      break;
    }
    case Shape::MulEqual: {
      std::string hi, lo;
      if (options.foldSqrt) {
        Int kf = floorSqrt(bounds.maxVal);
        hi = intText(kf * kf == bounds.maxVal ? kf : kf + 1);
        lo = "-" + intText(kf);
      } else {
        hi = "sqrt(" + maxN + ")";
        lo = "-sqrt(" + maxN + ")";
        usesSqrt = true;
      }
      guard = "(" + x + " > 0 && " + x + " >= " + hi + ") || (" + x + " < 0 && " + x + " < " + lo + ")";
      break;
    }
    case Shape::GenericAdd:
      guard = "(" + y + " > 0 && " + x + " > " + maxN + " - " + y + ") || (" + y + " < 0 && " + x + " < " + minN +
              " - " + y + ")";
      break;
    case Shape::GenericMul:
      guard = "(" + x + " > 0 && " + y + " > 0 && " + x + " > " + maxN + " / " + y + ") || (" + x + " > 0 && " + y +
              " < 0 && " + y + " < " + minN + " / " + x + ") || (" + x + " < 0 && " + y + " > 0 && " + x + " < " +
              minN + " / " + y + ") || (" + x + " < 0 && " + y + " < 0 && " + y + " < " + maxN + " / " + x + ")";
      break;
  }

  // The statement for the else branch: verbatim, apart from hoisted
  // operands and the split of a declaration into declaration + store.
  std::string body;
  {
    frontend::Span from = stmt->span;
    if (ops.form == StatementFacts::Form::Declaration) {
      pre.insert(pre.begin(), std::string(frontend::typeName(stmt->declType)) + " " + stmt->name + ";");
      from = stmt->child(0)->span;
    }
    std::vector<std::pair<frontend::Span, std::string>> subs;
    for (const auto& [node, name] : hoisted) subs.emplace_back(node->span, name);
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return a.first.begin < b.first.begin; });
    std::uint32_t pos = from.begin;
    for (const auto& [sp, name] : subs) {
      body += unit.text.substr(pos, sp.begin - pos) + name;
      pos = sp.end;
    }
    body += unit.text.substr(pos, from.end - pos);
    if (ops.form == StatementFacts::Form::Declaration) body = stmt->name + " = " + body + ";";
  }

  bool wholeParens = guard.front() == '(' && [&] {
    int depth = 0;
    for (std::size_t i = 0; i < guard.size(); ++i) {
      if (guard[i] == '(') ++depth;
      if (guard[i] == ')' && --depth == 0 && i + 1 != guard.size()) return false;
    }
    return true;
  }();
  std::string fileName = std::filesystem::path(report.file).filename().string();
  std::string call = options.handlerName + "(\"" + fileName + "\", \"" + report.problemId + "\", " +
                     std::to_string(report.line) + ", " + (options.handler == HandlerStyle::LogOrDie ? "1" : "0") +
                     ");";

  std::vector<std::string> lines = pre;
  lines.push_back("if " + (wholeParens ? guard : "(" + guard + ")") + " {");
  lines.push_back("  " + call);
  lines.push_back("}");
  lines.push_back("else { " + body + " }");
  if (!inBlock) {
    lines.front() = "{ " + lines.front();
    lines.back() += " }";
  }
  std::string rendered;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) rendered += "\n" + ind;
    rendered += lines[i];
  }

  RepairCandidate c;
  c.problemId = report.problemId;
  c.patternId = pattern.id;
  c.renderedText = std::move(rendered);
  c.insertionSpan = stmt->span;
  c.startLine = unit.lines.lineOf(stmt->span.begin);
  c.endLine = unit.lines.lineOf(stmt->span.end - 1);
  c.guardLineOffset = static_cast<int>(pre.size());
  c.guardText = guard;
  c.usesSqrt = usesSqrt;
  c.guardFormula = guardFormula(pattern.family, report.leftValue, report.rightValue, report.leftConst,
                                report.rightConst, bounds);
  return c;
}

nlohmann::json toJson(const RepairCandidate& c) {
  nlohmann::json j{{"problemId", c.problemId},
                   {"patternId", c.patternId},
                   {"rank", c.rank},
                   {"criteriaMatched", c.criteriaMatched},
                   {"renderedText", c.renderedText},
                   {"insertionSpan", {{"startLine", c.startLine}, {"endLine", c.endLine}}},
                   {"valid", c.valid}};
  if (c.correct) j["correct"] = *c.correct;
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

std::vector<RepairCandidate> generateCandidates(const SourceUnit& unit, const FaultReport& report,
                                                const frontend::LimitsTable& table, smt::Solver& solver,
                                                const RenderOptions& options) {
  Capture capture = captureSystem(report);
  classifyFault(capture);
  const AstNode* stmt = unit.statementAt(report.span.begin);
  if (!stmt) throw NoRepairProposed("statement not found at the reported span");
  StatementFacts facts = factsOf(*stmt, table);
  std::vector<RankedPattern> ranked = selectPattern(facts, options.handler);

  IntBounds bounds = determineBounds(table, report);
  if (std::holds_alternative<StillOverflows>(reconstrainAndCheck(capture, bounds, solver))) {
    throw NoRepairProposed("every input of the path overflows");
  }

  std::vector<IntBounds> attempts{bounds};
  if (bounds.type != report.bounds.type) attempts.push_back(report.bounds);
  std::vector<RepairCandidate> out;
  for (const IntBounds& b : attempts) {
    for (const auto& rp : ranked) {
      RepairCandidate c;
      try {
        c = renderRepair(*rp.pattern, unit, report, b, options);
      } catch (const NoRepairProposed&) {
        continue;
      }
      c.criteriaMatched = rp.criteriaMatched;
      Validation v = validateNewSystem(capture, c.guardFormula, solver);
      c.valid = v.valid;
      c.details = v.details;
      out.push_back(std::move(c));
    }
    if (pick(out)) break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
  return out;
}

const RepairCandidate* pick(const std::vector<RepairCandidate>& candidates) {
  for (const auto& c : candidates) {
    if (c.valid) return &c;
  }
  return nullptr;
}

namespace {

struct PathRecord {
  std::vector<bool> decisions;
  std::vector<int> decisionLines;
  std::vector<std::string> asserts;
};

/// Records the path script at the repaired statements.
class SiteRecorder final : public symex::Checker {
 public:
  explicit SiteRecorder(std::set<int> lines) : lines_(std::move(lines)) {}
  std::string id() const override { return "recorder"; }
  std::size_t check(const symex::CheckSite& site, smt::Solver&) override {
    if (!lines_.count(site.line)) return 0;
    std::set<std::string> seeds;
    smt::collectVars(site.value, seeds);
    records_[site.line].push_back({site.decisions, site.decisionLines, site.state.script.slice(seeds).assertLines()});
    return 0;
  }
  const std::vector<PathRecord>& at(int line) { return records_[line]; }

 private:
  std::set<int> lines_;
  std::map<int, std::vector<PathRecord>> records_;
};

}  // namespace

CorrectnessReport confirmCorrectRepair(const SourceUnit& rewritten, const std::vector<FaultReport>& before,
                                       const std::vector<RepairSite>& sites, const symex::AnalysisConfig& config,
                                       smt::Solver& solver) {
  std::set<int> stmtLines, guardLines;
  for (const auto& s : sites) {
    stmtLines.insert(s.statementLine);
    guardLines.insert(s.guardLine);
  }
  SiteRecorder recorder(stmtLines);
  auto analysis = checker::analyzeUnit(rewritten, config, solver, {&recorder});

  CorrectnessReport out;
  out.remaining = analysis.reports;
  std::set<int> known;
  for (const auto& b : before) {
    for (const auto& s : sites) known.insert(s.mapLine ? s.mapLine(b.line) : b.line);
  }
  for (const auto& r : analysis.reports) {
    if (stmtLines.count(r.line)) {
      out.verdict = Correctness::FaultPersists;
      out.details = "fault still reported at line " + std::to_string(r.line);
      break;
    }
  }
  if (out.verdict == Correctness::Correct) {
    for (const auto& r : analysis.reports) {
      if (!known.count(r.line)) {
        out.verdict = Correctness::NewFaultIntroduced;
        out.details = "new fault at line " + std::to_string(r.line);
        break;
      }
    }
  }

  // Script diff along the path on which the fault was found.
  for (const auto& s : sites) {
    ScriptDiff d;
    d.problemId = s.original.problemId;
    std::vector<int> want;
    for (int l : s.original.decisionLines) want.push_back(s.mapLine ? s.mapLine(l) : l);
    for (const auto& rec : recorder.at(s.statementLine)) {
      std::vector<bool> labels;
      std::vector<int> lines;
      for (std::size_t i = 0; i < rec.decisions.size(); ++i) {
        if (guardLines.count(rec.decisionLines[i])) continue;
        labels.push_back(rec.decisions[i]);
        lines.push_back(rec.decisionLines[i]);
      }
      if (labels != s.original.decisions || lines != want) continue;
      std::map<std::string, int> balance;
      for (const auto& a : s.original.detectionScript.without(smt::Tag::Checker).assertLines()) --balance[a];
      for (const auto& a : rec.asserts) ++balance[a];
      for (const auto& a : rec.asserts) {
        for (; balance[a] > 0; --balance[a]) d.added.push_back(a);
      }
      for (const auto& [a, n] : balance) {
        for (int i = n; i < 0; ++i) d.removed.push_back(a);
      }
      d.pathMatched = true;
      break;
    }
    out.diffs.push_back(std::move(d));
  }
  out.warnings = analysis.result.warnings;
  return out;
}

}  // namespace overfix::repair
