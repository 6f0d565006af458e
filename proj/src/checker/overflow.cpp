#include "overfix/checker/overflow.hpp"

#include <algorithm>

#include "overfix/support/text.hpp"

namespace overfix::checker {

std::string_view shapeName(Shape s) {
  switch (s) {
    case Shape::AddConst: return "AddConst";
    case Shape::MulNegConst: return "MulNegConst";
    case Shape::MulEqual: return "MulEqual";
    case Shape::GenericAdd: return "GenericAdd";
    case Shape::GenericMul: return "GenericMul";
  }
  return "?";
}

std::optional<Shape> shapeFromName(std::string_view name) {
  for (Shape s : {Shape::AddConst, Shape::MulNegConst, Shape::MulEqual, Shape::GenericAdd, Shape::GenericMul}) {
    if (shapeName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view boundKindName(BoundKind k) { return k == BoundKind::Overflow ? "overflow" : "underflow"; }

Shape classify(char op, const symex::Operand& left, const symex::Operand& right) {
  bool lc = left.constant.has_value();
  bool rc = right.constant.has_value();
  if (op == '+') {
    if (lc != rc && (lc ? *left.constant : *right.constant) > 0) return Shape::AddConst;
    return Shape::GenericAdd;
  }
  if (lc != rc && (lc ? *left.constant : *right.constant) < 0) return Shape::MulNegConst;
  if (!lc && !rc && !left.sideEffect && !right.sideEffect && left.text == right.text) return Shape::MulEqual;
  return Shape::GenericMul;
}

bool canUnderflow(Shape s) { return s == Shape::MulNegConst || s == Shape::GenericAdd || s == Shape::GenericMul; }

IntBounds boundsFor(const frontend::LimitsTable& table, CType lhsType, CType rhsType) {
  if (!frontend::isInteger(lhsType)) return table.bounds(rhsType);
  if (!frontend::isInteger(rhsType)) return table.bounds(lhsType);
  IntBounds l = table.bounds(lhsType);
  IntBounds r = table.bounds(rhsType);
  Int lw = l.maxVal - l.minVal;
  Int rw = r.maxVal - r.minVal;
  return lw < rw ? l : r;
}

std::string problemId(std::string_view path, int line, BoundKind kind) {
  return "IOF-" + fnv1aHex(path).substr(0, 8) + "-" + std::to_string(line) + "-" +
         (kind == BoundKind::Overflow ? "ovf" : "unf");
}

namespace {

nlohmann::json intJson(Int v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return toString(v);
}

nlohmann::json varsJson(const std::vector<SsaVar>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : vs) a.push_back(v.name);
  return a;
}

}  // namespace

nlohmann::json toJson(const FaultReport& r) {
  nlohmann::json j{{"problemId", r.problemId},
                   {"checkerId", r.checkerId},
                   {"file", r.file},
                   {"function", r.function},
                   {"line", r.line},
                   {"statement", r.statement},
                   {"shape", shapeName(r.shape)},
                   {"kind", boundKindName(r.kind)},
                   {"typeName", frontend::typeName(r.bounds.type)},
                   {"targetVar", r.targetVar.name},
                   {"operandVars", varsJson(r.operandVars)},
                   {"dependentVars", varsJson(r.dependentVars)}};
  if (r.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& v : r.operandVars) {
      auto it = r.witness->find(v.name);
      if (it != r.witness->end()) w[v.name] = intJson(it->second);
    }
    j["witness"] = std::move(w);
  }
  return j;
}

std::optional<FaultReport> OverflowChecker::query(const symex::CheckSite& site, smt::Solver& solver, Shape shape,
                                                  BoundKind kind, const IntBounds& b) {
  std::set<std::string> seeds;
  smt::collectVars(site.value, seeds);
  smt::SmtScript q = site.state.script.slice(seeds);
  Formula target = smt::var(site.target.name);
  q.declare(site.target);
  q.define(site.target.name, smt::eq(target, site.value), smt::Tag::Checker);
  q.add(kind == BoundKind::Overflow ? smt::gt(target, smt::constant(b.maxVal))
                                    : smt::lt(target, smt::constant(b.minVal)),
        smt::Tag::Checker);
  smt::SolveResult r;
  try {
    r = solver.check(q);
  } catch (const Error& e) {
    std::lock_guard lock(mu_);
    warnings_.push_back("line " + std::to_string(site.line) + ": solver error, no fault assumed: " + e.what());
    return std::nullopt;
  }
  if (r.status == smt::Status::Unknown) {
    std::lock_guard lock(mu_);
    warnings_.push_back("line " + std::to_string(site.line) + ": unknown " + std::string(boundKindName(kind)) +
                        " verdict treated as no fault (" + r.reason + ")");
    return std::nullopt;
  }
  if (r.status != smt::Status::Sat) return std::nullopt;

  FaultReport rep;
  rep.problemId = problemId(site.unit.path, site.line, kind);
  rep.file = site.unit.path;
  rep.function = site.function;
  rep.line = site.line;
  rep.statement = trim(site.unit.spanText(site.stmt.span));
  rep.span = site.stmt.span;
  rep.op = site.op;
  rep.shape = shape;
  rep.kind = kind;
  rep.targetVar = site.target;
  std::set<std::string> operandNames;
  for (const symex::Operand* o : {&site.left, &site.right}) {
    if (o->formula->op != smt::Op::Var || operandNames.count(o->formula->var)) continue;
    operandNames.insert(o->formula->var);
    if (const SsaVar* v = q.find(o->formula->var)) rep.operandVars.push_back(*v);
  }
  std::set<std::string> deps = site.state.script.dependencies(seeds);
  for (const auto& d : q.decls()) {
    if (deps.count(d.name) && !operandNames.count(d.name) && d.name != site.target.name) {
      rep.dependentVars.push_back(d);
    }
  }
  rep.detectionScript = std::move(q);
  rep.bounds = b;
  rep.witness = std::move(r.model);
  rep.leftValue = site.left.formula;
  rep.rightValue = site.right.formula;
  rep.leftConst = site.left.constant;
  rep.rightConst = site.right.constant;
  rep.decisions = site.decisions;
  rep.decisionLines = site.decisionLines;
  rep.namedConstants = site.state.namedConstants;
  return rep;
}

std::size_t OverflowChecker::check(const symex::CheckSite& site, smt::Solver& solver) {
  if (site.op != '+' && site.op != '*') return 0;
  Shape shape = classify(site.op, site.left, site.right);
  IntBounds b = boundsFor(table_, site.lhsType, site.rhsType);
  std::size_t n = 0;
  for (BoundKind kind : {BoundKind::Overflow, BoundKind::Underflow}) {
    if (kind == BoundKind::Underflow && !canUnderflow(shape)) continue;
    {
      std::lock_guard lock(mu_);
      if (seen_.count({site.line, kind})) continue;
    }
    if (auto rep = query(site, solver, shape, kind, b)) {
      std::lock_guard lock(mu_);
      if (seen_.insert({site.line, kind}).second) {
        reports_.push_back(std::move(*rep));
        ++n;
      }
    }
  }
  return n;
}

std::vector<FaultReport> OverflowChecker::reports() const {
  std::lock_guard lock(mu_);
  return reports_;
}

std::vector<std::string> OverflowChecker::warnings() const {
  std::lock_guard lock(mu_);
  return warnings_;
}

UnitAnalysis analyzeUnit(const frontend::SourceUnit& unit, const symex::AnalysisConfig& config, smt::Solver& solver,
                         const std::vector<symex::Checker*>& extra) {
  OverflowChecker checker(config.table);
  symex::Interpreter interp(unit, config, solver);
  interp.addChecker(checker);
  for (auto* c : extra) interp.addChecker(*c);
  UnitAnalysis out;
  out.result = interp.run();
  out.reports = checker.reports();
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const FaultReport& a, const FaultReport& b) {
    return std::pair(a.line, a.kind) < std::pair(b.line, b.kind);
  });
  for (auto& w : checker.warnings()) out.result.warnings.push_back(std::move(w));
  return out;
}

}  // namespace overfix::checker
