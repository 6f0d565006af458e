#pragma once

#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "overfix/symex/symex.hpp"

namespace overfix::checker {

using frontend::CType;
using frontend::IntBounds;
using smt::Formula;
using smt::SsaVar;

inline constexpr std::string_view kOverflowCheckerId = "ID-Integer_Overflow_Fault";

enum class Shape { AddConst, MulNegConst, MulEqual, GenericAdd, GenericMul };
std::string_view shapeName(Shape s);
std::optional<Shape> shapeFromName(std::string_view name);

enum class BoundKind { Overflow, Underflow };
std::string_view boundKindName(BoundKind k);

/// Shape of `left op right`. `op` is '+' or '*'; anything that does not
/// match one of the three special forms is Generic.
Shape classify(char op, const symex::Operand& left, const symex::Operand& right);
/// Whether the shape's precondition has an underflow disjunct.
bool canUnderflow(Shape s);

/// Bounds of the narrower of the two types; RHS wins a tie.
IntBounds boundsFor(const frontend::LimitsTable& table, CType lhsType, CType rhsType);

/// `IOF-<fnv1a(path) prefix>-<line>-<ovf|unf>`.
std::string problemId(std::string_view path, int line, BoundKind kind);

struct FaultReport {
  std::string problemId;
  std::string checkerId{kOverflowCheckerId};
  std::string file;
  std::string function;
  int line = 0;
  std::string statement;
  frontend::Span span;
  char op = '+';
  Shape shape = Shape::GenericAdd;
  BoundKind kind = BoundKind::Overflow;
  SsaVar targetVar;
  /// Non-constant direct operands, left to right.
  std::vector<SsaVar> operandVars;
  /// Further variables the operands depend on through the path constraints.
  std::vector<SsaVar> dependentVars;
  /// Path slice plus the checker's target definition and violation.
  smt::SmtScript detectionScript;
  IntBounds bounds;
  std::optional<smt::Model> witness;
  /// Operand terms and constant values as seen at the fault.
  Formula leftValue;
  Formula rightValue;
  std::optional<Int> leftConst;
  std::optional<Int> rightConst;
  /// Branch outcomes of the path on which the fault was found, with the
  /// source line of each branch.
  std::vector<bool> decisions;
  std::vector<int> decisionLines;
  /// Named limit constants read along that path.
  std::set<std::string> namedConstants;
};

nlohmann::json toJson(const FaultReport& r);

/// Checks every `+` and `*` assignment against the bounds of its type.
/// One report per (statement, bound kind); the first path that reaches a
/// violation is kept.
class OverflowChecker final : public symex::Checker {
 public:
  explicit OverflowChecker(frontend::LimitsTable table = frontend::LimitsTable::standard()) : table_(table) {}

  std::string id() const override { return std::string(kOverflowCheckerId); }
  std::size_t check(const symex::CheckSite& site, smt::Solver& solver) override;

  std::vector<FaultReport> reports() const;
  std::vector<std::string> warnings() const;

 private:
  std::optional<FaultReport> query(const symex::CheckSite& site, smt::Solver& solver, Shape shape, BoundKind kind,
                                   const IntBounds& b);

  frontend::LimitsTable table_;
  mutable std::mutex mu_;
  std::vector<FaultReport> reports_;
  std::set<std::pair<int, BoundKind>> seen_;
  std::vector<std::string> warnings_;
};

struct UnitAnalysis {
  std::vector<FaultReport> reports;
  symex::AnalysisResult result;
};

/// Runs the overflow checker (plus any extra checkers) over every entry
/// point of the unit. Reports are ordered by line, overflow before
/// underflow.
UnitAnalysis analyzeUnit(const frontend::SourceUnit& unit, const symex::AnalysisConfig& config, smt::Solver& solver,
                         const std::vector<symex::Checker*>& extra = {});

}  // namespace overfix::checker
