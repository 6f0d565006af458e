#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "overfix/checker/overflow.hpp"

namespace overfix::repair {

using checker::FaultReport;
using checker::Shape;
using frontend::AstNode;
using frontend::CType;
using frontend::IntBounds;
using smt::Formula;
using smt::SsaVar;

class NoPatternsApplicable : public Error {
 public:
  explicit NoPatternsApplicable(const std::string& checkerId)
      : Error("NoPatternsApplicable: " + checkerId), checkerId_(checkerId) {}
  const std::string& checkerId() const noexcept { return checkerId_; }

 private:
  std::string checkerId_;
};

class NoRepairProposed : public Error {
 public:
  explicit NoRepairProposed(const std::string& why) : Error("NoRepairProposed: " + why) {}
};

// ---------------------------------------------------------------------------
// Statement facts and the criteria table

enum class OperandKind { Constant, Variable, SideEffect };
std::string_view operandKindName(OperandKind k);

/// What the decision tree knows about a faulty statement. Built from the
/// AST alone.
struct StatementFacts {
  char op = 0;  // '+', '*', or the unsupported operator
  CType resultType = CType::Int;
  OperandKind lhsKind = OperandKind::Variable;
  OperandKind rhsKind = OperandKind::Variable;
  bool operandsTextuallyEqual = false;
  std::optional<Int> lhsConst;
  std::optional<Int> rhsConst;
  enum class Form { Declaration, Assignment, Compound, Increment } form = Form::Assignment;
};

/// Facts of an Assign or VarDecl statement. Throws NoRepairProposed when
/// the statement is not a binary `+`/`*` store.
StatementFacts factsOf(const AstNode& stmt,
                       const frontend::LimitsTable& table = frontend::LimitsTable::standard());

struct PatternCriterion {
  std::string id;
  std::string description;
  bool (*holds)(const StatementFacts&);
};
const std::vector<PatternCriterion>& criteria();

enum class HandlerStyle { LogOnly, LogOrDie };
std::string_view handlerStyleName(HandlerStyle h);
std::optional<HandlerStyle> handlerStyleFromName(std::string_view name);

struct RepairPattern {
  std::string id;  // "<family>.<handler>"
  Shape family = Shape::GenericAdd;
  HandlerStyle handler = HandlerStyle::LogOnly;
  std::vector<std::string> requiredCriteria;
};
/// Five families times two handler styles, in selection order.
const std::vector<RepairPattern>& patternCatalog();
const RepairPattern* findPattern(std::string_view id);

struct RankedPattern {
  const RepairPattern* pattern = nullptr;
  std::vector<std::string> criteriaMatched;
};

// ---------------------------------------------------------------------------
// Steps 1-8

/// Step 1. The MAX constant read on the fault's path, when there is one,
/// else the bounds of the result type.
IntBounds determineBounds(const frontend::LimitsTable& table, const FaultReport& report);

/// Step 2.
struct Capture {
  std::string statement;
  smt::SmtScript detectionScript;
  std::string checkerId;
  SsaVar target;
  std::vector<SsaVar> dependents;
  const FaultReport* report = nullptr;
};
Capture captureSystem(const FaultReport& report);

/// Step 3. Target first, then the non-constant direct operands.
std::vector<SsaVar> selectConstraintVars(const Capture& capture);

/// Step 4.
struct SafeInterval {
  SsaVar var;
  Int lo = 0;
  Int hi = 0;
};
struct StillOverflows {
  std::optional<smt::Model> witness;
};
using Reconstrained = std::variant<SafeInterval, StillOverflows>;
Reconstrained reconstrainAndCheck(const Capture& capture, const IntBounds& bounds, smt::Solver& solver);

/// Step 5. Throws NoPatternsApplicable for foreign checkers and Error for a
/// missing id.
enum class FaultFamily { IntegerOverflow };
FaultFamily classifyFault(const Capture& capture);

/// Step 6. Patterns of the handler style with at least two criteria met.
/// Fully matched patterns first, then most matches, catalog order on ties.
/// Throws NoRepairProposed when nothing matches.
std::vector<RankedPattern> selectPattern(const StatementFacts& facts, HandlerStyle handler = HandlerStyle::LogOnly);

/// Step 7.
struct Validation {
  bool valid = false;
  std::string details;
  std::optional<smt::Model> witness;
};
Validation validateNewSystem(const Capture& capture, const Formula& guard, smt::Solver& solver);

struct RenderOptions {
  HandlerStyle handler = HandlerStyle::LogOnly;
  bool foldSqrt = false;
  std::string handlerName = "log_or_die";
};

struct RepairCandidate {
  std::string problemId;
  std::string patternId;
  int rank = 0;
  std::vector<std::string> criteriaMatched;
  std::string renderedText;
  /// The faulty statement's span; the rendered block replaces it.
  frontend::Span insertionSpan;
  int startLine = 0;
  int endLine = 0;
  /// Lines of the rendered text before the guard `if` (hoisted temporaries,
  /// split declaration). The guarded statement sits three lines below it.
  int guardLineOffset = 0;
  /// Guard over the SSA terms of the operands at the fault.
  Formula guardFormula;
  std::string guardText;
  bool usesSqrt = false;
  bool valid = false;
  std::optional<bool> correct;
  std::string details;
};

/// Step 8. Renders the guard block for `pattern` at the report's statement.
/// Throws NoRepairProposed when the statement cannot carry a guard (for
/// example a `for` header) or the pattern does not fit its operands.
RepairCandidate renderRepair(const RepairPattern& pattern, const frontend::SourceUnit& unit, const FaultReport& report,
                             const IntBounds& bounds, const RenderOptions& options = {});

/// Guard formula for a family over operand terms; division-free and exact
/// over the integers.
Formula guardFormula(Shape family, const Formula& x, const Formula& y, std::optional<Int> xc, std::optional<Int> yc,
                     const IntBounds& bounds);

nlohmann::json toJson(const RepairCandidate& c);

/// Steps 1-8 for one report: every rendered candidate, validated and
/// ranked. Candidates that fail to render are skipped.
std::vector<RepairCandidate> generateCandidates(const frontend::SourceUnit& unit, const FaultReport& report,
                                                const frontend::LimitsTable& table, smt::Solver& solver,
                                                const RenderOptions& options = {});

/// Best-ranked valid candidate, if any.
const RepairCandidate* pick(const std::vector<RepairCandidate>& candidates);

// ---------------------------------------------------------------------------
// Correctness after rewriting

enum class Correctness { Correct, FaultPersists, NewFaultIntroduced };
std::string_view correctnessName(Correctness c);

/// Assert lines that differ between the pre- and post-repair scripts of
/// one repaired path.
struct ScriptDiff {
  std::string problemId;
  bool pathMatched = false;
  std::vector<std::string> added;
  std::vector<std::string> removed;
  std::size_t size() const { return added.size() + removed.size(); }
};

struct CorrectnessReport {
  Correctness verdict = Correctness::Correct;
  std::vector<FaultReport> remaining;
  std::vector<ScriptDiff> diffs;
  std::vector<std::string> warnings;
  std::string details;
};

/// Where the repaired statement ended up in the rewritten file.
struct RepairSite {
  FaultReport original;
  /// Line of the guard `if` and of the guarded statement in the new text.
  int guardLine = 0;
  int statementLine = 0;
  /// Maps a line of the original file to the rewritten one.
  std::function<int(int)> mapLine;
};

inline constexpr std::size_t kMaxGuardDiff = 3;

/// Re-analyzes the rewritten unit. Correct iff the repaired statement has
/// no report on any path and no report appears at a line that was clean
/// before. Also diffs the path scripts at the repaired statement.
CorrectnessReport confirmCorrectRepair(const frontend::SourceUnit& rewritten, const std::vector<FaultReport>& before,
                                       const std::vector<RepairSite>& sites, const symex::AnalysisConfig& config,
                                       smt::Solver& solver);

}  // namespace overfix::repair
