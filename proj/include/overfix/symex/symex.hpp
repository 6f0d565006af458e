#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "overfix/cfg/paths.hpp"
#include "overfix/frontend/ast.hpp"
#include "overfix/smt/solver.hpp"

namespace overfix::symex {

using frontend::AstNode;
using frontend::CType;
using smt::Formula;
using smt::SsaVar;

class UnknownExtern : public Error {
 public:
  explicit UnknownExtern(const std::string& name) : Error("UnknownExtern: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Symbolic counterpart of one call-stack activation.
struct SymFrame {
  std::string function;
  std::uint32_t activation = 0;
  /// Prepended to SSA base names: empty for the entry function,
  /// `fn@<activation>.` for callees.
  std::string prefix;
  std::map<std::string, SsaVar> locals;  // keyed by slot
  std::map<const AstNode*, Formula> callResults;
  std::optional<Formula> returned;
  const AstNode* callSite = nullptr;
};

/// SSA environment plus the path-tagged constraint sequence of one path.
class PathState {
 public:
  smt::SmtScript script;
  smt::SsaFactory ssa;
  std::vector<SymFrame> frames;
  std::map<std::string, SsaVar> globals;
  /// MAX/MIN named constants read along the path.
  std::set<std::string> namedConstants;
  std::size_t reportsOnPath = 0;
  bool terminated = false;

  SymFrame& frame() { return frames.back(); }
  const SymFrame& frame() const { return frames.back(); }
  /// Current SSA variable of a program variable, if bound.
  std::optional<SsaVar> lookup(const AstNode& decl) const;

  struct Checkpoint {
    std::vector<SymFrame> frames;
    std::map<std::string, SsaVar> globals;
    std::set<std::string> namedConstants;
    smt::SsaFactory::Mark ssa;
    std::size_t declCount = 0;
    std::size_t assertCount = 0;
    std::size_t reportsOnPath = 0;
  };
  Checkpoint save() const;
  void restore(const Checkpoint& c);
};

/// One operand of a checked `+`/`*`. `node` is null for the implicit `1`
/// of `x++`.
struct Operand {
  const AstNode* node = nullptr;
  Formula formula;
  std::optional<Int> constant;
  std::string text;
  bool sideEffect = false;
};

/// What checkers see at a fault-prone assignment, before its SSA binding
/// is added to the path.
struct CheckSite {
  const PathState& state;
  const frontend::SourceUnit& unit;
  const AstNode& stmt;
  char op = '+';
  Operand left;
  Operand right;
  Formula value;
  SsaVar target;
  CType lhsType = CType::Int;
  CType rhsType = CType::Int;
  std::string function;
  int line = 0;
  std::vector<bool> decisions;
  /// Source line of the branch behind each decision.
  std::vector<int> decisionLines;
};

/// A checker inspects fault-prone sites. Returning the number of new
/// reports lets the driver enforce per-path and global report limits.
class Checker {
 public:
  virtual ~Checker() = default;
  virtual std::string id() const = 0;
  virtual std::size_t check(const CheckSite& site, smt::Solver& solver) = 0;
};

struct AnalysisConfig {
  cfg::PathLimits limits;
  frontend::LimitsTable table = frontend::LimitsTable::standard();
  std::size_t maxFaults = 0;      // 0: unlimited
  std::size_t firstNPerPath = 0;  // 0: unlimited
  /// fscanf-like sources bounded by their type, rand-like by [0, INT_MAX].
  bool boundStubs = true;
  /// Model stores that may not fit their type (arithmetic results and
  /// narrowing conversions) as wrapping: the target stays within its type
  /// and equals the mathematical value only when that value fits. When
  /// off, every assignment is a plain equality over unbounded integers.
  bool assumeInRange = true;
  std::size_t maxPaths = 200000;
  /// Only analyze these entry functions (all entry points when empty).
  std::vector<std::string> entries;
};

struct AnalysisStats {
  std::size_t paths = 0;
  std::size_t infeasible = 0;
  std::size_t traversed = 0;
  std::size_t branchQueries = 0;
  std::size_t unknown = 0;
  bool truncated = false;
};

struct AnalysisResult {
  AnalysisStats stats;
  std::vector<std::string> warnings;
};

enum class Feasibility { Feasible, Infeasible };

/// Statement-level interpreter. The driver (`run`) walks paths with a
/// PathCursor; the single-step operations are public for tests.
class Interpreter {
 public:
  Interpreter(const frontend::SourceUnit& unit, AnalysisConfig config, smt::Solver& solver);

  void addChecker(Checker& c) { checkers_.push_back(&c); }

  /// Observers for tooling and tests. `onBranch` sees the state after the
  /// condition was added and the variables seeding the feasibility slice;
  /// `onPathEnd` sees each finished path with its branch labels.
  std::function<void(const PathState&, const std::set<std::string>&, Feasibility)> onBranch;
  std::function<void(const PathState&, const std::vector<bool>&)> onPathEnd;

  /// Fresh state positioned at `entry`: globals initialised, parameters
  /// bound to unconstrained inputs of their types.
  PathState initialState(const cfg::Cfg& entry);
  void interpretStatement(PathState& state, const cfg::CfgNode& node);
  Feasibility validateBranch(PathState& state, const cfg::CfgNode& branch, bool taken);
  /// Condition formula of a branch node (sqrt comparisons made exact).
  Formula condition(PathState& state, const AstNode* cond);
  Formula evaluate(PathState& state, const AstNode& expr);

  void enterCall(PathState& state, const AstNode& call, const cfg::Cfg& callee, std::uint32_t activation);
  void havocCall(PathState& state, const AstNode& call);
  void interpretReturn(PathState& state, const AstNode& ret);
  void leaveCall(PathState& state);

  /// Explores every path of every entry function.
  AnalysisResult run();

  const AnalysisConfig& config() const noexcept { return config_; }

 private:
  SsaVar bindFresh(PathState& s, const std::string& base, CType type);
  void assign(PathState& s, const AstNode& stmt, const AstNode& targetDecl, CType type, const AstNode* rhs,
              const std::string& compoundOp);
  bool fits(CType from, CType to) const;
  void applyStub(PathState& s, const AstNode& call);
  Formula stubValue(PathState& s, const AstNode& call);
  void addTypeBounds(PathState& s, const SsaVar& v, CType type);
  Operand operand(PathState& s, const AstNode& e);
  std::string baseName(const PathState& s, const AstNode& decl) const;
  std::size_t notify(PathState& s, const AstNode& stmt, char op, Operand left, Operand right, const SsaVar& target,
                     CType lhsType, CType rhsType);

  const frontend::SourceUnit& unit_;
  AnalysisConfig config_;
  smt::Solver& solver_;
  std::vector<Checker*> checkers_;
  cfg::Program program_;
  const cfg::PathCursor* cursor_ = nullptr;
  std::size_t totalReports_ = 0;
  AnalysisResult result_;
};

}  // namespace overfix::symex
