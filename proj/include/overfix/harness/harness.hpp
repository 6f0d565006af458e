#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "overfix/repair/repair.hpp"
#include "overfix/rewrite/rewrite.hpp"
#include "overfix/smt/solver.hpp"

namespace overfix::harness {

class ManifestError : public Error {
 public:
  using Error::Error;
};

class ParamsInfeasible : public Error {
 public:
  explicit ParamsInfeasible(const std::string& why) : Error("ParamsInfeasible: " + why) {}
};

// ---------------------------------------------------------------------------
// Manifest

struct ExpectedFault {
  std::string file;
  std::string function;
  int line = 0;
  auto operator<=>(const ExpectedFault&) const = default;
};

/// `*.c` files below `dir`, sorted, as paths relative to `dir`.
std::vector<std::string> listSources(const std::string& dir);

/// One record per `/* FAULT */` line: the statement on the following line.
/// Throws ManifestError when no statement follows the annotation.
std::vector<ExpectedFault> scanAnnotations(const frontend::SourceUnit& unit);
std::vector<ExpectedFault> generateTestCases(const std::string& corpusDir);

nlohmann::json manifestToJson(const std::vector<ExpectedFault>& m);
std::vector<ExpectedFault> manifestFromJson(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Corpus runs

struct RunOptions {
  symex::AnalysisConfig analysis;
  smt::SolverConfig solver;
  unsigned jobs = 0;  // 0: one per hardware thread
};

struct ProgramResult {
  std::string file;
  std::vector<checker::FaultReport> reports;
  std::vector<std::string> warnings;
  double seconds = 0.0;
  std::optional<std::string> error;
};

/// Analyzes `text` under the display name `file`.
ProgramResult analyzeProgram(const std::string& file, const std::string& text, const RunOptions& options);

/// Every source of the corpus, one worker per file, in file order.
std::vector<ProgramResult> analyzeCorpus(const std::string& dir, const RunOptions& options);

struct RunReport {
  std::size_t expected = 0;
  std::size_t truePositivesFound = 0;
  std::vector<ExpectedFault> missed;
  std::vector<ExpectedFault> spurious;
  std::map<std::string, double> perProgramTimes;
  std::vector<std::string> errors;
  double totalSeconds = 0.0;
  int exitCode() const { return missed.empty() && spurious.empty() && errors.empty() ? 0 : 1; }
};

/// Matches reports to the manifest by (file, function, line). Several
/// reports at one location (overflow and underflow) count once.
RunReport runReport(const std::vector<ProgramResult>& results, const std::vector<ExpectedFault>& manifest);
nlohmann::json toJson(const RunReport& r);

// ---------------------------------------------------------------------------
// Repairing a file end to end

struct RepairOptions {
  repair::RenderOptions render;
  /// Repair only these problem ids (all when empty).
  std::set<std::string> problems;
  /// Pattern to use per problem id instead of the rank-1 candidate.
  std::map<std::string, std::string> patterns;
};

struct FileRepair {
  std::unique_ptr<frontend::SourceUnit> unit;
  std::vector<checker::FaultReport> reports;
  /// Candidates per report, same order as `reports`.
  std::vector<std::vector<repair::RepairCandidate>> candidates;
  /// (report index, candidate index) of every applied repair.
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  /// problem id -> why it was left alone.
  std::map<std::string, std::string> skipped;
  rewrite::PatchPlan plan;
  rewrite::Rewritten result;
};

/// Analyze, generate candidates, choose and apply. `text` is the file's
/// current content; nothing is written to disk.
FileRepair repairText(const std::string& file, const std::string& text, const RunOptions& run,
                      const RepairOptions& options = {});

// ---------------------------------------------------------------------------
// Benchmark synthesis

struct SynthParams {
  int targetLoc = 200;
  int callChainLen = 1;
  int loopIters = 0;
  int decoyCount = 0;
  std::uint64_t rngSeed = 1;
};

inline constexpr int kSeedCount = 5;
inline constexpr int kMaxSynthLoc = 50000;

/// Program built around seed kernel `seed` (1..5) with one reachable
/// overflow behind the call chain and `decoyCount` guarded sites.
/// Deterministic for a given rngSeed.
std::string synthesizeProgram(int seed, const SynthParams& params);

// ---------------------------------------------------------------------------
// Runtime overhead

struct BenchResult {
  std::string file;
  double baseSeconds = 0.0;
  double repairedSeconds = 0.0;
  std::optional<std::string> error;
};

struct BenchSummary {
  std::vector<BenchResult> programs;
  double overheadPercent = 0.0;
  bool skipped = false;
  std::string note;
};

/// Compiles each (original, repaired) pair with `cc` and times `runs`
/// executions of each binary. Skipped when `cc` is empty.
BenchSummary benchRuntime(const std::vector<std::pair<std::string, std::string>>& programs,
                          const std::vector<std::string>& names, const std::string& cc, int runs = 20);
nlohmann::json toJson(const BenchSummary& b);

/// Compiles `text` (with the handler and library prelude) to an object
/// file. Returns the compiler output on failure.
std::optional<std::string> compileCheck(const std::string& text, const std::string& cc);

}  // namespace overfix::harness
