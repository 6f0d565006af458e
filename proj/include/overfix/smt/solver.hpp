#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "overfix/frontend/types.hpp"
#include "overfix/smt/script.hpp"

namespace overfix::smt {

enum class Status { Sat, Unsat, Unknown };
std::string_view statusName(Status s);

struct SolveResult {
  Status status = Status::Unknown;
  /// Witness for Sat when the backend provides one.
  std::optional<Model> model;
  std::string reason;
};

class SolverTimeout : public Error {
 public:
  explicit SolverTimeout(double seconds)
      : Error("SolverTimeout: no answer after " + std::to_string(seconds) + " s"), seconds_(seconds) {}
  double seconds() const noexcept { return seconds_; }

 private:
  double seconds_;
};

class SolverProtocolError : public Error {
 public:
  explicit SolverProtocolError(std::string raw) : Error("SolverProtocolError: " + raw), raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

class Solver {
 public:
  virtual ~Solver() = default;
  virtual SolveResult check(const SmtScript& script) = 0;
  virtual std::string name() const = 0;
};

/// Interval propagation with bisection over the unscaled integers. Exact
/// when it answers; returns Unknown once `nodeBudget` search nodes are spent.
struct IntervalOptions {
  std::size_t nodeBudget = 4000;
  int propagationRounds = 40;
};
std::unique_ptr<Solver> makeIntervalSolver(IntervalOptions options = {});

/// Exhaustive evaluation over a scaled domain. Variables fixed by a
/// defining equality are computed; every other variable ranges over the
/// bounds asserted for it, or its type's limits in `limits` otherwise.
struct EnumerateOptions {
  frontend::LimitsTable limits = frontend::LimitsTable::analog(8);
  std::uint64_t budget = 20'000'000;
};
std::unique_ptr<Solver> makeEnumerateSolver(EnumerateOptions options = {});

/// Runs an SMT-LIB v2 solver process. `command` is argv; the script goes
/// to stdin unless `viaTempFile`, in which case its path is appended.
struct ExternalOptions {
  std::vector<std::string> command;
  bool viaTempFile = false;
  double timeoutSeconds = 10.0;
  bool wantModel = true;
};
std::unique_ptr<Solver> makeExternalSolver(ExternalOptions options);

/// Default argv for a solver path: z3 gets `-in`, anything else is run
/// as given. A value with spaces is split into arguments.
std::vector<std::string> solverCommand(const std::string& spec);
/// OVERFIX_SOLVER, if set.
std::optional<std::string> solverFromEnvironment();

/// Memoizes verdicts by emitted text; safe to share between threads.
class CachingSolver : public Solver {
 public:
  explicit CachingSolver(std::unique_ptr<Solver> inner) : inner_(std::move(inner)) {}
  SolveResult check(const SmtScript& script) override;
  std::string name() const override { return inner_->name(); }
  std::size_t hits() const;
  std::size_t misses() const;

 private:
  std::unique_ptr<Solver> inner_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, SolveResult> cache_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

enum class Backend { Internal, Enumerate, External };
std::optional<Backend> backendFromName(std::string_view name);

struct SolverConfig {
  Backend backend = Backend::Internal;
  std::string solverPath;  // External only
  double timeoutSeconds = 10.0;
  bool viaTempFile = false;
  frontend::LimitsTable limits = frontend::LimitsTable::standard();
};
std::unique_ptr<Solver> makeSolver(const SolverConfig& config);

/// Checks a model against every assert of the script.
bool satisfies(const SmtScript& script, const Model& model);

}  // namespace overfix::smt
