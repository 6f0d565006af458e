#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "overfix/cfg/cfg.hpp"

namespace overfix::cfg {

struct PathLimits {
  int unrollBound = 10;
  int callDepth = 8;
};

/// One activation on the interprocedural call stack.
struct Frame {
  const Cfg* cfg = nullptr;
  NodeId node = 0;
  /// Call node in the caller that this activation returns to.
  NodeId callSite = 0;
  std::uint32_t activation = 0;
};

/// A branch outcome chosen on the current path. `checkpoint` is an opaque
/// value supplied by the caller (the interpreter stores its trail length)
/// so that backtracking can restore its own state too.
struct Decision {
  const Cfg* cfg = nullptr;
  NodeId branch = 0;
  std::uint32_t activation = 0;
  bool taken = true;
  bool flippable = true;
  bool flipped = false;
  std::size_t checkpoint = 0;
};

enum class Verdict { Feasible, Infeasible };

/// Depth-first cursor over the paths of a program, starting at one entry
/// function. Loop heads are taken at most `unrollBound` times per
/// activation; after that the exit edge is forced. Calls deeper than
/// `callDepth` are not entered (the interpreter havocs their result).
class PathCursor {
 public:
  PathCursor(const Program& program, const Cfg& entry, PathLimits limits = {});

  const Program& program() const noexcept { return *program_; }
  const PathLimits& limits() const noexcept { return limits_; }
  const Frame& frame() const { return frames_.back(); }
  const Cfg& cfg() const { return *frames_.back().cfg; }
  const CfgNode& current() const { return cfg().node(frame().node); }
  std::size_t depth() const noexcept { return frames_.size(); }
  bool finished() const noexcept { return finished_; }

  /// Moves along the single outgoing edge. At a callee's exit the frame is
  /// popped and the cursor lands after the call site. At the entry
  /// function's exit the path is finished.
  void step();

  bool canEnterCall() const { return static_cast<int>(frames_.size()) <= limits_.callDepth; }
  /// At a Call node: pushes a new frame at the callee's entry node.
  void enterCall(const Cfg& callee);

  /// At a Branch node: records a decision and returns the chosen side.
  /// True is explored first; a loop head at its unroll bound yields a
  /// forced, non-flippable false.
  bool decide(std::size_t checkpoint);
  bool hasPendingDecision() const noexcept { return pending_; }
  /// Side chosen for the branch the cursor currently stands on.
  bool pendingSide() const;
  /// Moves across the decided edge of the current branch.
  void follow();
  /// Ends the current path without reaching the exit.
  void abandon() { finished_ = true; }

  std::span<const Decision> decisions() const noexcept { return decisions_; }
  std::vector<bool> labels() const;
  /// Nodes entered so far over all paths; backtracking does not rewind it.
  std::size_t traversed() const noexcept { return traversed_; }
  std::size_t pathsStarted() const noexcept { return paths_; }

  /// Backtracks to the deepest unflipped decision and flips it. Returns
  /// false when every decision has been explored (exhausted).
  bool backtrack();

 private:
  struct Snapshot {
    std::vector<Frame> frames;
    std::map<std::pair<std::uint32_t, NodeId>, int> unroll;
    std::uint32_t nextActivation = 0;
  };

  void arrive(NodeId node);

  const Program* program_;
  PathLimits limits_;
  std::vector<Frame> frames_;
  std::map<std::pair<std::uint32_t, NodeId>, int> unroll_;
  std::uint32_t nextActivation_ = 1;
  std::vector<Decision> decisions_;
  std::vector<Snapshot> snapshots_;
  bool finished_ = false;
  bool pending_ = false;
  std::size_t traversed_ = 0;
  std::size_t paths_ = 1;
};

/// Advances the cursor after the current path prefix was judged. A
/// Feasible verdict is given for a finished path, Infeasible for a branch
/// side the solver refuted. Returns false once exhausted.
bool nextPath(PathCursor& cursor, Verdict verdict);

}  // namespace overfix::cfg
