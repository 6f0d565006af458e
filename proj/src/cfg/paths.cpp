#include "overfix/cfg/paths.hpp"

#include "overfix/support/error.hpp"

namespace overfix::cfg {

PathCursor::PathCursor(const Program& program, const Cfg& entry, PathLimits limits)
    : program_(&program), limits_(limits) {
  frames_.push_back({&entry, entry.entry, 0, 0});
  ++traversed_;
}

void PathCursor::arrive(NodeId node) {
  frames_.back().node = node;
  ++traversed_;
}

void PathCursor::step() {
  if (finished_) throw Error("path cursor: step after finish");
  const CfgNode& n = current();
  if (n.kind == CfgNodeKind::Branch) throw Error("path cursor: step on a branch node");
  if (n.kind == CfgNodeKind::Exit) {
    if (frames_.size() == 1) {
      finished_ = true;
      return;
    }
    Frame done = frames_.back();
    frames_.pop_back();
    for (auto it = unroll_.begin(); it != unroll_.end();) {
      it = it->first.first == done.activation ? unroll_.erase(it) : std::next(it);
    }
    arrive(cfg().successor(done.callSite));
    return;
  }
  arrive(cfg().successor(n.id));
}

void PathCursor::enterCall(const Cfg& callee) {
  if (current().kind != CfgNodeKind::Call) throw Error("path cursor: enterCall away from a call node");
  frames_.push_back({&callee, callee.entry, frame().node, nextActivation_++});
  ++traversed_;
}

bool PathCursor::decide(std::size_t checkpoint) {
  const CfgNode& n = current();
  if (n.kind != CfgNodeKind::Branch) throw Error("path cursor: decide away from a branch node");
  Decision d;
  d.cfg = &cfg();
  d.branch = n.id;
  d.activation = frame().activation;
  d.checkpoint = checkpoint;
  if (n.loopHead) {
    auto it = unroll_.find({d.activation, n.id});
    if ((it == unroll_.end() ? 0 : it->second) >= limits_.unrollBound) {
      d.taken = false;
      d.flippable = false;
    }
  }
  snapshots_.push_back({frames_, unroll_, nextActivation_});
  decisions_.push_back(d);
  pending_ = true;
  return d.taken;
}

bool PathCursor::pendingSide() const {
  if (!pending_) throw Error("path cursor: no pending decision");
  return decisions_.back().taken;
}

void PathCursor::follow() {
  bool side = pendingSide();
  pending_ = false;
  const CfgNode& n = current();
  if (n.loopHead) {
    std::pair key{frame().activation, n.id};
    if (side) {
      ++unroll_[key];
    } else {
      unroll_.erase(key);
    }
  }
  arrive(cfg().successor(n.id, side ? BranchLabel::True : BranchLabel::False));
}

std::vector<bool> PathCursor::labels() const {
  std::vector<bool> out;
  out.reserve(decisions_.size());
  for (const auto& d : decisions_) out.push_back(d.taken);
  return out;
}

bool PathCursor::backtrack() {
  while (!decisions_.empty()) {
    Decision& d = decisions_.back();
    if (d.flippable && !d.flipped) {
      d.flipped = true;
      d.taken = !d.taken;
      const Snapshot& s = snapshots_.back();
      frames_ = s.frames;
      unroll_ = s.unroll;
      nextActivation_ = s.nextActivation;
      finished_ = false;
      pending_ = true;
      ++paths_;
      return true;
    }
    decisions_.pop_back();
    snapshots_.pop_back();
  }
  finished_ = true;
  pending_ = false;
  return false;
}

bool nextPath(PathCursor& cursor, Verdict) { return cursor.backtrack(); }

}  // namespace overfix::cfg
