#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "overfix/repair/repair.hpp"

namespace overfix::rewrite {

class StaleFile : public Error {
 public:
  explicit StaleFile(const std::string& file) : Error("StaleFile: " + file + " changed since the repair was planned") {}
};

class OverlappingEdits : public Error {
 public:
  using Error::Error;
};

class ReparseFailure : public Error {
 public:
  explicit ReparseFailure(const std::string& why) : Error("ReparseFailure: " + why) {}
};

struct Edit {
  frontend::Span span;
  std::string replacement;
};

/// Content hash used to detect stale plans.
std::string checksum(std::string_view text);

/// Replaces each span; edits must be sorted and disjoint (an empty span is
/// an insertion). Throws OverlappingEdits.
std::string applyEdits(std::string_view text, std::vector<Edit> edits);

struct PatchPlan {
  std::string file;
  std::string baseChecksum;
  std::vector<Edit> edits;
  /// Repaired statements as they sit in the rewritten text.
  std::vector<repair::RepairSite> sites;
  /// Original line -> rewritten line.
  std::function<int(int)> mapLine;
  /// Lines each repair adds, in edit order, and the per-file header lines.
  std::vector<int> linesAddedPerRepair;
  int headerLines = 0;
};

/// One edit per repaired statement plus, when missing, `#include
/// <limits.h>`, `#include <math.h>` and the handler prototype after the
/// last include. Repairs of the same statement collapse to the first one.
PatchPlan planRepairs(const frontend::SourceUnit& unit,
                      const std::vector<std::pair<const repair::FaultReport*, const repair::RepairCandidate*>>& repairs,
                      const std::string& handlerName = "log_or_die");

struct Rewritten {
  std::string text;
  std::string diff;
};

/// Applies the plan to `current`. Throws StaleFile when `current` is not
/// the text the plan was made for and ReparseFailure when the result does
/// not parse.
Rewritten applyPlan(const PatchPlan& plan, std::string_view current);

/// Unified diff (`---`/`+++`/`@@`) with three lines of context.
std::string unifiedDiff(std::string_view before, std::string_view after, const std::string& fromName,
                        const std::string& toName, int context = 3);

/// Writes through a temporary file and rename, keeping `<path>.orig`
/// unless `backup` is false. Serialized per path.
void writeAtomic(const std::string& path, std::string_view text, bool backup = true);

struct Blowup {
  std::size_t locBefore = 0;
  std::size_t locAfter = 0;
  std::ptrdiff_t locAddedTotal = 0;
  double locAddedPercent = 0.0;
  std::vector<int> perRepairLoc;
};

/// Non-blank line counts across the corpus before and after repair.
Blowup measureBlowup(std::size_t locBefore, std::size_t locAfter, std::vector<int> perRepairLoc = {});
Blowup measureBlowup(const std::vector<std::string>& before, const std::vector<std::string>& after,
                     std::vector<int> perRepairLoc = {});

}  // namespace overfix::rewrite
