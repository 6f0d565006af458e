#include "overfix/rewrite/rewrite.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::rewrite {

std::string checksum(std::string_view text) { return fnv1aHex(text); }

std::string applyEdits(std::string_view text, std::vector<Edit> edits) {
  std::stable_sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) { return a.span.begin < b.span.begin; });
  std::string out;
  std::uint32_t pos = 0;
  for (const auto& e : edits) {
    if (e.span.begin < pos || e.span.end > text.size() || e.span.end < e.span.begin) {
      throw OverlappingEdits("OverlappingEdits: edit at byte " + std::to_string(e.span.begin) +
                             " overlaps the previous one or leaves the file");
    }
    out.append(text.substr(pos, e.span.begin - pos));
    out += e.replacement;
    pos = e.span.end;
  }
  out.append(text.substr(pos));
  return out;
}

namespace {

int countLines(std::string_view s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')) + 1; }

bool declaresFunction(const frontend::SourceUnit& unit, const std::string& name) {
  for (const auto& n : unit.ast) {
    if (n->kind == frontend::NodeKind::FunctionDef && n->name == name) return true;
  }
  return false;
}

bool includes(const frontend::SourceUnit& unit, std::string_view header) {
  for (int l : unit.includeLines) {
    std::uint32_t b = unit.lines.lineStart(l);
    std::uint32_t e = l < unit.lines.lineCount() ? unit.lines.lineStart(l + 1) : unit.text.size();
    if (unit.text.substr(b, e - b).find(header) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

PatchPlan planRepairs(const frontend::SourceUnit& unit,
                      const std::vector<std::pair<const repair::FaultReport*, const repair::RepairCandidate*>>& repairs,
                      const std::string& handlerName) {
  PatchPlan plan;
  plan.file = unit.path;
  plan.baseChecksum = checksum(unit.text);

  std::vector<std::pair<const repair::FaultReport*, const repair::RepairCandidate*>> chosen;
  for (const auto& r : repairs) {
    bool dup = std::any_of(chosen.begin(), chosen.end(), [&](const auto& c) {
      return c.second->insertionSpan == r.second->insertionSpan;
    });
    if (!dup) chosen.push_back(r);
  }
  std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
    return a.second->insertionSpan.begin < b.second->insertionSpan.begin;
  });

  std::string header;
  bool sqrtUsed = std::any_of(chosen.begin(), chosen.end(), [](const auto& c) { return c.second->usesSqrt; });
  bool limitsUsed = std::any_of(chosen.begin(), chosen.end(), [](const auto& c) {
    return c.second->guardText.find("_MAX") != std::string::npos ||
           c.second->guardText.find("_MIN") != std::string::npos;
  });
  if (limitsUsed && !includes(unit, "limits.h")) header += "#include <limits.h>\n";
  if (sqrtUsed && !includes(unit, "math.h")) header += "#include <math.h>\n";
  if (!chosen.empty() && !declaresFunction(unit, handlerName)) {
    header += "void " + handlerName + "(char *file, char *fault, int line, int die);\n";
  }
  // Line (1-based, original numbering) the header is inserted in front of.
  int headerAt = unit.includeLines.empty() ? 1 : *std::max_element(unit.includeLines.begin(), unit.includeLines.end()) + 1;
  if (!header.empty()) {
    std::uint32_t off = headerAt <= unit.lines.lineCount() ? unit.lines.lineStart(headerAt)
                                                           : static_cast<std::uint32_t>(unit.text.size());
    if (off == unit.text.size() && !unit.text.empty() && unit.text.back() != '\n') header = "\n" + header;
    plan.edits.push_back({{off, off}, header});
    plan.headerLines = countLines(header) - 1;
  }

  // (first original line after the change, delta) pairs in order.
  std::vector<std::pair<int, int>> shifts;
  if (plan.headerLines) shifts.emplace_back(headerAt, plan.headerLines);
  struct Pending {
    int startLine;
    int guardOffset;
    const repair::FaultReport* report;
  };
  std::vector<Pending> pending;
  for (const auto& [report, cand] : chosen) {
    plan.edits.push_back({cand->insertionSpan, cand->renderedText});
    int oldLines = cand->endLine - cand->startLine + 1;
    int added = countLines(cand->renderedText) - oldLines;
    plan.linesAddedPerRepair.push_back(added);
    shifts.emplace_back(cand->endLine + 1, added);
    pending.push_back({cand->startLine, cand->guardLineOffset, report});
  }
  plan.mapLine = [shifts](int line) {
    int out = line;
    for (const auto& [from, delta] : shifts) {
      if (line >= from) out += delta;
    }
    return out;
  };
  for (const auto& p : pending) {
    repair::RepairSite site;
    site.original = *p.report;
    site.guardLine = plan.mapLine(p.startLine) + p.guardOffset;
    site.statementLine = site.guardLine + 3;
    site.mapLine = plan.mapLine;
    plan.sites.push_back(std::move(site));
  }
  std::stable_sort(plan.edits.begin(), plan.edits.end(),
                   [](const Edit& a, const Edit& b) { return a.span.begin < b.span.begin; });
  return plan;
}

Rewritten applyPlan(const PatchPlan& plan, std::string_view current) {
  if (checksum(current) != plan.baseChecksum) throw StaleFile(plan.file);
  Rewritten out;
  out.text = applyEdits(current, plan.edits);
  try {
    frontend::loadText(plan.file, out.text);
  } catch (const Error& e) {
    throw ReparseFailure(e.what());
  }
  std::string name = std::filesystem::path(plan.file).filename().string();
  out.diff = unifiedDiff(current, out.text, "a/" + name, "b/" + name);
  return out;
}

namespace {

/// Lines with their terminator, so a missing final newline compares unequal.
std::vector<std::string_view> rawLines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

enum class DiffOp { Keep, Del, Add };

std::vector<DiffOp> diffOps(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  std::size_t pre = 0;
  while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) ++suf;
  std::size_t n = a.size() - pre - suf;
  std::size_t m = b.size() - pre - suf;

  std::vector<DiffOp> ops(pre, DiffOp::Keep);
  if (n * m <= 16'000'000) {
    // LCS table over the differing middle.
    std::vector<std::uint32_t> t((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return t[i * (m + 1) + j]; };
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = m; j-- > 0;) {
        at(i, j) = a[pre + i] == b[pre + j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
      }
    }
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
      if (i < n && j < m && a[pre + i] == b[pre + j]) {
        ops.push_back(DiffOp::Keep);
        ++i, ++j;
      } else if (i < n && (j == m || at(i + 1, j) >= at(i, j + 1))) {
        ops.push_back(DiffOp::Del);
        ++i;
      } else {
        ops.push_back(DiffOp::Add);
        ++j;
      }
    }
  } else {
    ops.insert(ops.end(), n, DiffOp::Del);
    ops.insert(ops.end(), m, DiffOp::Add);
  }
  ops.insert(ops.end(), suf, DiffOp::Keep);
  return ops;
}

void emitLine(std::string& out, char mark, std::string_view line) {
  out += mark;
  if (!line.empty() && line.back() == '\n') {
    out.append(line);
  } else {
    out.append(line);
    out += "\n\\ No newline at end of file\n";
  }
}

}  // namespace

std::string unifiedDiff(std::string_view before, std::string_view after, const std::string& fromName,
                        const std::string& toName, int context) {
  auto a = rawLines(before);
  auto b = rawLines(after);
  auto ops = diffOps(a, b);
  std::vector<std::size_t> changes;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k] != DiffOp::Keep) changes.push_back(k);
  }
  if (changes.empty()) return "";

  // Old/new line index before each op.
  std::vector<std::size_t> ai(ops.size() + 1), bi(ops.size() + 1);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    ai[k + 1] = ai[k] + (ops[k] != DiffOp::Add);
    bi[k + 1] = bi[k] + (ops[k] != DiffOp::Del);
  }

  std::string out = "--- " + fromName + "\n+++ " + toName + "\n";
  auto ctx = static_cast<std::size_t>(context);
  std::size_t c = 0;
  while (c < changes.size()) {
    std::size_t first = changes[c];
    std::size_t last = first;
    while (c + 1 < changes.size() && changes[c + 1] - last <= 2 * ctx + 1) last = changes[++c];
    ++c;
    std::size_t from = first >= ctx ? first - ctx : 0;
    std::size_t to = std::min(ops.size(), last + 1 + ctx);
    std::size_t oldCount = ai[to] - ai[from];
    std::size_t newCount = bi[to] - bi[from];
    auto range = [](std::size_t start, std::size_t count) {
      std::size_t s = count == 0 ? start : start + 1;
      return count == 1 ? std::to_string(s) : std::to_string(s) + "," + std::to_string(count);
    };
    out += "@@ -" + range(ai[from], oldCount) + " +" + range(bi[from], newCount) + " @@\n";
    for (std::size_t k = from; k < to; ++k) {
      switch (ops[k]) {
        case DiffOp::Keep: emitLine(out, ' ', a[ai[k]]); break;
        case DiffOp::Del: emitLine(out, '-', a[ai[k]]); break;
        case DiffOp::Add: emitLine(out, '+', b[bi[k]]); break;
      }
    }
  }
  return out;
}

namespace {

std::mutex& pathLock(const std::string& path) {
  static std::mutex registry;
  static std::map<std::string, std::unique_ptr<std::mutex>> locks;
  std::lock_guard g(registry);
  auto& m = locks[std::filesystem::weakly_canonical(path).string()];
  if (!m) m = std::make_unique<std::mutex>();
  return *m;
}

}  // namespace

void writeAtomic(const std::string& path, std::string_view text, bool backup) {
  std::lock_guard lock(pathLock(path));
  namespace fs = std::filesystem;
  if (backup && fs::exists(path)) fs::copy_file(path, path + ".orig", fs::copy_options::overwrite_existing);
  std::string tmp = path + ".tmp" + std::to_string(std::hash<std::string_view>{}(text) & 0xffff);
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw Error("cannot write " + tmp);
  }
  fs::rename(tmp, path);
}

Blowup measureBlowup(std::size_t locBefore, std::size_t locAfter, std::vector<int> perRepairLoc) {
  Blowup b;
  b.locBefore = locBefore;
  b.locAfter = locAfter;
  b.locAddedTotal = static_cast<std::ptrdiff_t>(locAfter) - static_cast<std::ptrdiff_t>(locBefore);
  b.locAddedPercent = locBefore ? 100.0 * static_cast<double>(b.locAddedTotal) / static_cast<double>(locBefore) : 0.0;
  b.perRepairLoc = std::move(perRepairLoc);
  return b;
}

Blowup measureBlowup(const std::vector<std::string>& before, const std::vector<std::string>& after,
                     std::vector<int> perRepairLoc) {
  std::size_t lb = 0, la = 0;
  for (const auto& t : before) lb += countNonBlankLines(t);
  for (const auto& t : after) la += countNonBlankLines(t);
  return measureBlowup(lb, la, std::move(perRepairLoc));
}

}  // namespace overfix::rewrite
