#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "overfix/frontend/frontend.hpp"
#include "overfix/rewrite/rewrite.hpp"

using namespace overfix;
using namespace overfix::rewrite;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, std::string_view text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

fs::path scratchDir(const std::string& tag) {
  auto d = fs::temp_directory_path() / ("overfix_rw_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

struct Planned {
  std::unique_ptr<frontend::SourceUnit> unit;
  std::vector<checker::FaultReport> reports;
  std::vector<std::vector<repair::RepairCandidate>> candidates;
  PatchPlan plan;
};

Planned planAll(const std::string& path, const std::string& text) {
  Planned p;
  p.unit = std::make_unique<frontend::SourceUnit>(frontend::loadText(path, text));
  auto solver = smt::makeSolver({});
  p.reports = checker::analyzeUnit(*p.unit, {}, *solver).reports;
  std::vector<std::pair<const checker::FaultReport*, const repair::RepairCandidate*>> picks;
  for (const auto& r : p.reports) {
    p.candidates.push_back(repair::generateCandidates(*p.unit, r, frontend::LimitsTable::standard(), *solver));
  }
  for (std::size_t i = 0; i < p.reports.size(); ++i) {
    if (const auto* c = repair::pick(p.candidates[i])) picks.emplace_back(&p.reports[i], c);
  }
  p.plan = planRepairs(*p.unit, picks);
  return p;
}

std::vector<std::string> diffBody(const std::string& diff, char mark) {
  std::vector<std::string> out;
  std::istringstream in(diff);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("---", 0) == 0 || line.rfind("+++", 0) == 0) continue;
    if (!line.empty() && line[0] == mark) out.push_back(line.substr(1));
  }
  return out;
}

const char* kWorkedWithHeader =
    "#include <limits.h>\n"
    "#include <math.h>\n"
    "#include <stdlib.h>\n"
    "void log_or_die(char *file, char *fault, int line, int die);\n"
    "int main(void) {\n"
    "  int a;\n"
    "  int b = rand();\n"
    "  a = b * b;\n"
    "  return a;\n"
    "}\n";

}  // namespace

TEST(RewriteEdits, AppliesSortedOrUnsorted) {
  EXPECT_EQ(applyEdits("abcdef", {{{4, 5}, "E"}, {{1, 2}, "B"}}), "aBcdEf");
  EXPECT_EQ(applyEdits("abc", {{{3, 3}, "!"}, {{0, 0}, ">"}}), ">abc!");
}

TEST(RewriteEdits, OverlapIsRejected) {
  EXPECT_THROW(applyEdits("abcdef", {{{1, 4}, "x"}, {{3, 5}, "y"}}), OverlappingEdits);
  EXPECT_THROW(applyEdits("abcdef", {{{1, 4}, "x"}, {{1, 4}, "y"}}), OverlappingEdits);
  EXPECT_THROW(applyEdits("abc", {{{2, 9}, "x"}}), Error);
}

TEST(RewritePlan, WorkedExampleDiffIsOneOutFourIn) {
  auto p = planAll("ex.c", kWorkedWithHeader);
  ASSERT_EQ(p.reports.size(), 1u);
  EXPECT_EQ(p.plan.headerLines, 0);
  auto out = applyPlan(p.plan, p.unit->text);
  auto removed = diffBody(out.diff, '-');
  auto added = diffBody(out.diff, '+');
  ASSERT_EQ(removed.size(), 1u) << out.diff;
  ASSERT_EQ(added.size(), 4u) << out.diff;
  EXPECT_EQ(removed[0], "  a = b * b;");
  EXPECT_EQ(added[0], "  if ((b > 0 && b >= sqrt(INT_MAX)) || (b < 0 && b < -sqrt(INT_MAX))) {");
  EXPECT_EQ(added[1], "    log_or_die(\"ex.c\", \"" + p.reports[0].problemId + "\", 8, 0);");
  EXPECT_EQ(added[2], "  }");
  EXPECT_EQ(added[3], "  else { a = b * b; }");
  EXPECT_NE(out.diff.find("--- a/ex.c\n+++ b/ex.c\n"), std::string::npos);
  EXPECT_NE(out.diff.find("@@ -5,"), std::string::npos) << out.diff;
}

TEST(RewritePlan, HeaderAddedOnceWhenMissing) {
  auto p = planAll("h.c",
                   "#include <stdlib.h>\nint main(void) {\n  int b = rand();\n  int a = b * b;\n"
                   "  int c = b * b;\n  return a + c;\n}\n");
  ASSERT_EQ(p.reports.size(), 2u);
  EXPECT_EQ(p.plan.headerLines, 3);
  auto out = applyPlan(p.plan, p.unit->text);
  EXPECT_EQ(out.text.find("#include <stdlib.h>\n#include <limits.h>\n#include <math.h>\n"
                          "void log_or_die(char *file, char *fault, int line, int die);\n"),
            0u);
  auto first = out.text.find("#include <math.h>");
  EXPECT_EQ(out.text.find("#include <math.h>", first + 1), std::string::npos);
  ASSERT_EQ(p.plan.sites.size(), 2u);
  // Both sites name the guarded statement's line in the new text.
  auto lines = [&](int n) {
    std::istringstream in(out.text);
    std::string l;
    for (int i = 0; i < n; ++i) std::getline(in, l);
    return l;
  };
  for (const auto& s : p.plan.sites) {
    EXPECT_EQ(lines(s.guardLine).rfind("  if (", 0), 0u) << lines(s.guardLine);
    EXPECT_NE(lines(s.statementLine).find("else {"), std::string::npos);
    EXPECT_EQ(s.statementLine, s.guardLine + 3);
  }
  EXPECT_EQ(p.plan.mapLine(1), 1);
  EXPECT_EQ(p.plan.mapLine(3), 6);
}

TEST(RewritePlan, NoMathHeaderWithoutSqrt) {
  auto p = planAll("n.c", "int f(int s1) {\n  int r = s1 + 7;\n  return r;\n}\n");
  auto out = applyPlan(p.plan, p.unit->text);
  EXPECT_EQ(out.text.find("math.h"), std::string::npos);
  EXPECT_EQ(out.text.find("#include <limits.h>\nvoid log_or_die(char *file, char *fault, int line, int die);\n"), 0u);
}

TEST(RewritePlan, StaleTextIsRejected) {
  auto p = planAll("ex.c", kWorkedWithHeader);
  auto once = applyPlan(p.plan, p.unit->text);
  EXPECT_THROW(applyPlan(p.plan, once.text), StaleFile);
  std::string edited = p.unit->text;
  edited += "\n";
  EXPECT_THROW(applyPlan(p.plan, edited), StaleFile);
}

TEST(RewritePlan, BytesOutsideEditsArePreserved) {
  std::string src = std::string(kWorkedWithHeader) + "/* tail\t comment */\r\n";
  auto p = planAll("ex.c", src);
  auto out = applyPlan(p.plan, src);
  ASSERT_EQ(p.plan.edits.size(), 1u);
  const auto& e = p.plan.edits[0];
  EXPECT_EQ(out.text.substr(0, e.span.begin), src.substr(0, e.span.begin));
  std::string tail = src.substr(e.span.end);
  EXPECT_EQ(out.text.substr(out.text.size() - tail.size()), tail);
}

TEST(RewritePlan, IndentationFollowsTheStatement) {
  auto p = planAll("i.c",
                   "int f(int b, int c) {\n  int a = 0;\n  if (c > 3) {\n\tif (b > 1) {\n\t    a = b * b;\n\t}\n  }\n"
                   "  return a;\n}\n");
  auto out = applyPlan(p.plan, p.unit->text);
  EXPECT_NE(out.text.find("\n\t    if ("), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("\n\t      log_or_die("), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("\n\t    }\n\t    else { a = b * b; }"), std::string::npos) << out.text;
}

TEST(RewritePlan, ReparseFailureSurfaces) {
  auto p = planAll("ex.c", kWorkedWithHeader);
  p.plan.edits[0].replacement += " if (";
  EXPECT_THROW(applyPlan(p.plan, p.unit->text), ReparseFailure);
}

TEST(RewriteDiff, IdenticalTextsGiveEmptyDiff) {
  EXPECT_EQ(unifiedDiff("a\nb\n", "a\nb\n", "a/x", "b/x"), "");
}

TEST(RewriteDiff, MissingFinalNewlineIsMarked) {
  auto d = unifiedDiff("a\nb", "a\nc", "a/x", "b/x");
  EXPECT_EQ(d,
            "--- a/x\n+++ b/x\n@@ -1,2 +1,2 @@\n a\n-b\n\\ No newline at end of file\n+c\n"
            "\\ No newline at end of file\n");
}

// The system `patch` tool is the oracle: applying our diff to the old text
// must give the new text byte for byte.
TEST(RewriteDiff, RandomDiffsRoundTripThroughPatch) {
  if (std::system("patch --version >/dev/null 2>&1") != 0) GTEST_SKIP() << "patch not installed";
  auto dir = scratchDir("patch");
  std::mt19937 rng(20240611);
  const char* words[] = {"int a;", "  x = y;", "}", "", "  return 0;", "{", "/* c */", "\tq++;"};
  auto randomText = [&](int n) {
    std::string t;
    for (int i = 0; i < n; ++i) {
      t += words[rng() % 8];
      t += '\n';
    }
    if (rng() % 4 == 0 && !t.empty()) t.pop_back();
    return t;
  };
  for (int iter = 0; iter < 40; ++iter) {
    std::string before = randomText(static_cast<int>(rng() % 30));
    // Mutate: drop, insert and change a few lines.
    std::vector<std::string> lines;
    std::istringstream in(before);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      std::size_t at = lines.empty() ? 0 : rng() % (lines.size() + 1);
      switch (rng() % 3) {
        case 0:
          if (at < lines.size()) lines.erase(lines.begin() + static_cast<long>(at));
          break;
        case 1: lines.insert(lines.begin() + static_cast<long>(at), words[rng() % 8]); break;
        default:
          if (at < lines.size()) lines[at] += " // m";
      }
    }
    std::string after;
    for (const auto& x : lines) after += x + "\n";
    if (rng() % 4 == 0 && !after.empty()) after.pop_back();

    std::string diff = unifiedDiff(before, after, "a/f.c", "b/f.c");
    if (before == after) {
      EXPECT_EQ(diff, "");
      continue;
    }
    spit(dir / "f.c", before);
    spit(dir / "d.patch", diff);
    std::string cmd = "cd '" + dir.string() + "' && patch -s -p1 < d.patch >/dev/null 2>&1";
    ASSERT_EQ(std::system(cmd.c_str()), 0) << "iteration " << iter << "\n" << diff;
    ASSERT_EQ(slurp(dir / "f.c"), after) << "iteration " << iter << "\n" << diff;
  }
  fs::remove_all(dir);
}

TEST(RewriteDiff, RepairDiffAppliesWithPatch) {
  if (std::system("patch --version >/dev/null 2>&1") != 0) GTEST_SKIP() << "patch not installed";
  auto dir = scratchDir("repair");
  std::string src = "#include <stdlib.h>\nint main(void) {\n  int b = rand();\n  int a = b * b;\n  return a;\n}\n";
  auto p = planAll("f.c", src);
  auto out = applyPlan(p.plan, src);
  spit(dir / "f.c", src);
  spit(dir / "d.patch", out.diff);
  std::string cmd = "cd '" + dir.string() + "' && patch -s -p1 < d.patch >/dev/null 2>&1";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(dir / "f.c"), out.text);
  fs::remove_all(dir);
}

TEST(RewriteWrite, AtomicWriteKeepsBackup) {
  auto dir = scratchDir("write");
  auto f = dir / "x.c";
  spit(f, "old\n");
  writeAtomic(f.string(), "new\n");
  EXPECT_EQ(slurp(f), "new\n");
  EXPECT_EQ(slurp(dir / "x.c.orig"), "old\n");
  auto g = dir / "y.c";
  spit(g, "old\n");
  writeAtomic(g.string(), "new\n", false);
  EXPECT_EQ(slurp(g), "new\n");
  EXPECT_FALSE(fs::exists(dir / "y.c.orig"));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 3u);  // no temporaries left behind
  fs::remove_all(dir);
}

TEST(RewriteBlowup, CountsAndPercent) {
  auto b = measureBlowup(400, 404, {4});
  EXPECT_EQ(b.locAddedTotal, 4);
  EXPECT_DOUBLE_EQ(b.locAddedPercent, 1.0);
  auto z = measureBlowup(250, 250);
  EXPECT_EQ(z.locAddedTotal, 0);
  EXPECT_DOUBLE_EQ(z.locAddedPercent, 0.0);
  auto t = measureBlowup(std::vector<std::string>{"a\n\nb\n", "  \nc"}, std::vector<std::string>{"a\nx\n\nb\n", "c\n"});
  EXPECT_EQ(t.locBefore, 3u);
  EXPECT_EQ(t.locAfter, 4u);
}

TEST(RewriteBlowup, WorkedExampleAddsThreeLines) {
  auto p = planAll("ex.c", kWorkedWithHeader);
  auto out = applyPlan(p.plan, p.unit->text);
  auto b = measureBlowup(std::vector<std::string>{p.unit->text}, std::vector<std::string>{out.text});
  EXPECT_EQ(b.locAddedTotal, 3);
}
