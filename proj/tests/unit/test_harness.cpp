#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "overfix/frontend/frontend.hpp"
#include "overfix/harness/harness.hpp"

using namespace overfix;
using namespace overfix::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Line numbers (1-based) of every `/* FAULT */` marker, found by plain text
// search.
std::vector<int> markerLines(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (line.find("/* FAULT */") != std::string::npos) out.push_back(n);
  }
  return out;
}

int nonBlankLines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) ++n;
  }
  return n;
}

std::set<int> reportedLines(const ProgramResult& r) {
  std::set<int> out;
  for (const auto& rep : r.reports) out.insert(rep.line);
  return out;
}

const char* kOne =
    "#include <stdlib.h>\n"
    "int main(void)\n"
    "{\n"
    "    int data = rand();\n"
    "    int r;\n"
    "    /* FAULT */\n"
    "    r = data + 1;\n"
    "    return r;\n"
    "}\n";

}  // namespace

TEST(Manifest, SingleAnnotation) {
  auto unit = frontend::loadText("one.c", kOne);
  auto m = scanAnnotations(unit);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], (ExpectedFault{"one.c", "main", 7}));
}

TEST(Manifest, AnnotationWithoutStatement) {
  auto unit = frontend::loadText("bad.c", "int main(void)\n{\n    return 0;\n}\n/* FAULT */\n");
  EXPECT_THROW(scanAnnotations(unit), ManifestError);
}

TEST(Manifest, CorpusMatchesTextSearch) {
  auto m = generateTestCases(OVERFIX_CORPUS);
  std::vector<ExpectedFault> want;
  for (const auto& f : listSources(OVERFIX_CORPUS)) {
    for (int at : markerLines(slurp(fs::path(OVERFIX_CORPUS) / f))) want.push_back({f, "", at + 1});
  }
  ASSERT_EQ(m.size(), want.size());
  EXPECT_EQ(m.size(), 30u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m[i].file, want[i].file);
    EXPECT_EQ(m[i].line, want[i].line);
    EXPECT_FALSE(m[i].function.empty());
  }
}

TEST(Manifest, JsonRoundTrip) {
  auto m = generateTestCases(OVERFIX_CORPUS);
  EXPECT_EQ(manifestFromJson(manifestToJson(m)), m);
  EXPECT_THROW(manifestFromJson(nlohmann::json::object()), ManifestError);
  EXPECT_THROW(manifestFromJson(nlohmann::json::parse(R"([{"file": 3}])")), ManifestError);
}

TEST(RunReport, CorpusIsExact) {
  auto m = generateTestCases(OVERFIX_CORPUS);
  auto results = analyzeCorpus(OVERFIX_CORPUS, {});
  auto r = runReport(results, m);
  EXPECT_EQ(r.expected, m.size());
  EXPECT_EQ(r.truePositivesFound, m.size());
  EXPECT_TRUE(r.missed.empty());
  EXPECT_TRUE(r.spurious.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.exitCode(), 0);
  EXPECT_EQ(r.perProgramTimes.size(), results.size());
}

TEST(RunReport, NoReportsMissesEverything) {
  auto m = generateTestCases(OVERFIX_CORPUS);
  std::vector<ProgramResult> empty;
  for (const auto& f : listSources(OVERFIX_CORPUS)) empty.push_back({f, {}, {}, 0.0, std::nullopt});
  auto r = runReport(empty, m);
  EXPECT_EQ(r.missed.size(), m.size());
  EXPECT_EQ(r.truePositivesFound, 0u);
  EXPECT_EQ(r.exitCode(), 1);
}

TEST(RunReport, UnexpectedReportIsSpurious) {
  auto result = analyzeProgram("one.c", kOne, {});
  ASSERT_FALSE(result.reports.empty());
  auto r = runReport({result}, {});
  EXPECT_EQ(r.spurious.size(), 1u);
  EXPECT_EQ(r.exitCode(), 1);
  auto j = toJson(r);
  EXPECT_EQ(j["spurious"].size(), 1u);
}

TEST(RunReport, AnalysisErrorIsRecorded) {
  auto result = analyzeProgram("broken.c", "int main(void) { return ; ; }}\n", {});
  ASSERT_TRUE(result.error.has_value());
  auto r = runReport({result}, {});
  EXPECT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.exitCode(), 1);
}

TEST(Synth, Deterministic) {
  SynthParams p;
  p.targetLoc = 800;
  p.decoyCount = 5;
  p.rngSeed = 42;
  EXPECT_EQ(synthesizeProgram(3, p), synthesizeProgram(3, p));
  SynthParams q = p;
  q.rngSeed = 43;
  EXPECT_NE(synthesizeProgram(3, p), synthesizeProgram(3, q));
}

TEST(Synth, SizeParsesAndHasOneFault) {
  for (int seed = 1; seed <= kSeedCount; ++seed) {
    SynthParams p;
    p.targetLoc = 6000;
    p.callChainLen = 3;
    p.loopIters = 4;
    p.decoyCount = 20;
    p.rngSeed = static_cast<std::uint64_t>(seed);
    std::string text = synthesizeProgram(seed, p);
    int loc = nonBlankLines(text);
    EXPECT_GE(loc, 5700) << seed;
    EXPECT_LE(loc, 6300) << seed;

    auto markers = markerLines(text);
    ASSERT_EQ(markers.size(), 1u);
    auto result = analyzeProgram("synth.c", text, {});
    ASSERT_FALSE(result.error) << *result.error;
    EXPECT_EQ(reportedLines(result), std::set<int>{markers[0] + 1}) << seed;
  }
}

TEST(Synth, LongestChainIsFound) {
  SynthParams p;
  p.callChainLen = 8;
  std::string text = synthesizeProgram(1, p);
  auto result = analyzeProgram("synth.c", text, {});
  EXPECT_EQ(reportedLines(result), std::set<int>{markerLines(text)[0] + 1});
}

TEST(Synth, InfeasibleParameters) {
  SynthParams p;
  EXPECT_THROW(synthesizeProgram(0, p), ParamsInfeasible);
  EXPECT_THROW(synthesizeProgram(kSeedCount + 1, p), ParamsInfeasible);
  p.targetLoc = 5;
  EXPECT_THROW(synthesizeProgram(1, p), ParamsInfeasible);
  p = {};
  p.loopIters = 11;
  EXPECT_THROW(synthesizeProgram(1, p), ParamsInfeasible);
  p = {};
  p.callChainLen = 9;
  EXPECT_THROW(synthesizeProgram(1, p), ParamsInfeasible);
  p = {};
  p.targetLoc = kMaxSynthLoc + 1;
  EXPECT_THROW(synthesizeProgram(1, p), ParamsInfeasible);
}

TEST(Synth, MinimalInstanceIsQuick) {
  SynthParams p;
  p.targetLoc = 30;
  auto t0 = std::chrono::steady_clock::now();
  std::string text = synthesizeProgram(1, p);
  auto result = analyzeProgram("synth.c", text, {});
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(result.reports.size(), 1u);
  EXPECT_LT(s, 1.0);
}

TEST(Synth, RepairedProgramIsClean) {
  SynthParams p;
  p.targetLoc = 400;
  p.decoyCount = 4;
  for (int seed = 1; seed <= kSeedCount; ++seed) {
    std::string text = synthesizeProgram(seed, p);
    auto fr = repairText("synth.c", text, {});
    ASSERT_FALSE(fr.chosen.empty()) << seed;
    auto again = analyzeProgram("synth.c", fr.result.text, {});
    EXPECT_FALSE(again.error);
    EXPECT_TRUE(again.reports.empty()) << seed;
  }
}

TEST(RepairText, HonorsProblemFilter) {
  auto all = repairText("one.c", kOne, {});
  ASSERT_EQ(all.reports.size(), 1u);
  RepairOptions none;
  none.problems = {"IOF-00000000-1-ovf"};
  auto fr = repairText("one.c", kOne, {}, none);
  EXPECT_TRUE(fr.chosen.empty());
  EXPECT_EQ(fr.result.text, kOne);
}

TEST(Bench, SkippedWithoutCompiler) {
  auto b = benchRuntime({{kOne, kOne}}, {"one.c"}, "");
  EXPECT_TRUE(b.skipped);
  EXPECT_TRUE(toJson(b)["skipped"].get<bool>());
}
