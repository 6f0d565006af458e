// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "oracles/expr_eval.hpp"
#include "oracles/path_oracle.hpp"
#include "oracles/random_programs.hpp"
#include "overfix/cfg/paths.hpp"
#include "overfix/frontend/frontend.hpp"
#include "overfix/harness/harness.hpp"

using namespace overfix;
namespace fs = std::filesystem;
using frontend::AstNode;
using frontend::CType;
using frontend::LimitsTable;
using frontend::NodeKind;

namespace {

// Pinned limits.
constexpr double kGuardOracleSeconds = 10.0;
constexpr double kCorpusSeconds = 60.0;
constexpr double kSynthSeconds = 300.0;
constexpr double kMaxBlowupPercent = 2.0;
constexpr int kTemplateLines = 3;
constexpr int kSynthLoc = 6000;
constexpr int kRandomFunctions = 100;
const char* const kWorkedGuard = "(b > 0 && b >= sqrt(INT_MAX)) || (b < 0 && b < -sqrt(INT_MAX))";

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(prec);
  s << v;
  return s.str();
}

struct Analyzed {
  std::unique_ptr<frontend::SourceUnit> unit;
  std::vector<checker::FaultReport> reports;
};

Analyzed analyze(const std::string& path, const std::string& text, const symex::AnalysisConfig& cfg) {
  Analyzed a;
  a.unit = std::make_unique<frontend::SourceUnit>(frontend::loadText(path, text));
  auto solver = smt::makeSolver({});
  a.reports = checker::analyzeUnit(*a.unit, cfg, *solver).reports;
  return a;
}

// ---------------------------------------------------------------------------

Outcome guardOracle() {
  auto t0 = std::chrono::steady_clock::now();
  LimitsTable analog = LimitsTable::analog(8);
  symex::AnalysisConfig cfg;
  cfg.table = analog;
  struct Case {
    const char* family;
    const char* stmt;
    bool two;
    bool signedOnly;
    std::function<long long(long long, long long)> value;
  };
  const std::vector<Case> cases = {
      {"AddConst", "r = x + 1;", false, false, [](long long x, long long) { return x + 1; }},
      {"MulNegConst", "r = x * -2;", false, true, [](long long x, long long) { return x * -2; }},
      {"MulEqual", "r = x * x;", false, false, [](long long x, long long) { return x * x; }},
      {"GenericAdd", "r = x + y;", true, false, [](long long x, long long y) { return x + y; }},
      {"GenericMul", "r = x * y;", true, false, [](long long x, long long y) { return x * y; }},
  };
  long long points = 0, mismatches = 0;
  Outcome out;
  for (CType t : frontend::kIntegerTypes) {
    std::string tn(frontend::typeName(t));
    auto b = analog.bounds(t);
    for (const auto& c : cases) {
      if (c.signedOnly && !frontend::isSigned(t)) continue;
      std::vector<std::string> params{"x"};
      if (c.two) params.push_back("y");
      std::string sig;
      for (std::size_t i = 0; i < params.size(); ++i) sig += (i ? ", " : "") + tn + " " + params[i];
      auto a = analyze("g.c", "int f(" + sig + ") {\n  " + tn + " r;\n  " + c.stmt + "\n  return 0;\n}\n", cfg);
      if (a.reports.empty()) return {false, tn + " '" + c.stmt + "' not reported"};
      auto solver = smt::makeSolver({});
      auto cands = repair::generateCandidates(*a.unit, a.reports[0], analog, *solver);
      const auto* best = repair::pick(cands);
      if (!best) return {false, tn + " '" + c.stmt + "' has no valid candidate"};
      if (best->patternId.rfind(c.family, 0) != 0) {
        return {false, tn + " '" + c.stmt + "' picked " + best->patternId};
      }
      oracle::GuardEvaluator guard(best->guardText, params, t, analog);
      long long lo = static_cast<long long>(b.minVal), hi = static_cast<long long>(b.maxVal);
      for (long long x = lo; x <= hi; ++x) {
        for (long long y = c.two ? lo : 0; y <= (c.two ? hi : 0); ++y) {
          long long v = c.value(x, y);
          std::map<std::string, long long> env{{"x", x}};
          if (c.two) env["y"] = y;
          ++points;
          if (guard(env) != (v < lo || v > hi)) ++mismatches;
        }
      }
    }
  }
  double s = since(t0);
  out.pass = mismatches == 0 && s < kGuardOracleSeconds;
  out.detail = std::to_string(points) + " points, " + std::to_string(mismatches) + " mismatches, " + fmt(s) +
               " s (limit " + fmt(kGuardOracleSeconds, 0) + " s)";
  return out;
}

// ---------------------------------------------------------------------------

Outcome detection() {
  auto t0 = std::chrono::steady_clock::now();
  auto manifest = harness::generateTestCases(OVERFIX_CORPUS);
  auto results = harness::analyzeCorpus(OVERFIX_CORPUS, {});
  auto r = harness::runReport(results, manifest);
  double s = since(t0);

  // Every report sits on the line after an annotation.
  std::set<std::pair<std::string, int>> annotated;
  for (const auto& m : manifest) annotated.insert({m.file, m.line});
  int offLine = 0;
  for (const auto& p : results) {
    for (const auto& rep : p.reports) offLine += !annotated.count({p.file, rep.line});
  }
  Outcome out;
  out.pass = r.missed.empty() && r.spurious.empty() && r.errors.empty() && offLine == 0 &&
             r.truePositivesFound == manifest.size() && s < kCorpusSeconds;
  out.detail = std::to_string(results.size()) + " programs, expected " + std::to_string(r.expected) + ", found " +
               std::to_string(r.truePositivesFound) + ", missed " + std::to_string(r.missed.size()) +
               ", spurious " + std::to_string(r.spurious.size()) + ", off-line " + std::to_string(offLine) +
               ", errors " + std::to_string(r.errors.size()) + ", " + fmt(s) + " s (limit " +
               fmt(kCorpusSeconds, 0) + " s)";
  return out;
}

// ---------------------------------------------------------------------------
// Corpus-wide repair, shared by the repair criteria.

struct CorpusRepair {
  fs::path dir;
  std::vector<std::string> files;
  std::vector<std::string> before, after;
  std::vector<harness::FileRepair> repairs;
  std::string error;
};

CorpusRepair& corpusRepair() {
  static CorpusRepair cr = [] {
    CorpusRepair c;
    c.dir = fs::temp_directory_path() / ("overfix_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(c.dir);
    fs::create_directories(c.dir);
    c.files = harness::listSources(OVERFIX_CORPUS);
    for (const auto& f : c.files) {
      std::string text = slurp(fs::path(OVERFIX_CORPUS) / f);
      c.before.push_back(text);
      try {
        auto fr = harness::repairText(f, text, {});
        c.after.push_back(fr.result.text);
        c.repairs.push_back(std::move(fr));
      } catch (const std::exception& e) {
        c.error += f + ": " + e.what() + "; ";
        c.after.push_back(text);
        c.repairs.emplace_back();
      }
      std::ofstream(c.dir / f, std::ios::binary) << c.after.back();
    }
    return c;
  }();
  return cr;
}

std::size_t totalReports(const std::vector<harness::ProgramResult>& results, std::size_t& errors) {
  std::size_t n = 0;
  for (const auto& r : results) {
    n += r.reports.size();
    errors += r.error.has_value();
  }
  return n;
}

Outcome fixpoint() {
  auto& cr = corpusRepair();
  std::size_t applied = 0, unrepaired = 0, edits = 0;
  for (const auto& fr : cr.repairs) {
    applied += fr.chosen.size();
    edits += fr.plan.sites.size();
    unrepaired += fr.reports.size() - fr.chosen.size();
  }
  std::size_t errors = 0;
  std::size_t second = totalReports(harness::analyzeCorpus(cr.dir.string(), {}), errors);

  // A further repair pass must find nothing to do.
  std::size_t changed = 0;
  for (std::size_t i = 0; i < cr.files.size(); ++i) {
    auto again = harness::repairText(cr.files[i], cr.after[i], {});
    changed += again.result.text != cr.after[i];
  }
  std::size_t third = totalReports(harness::analyzeCorpus(cr.dir.string(), {}), errors);

  Outcome out;
  out.pass = cr.error.empty() && applied > 0 && unrepaired == 0 && second == 0 && third == 0 && changed == 0 &&
             errors == 0;
  out.detail = std::to_string(applied) + " reports repaired by " + std::to_string(edits) + " edits, " +
               std::to_string(unrepaired) +
               " left unrepaired; second analysis " + std::to_string(second) + " reports, third analysis " +
               std::to_string(third) + " reports, " + std::to_string(changed) + " files changed by a second pass" +
               (cr.error.empty() ? "" : "; " + cr.error);
  return out;
}

// Guard `if` statements of the rewritten unit, by line.
void collectIfs(const AstNode& n, const frontend::SourceUnit& u, std::map<int, const AstNode*>& out) {
  if (n.kind == NodeKind::If) out.emplace(u.lineOf(n), &n);
  for (const auto& c : n.children) {
    if (c) collectIfs(*c, u, out);
  }
}

void collectIdents(const AstNode& n, std::map<std::string, CType>& out) {
  if (n.kind == NodeKind::Ident && !n.isNamedConstant) out.emplace(n.name, n.resolvedType);
  for (const auto& c : n.children) {
    if (c) collectIdents(*c, out);
  }
}

// Mathematical value assigned by an Assign node, or nullopt.
std::optional<double> assignedValue(const AstNode& a, const std::map<std::string, long long>& env,
                                    const LimitsTable& table) {
  auto target = oracle::evalExpr(*a.child(0), env, table);
  if (a.op == "++") return target ? std::optional(*target + 1) : std::nullopt;
  if (a.op == "--") return target ? std::optional(*target - 1) : std::nullopt;
  auto v = oracle::evalExpr(*a.child(1), env, table);
  if (!v) return v;
  if (a.op == "=") return v;
  if (!target) return target;
  if (a.op == "+=") return *target + *v;
  if (a.op == "-=") return *target - *v;
  if (a.op == "*=") return *target * *v;
  return std::nullopt;
}

Outcome guardExactness() {
  auto& cr = corpusRepair();
  LimitsTable analog = LimitsTable::analog(8);
  std::size_t checked = 0, violations = 0;
  long long points = 0;
  std::string first;
  for (std::size_t i = 0; i < cr.files.size(); ++i) {
    const auto& fr = cr.repairs[i];
    if (fr.chosen.empty()) continue;
    auto unit = frontend::loadText(cr.files[i], cr.after[i]);
    std::map<int, const AstNode*> ifs;
    for (const auto& top : unit.ast) collectIfs(*top, unit, ifs);
    for (const auto& site : fr.plan.sites) {
      auto it = ifs.find(site.guardLine);
      const AstNode* stmt = nullptr;
      if (it != ifs.end() && it->second->child(2)) {
        const AstNode* e = it->second->child(2);
        stmt = e->kind == NodeKind::Block && e->children.size() == 1 ? e->child(0) : e;
      }
      if (!stmt || stmt->kind != NodeKind::Assign) {
        ++violations;
        if (first.empty()) first = cr.files[i] + ": guarded statement not found";
        continue;
      }
      const AstNode* cond = it->second->child(0);
      std::map<std::string, CType> vars;
      collectIdents(*cond, vars);
      // A plain assignment overwrites its target, so only the value varies.
      collectIdents(stmt->op == "=" ? *stmt->child(1) : *stmt, vars);
      auto rb = analog.bounds(stmt->child(0)->resolvedType);
      std::vector<std::pair<std::string, std::pair<long long, long long>>> dom;
      for (const auto& [name, type] : vars) {
        auto b = analog.bounds(type);
        dom.push_back({name, {static_cast<long long>(b.minVal), static_cast<long long>(b.maxVal)}});
      }
      ++checked;
      std::map<std::string, long long> env;
      std::size_t bad = 0;
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == dom.size()) {
          ++points;
          auto g = oracle::evalExpr(*cond, env, analog);
          auto v = assignedValue(*stmt, env, analog);
          if (!g || !v) {
            ++bad;
            return;
          }
          bool violates = *v < static_cast<double>(rb.minVal) || *v > static_cast<double>(rb.maxVal);
          bad += (*g != 0) != violates;
          return;
        }
        for (long long x = dom[k].second.first; x <= dom[k].second.second; ++x) {
          env[dom[k].first] = x;
          rec(k + 1);
        }
      };
      rec(0);
      if (bad) {
        ++violations;
        if (first.empty()) first = cr.files[i] + ":" + std::to_string(site.guardLine) + " " + std::to_string(bad) + " points";
      }
    }
  }
  Outcome out;
  out.pass = checked > 0 && violations == 0;
  out.detail = std::to_string(checked) + " applied guards, " + std::to_string(points) + " points, " +
               std::to_string(violations) + " violations" + (first.empty() ? "" : " (first: " + first + ")");
  return out;
}

Outcome scriptDiff() {
  auto& cr = corpusRepair();
  std::size_t diffs = 0, unmatched = 0, oversized = 0, notCorrect = 0, largest = 0;
  for (std::size_t i = 0; i < cr.files.size(); ++i) {
    const auto& fr = cr.repairs[i];
    for (std::size_t k = 0; k < fr.chosen.size(); ++k) {
      // One repair at a time so each diff belongs to a single guard.
      harness::RepairOptions only;
      only.problems = {fr.reports[fr.chosen[k].first].problemId};
      auto single = harness::repairText(cr.files[i], cr.before[i], {}, only);
      auto unit = frontend::loadText(cr.files[i], single.result.text);
      auto solver = smt::makeSolver({});
      auto rep = repair::confirmCorrectRepair(unit, single.reports, single.plan.sites, {}, *solver);
      notCorrect += rep.verdict != repair::Correctness::Correct;
      for (const auto& d : rep.diffs) {
        ++diffs;
        unmatched += !d.pathMatched;
        oversized += d.size() > repair::kMaxGuardDiff;
        largest = std::max(largest, d.size());
      }
    }
  }
  Outcome out;
  out.pass = diffs > 0 && unmatched == 0 && oversized == 0 && notCorrect == 0;
  out.detail = std::to_string(diffs) + " repaired paths, largest diff " + std::to_string(largest) + " asserts (limit " +
               std::to_string(repair::kMaxGuardDiff) + "), " + std::to_string(unmatched) + " unmatched, " +
               std::to_string(notCorrect) + " verdicts other than correct";
  return out;
}

Outcome blowup() {
  auto& cr = corpusRepair();
  std::vector<int> perRepair;
  std::size_t offTemplate = 0;
  int headerLines = 0;
  for (const auto& fr : cr.repairs) {
    headerLines += fr.plan.headerLines;
    // Overflow and underflow reports on one statement share a single edit.
    std::map<std::string, const repair::RepairCandidate*> byProblem;
    for (const auto& [ri, ci] : fr.chosen) byProblem[fr.reports[ri].problemId] = &fr.candidates[ri][ci];
    for (std::size_t k = 0; k < fr.plan.sites.size(); ++k) {
      const auto* cand = byProblem.at(fr.plan.sites[k].original.problemId);
      int lines = fr.plan.linesAddedPerRepair.at(k);
      perRepair.push_back(lines);
      offTemplate += lines != kTemplateLines + cand->guardLineOffset;
    }
  }
  auto b = rewrite::measureBlowup(cr.before, cr.after, perRepair);
  Outcome out;
  out.pass = !perRepair.empty() && offTemplate == 0 && b.locAddedPercent < kMaxBlowupPercent;
  out.detail = std::to_string(b.locBefore) + " -> " + std::to_string(b.locAfter) + " lines, +" +
               std::to_string(b.locAddedTotal) + " (" + fmt(b.locAddedPercent) + "%, limit " +
               fmt(kMaxBlowupPercent, 0) + "%; " + std::to_string(headerLines) + " of them header lines); " +
               std::to_string(perRepair.size()) + " repairs, " + std::to_string(offTemplate) +
               " differ from the template size";
  return out;
}

Outcome syntax() {
  auto& cr = corpusRepair();
  const char* cc = std::getenv("CC");
  std::size_t reparsed = 0, parseErrors = 0, compiled = 0, compileErrors = 0;
  std::string first;
  for (std::size_t i = 0; i < cr.files.size(); ++i) {
    try {
      frontend::loadText(cr.files[i], cr.after[i]);
      ++reparsed;
    } catch (const std::exception& e) {
      ++parseErrors;
      if (first.empty()) first = cr.files[i] + ": " + e.what();
    }
    if (cc && *cc) {
      if (auto log = harness::compileCheck(cr.after[i], cc)) {
        ++compileErrors;
        if (first.empty()) first = cr.files[i] + ": " + log->substr(0, 200);
      } else {
        ++compiled;
      }
    }
  }
  Outcome out;
  out.pass = parseErrors == 0 && compileErrors == 0 && reparsed == cr.files.size();
  out.detail = std::to_string(reparsed) + "/" + std::to_string(cr.files.size()) + " reparse";
  if (cc && *cc) {
    out.detail += ", " + std::to_string(compiled) + "/" + std::to_string(cr.files.size()) + " compile with " + cc;
  } else {
    out.detail += ", CC not set so compilation was not checked";
  }
  if (!first.empty()) out.detail += " (first: " + first + ")";
  return out;
}

Outcome scalability() {
  double worst = 0;
  Outcome out;
  for (int seed = 1; seed <= harness::kSeedCount; ++seed) {
    harness::SynthParams p;
    p.targetLoc = kSynthLoc;
    p.callChainLen = 3;
    p.loopIters = 4;
    p.decoyCount = 20;
    p.rngSeed = static_cast<std::uint64_t>(seed);
    std::string text = harness::synthesizeProgram(seed, p);
    auto t0 = std::chrono::steady_clock::now();
    auto fr = harness::repairText("synth.c", text, {});
    auto unit = frontend::loadText("synth.c", fr.result.text);
    auto solver = smt::makeSolver({});
    auto verdict = repair::confirmCorrectRepair(unit, fr.reports, fr.plan.sites, {}, *solver);
    double s = since(t0);
    worst = std::max(worst, s);
    std::set<int> lines;
    for (const auto& r : fr.reports) lines.insert(r.line);
    if (lines.size() != 1 || fr.chosen.empty() || verdict.verdict != repair::Correctness::Correct) {
      out.pass = false;
      out.detail = "seed " + std::to_string(seed) + ": " + std::to_string(lines.size()) + " fault lines, " +
                   std::to_string(fr.chosen.size()) + " repairs, verdict " +
                   std::string(repair::correctnessName(verdict.verdict)) + "; ";
    }
  }
  out.pass = out.pass && worst < kSynthSeconds;
  out.detail += std::to_string(harness::kSeedCount) + " programs of " + std::to_string(kSynthLoc) +
                " lines, slowest detect+repair+verify " + fmt(worst) + " s (limit " + fmt(kSynthSeconds, 0) + " s)";
  return out;
}

Outcome workedExample() {
  const std::string src =
      "#include <limits.h>\n#include <stdlib.h>\nint main(void) {\n  int a;\n  int b = rand();\n  a = b * b;\n"
      "  return a;\n}\n";
  auto a = analyze("worked.c", src, {});
  if (a.reports.size() != 1) return {false, std::to_string(a.reports.size()) + " reports"};
  auto solver = smt::makeSolver({});
  auto cands = repair::generateCandidates(*a.unit, a.reports[0], LimitsTable::standard(), *solver);
  const auto* best = repair::pick(cands);
  if (!best) return {false, "no valid candidate"};
  std::string elseTail = "else { a = b * b; }";
  bool guardOk = best->guardText == kWorkedGuard;
  bool elseOk = best->renderedText.size() >= elseTail.size() &&
                best->renderedText.compare(best->renderedText.size() - elseTail.size(), elseTail.size(), elseTail) == 0;
  bool ifOk = best->renderedText.find(std::string("if (") + kWorkedGuard + ")") != std::string::npos;
  Outcome out;
  out.pass = guardOk && elseOk && ifOk;
  out.detail = "pattern " + best->patternId + ", guard \"" + best->guardText + "\"" +
               (elseOk ? ", original statement in the else branch" : ", else branch differs");
  return out;
}

Outcome pathEnumeration() {
  std::mt19937 rng(20240601);
  int mismatched = 0;
  std::size_t paths = 0;
  for (int i = 0; i < kRandomFunctions; ++i) {
    std::string src = oracle::genLoopFreeFunction(rng);
    auto unit = frontend::loadText("p.c", src);
    auto program = cfg::buildProgram(unit);
    auto w = oracle::walk(program, "f", 10);
    auto records = oracle::enumeratePaths(*program.find("f"), 10, [](cfg::NodeId, bool) { return true; });
    std::set<std::vector<cfg::NodeId>> want, got(w.nodes.begin(), w.nodes.end());
    for (const auto& r : records) want.insert(r.nodes);
    std::set<std::vector<bool>> wantLabels, gotLabels(w.labels.begin(), w.labels.end());
    for (const auto& s : oracle::astPaths(*unit.ast[0]->body(), {oracle::Seq{}})) wantLabels.insert(s.labels);
    mismatched += got != want || got.size() != w.nodes.size() || gotLabels != wantLabels;
    paths += w.nodes.size();
  }

  // Loops: two sequential loops around random bodies; the loop test is
  // entered at most bound + 1 times on any path.
  int overBound = 0;
  std::size_t loopPaths = 0;
  for (int i = 0; i < 40; ++i) {
    int bound = 1 + static_cast<int>(rng() % 3);
    std::ostringstream src;
    int counter = 1;
    src << "int f(int x) {\n  int y = 0;\n";
    for (int l = 0; l < 2; ++l) {
      src << "  while (y < " << 9001 + l << ") {\n";
      oracle::genBlock(rng, 1, src, 4, counter);
      src << "    y = y + 1;\n  }\n";
    }
    src << "  return x;\n}\n";
    auto unit = frontend::loadText("l.c", src.str());
    auto program = cfg::buildProgram(unit);
    const auto& g = *program.find("f");
    std::set<cfg::NodeId> heads;
    for (const auto& n : g.nodes) {
      if (n.kind == cfg::CfgNodeKind::Branch && unit.spanText(n.span).rfind("y < 900", 0) == 0) heads.insert(n.id);
    }
    auto w = oracle::walk(program, "f", bound);
    for (const auto& p : w.nodes) {
      ++loopPaths;
      for (cfg::NodeId h : heads) {
        if (std::count(p.begin(), p.end(), h) > bound + 1) ++overBound;
      }
    }
  }
  Outcome out;
  out.pass = mismatched == 0 && overBound == 0;
  out.detail = std::to_string(kRandomFunctions) + " loop-free functions (" + std::to_string(paths) + " paths), " +
               std::to_string(mismatched) + " mismatches; " + std::to_string(loopPaths) + " looping paths, " +
               std::to_string(overBound) + " over the unroll bound";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"guard-oracle-equivalence", guardOracle}, {"corpus-detection", detection},
      {"repair-fixpoint", fixpoint},             {"guard-exactness", guardExactness},
      {"smt-diff-bound", scriptDiff},            {"loc-blowup", blowup},
      {"syntactic-correctness", syntax},         {"scalability", scalability},
      {"worked-example", workedExample},         {"path-enumeration", pathEnumeration},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << std::endl;
  }
  std::error_code ec;
  fs::remove_all(corpusRepair().dir, ec);
  return failed;
}
