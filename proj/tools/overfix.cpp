// overfix: detect and repair integer overflows in a C subset.

#include <CLI11.hpp>

#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "overfix/frontend/ast_json.hpp"
#include "overfix/frontend/frontend.hpp"
#include "overfix/harness/harness.hpp"
#include "overfix/service/service.hpp"
#include "overfix/support/text.hpp"

using namespace overfix;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string solver = "internal";
  std::string solverPath;
  double timeout = 10.0;
  int unroll = 10;
  int callDepth = 8;
  bool paperLiteralMin = false;
  unsigned jobs = 0;
};

void addCommon(CLI::App* app, Common& c) {
  app->add_option("--solver", c.solver, "internal, enumerate or external")
      ->check(CLI::IsMember({"internal", "enumerate", "external"}));
  app->add_option("--solver-path", c.solverPath, "SMT-LIB solver command for --solver external (default $OVERFIX_SOLVER)");
  app->add_option("--timeout", c.timeout, "Seconds per solver query");
  app->add_option("--unroll", c.unroll, "Loop unroll bound")->check(CLI::Range(0, 1000));
  app->add_option("--call-depth", c.callDepth, "Inline calls up to this depth")->check(CLI::Range(0, 64));
  app->add_flag("--paper-literal-min", c.paperLiteralMin, "Signed lower bounds as -MAX + 1 instead of -MAX - 1");
}

harness::RunOptions runOptions(const Common& c) {
  harness::RunOptions o;
  o.solver.backend = *smt::backendFromName(c.solver);
  o.solver.timeoutSeconds = c.timeout;
  if (o.solver.backend == smt::Backend::External) {
    o.solver.solverPath = c.solverPath;
    if (o.solver.solverPath.empty()) {
      auto env = smt::solverFromEnvironment();
      if (!env) throw Error("--solver external needs --solver-path or OVERFIX_SOLVER");
      o.solver.solverPath = *env;
    }
  }
  o.analysis.limits.unrollBound = c.unroll;
  o.analysis.limits.callDepth = c.callDepth;
  o.analysis.table.setPaperLiteralMin(c.paperLiteralMin);
  o.jobs = c.jobs;
  return o;
}

void writeOrPrint(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string reportLine(const checker::FaultReport& r) {
  return r.file + ":" + std::to_string(r.line) + ": " + std::string(checker::boundKindName(r.kind)) + " in " +
         r.function + " [" + std::string(checker::shapeName(r.shape)) + ", " +
         std::string(frontend::typeName(r.bounds.type)) + "] " + r.problemId + ": " + r.statement;
}

std::optional<repair::HandlerStyle> handlerFromFlag(const std::string& h) {
  if (h == "log") return repair::HandlerStyle::LogOnly;
  if (h == "die") return repair::HandlerStyle::LogOrDie;
  return repair::handlerStyleFromName(h);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static detection and repair of integer overflows in C"};
  app.require_subcommand(1);
  Common common;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report integer overflows");
  std::vector<std::string> analyzeFiles;
  std::string analyzeJson;
  analyze->add_option("files", analyzeFiles, "C source files")->required()->check(CLI::ExistingFile);
  analyze->add_option("--json", analyzeJson, "Write FaultReport JSON here ('-' for stdout)");
  addCommon(analyze, common);

  // repair
  auto* repairCmd = app.add_subcommand("repair", "Insert guard repairs");
  std::string repairFile;
  std::vector<std::string> problems;
  std::string pattern;
  bool dryRun = false, all = false, foldSqrt = false, noBackup = false, listOnly = false;
  std::string handler = "log";
  repairCmd->add_option("file", repairFile, "C source file")->required()->check(CLI::ExistingFile);
  repairCmd->add_option("--problem", problems, "Problem id to repair (repeatable)");
  repairCmd->add_option("--pattern", pattern, "Pattern id to use instead of the rank-1 candidate");
  repairCmd->add_flag("--all", all, "Repair every reported problem");
  repairCmd->add_flag("--dry-run", dryRun, "Print the diff without writing");
  repairCmd->add_flag("--candidates", listOnly, "Print the ranked candidates as JSON and stop");
  repairCmd->add_option("--handler", handler, "log (default) or die");
  repairCmd->add_flag("--fold-sqrt", foldSqrt, "Emit integer literals instead of sqrt(MAX)");
  repairCmd->add_flag("--no-backup", noBackup, "Do not keep <file>.orig");
  addCommon(repairCmd, common);

  // dumps
  auto* dumpAst = app.add_subcommand("dump-ast", "Print the AST as JSON");
  std::string dumpFile;
  dumpAst->add_option("file", dumpFile)->required()->check(CLI::ExistingFile);
  auto* dumpCfg = app.add_subcommand("dump-cfg", "Print the CFGs in Graphviz form");
  std::string cfgFunction;
  dumpCfg->add_option("file", dumpFile)->required()->check(CLI::ExistingFile);
  dumpCfg->add_option("--function", cfgFunction, "Only this function");
  auto* dumpSmt = app.add_subcommand("dump-smt", "Print SMT-LIB scripts");
  bool dumpPaths = false;
  dumpSmt->add_option("file", dumpFile)->required()->check(CLI::ExistingFile);
  dumpSmt->add_flag("--paths", dumpPaths, "Every enumerated path instead of the fault slices");
  addCommon(dumpSmt, common);

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Corpus runs");
  corpus->require_subcommand(1);
  auto* corpusRun = corpus->add_subcommand("run", "Analyze a corpus and check it against its FAULT annotations");
  std::string corpusDir, corpusJson, manifestPath;
  corpusRun->add_option("dir", corpusDir)->required()->check(CLI::ExistingDirectory);
  corpusRun->add_option("--json", corpusJson, "Write the run report here");
  corpusRun->add_option("--manifest", manifestPath, "Manifest JSON instead of scanning annotations");
  corpusRun->add_option("--jobs", common.jobs, "Worker threads (default: hardware threads)");
  addCommon(corpusRun, common);
  auto* corpusManifest = corpus->add_subcommand("manifest", "Print the manifest of FAULT annotations");
  corpusManifest->add_option("dir", corpusDir)->required()->check(CLI::ExistingDirectory);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a benchmark program");
  int seed = 1;
  harness::SynthParams sp;
  std::string synthOut;
  synth->add_option("--seed", seed, "Seed program 1..5")->check(CLI::Range(1, harness::kSeedCount));
  synth->add_option("--loc", sp.targetLoc, "Target non-blank lines");
  synth->add_option("--chain", sp.callChainLen, "Call chain length to the fault");
  synth->add_option("--loop", sp.loopIters, "Loop iterations around the fault (0: none)");
  synth->add_option("--decoys", sp.decoyCount, "Guarded safe sites");
  synth->add_option("--rng-seed", sp.rngSeed, "RNG seed");
  synth->add_option("-o,--output", synthOut, "Output file (default stdout)");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the review service");
  std::string serveRoot, bind = "127.0.0.1:8080", staticDir, logPath;
  serve->add_option("--root", serveRoot, "Corpus root")->required()->check(CLI::ExistingDirectory);
  serve->add_option("--bind", bind, "host:port");
  serve->add_option("--static", staticDir, "Directory of UI assets to serve at /");
  serve->add_option("--log", logPath, "JSON-lines audit log (default <root>/.overfix-applied.jsonl)");
  serve->add_option("--handler", handler, "log (default) or die");
  serve->add_flag("--fold-sqrt", foldSqrt, "Emit integer literals instead of sqrt(MAX)");
  serve->add_flag("--no-backup", noBackup, "Do not keep <file>.orig");
  addCommon(serve, common);

  // bench-runtime
  auto* bench = app.add_subcommand("bench-runtime", "Runtime overhead of repaired programs (needs $CC)");
  int benchRuns = 20;
  std::string benchJson;
  bench->add_option("dir", corpusDir)->required()->check(CLI::ExistingDirectory);
  bench->add_option("--runs", benchRuns, "Executions per binary");
  bench->add_option("--json", benchJson, "Write the summary here");
  addCommon(bench, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      auto opts = runOptions(common);
      json all = json::array();
      bool failed = false;
      for (const auto& f : analyzeFiles) {
        auto r = harness::analyzeProgram(f, readFile(f), opts);
        if (r.error) {
          std::cerr << f << ": " << *r.error << '\n';
          failed = true;
          continue;
        }
        for (const auto& w : r.warnings) std::cerr << f << ": warning: " << w << '\n';
        for (const auto& rep : r.reports) {
          if (analyzeJson.empty()) std::cout << reportLine(rep) << '\n';
          all.push_back(checker::toJson(rep));
        }
      }
      if (!analyzeJson.empty()) writeOrPrint(analyzeJson, all.dump(2));
      return failed ? 2 : 0;
    }

    if (repairCmd->parsed()) {
      auto opts = runOptions(common);
      harness::RepairOptions ro;
      auto h = handlerFromFlag(handler);
      if (!h) throw Error("--handler must be log or die");
      ro.render.handler = *h;
      ro.render.foldSqrt = foldSqrt;
      if (!all && problems.empty() && !listOnly) throw Error("give --problem <id> or --all");
      ro.problems.insert(problems.begin(), problems.end());
      if (!pattern.empty()) {
        if (problems.size() != 1) throw Error("--pattern needs exactly one --problem");
        ro.patterns[problems[0]] = pattern;
      }
      auto fr = harness::repairText(repairFile, readFile(repairFile), opts, ro);
      if (listOnly) {
        json out = json::array();
        for (std::size_t i = 0; i < fr.reports.size(); ++i) {
          if (!ro.problems.empty() && !ro.problems.count(fr.reports[i].problemId)) continue;
          json cs = json::array();
          for (const auto& c : fr.candidates[i]) cs.push_back(repair::toJson(c));
          out.push_back({{"problemId", fr.reports[i].problemId}, {"candidates", cs}});
        }
        std::cout << out.dump(2) << '\n';
        return 0;
      }
      for (const auto& [id, why] : fr.skipped) std::cerr << "not repaired: " << id << ": " << why << '\n';
      if (fr.chosen.empty()) {
        std::cerr << "nothing to repair\n";
        return fr.skipped.empty() ? 0 : 1;
      }
      std::cout << fr.result.diff;
      if (!dryRun) {
        rewrite::writeAtomic(repairFile, fr.result.text, !noBackup);
        std::cerr << "repaired " << fr.chosen.size() << " problem(s) in " << repairFile << '\n';
      }
      return fr.skipped.empty() ? 0 : 1;
    }

    if (dumpAst->parsed()) {
      auto unit = frontend::loadFile(dumpFile);
      std::cout << frontend::dumpAst(unit).dump(2) << '\n';
      return 0;
    }

    if (dumpCfg->parsed()) {
      auto unit = frontend::loadFile(dumpFile);
      auto program = cfg::buildProgram(unit);
      bool any = false;
      for (const auto& [name, g] : program.cfgs) {
        if (!cfgFunction.empty() && name != cfgFunction) continue;
        std::cout << cfg::toDot(g, unit);
        any = true;
      }
      if (!any) throw Error("no function " + cfgFunction);
      return 0;
    }

    if (dumpSmt->parsed()) {
      auto opts = runOptions(common);
      auto unit = frontend::loadFile(dumpFile);
      auto solver = smt::makeSolver(opts.solver);
      if (dumpPaths) {
        symex::Interpreter interp(unit, opts.analysis, *solver);
        int n = 0;
        interp.onPathEnd = [&](const symex::PathState& s, const std::vector<bool>& labels) {
          std::cout << "; path " << ++n << " decisions";
          for (bool b : labels) std::cout << ' ' << (b ? 'T' : 'F');
          std::cout << '\n' << smt::emit(s.script) << '\n';
        };
        interp.run();
        return 0;
      }
      auto a = checker::analyzeUnit(unit, opts.analysis, *solver);
      for (const auto& r : a.reports) {
        std::cout << "; " << r.problemId << " line " << r.line << ": " << r.statement << '\n'
                  << smt::emit(r.detectionScript) << '\n';
      }
      return 0;
    }

    if (corpusManifest->parsed()) {
      std::cout << harness::manifestToJson(harness::generateTestCases(corpusDir)).dump(2) << '\n';
      return 0;
    }

    if (corpusRun->parsed()) {
      auto opts = runOptions(common);
      std::vector<harness::ExpectedFault> manifest;
      if (!manifestPath.empty()) {
        manifest = harness::manifestFromJson(json::parse(readFile(manifestPath)));
      } else {
        manifest = harness::generateTestCases(corpusDir);
      }
      auto t0 = std::chrono::steady_clock::now();
      auto results = harness::analyzeCorpus(corpusDir, opts);
      double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      auto report = harness::runReport(results, manifest);
      json j = harness::toJson(report);
      j["wallSeconds"] = wall;
      if (!corpusJson.empty()) writeOrPrint(corpusJson, j.dump(2));
      std::cout << "programs " << results.size() << ", expected " << report.expected << ", found "
                << report.truePositivesFound << ", missed " << report.missed.size() << ", spurious "
                << report.spurious.size() << ", errors " << report.errors.size() << ", " << wall << " s\n";
      for (const auto& m : report.missed) std::cout << "missed " << m.file << ":" << m.line << " in " << m.function << '\n';
      for (const auto& s : report.spurious) {
        std::cout << "spurious " << s.file << ":" << s.line << " in " << s.function << '\n';
      }
      for (const auto& e : report.errors) std::cout << "error " << e << '\n';
      return report.exitCode();
    }

    if (synth->parsed()) {
      writeOrPrint(synthOut.empty() ? "-" : synthOut, harness::synthesizeProgram(seed, sp));
      return 0;
    }

    if (serve->parsed()) {
      service::SessionOptions so;
      so.run = runOptions(common);
      auto h = handlerFromFlag(handler);
      if (!h) throw Error("--handler must be log or die");
      so.render.handler = *h;
      so.render.foldSqrt = foldSqrt;
      so.backup = !noBackup;
      so.logPath = logPath.empty() ? (fs::path(serveRoot) / ".overfix-applied.jsonl").string() : logPath;
      service::ReviewSession session(serveRoot, so);
      service::Server server(session, staticDir);
      auto [host, port] = service::parseBind(bind);
      std::cerr << "serving " << serveRoot << " on http://" << host << ":" << port << '\n';
      return server.listen(host, port) ? 0 : 1;
    }

    if (bench->parsed()) {
      auto opts = runOptions(common);
      const char* cc = std::getenv("CC");
      std::vector<std::pair<std::string, std::string>> programs;
      std::vector<std::string> names;
      for (const auto& rel : harness::listSources(corpusDir)) {
        std::string text = readFile((fs::path(corpusDir) / rel).string());
        auto fr = harness::repairText(rel, text, opts);
        programs.emplace_back(text, fr.result.text);
        names.push_back(rel);
      }
      auto summary = harness::benchRuntime(programs, names, cc ? cc : "", benchRuns);
      if (!benchJson.empty()) writeOrPrint(benchJson, harness::toJson(summary).dump(2));
      if (summary.skipped) {
        std::cout << "skipped: " << summary.note << '\n';
        return 0;
      }
      std::cout << "programs " << summary.programs.size() << ", runtime overhead " << summary.overheadPercent
                << " %\n";
      for (const auto& p : summary.programs) {
        if (p.error) std::cout << p.file << ": " << *p.error << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "overfix: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
