#include "overfix/harness/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <thread>

#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::harness {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::string> listSources(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".c") {
      out.push_back(fs::relative(e.path(), dir).generic_string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExpectedFault> scanAnnotations(const frontend::SourceUnit& unit) {
  std::vector<ExpectedFault> out;
  auto lines = splitLines(unit.text);
  for (int at : unit.faultAnnotations) {
    int target = at + 1;
    if (target > static_cast<int>(lines.size()) || trim(lines[target - 1]).empty()) {
      throw ManifestError(unit.path + ":" + std::to_string(at) + ": FAULT annotation is not followed by a statement");
    }
    const frontend::AstNode* fn = unit.functionAtLine(target);
    if (!fn) {
      throw ManifestError(unit.path + ":" + std::to_string(at) + ": FAULT annotation outside a function body");
    }
    out.push_back({unit.path, fn->name, target});
  }
  return out;
}

std::vector<ExpectedFault> generateTestCases(const std::string& corpusDir) {
  std::vector<ExpectedFault> out;
  for (const auto& rel : listSources(corpusDir)) {
    auto unit = frontend::loadText(rel, readFile((fs::path(corpusDir) / rel).string()));
    auto found = scanAnnotations(unit);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

json manifestToJson(const std::vector<ExpectedFault>& m) {
  json j = json::array();
  for (const auto& e : m) j.push_back({{"file", e.file}, {"function", e.function}, {"line", e.line}});
  return j;
}

std::vector<ExpectedFault> manifestFromJson(const json& j) {
  if (!j.is_array()) throw ManifestError("manifest must be a JSON array");
  std::vector<ExpectedFault> out;
  for (const auto& e : j) {
    try {
      out.push_back({e.at("file").get<std::string>(), e.at("function").get<std::string>(), e.at("line").get<int>()});
    } catch (const json::exception& ex) {
      throw ManifestError(std::string("bad manifest entry: ") + ex.what());
    }
  }
  return out;
}

ProgramResult analyzeProgram(const std::string& file, const std::string& text, const RunOptions& options) {
  ProgramResult r;
  r.file = file;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto unit = frontend::loadText(file, text);
    auto solver = smt::makeSolver(options.solver);
    auto a = checker::analyzeUnit(unit, options.analysis, *solver);
    r.reports = std::move(a.reports);
    r.warnings = std::move(a.result.warnings);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<ProgramResult> analyzeCorpus(const std::string& dir, const RunOptions& options) {
  auto files = listSources(dir);
  std::vector<ProgramResult> results(files.size());
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      ProgramResult r;
      try {
        r = analyzeProgram(files[i], readFile((fs::path(dir) / files[i]).string()), options);
      } catch (const std::exception& e) {
        r.file = files[i];
        r.error = e.what();
      }
      std::lock_guard lock(mu);
      results[i] = std::move(r);
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

RunReport runReport(const std::vector<ProgramResult>& results, const std::vector<ExpectedFault>& manifest) {
  RunReport out;
  out.expected = manifest.size();
  std::set<ExpectedFault> expected(manifest.begin(), manifest.end());
  std::set<ExpectedFault> found;
  for (const auto& r : results) {
    out.perProgramTimes[r.file] = r.seconds;
    out.totalSeconds += r.seconds;
    if (r.error) out.errors.push_back(r.file + ": " + *r.error);
    for (const auto& f : r.reports) found.insert({r.file, f.function, f.line});
  }
  for (const auto& e : expected) {
    if (found.count(e)) {
      ++out.truePositivesFound;
    } else {
      out.missed.push_back(e);
    }
  }
  for (const auto& f : found) {
    if (!expected.count(f)) out.spurious.push_back(f);
  }
  return out;
}

json toJson(const RunReport& r) {
  json times = json::object();
  for (const auto& [f, s] : r.perProgramTimes) times[f] = s;
  return {{"expected", r.expected},
          {"truePositivesFound", r.truePositivesFound},
          {"missed", manifestToJson(r.missed)},
          {"spurious", manifestToJson(r.spurious)},
          {"errors", r.errors},
          {"perProgramTimes", times},
          {"totalSeconds", r.totalSeconds}};
}

FileRepair repairText(const std::string& file, const std::string& text, const RunOptions& run,
                      const RepairOptions& options) {
  FileRepair out;
  out.unit = std::make_unique<frontend::SourceUnit>(frontend::loadText(file, text));
  auto solver = smt::makeSolver(run.solver);
  out.reports = checker::analyzeUnit(*out.unit, run.analysis, *solver).reports;
  out.candidates.resize(out.reports.size());
  std::vector<std::pair<const checker::FaultReport*, const repair::RepairCandidate*>> picks;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    const auto& r = out.reports[i];
    if (!options.problems.empty() && !options.problems.count(r.problemId)) continue;
    seen.insert(r.problemId);
    try {
      out.candidates[i] = repair::generateCandidates(*out.unit, r, run.analysis.table, *solver, options.render);
    } catch (const Error& e) {
      out.skipped[r.problemId] = e.what();
      continue;
    }
    const auto& cs = out.candidates[i];
    std::optional<std::size_t> chosen;
    if (auto it = options.patterns.find(r.problemId); it != options.patterns.end()) {
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].patternId == it->second) chosen = k;
      }
      if (!chosen) {
        out.skipped[r.problemId] = "pattern " + it->second + " did not produce a candidate";
      } else if (!cs[*chosen].valid) {
        out.skipped[r.problemId] = "candidate " + it->second + " is not a valid repair: " + cs[*chosen].details;
        chosen.reset();
      }
    } else if (const auto* best = repair::pick(cs)) {
      chosen = static_cast<std::size_t>(best - cs.data());
    } else {
      out.skipped[r.problemId] = cs.empty() ? "no candidate rendered" : "no valid candidate";
    }
    if (chosen) {
      out.chosen.emplace_back(i, *chosen);
      picks.emplace_back(&r, &cs[*chosen]);
    }
  }
  for (const auto& id : options.problems) {
    if (!seen.count(id)) out.skipped[id] = "unknown problem id";
  }
  out.plan = rewrite::planRepairs(*out.unit, picks, options.render.handlerName);
  out.result = rewrite::applyPlan(out.plan, out.unit->text);
  return out;
}

}  // namespace overfix::harness
