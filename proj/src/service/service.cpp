#include "overfix/service/service.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <httplib.h>

#include "overfix/frontend/frontend.hpp"
#include "overfix/support/text.hpp"

namespace overfix::service {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view verifyStatusName(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pending: return "pending";
    case VerifyStatus::Correct: return "correct";
    case VerifyStatus::FaultPersists: return "faultPersists";
    case VerifyStatus::NewFaultIntroduced: return "newFaultIntroduced";
    case VerifyStatus::Failed: return "failed";
  }
  return "?";
}

namespace {

std::string nowIso() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json entryJson(const AppliedEntry& e) {
  return {{"problemId", e.problemId}, {"patternId", e.patternId},
          {"file", e.file},           {"timestamp", e.timestamp},
          {"jobId", e.jobId},         {"verifyOutcome", verifyStatusName(e.verifyOutcome)}};
}

VerifyStatus fromCorrectness(repair::Correctness c) {
  switch (c) {
    case repair::Correctness::Correct: return VerifyStatus::Correct;
    case repair::Correctness::FaultPersists: return VerifyStatus::FaultPersists;
    case repair::Correctness::NewFaultIntroduced: return VerifyStatus::NewFaultIntroduced;
  }
  return VerifyStatus::Failed;
}

}  // namespace

ReviewSession::ReviewSession(std::string root, SessionOptions options)
    : root_(std::move(root)), options_(std::move(options)) {
  worker_ = std::thread([this] { workerLoop(); });
}

ReviewSession::~ReviewSession() {
  {
    std::lock_guard lock(mu_);
    stopping_ = true;
  }
  queueCv_.notify_all();
  worker_.join();
}

void ReviewSession::workerLoop() {
  for (;;) {
    std::function<void()> job;
    {
      std::unique_lock lock(mu_);
      queueCv_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (queue_.empty()) return;
      job = std::move(queue_.front());
      queue_.pop_front();
      busy_ = true;
    }
    job();
    {
      std::lock_guard lock(mu_);
      busy_ = false;
    }
    idleCv_.notify_all();
  }
}

void ReviewSession::drain() {
  std::unique_lock lock(mu_);
  idleCv_.wait(lock, [&] { return queue_.empty() && !busy_; });
}

std::mutex& ReviewSession::fileLock(const std::string& path) {
  std::lock_guard lock(mu_);
  auto& m = fileLocks_[path];
  if (!m) m = std::make_unique<std::mutex>();
  return *m;
}

std::string ReviewSession::startRun(const std::string& root) {
  std::string dir = root.empty() ? root_ : root;
  auto results = harness::analyzeCorpus(dir, options_.run);
  std::lock_guard lock(mu_);
  std::string id = "run-" + std::to_string(nextRun_++);
  for (auto it = known_.begin(); it != known_.end();) {
    it = it->second.root == dir ? known_.erase(it) : std::next(it);
  }
  for (const auto& r : results) {
    for (const auto& f : r.reports) known_[f.problemId] = Known{r.file, dir, f};
  }
  // Candidates are recomputed against the files as they are now.
  pending_.clear();
  runs_[id] = Run{dir, std::move(results)};
  return id;
}

json ReviewSession::faults(const std::string& runId) {
  std::lock_guard lock(mu_);
  auto it = runs_.find(runId);
  if (it == runs_.end()) throw NotFound("unknown run " + runId);
  json out = json::array();
  for (const auto& r : it->second.results) {
    for (const auto& f : r.reports) out.push_back(checker::toJson(f));
  }
  return out;
}

ReviewSession::Pending& ReviewSession::pendingFor(const std::string& problemId, std::unique_lock<std::mutex>& lock) {
  if (auto it = pending_.find(problemId); it != pending_.end()) return *it->second;
  auto k = known_.find(problemId);
  if (k == known_.end()) throw NotFound("unknown problem " + problemId);
  Known known = k->second;
  lock.unlock();

  auto p = std::make_unique<Pending>();
  std::string text = readFile((fs::path(known.root) / known.file).string());
  p->checksum = rewrite::checksum(text);
  p->unit = std::make_unique<frontend::SourceUnit>(frontend::loadText(known.file, text));
  auto solver = smt::makeSolver(options_.run.solver);
  p->fileReports = checker::analyzeUnit(*p->unit, options_.run.analysis, *solver).reports;
  bool found = false;
  for (const auto& r : p->fileReports) {
    if (r.problemId == problemId) {
      p->report = r;
      found = true;
    }
  }
  if (found) {
    try {
      p->candidates =
          repair::generateCandidates(*p->unit, p->report, options_.run.analysis.table, *solver, options_.render);
    } catch (const repair::NoRepairProposed&) {
    } catch (const repair::NoPatternsApplicable&) {
    }
  }

  lock.lock();
  if (!found) throw NotFound("problem " + problemId + " is no longer reported in " + known.file);
  auto& slot = pending_[problemId];
  if (!slot) slot = std::move(p);
  return *slot;
}

json ReviewSession::candidates(const std::string& problemId) {
  std::unique_lock lock(mu_);
  Pending& p = pendingFor(problemId, lock);
  json out = json::array();
  for (const auto& c : p.candidates) {
    json j = repair::toJson(c);
    j["details"] = c.details;
    j["guardText"] = c.guardText;
    j["original"] = p.unit->text;
    try {
      auto plan = rewrite::planRepairs(*p.unit, {{&p.report, &c}}, options_.render.handlerName);
      auto done = rewrite::applyPlan(plan, p.unit->text);
      j["diff"] = done.diff;
      j["repaired"] = done.text;
    } catch (const Error& e) {
      j["diff"] = "";
      j["repaired"] = nullptr;
      j["details"] = e.what();
    }
    out.push_back(std::move(j));
  }
  return out;
}

void ReviewSession::record(const AppliedEntry& e) {
  if (options_.logPath.empty()) return;
  std::ofstream f(options_.logPath, std::ios::app);
  f << entryJson(e).dump() << '\n';
}

std::string ReviewSession::apply(const std::string& problemId, const std::string& patternId) {
  std::string file, root;
  {
    std::lock_guard lock(mu_);
    auto k = known_.find(problemId);
    if (k == known_.end()) throw NotFound("unknown problem " + problemId);
    file = k->second.file;
    root = k->second.root;
  }
  std::string path = (fs::path(root) / file).string();
  std::lock_guard fileGuard(fileLock(path));

  std::unique_lock lock(mu_);
  Pending& p = pendingFor(problemId, lock);
  const repair::RepairCandidate* cand = nullptr;
  for (const auto& c : p.candidates) {
    if (c.patternId == patternId) cand = &c;
  }
  if (!cand) throw NotFound("no candidate " + patternId + " for " + problemId);
  if (!cand->valid) throw InvalidCandidate(patternId + " is not a valid repair: " + cand->details);

  std::string current = readFile(path);
  if (rewrite::checksum(current) != p.checksum) throw rewrite::StaleFile(file);
  auto plan = rewrite::planRepairs(*p.unit, {{&p.report, cand}}, options_.render.handlerName);
  auto done = rewrite::applyPlan(plan, current);
  rewrite::writeAtomic(path, done.text, options_.backup);

  AppliedEntry entry{problemId, patternId, file, nowIso(), "job-" + std::to_string(nextJob_++), VerifyStatus::Pending};
  log_.push_back(entry);
  record(entry);
  jobs_[entry.jobId] = Job{};

  std::string jobId = entry.jobId;
  std::vector<checker::FaultReport> before = p.fileReports;
  auto sites = plan.sites;
  std::string newText = done.text;
  queue_.push_back([this, jobId, file, newText, before = std::move(before), sites = std::move(sites)] {
    Job result;
    try {
      auto unit = frontend::loadText(file, newText);
      auto solver = smt::makeSolver(options_.run.solver);
      auto verdict = repair::confirmCorrectRepair(unit, before, sites, options_.run.analysis, *solver);
      result.status = fromCorrectness(verdict.verdict);
      result.details = verdict.details;
      result.newReports = json::array();
      for (const auto& r : verdict.remaining) result.newReports.push_back(checker::toJson(r));
    } catch (const std::exception& e) {
      result.status = VerifyStatus::Failed;
      result.details = e.what();
    }
    AppliedEntry updated;
    {
      std::lock_guard guard(mu_);
      jobs_[jobId] = result;
      for (auto& e : log_) {
        if (e.jobId == jobId) {
          e.verifyOutcome = result.status;
          updated = e;
        }
      }
    }
    record(updated);
  });
  lock.unlock();
  queueCv_.notify_one();
  return jobId;
}

json ReviewSession::verify(const std::string& jobId) {
  std::lock_guard lock(mu_);
  auto it = jobs_.find(jobId);
  if (it == jobs_.end()) throw NotFound("unknown job " + jobId);
  json out = {{"status", verifyStatusName(it->second.status)}};
  if (it->second.status != VerifyStatus::Pending) {
    out["newReports"] = it->second.newReports.is_null() ? json::array() : it->second.newReports;
    out["details"] = it->second.details;
  }
  return out;
}

std::vector<AppliedEntry> ReviewSession::appliedLog() const {
  std::lock_guard lock(mu_);
  return log_;
}

json ReviewSession::appliedLogJson() const {
  json out = json::array();
  for (const auto& e : appliedLog()) out.push_back(entryJson(e));
  return out;
}

// ---------------------------------------------------------------------------
// HTTP

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const NotFound& e) {
      reply(res, 404, {{"error", e.what()}});
    } catch (const rewrite::StaleFile& e) {
      reply(res, 409, {{"error", e.what()}});
    } catch (const InvalidCandidate& e) {
      reply(res, 422, {{"error", e.what()}});
    } catch (const json::exception& e) {
      reply(res, 400, {{"error", std::string("bad request body: ") + e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, {{"error", e.what()}});
    }
  };
}

json body(const httplib::Request& req) { return req.body.empty() ? json::object() : json::parse(req.body); }

}  // namespace

Server::Server(ReviewSession& session, std::string staticDir)
    : session_(session), http_(std::make_unique<httplib::Server>()) {
  auto& s = *http_;
  s.Post("/runs", guarded([this](const httplib::Request& req, httplib::Response& res) {
           json b = body(req);
           std::string root = b.value("root", std::string());
           std::string id = session_.startRun(root);
           reply(res, 201, {{"runId", id}, {"faultCount", session_.faults(id).size()}});
         }));
  s.Get(R"(/runs/([^/]+)/faults)", guarded([this](const httplib::Request& req, httplib::Response& res) {
          reply(res, 200, session_.faults(req.matches[1]));
        }));
  s.Get(R"(/faults/([^/]+)/candidates)", guarded([this](const httplib::Request& req, httplib::Response& res) {
          reply(res, 200, session_.candidates(req.matches[1]));
        }));
  s.Post(R"(/faults/([^/]+)/apply)", guarded([this](const httplib::Request& req, httplib::Response& res) {
           json b = body(req);
           std::string jobId = session_.apply(req.matches[1], b.at("patternId").get<std::string>());
           reply(res, 202, {{"jobId", jobId}});
         }));
  s.Get(R"(/verify/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
          reply(res, 200, session_.verify(req.matches[1]));
        }));
  s.Get("/log", guarded([this](const httplib::Request&, httplib::Response& res) {
          reply(res, 200, session_.appliedLogJson());
        }));
  if (!staticDir.empty()) s.set_mount_point("/", staticDir);
}

Server::~Server() { stop(); }

int Server::start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = http_->bind_to_any_port(host);
  } else if (!http_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { http_->listen_after_bind(); });
  http_->wait_until_ready();
  return bound;
}

bool Server::listen(const std::string& host, int port) { return http_->listen(host, port); }

void Server::stop() {
  if (http_) http_->stop();
  if (thread_.joinable()) thread_.join();
}

std::pair<std::string, int> parseBind(const std::string& bind) {
  auto colon = bind.rfind(':');
  std::string host = colon == std::string::npos ? "127.0.0.1" : bind.substr(0, colon);
  std::string port = colon == std::string::npos ? bind : bind.substr(colon + 1);
  if (host.empty()) host = "127.0.0.1";
  try {
    std::size_t used = 0;
    int p = std::stoi(port, &used);
    if (used != port.size() || p < 0 || p > 65535) throw std::out_of_range("port");
    return {host, p};
  } catch (const std::exception&) {
    throw Error("bad --bind value: " + bind);
  }
}

}  // namespace overfix::service
