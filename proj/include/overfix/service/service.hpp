#pragma once

#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "overfix/harness/harness.hpp"

namespace httplib {
class Server;
}

namespace overfix::service {

class NotFound : public Error {
 public:
  using Error::Error;
};

/// The candidate failed validation; the service refuses to apply it.
class InvalidCandidate : public Error {
 public:
  using Error::Error;
};

enum class VerifyStatus { Pending, Correct, FaultPersists, NewFaultIntroduced, Failed };
std::string_view verifyStatusName(VerifyStatus s);

struct AppliedEntry {
  std::string problemId;
  std::string patternId;
  std::string file;
  std::string timestamp;
  std::string jobId;
  VerifyStatus verifyOutcome = VerifyStatus::Pending;
};

struct SessionOptions {
  harness::RunOptions run;
  repair::RenderOptions render;
  /// JSON-lines mirror of the applied log; none when empty.
  std::string logPath;
  bool backup = true;
};

/// Review state over one corpus root. Thread-safe.
class ReviewSession {
 public:
  ReviewSession(std::string root, SessionOptions options = {});
  ~ReviewSession();
  ReviewSession(const ReviewSession&) = delete;
  ReviewSession& operator=(const ReviewSession&) = delete;

  const std::string& root() const { return root_; }

  /// Analyzes every source below `root` (the session root when empty) and
  /// returns the run id.
  std::string startRun(const std::string& root = "");

  /// FaultReport JSON array of a run. Throws NotFound.
  nlohmann::json faults(const std::string& runId);

  /// Ranked candidates of a problem with their unified diff and both file
  /// views. Empty for a problem that has no candidate. Throws NotFound.
  nlohmann::json candidates(const std::string& problemId);

  /// Applies the candidate and queues its verification; returns the job
  /// id. Throws NotFound, rewrite::StaleFile or InvalidCandidate.
  std::string apply(const std::string& problemId, const std::string& patternId);

  /// {status, newReports?}. Throws NotFound.
  nlohmann::json verify(const std::string& jobId);

  /// Blocks until every queued verification has finished.
  void drain();

  std::vector<AppliedEntry> appliedLog() const;
  nlohmann::json appliedLogJson() const;

 private:
  struct Known {
    std::string file;  // relative to root
    std::string root;
    checker::FaultReport report;
  };
  struct Pending {
    std::string checksum;
    std::unique_ptr<frontend::SourceUnit> unit;
    checker::FaultReport report;
    std::vector<checker::FaultReport> fileReports;
    std::vector<repair::RepairCandidate> candidates;
  };
  struct Run {
    std::string root;
    std::vector<harness::ProgramResult> results;
  };
  struct Job {
    VerifyStatus status = VerifyStatus::Pending;
    nlohmann::json newReports;
    std::string details;
  };

  Pending& pendingFor(const std::string& problemId, std::unique_lock<std::mutex>& lock);
  std::mutex& fileLock(const std::string& path);
  void record(const AppliedEntry& e);
  void workerLoop();

  std::string root_;
  SessionOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, Run> runs_;
  std::map<std::string, Known> known_;
  std::map<std::string, std::unique_ptr<Pending>> pending_;
  std::map<std::string, Job> jobs_;
  std::vector<AppliedEntry> log_;
  std::map<std::string, std::unique_ptr<std::mutex>> fileLocks_;
  int nextRun_ = 1;
  int nextJob_ = 1;

  std::deque<std::function<void()>> queue_;
  std::condition_variable queueCv_;
  std::condition_variable idleCv_;
  bool busy_ = false;
  bool stopping_ = false;
  std::thread worker_;
};

/// HTTP facade over a session. Routes:
///   POST /runs {root?}                      -> {runId, faultCount}
///   GET  /runs/{id}/faults                  -> FaultReport[]
///   GET  /faults/{problemId}/candidates     -> candidate[]
///   POST /faults/{problemId}/apply {patternId} -> 202 {jobId}
///   GET  /verify/{jobId}                    -> {status, newReports?}
///   GET  /log                               -> applied log
/// Static files under `staticDir` are served at `/` when it is set.
class Server {
 public:
  explicit Server(ReviewSession& session, std::string staticDir = "");
  ~Server();

  /// Binds and serves on a background thread; returns the bound port.
  int start(const std::string& host, int port);
  /// Serves on the calling thread until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  ReviewSession& session_;
  std::unique_ptr<httplib::Server> http_;
  std::thread thread_;
};

/// Splits "host:port"; the host defaults to 127.0.0.1.
std::pair<std::string, int> parseBind(const std::string& bind);

}  // namespace overfix::service
