#include "overfix/smt/solver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "overfix/support/text.hpp"

namespace overfix::smt {

std::string_view statusName(Status s) {
  switch (s) {
    case Status::Sat: return "sat";
    case Status::Unsat: return "unsat";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

bool satisfies(const SmtScript& script, const Model& model) {
  for (const auto& a : script.asserts()) {
    auto v = evaluate(a.formula, model);
    if (!v || *v == 0) return false;
  }
  return true;
}

std::optional<Backend> backendFromName(std::string_view name) {
  if (name == "internal") return Backend::Internal;
  if (name == "enumerate") return Backend::Enumerate;
  if (name == "external") return Backend::External;
  return std::nullopt;
}

std::vector<std::string> solverCommand(const std::string& spec) {
  std::vector<std::string> argv;
  std::istringstream is(spec);
  for (std::string w; is >> w;) argv.push_back(w);
  if (argv.size() == 1 && std::filesystem::path(argv[0]).filename().string().find("z3") != std::string::npos) {
    argv.push_back("-in");
  }
  return argv;
}

std::optional<std::string> solverFromEnvironment() {
  const char* v = std::getenv("OVERFIX_SOLVER");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

namespace {

struct ProcessOutput {
  std::string out;
  bool timedOut = false;
};

ProcessOutput runProcess(const std::vector<std::string>& argv, const std::string& input, double timeoutSeconds) {
  int inPipe[2];
  int outPipe[2];
  if (pipe(inPipe) != 0 || pipe(outPipe) != 0) throw Error("solver: pipe failed");
  pid_t pid = fork();
  if (pid < 0) throw Error("solver: fork failed");
  if (pid == 0) {
    dup2(inPipe[0], STDIN_FILENO);
    dup2(outPipe[1], STDOUT_FILENO);
    dup2(outPipe[1], STDERR_FILENO);
    close(inPipe[0]);
    close(inPipe[1]);
    close(outPipe[0]);
    close(outPipe[1]);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }
  close(inPipe[0]);
  close(outPipe[1]);
  signal(SIGPIPE, SIG_IGN);
  std::size_t written = 0;
  while (written < input.size()) {
    ssize_t n = write(inPipe[1], input.data() + written, input.size() - written);
    if (n <= 0) break;
    written += static_cast<std::size_t>(n);
  }
  close(inPipe[1]);

  ProcessOutput result;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeoutSeconds);
  char buf[4096];
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timedOut = true;
      break;
    }
    pollfd pfd{outPipe[0], POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(left.count()));
    if (pr == 0) {
      result.timedOut = true;
      break;
    }
    if (pr < 0) continue;
    ssize_t n = read(outPipe[0], buf, sizeof buf);
    if (n <= 0) break;
    result.out.append(buf, static_cast<std::size_t>(n));
  }
  close(outPipe[0]);
  if (result.timedOut) kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  if (!result.timedOut && WIFEXITED(status) && WEXITSTATUS(status) == 127 && result.out.empty()) {
    throw Error("solver: cannot execute " + argv[0]);
  }
  return result;
}

// Parses `(define-fun name () Int value)` entries of a get-model reply.
Model parseModel(std::string_view text) {
  Model m;
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
      tokens.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  for (std::size_t i = 0; i + 6 < tokens.size(); ++i) {
    if (tokens[i] != "define-fun") continue;
    const std::string& name = tokens[i + 1];
    if (tokens[i + 2] != "(" || tokens[i + 3] != ")" || tokens[i + 4] != "Int") continue;
    std::size_t j = i + 5;
    bool negative = false;
    if (tokens[j] == "(" && j + 3 < tokens.size() && tokens[j + 1] == "-") {
      negative = true;
      j += 2;
    }
    if (auto v = parseInt(tokens[j])) m[name] = negative ? -*v : *v;
  }
  return m;
}

class ExternalSolver final : public Solver {
 public:
  explicit ExternalSolver(ExternalOptions o) : opts_(std::move(o)) {
    if (opts_.command.empty()) throw Error("external solver: empty command");
  }

  std::string name() const override { return "external"; }

  SolveResult check(const SmtScript& script) override {
    std::string text = emit(script);
    if (opts_.wantModel) text += "(get-model)\n";
    std::vector<std::string> argv = opts_.command;
    std::string input = text;
    std::filesystem::path tmp;
    if (opts_.viaTempFile) {
      char name[] = "/tmp/overfix-smt-XXXXXX";
      int fd = mkstemp(name);
      if (fd < 0) throw Error("external solver: cannot create temp file");
      close(fd);
      tmp = name;
      std::ofstream(tmp) << text;
      if (argv.size() > 1 && argv.back() == "-in") argv.pop_back();
      argv.push_back(tmp.string());
      input.clear();
    }
    ProcessOutput po;
    try {
      po = runProcess(argv, input, opts_.timeoutSeconds);
    } catch (...) {
      if (!tmp.empty()) std::filesystem::remove(tmp);
      throw;
    }
    if (!tmp.empty()) std::filesystem::remove(tmp);
    if (po.timedOut) throw SolverTimeout(opts_.timeoutSeconds);

    std::string first;
    std::size_t pos = 0;
    for (const auto& line : splitLines(po.out)) {
      pos += line.size() + 1;
      std::string t = trim(line);
      if (!t.empty()) {
        first = t;
        break;
      }
    }
    SolveResult r;
    if (first == "sat") {
      r.status = Status::Sat;
      if (opts_.wantModel) {
        Model m = parseModel(std::string_view(po.out).substr(std::min(pos, po.out.size())));
        // Declared but unconstrained variables may be omitted by the solver.
        for (const auto& d : script.decls()) m.try_emplace(d.name, 0);
        r.model = std::move(m);
      }
    } else if (first == "unsat") {
      r.status = Status::Unsat;
    } else if (first == "unknown") {
      r.status = Status::Unknown;
      r.reason = "solver answered unknown";
    } else {
      throw SolverProtocolError(po.out);
    }
    return r;
  }

 private:
  ExternalOptions opts_;
};

}  // namespace

std::unique_ptr<Solver> makeExternalSolver(ExternalOptions options) {
  return std::make_unique<ExternalSolver>(std::move(options));
}

SolveResult CachingSolver::check(const SmtScript& script) {
  std::string key = emit(script);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  SolveResult r = inner_->check(script);
  std::lock_guard lock(mu_);
  ++misses_;
  cache_.emplace(std::move(key), r);
  return r;
}

std::size_t CachingSolver::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

std::size_t CachingSolver::misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

std::unique_ptr<Solver> makeSolver(const SolverConfig& config) {
  std::unique_ptr<Solver> inner;
  switch (config.backend) {
    case Backend::Internal: inner = makeIntervalSolver(); break;
    case Backend::Enumerate: {
      EnumerateOptions o;
      o.limits = config.limits.isAnalog() ? config.limits : frontend::LimitsTable::analog(8);
      inner = makeEnumerateSolver(o);
      break;
    }
    case Backend::External: {
      std::string path = config.solverPath;
      if (path.empty()) path = solverFromEnvironment().value_or("");
      if (path.empty()) throw Error("external backend needs --solver or OVERFIX_SOLVER");
      ExternalOptions o;
      o.command = solverCommand(path);
      o.viaTempFile = config.viaTempFile;
      o.timeoutSeconds = config.timeoutSeconds;
      inner = makeExternalSolver(o);
      break;
    }
  }
  return std::make_unique<CachingSolver>(std::move(inner));
}

}  // namespace overfix::smt
