#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <unistd.h>

#include "overfix/harness/harness.hpp"

namespace overfix::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Definition of the handler the repaired files declare.
constexpr const char* kHandlerSource =
    "#include <stdio.h>\n"
    "#include <stdlib.h>\n"
    "void log_or_die(char *file, char *fault, int line, int die)\n"
    "{\n"
    "    fprintf(stderr, \"%s:%d: %s\\n\", file, line, fault);\n"
    "    if (die) {\n"
    "        abort();\n"
    "    }\n"
    "}\n"
    "void printLine(const char *s) { puts(s); }\n"
    "void printIntLine(int v) { printf(\"%d\\n\", v); }\n"
    "void printShortLine(short v) { printf(\"%hd\\n\", v); }\n"
    "void printUnsignedLine(unsigned v) { printf(\"%u\\n\", v); }\n"
    "void printLongLongLine(long long v) { printf(\"%lld\\n\", v); }\n"
    "void printHexCharLine(char v) { printf(\"%02x\\n\", (unsigned char)v); }\n"
    "int RAND32(void) { return rand(); }\n"
    "long long RAND64(void) { return ((long long)rand() << 31) | rand(); }\n";

// Corpus files use int64_t and the print helpers without including their
// headers; this prelude supplies them.
constexpr const char* kPrelude =
    "#include <stdint.h>\n"
    "#include <stdio.h>\n"
    "#include <stdlib.h>\n"
    "#include <limits.h>\n"
    "void printLine(const char *s);\n"
    "void printIntLine(int v);\n"
    "void printShortLine(short v);\n"
    "void printUnsignedLine(unsigned v);\n"
    "void printLongLongLine(long long v);\n"
    "void printHexCharLine(char v);\n"
    "int RAND32(void);\n"
    "long long RAND64(void);\n";

void spit(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

BenchSummary benchRuntime(const std::vector<std::pair<std::string, std::string>>& programs,
                          const std::vector<std::string>& names, const std::string& cc, int runs) {
  BenchSummary out;
  if (cc.empty()) {
    out.skipped = true;
    out.note = "CC is not set; runtime overhead not measured";
    return out;
  }
  fs::path dir = fs::temp_directory_path() / ("overfix_bench_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  spit(dir / "handler.c", kHandlerSource);
  spit(dir / "prelude.h", kPrelude);

  auto build = [&](const std::string& text, const fs::path& exe) {
    fs::path src = exe;
    src += ".c";
    spit(src, text);
    std::string cmd = cc + " -O2 -w -include " + quote(dir / "prelude.h") + " -o " + quote(exe) + " " + quote(src) +
                      " " + quote(dir / "handler.c") + " >/dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  auto time = [&](const fs::path& exe) {
    std::string cmd = quote(exe) + " >/dev/null 2>&1 </dev/null";
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < runs; ++i) {
      if (std::system(cmd.c_str()) == -1) break;
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  double base = 0.0, repaired = 0.0;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    BenchResult r;
    r.file = i < names.size() ? names[i] : "program_" + std::to_string(i);
    fs::path a = dir / ("a" + std::to_string(i));
    fs::path b = dir / ("b" + std::to_string(i));
    if (!build(programs[i].first, a) || !build(programs[i].second, b)) {
      r.error = "compilation failed";
    } else {
      r.baseSeconds = time(a);
      r.repairedSeconds = time(b);
      base += r.baseSeconds;
      repaired += r.repairedSeconds;
    }
    out.programs.push_back(std::move(r));
  }
  if (base > 0) out.overheadPercent = 100.0 * (repaired - base) / base;
  std::error_code ec;
  fs::remove_all(dir, ec);
  return out;
}

std::optional<std::string> compileCheck(const std::string& text, const std::string& cc) {
  fs::path dir = fs::temp_directory_path() / ("overfix_cc_" + std::to_string(::getpid()) + "_" +
                                              std::to_string(std::hash<std::string>{}(text)));
  fs::create_directories(dir);
  spit(dir / "prelude.h", kPrelude);
  spit(dir / "f.c", text);
  std::string cmd = cc + " -c -w -include " + quote(dir / "prelude.h") + " -o " + quote(dir / "f.o") + " " +
                    quote(dir / "f.c") + " >" + quote(dir / "log") + " 2>&1";
  std::optional<std::string> out;
  if (std::system(cmd.c_str()) != 0) {
    std::ifstream f(dir / "log");
    std::string log((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    out = log.empty() ? "compiler failed" : log;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return out;
}

json toJson(const BenchSummary& b) {
  json programs = json::array();
  for (const auto& p : b.programs) {
    json j = {{"file", p.file}, {"baseSeconds", p.baseSeconds}, {"repairedSeconds", p.repairedSeconds}};
    if (p.error) j["error"] = *p.error;
    programs.push_back(std::move(j));
  }
  return {{"skipped", b.skipped}, {"note", b.note}, {"overheadPercent", b.overheadPercent}, {"programs", programs}};
}

}  // namespace overfix::harness
