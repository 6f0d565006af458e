#include <random>
#include <sstream>

#include "overfix/harness/harness.hpp"
#include "overfix/support/text.hpp"

namespace overfix::harness {

namespace {

struct Kernel {
  const char* name;
  const char* statement;
  bool needsOther;
};

// One per seed program.
constexpr Kernel kKernels[kSeedCount] = {
    {"add_const", "result = data + 1;", false},
    {"mul_neg_const", "result = data * -2;", false},
    {"square", "result = data * data;", false},
    {"add", "result = data + other;", true},
    {"mul", "result = data * other;", true},
};

class Emitter {
 public:
  void line(const std::string& s) {
    out_ << s << '\n';
    if (!trim(s).empty()) ++count_;
  }
  void blank() { out_ << '\n'; }
  int count() const { return count_; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  int count_ = 0;
};

std::string n(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string synthesizeProgram(int seed, const SynthParams& p) {
  if (seed < 1 || seed > kSeedCount) throw ParamsInfeasible("seed must be 1.." + std::to_string(kSeedCount));
  if (p.callChainLen < 1 || p.callChainLen > 8) throw ParamsInfeasible("callChainLen must be 1..8 (the call depth bound)");
  if (p.loopIters < 0 || p.loopIters > 10) throw ParamsInfeasible("loopIters must be 0..10 (the unroll bound)");
  if (p.decoyCount < 0 || p.decoyCount > 256) throw ParamsInfeasible("decoyCount must be 0..256");
  if (p.targetLoc > kMaxSynthLoc) throw ParamsInfeasible("targetLoc above " + std::to_string(kMaxSynthLoc));

  const Kernel& k = kKernels[seed - 1];
  std::mt19937_64 rng(p.rngSeed);
  auto below = [&](std::uint64_t m) { return rng() % m; };

  // Decoys: guarded sites whose violation is unreachable. They all test
  // the same probe value, so the branches after the first are decided.
  struct Decoy {
    char op;
    std::uint64_t c;
  };
  std::vector<Decoy> decoys;
  for (int i = 0; i < p.decoyCount; ++i) decoys.push_back({below(2) ? '+' : '*', 2 + below(999)});

  // Filler work functions, sized after the skeleton is known.
  struct Work {
    std::uint64_t arg;
    std::vector<std::pair<char, std::uint64_t>> steps;
  };
  std::vector<Work> work;

  std::string params = k.needsOther ? "int data, int other" : "int data";
  std::string args = k.needsOther ? "data, other" : "data";

  auto render = [&](int padLines) {
    Emitter e;
    e.line("/* synthesized benchmark: seed " + std::to_string(seed) + " (" + k.name + "), rng " + n(p.rngSeed) +
           " */");
    e.line("#include <stdio.h>");
    e.line("#include <stdlib.h>");
    e.line("#include <limits.h>");
    e.blank();
    for (std::size_t i = 0; i < work.size(); ++i) {
      e.line("int work_" + n(i) + "(int v)");
      e.line("{");
      std::string prev = "v";
      for (std::size_t s = 0; s < work[i].steps.size(); ++s) {
        auto [op, c] = work[i].steps[s];
        std::string t = "t" + n(s);
        e.line("    int " + t + " = " + prev + " " + op + " " + n(c) + ";");
        prev = t;
      }
      e.line("    return " + prev + ";");
      e.line("}");
      e.blank();
    }
    for (std::size_t i = 0; i < decoys.size(); ++i) {
      e.line("int decoy_" + n(i) + "(int v)");
      e.line("{");
      e.line("    int r = 0;");
      e.line("    if (v > -1000 && v < 1000)");
      e.line("    {");
      e.line(std::string("        r = v ") + decoys[i].op + " " + n(decoys[i].c) + ";");
      e.line("    }");
      e.line("    return r;");
      e.line("}");
      e.blank();
    }
    e.line("void sink(" + params + ")");
    e.line("{");
    e.line("    int result = 0;");
    std::string indent = "    ";
    if (p.loopIters > 0) {
      e.line("    int i;");
      e.line("    for (i = 0; i < " + std::to_string(p.loopIters) + "; i++)");
      e.line("    {");
      indent = "        ";
    }
    e.line(indent + "/* FAULT */");
    e.line(indent + k.statement);
    e.line(indent + "printIntLine(result);");
    if (p.loopIters > 0) e.line("    }");
    e.line("}");
    e.blank();
    for (int c = p.callChainLen - 1; c >= 1; --c) {
      std::string callee = c == p.callChainLen - 1 ? "sink" : "chain_" + std::to_string(c + 1);
      e.line("void chain_" + std::to_string(c) + "(" + params + ")");
      e.line("{");
      e.line("    " + callee + "(" + args + ");");
      e.line("}");
      e.blank();
    }
    std::string entry = p.callChainLen == 1 ? "sink" : "chain_1";
    e.line("int main(void)");
    e.line("{");
    e.line("    int filler = 0;");
    e.line("    int probe = rand();");
    e.line("    int data = rand();");
    if (k.needsOther) e.line("    int other = rand();");
    for (std::size_t i = 0; i < work.size(); ++i) {
      e.line("    filler = work_" + n(i) + "(" + n(work[i].arg) + ");");
    }
    for (int i = 0; i < padLines; ++i) e.line("    filler = " + std::to_string(i) + ";");
    for (std::size_t i = 0; i < decoys.size(); ++i) e.line("    filler = decoy_" + n(i) + "(probe);");
    e.line("    " + entry + "(" + args + ");");
    e.line("    printIntLine(filler);");
    e.line("    return 0;");
    e.line("}");
    return e;
  };

  int base = render(0).count();
  if (p.targetLoc < base) {
    throw ParamsInfeasible("targetLoc " + std::to_string(p.targetLoc) + " is below the " + std::to_string(base) +
                           " lines these parameters need");
  }
  int remaining = p.targetLoc - base;
  // A work function costs its steps plus five lines (header, braces,
  // return, call site).
  while (remaining >= 6) {
    int steps = 1 + static_cast<int>(below(12));
    steps = std::min(steps, remaining - 5);
    Work w;
    w.arg = below(100);
    int muls = 0;
    for (int s = 0; s < steps; ++s) {
      // Values stay below 2^20: at most eight doublings of < 1300.
      if (muls < 8 && below(3) == 0) {
        w.steps.push_back({'*', 2});
        ++muls;
      } else {
        w.steps.push_back({'+', 1 + below(99)});
      }
    }
    work.push_back(std::move(w));
    remaining -= steps + 5;
  }
  return render(remaining).str();
}

}  // namespace overfix::harness
