#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "overfix/smt/solver.hpp"

using namespace overfix;
using namespace overfix::smt;

namespace {

SmtScript script(std::initializer_list<const char*> vars) {
  SmtScript s;
  for (const char* v : vars) s.declare({v, CType::Int});
  return s;
}

Int pow2(int n) { return static_cast<Int>(1) << n; }

// Independent oracle for the floor square root: bisection over [0, 2^64].
Int bisectSqrt(Int n) {
  Int lo = 0, hi = pow2(64);
  while (lo < hi) {
    Int mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::optional<std::string> externalSolver() {
  if (auto env = solverFromEnvironment()) return env;
  for (const char* p : {"/usr/local/bin/z3", "/usr/bin/z3"}) {
    if (std::filesystem::exists(p)) return std::string(p);
  }
  return std::nullopt;
}

}  // namespace

TEST(FloorSqrt, Examples) {
  EXPECT_EQ(floorSqrt(0), 0);
  EXPECT_EQ(floorSqrt(2147483647), 46340);
  Int k = floorSqrt(Int(9223372036854775807LL));
  EXPECT_EQ(k, 3037000499LL);
  EXPECT_LE(k * k, Int(9223372036854775807LL));
  EXPECT_GT((k + 1) * (k + 1), Int(9223372036854775807LL));
  EXPECT_THROW(floorSqrt(-1), Error);
}

TEST(FloorSqrt, MatchesBisectionOracle) {
  std::mt19937_64 rng(7);
  std::vector<Int> samples = {1, 2, 3, 4, 15, 16, 17, 127, 255, 32767, 65535, 4294967295LL,
                              Int(9223372036854775807LL), pow2(100) - 1, pow2(100)};
  for (int i = 0; i < 2000; ++i) samples.push_back(static_cast<Int>(rng() >> (rng() % 63)));
  for (Int n : samples) {
    Int k = floorSqrt(n);
    ASSERT_EQ(k, bisectSqrt(n)) << toString(n);
    ASSERT_LE(k * k, n);
    ASSERT_GT((k + 1) * (k + 1), n);
  }
}

TEST(Emit, ScriptShapes) {
  SmtScript s = script({"resSymbolic", "varAsymbolic", "varBsymbolic"});
  s.add(eq(var("resSymbolic"), add(var("varAsymbolic"), var("varBsymbolic"))));
  s.add(gt(var("resSymbolic"), constant(2147483647)), Tag::Checker);
  std::string t = emit(s);
  EXPECT_NE(t.find("(assert (= resSymbolic (+ varAsymbolic varBsymbolic)))"), std::string::npos);
  EXPECT_NE(t.find("(assert (> resSymbolic 2147483647))"), std::string::npos);
  EXPECT_EQ(t.rfind("(set-logic QF_NIA)\n", 0), 0u);
}

TEST(Emit, EmptyScript) { EXPECT_EQ(emit(SmtScript{}), "(set-logic QF_NIA)\n(check-sat)\n"); }

TEST(Emit, UndeclaredVariable) {
  SmtScript s;
  s.add(gt(var("ghost"), constant(0)));
  try {
    emit(s);
    FAIL();
  } catch (const UndeclaredVariable& e) {
    EXPECT_EQ(e.symbol(), "ghost");
  }
}

TEST(Emit, CanonicalAndNegativeConstants) {
  auto build = [] {
    SmtScript s = script({"x_1"});
    s.add(lt(var("x_1"), constant(-5)));
    return s;
  };
  EXPECT_EQ(emit(build()), emit(build()));
  EXPECT_NE(emit(build()).find("(< x_1 (- 5))"), std::string::npos);
}

TEST(Script, TagsTruncateAndSlice) {
  SmtScript s = script({"a", "b", "c", "d"});
  s.add(eq(var("b"), add(var("a"), constant(1))));
  s.add(gt(var("d"), constant(3)));
  s.add(gt(var("b"), constant(10)), Tag::Checker);
  EXPECT_EQ(s.without(Tag::Checker).asserts().size(), 2u);
  SmtScript sl = s.slice({"b"});
  EXPECT_EQ(sl.asserts().size(), 2u);
  EXPECT_TRUE(sl.declared("a"));
  EXPECT_FALSE(sl.declared("d"));
  s.truncate(2, 1);
  EXPECT_EQ(s.decls().size(), 2u);
  EXPECT_EQ(s.asserts().size(), 1u);
}

TEST(Ssa, VersionsPerBase) {
  SsaFactory f;
  EXPECT_EQ(f.fresh("x", CType::Int).name, "x_1");
  auto m = f.mark();
  EXPECT_EQ(f.fresh("x", CType::Int).name, "x_2");
  EXPECT_EQ(f.current("x")->name, "x_2");
  f.reset(m);
  EXPECT_EQ(f.current("x")->name, "x_1");
  EXPECT_FALSE(f.current("y").has_value());
}

class SolverExamples : public ::testing::TestWithParam<std::string> {
 protected:
  std::unique_ptr<Solver> solver() {
    if (GetParam() == "internal") return makeIntervalSolver();
    EnumerateOptions o;
    o.limits = frontend::LimitsTable::standard();
    return makeEnumerateSolver(o);
  }
};

TEST_P(SolverExamples, Contradiction) {
  SmtScript s = script({"x"});
  s.add(gt(var("x"), constant(5)));
  s.add(lt(var("x"), constant(3)));
  EXPECT_EQ(solver()->check(s).status, Status::Unsat);
}

TEST_P(SolverExamples, AddOverflowWitness) {
  SmtScript s = script({"r", "a", "b"});
  s.add(eq(var("r"), add(var("a"), var("b"))));
  s.add(eq(var("a"), constant(2147483647)));
  s.add(eq(var("b"), constant(1)));
  s.add(gt(var("r"), constant(2147483647)));
  auto res = solver()->check(s);
  ASSERT_EQ(res.status, Status::Sat);
  EXPECT_EQ(res.model->at("r"), Int(2147483647) + 1);
}

TEST_P(SolverExamples, GuardedSquareIsSafe) {
  if (GetParam() == "enumerate") GTEST_SKIP() << "46341 x 2^32 values";
  SmtScript s = script({"r", "a"});
  s.add(eq(var("r"), mul(var("a"), var("a"))));
  s.add(ge(var("a"), constant(0)));
  s.add(le(var("a"), constant(46340)));
  s.add(gt(var("r"), constant(2147483647)));
  EXPECT_EQ(solver()->check(s).status, Status::Unsat);
  // 46340^2 = 2147395600 is the largest square in range.
  EXPECT_EQ(Int(46340) * 46340, 2147395600);
}

INSTANTIATE_TEST_SUITE_P(Backends, SolverExamples, ::testing::Values("internal", "enumerate"));

TEST(IntervalSolver, UnguardedSquareOverflows) {
  SmtScript s;
  s.declare({"a", CType::Int});
  s.declare({"r", CType::Int});
  s.add(ge(var("a"), constant(-2147483647 - 1)));
  s.add(le(var("a"), constant(2147483647)));
  s.add(eq(var("r"), mul(var("a"), var("a"))));
  s.add(gt(var("r"), constant(2147483647)));
  auto res = makeIntervalSolver()->check(s);
  ASSERT_EQ(res.status, Status::Sat);
  EXPECT_TRUE(satisfies(s, *res.model));
}

TEST(IntervalSolver, TruncatingDivision) {
  SmtScript s = script({"q", "x"});
  s.add(eq(var("x"), constant(-7)));
  s.add(eq(var("q"), div(var("x"), constant(2))));
  auto res = makeIntervalSolver()->check(s);
  ASSERT_EQ(res.status, Status::Sat);
  EXPECT_EQ(res.model->at("q"), -3);
}

namespace {

// Random scripts over the analog domain: every free variable carries
// explicit [-128, 127] bounds so that every backend sees the same domain.
SmtScript randomScript(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> pick(0, 99);
  SmtScript s;
  int inputs = 1 + static_cast<int>(rng() % 2);
  std::vector<std::string> names;
  for (int i = 0; i < inputs; ++i) {
    std::string n = "v" + std::to_string(i);
    s.declare({n, CType::Char});
    s.add(ge(var(n), constant(-128)));
    s.add(le(var(n), constant(127)));
    names.push_back(n);
  }
  auto term = [&]() -> Formula {
    Formula x = var(names[rng() % names.size()]);
    Formula y = pick(rng) < 50 ? var(names[rng() % names.size()]) : constant(small(rng));
    switch (rng() % 4) {
      case 0: return add(x, y);
      case 1: return sub(x, y);
      case 2: return mul(x, y);
      default: return x;
    }
  };
  int defs = static_cast<int>(rng() % 3);
  for (int i = 0; i < defs; ++i) {
    std::string n = "t" + std::to_string(i);
    s.declare({n, CType::Int});
    s.add(eq(var(n), term()));
    names.push_back(n);
  }
  int atoms = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < atoms; ++i) {
    Formula l = term();
    Formula r = constant(static_cast<int>(rng() % 300) - 150);
    Formula a;
    switch (rng() % 6) {
      case 0: a = lt(l, r); break;
      case 1: a = le(l, r); break;
      case 2: a = gt(l, r); break;
      case 3: a = ge(l, r); break;
      case 4: a = eq(l, r); break;
      default: a = ne(l, r); break;
    }
    if (pick(rng) < 25) a = lor(a, gt(var(names[0]), constant(small(rng))));
    if (pick(rng) < 10) a = lnot(a);
    s.add(a);
  }
  return s;
}

}  // namespace

TEST(BackendAgreement, InternalMatchesEnumerationOnScaledDomain) {
  std::mt19937 rng(20240611);
  auto oracle = makeEnumerateSolver();
  auto internal = makeIntervalSolver();
  int unknown = 0;
  for (int i = 0; i < 400; ++i) {
    SmtScript s = randomScript(rng);
    auto want = oracle->check(s);
    ASSERT_NE(want.status, Status::Unknown);
    auto got = internal->check(s);
    if (got.status == Status::Unknown) {
      ++unknown;
      continue;
    }
    ASSERT_EQ(got.status, want.status) << emit(s);
    if (got.status == Status::Sat) ASSERT_TRUE(satisfies(s, *got.model)) << emit(s);
  }
  EXPECT_LE(unknown, 4);
}

TEST(BackendAgreement, ExternalMatchesEnumerationOnScaledDomain) {
  auto path = externalSolver();
  if (!path) GTEST_SKIP() << "no external solver installed";
  ExternalOptions o;
  o.command = solverCommand(*path);
  auto external = makeExternalSolver(o);
  auto oracle = makeEnumerateSolver();
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    SmtScript s = randomScript(rng);
    auto want = oracle->check(s);
    auto got = external->check(s);
    ASSERT_EQ(got.status, want.status) << emit(s);
    if (got.status == Status::Sat) ASSERT_TRUE(satisfies(s, *got.model)) << emit(s);
  }
}

TEST(ExternalSolver, TempFileModeAndTruncatingDivision) {
  auto path = externalSolver();
  if (!path) GTEST_SKIP() << "no external solver installed";
  ExternalOptions o;
  o.command = solverCommand(*path);
  o.viaTempFile = true;
  SmtScript s = script({"q", "r", "x"});
  s.add(eq(var("x"), constant(-7)));
  s.add(eq(var("q"), div(var("x"), constant(2))));
  s.add(eq(var("r"), mod(var("x"), constant(2))));
  auto res = makeExternalSolver(o)->check(s);
  ASSERT_EQ(res.status, Status::Sat);
  EXPECT_EQ(res.model->at("q"), -3);
  EXPECT_EQ(res.model->at("r"), -1);
}

TEST(ExternalSolver, ProtocolErrorOnGarbage) {
  ExternalOptions o;
  o.command = {"/bin/echo", "hello"};
  o.wantModel = false;
  EXPECT_THROW(makeExternalSolver(o)->check(SmtScript{}), SolverProtocolError);
}

TEST(ExternalSolver, Timeout) {
  ExternalOptions o;
  o.command = {"/bin/sleep", "5"};
  o.timeoutSeconds = 0.2;
  EXPECT_THROW(makeExternalSolver(o)->check(SmtScript{}), SolverTimeout);
}

TEST(CachingSolver, MemoizesByText) {
  CachingSolver c(makeIntervalSolver());
  SmtScript s = script({"x"});
  s.add(gt(var("x"), constant(1)));
  c.check(s);
  c.check(s);
  EXPECT_EQ(c.hits(), 1u);
  EXPECT_EQ(c.misses(), 1u);
}

// Comparisons against a quotient: brute force over a small box decides every
// instance, and the interval backend must agree without giving up.
TEST(IntervalSolver, DivisionAtomsAgreeWithBruteForce) {
  std::mt19937 rng(7);
  auto internal = makeIntervalSolver();
  const std::vector<Op> ops = {Op::Lt, Op::Le, Op::Gt, Op::Ge, Op::Eq, Op::Ne};
  for (int i = 0; i < 300; ++i) {
    SmtScript s = script({"x", "y", "z"});
    for (const char* v : {"x", "y", "z"}) {
      s.add(ge(var(v), constant(-8)));
      s.add(le(var(v), constant(8)));
    }
    s.add(ne(var("y"), constant(0)));
    Formula num = rng() % 2 ? constant(static_cast<int>(rng() % 61) - 30) : var("z");
    Formula q = div(num, var("y"));
    Formula t = rng() % 2 ? var("x") : mul(var("x"), constant(static_cast<int>(rng() % 5) - 2));
    Op op = ops[rng() % ops.size()];
    Formula atom = rng() % 2 ? binary(op, t, q) : binary(op, q, t);
    if (rng() % 4 == 0) atom = lnot(atom);
    s.add(atom);

    bool sat = false;
    for (int x = -8; x <= 8 && !sat; ++x)
      for (int y = -8; y <= 8 && !sat; ++y)
        for (int z = -8; z <= 8 && !sat; ++z) sat = satisfies(s, Model{{"x", x}, {"y", y}, {"z", z}});

    auto got = internal->check(s);
    ASSERT_NE(got.status, Status::Unknown) << emit(s);
    ASSERT_EQ(got.status, sat ? Status::Sat : Status::Unsat) << emit(s);
    if (sat) ASSERT_TRUE(satisfies(s, *got.model)) << emit(s);
  }
}
