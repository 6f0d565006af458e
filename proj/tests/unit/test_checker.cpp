#include <gtest/gtest.h>

#include "overfix/checker/overflow.hpp"
#include "overfix/frontend/frontend.hpp"

using namespace overfix;
using namespace overfix::checker;
using frontend::CType;
using frontend::LimitsTable;

namespace {

UnitAnalysis analyze(const std::string& text, const symex::AnalysisConfig& cfg = {}) {
  static std::vector<std::unique_ptr<frontend::SourceUnit>> keep;
  keep.push_back(std::make_unique<frontend::SourceUnit>(frontend::loadText("t.c", text)));
  auto solver = smt::makeSolver({});
  return analyzeUnit(*keep.back(), cfg, *solver);
}

symex::Operand varOperand(const std::string& name, const std::string& text) {
  symex::Operand o;
  o.formula = smt::var(name);
  o.text = text;
  return o;
}

symex::Operand constOperand(Int v) {
  symex::Operand o;
  o.formula = smt::constant(v);
  o.constant = v;
  o.text = toString(v);
  return o;
}

}  // namespace

TEST(Checker, ShapeClassification) {
  auto a = varOperand("a_1", "a");
  auto a2 = varOperand("a_1", "a");
  auto b = varOperand("b_1", "b");
  EXPECT_EQ(classify('+', a, constOperand(7)), Shape::AddConst);
  EXPECT_EQ(classify('+', constOperand(7), a), Shape::AddConst);
  EXPECT_EQ(classify('+', a, constOperand(-7)), Shape::GenericAdd);
  EXPECT_EQ(classify('+', a, b), Shape::GenericAdd);
  EXPECT_EQ(classify('*', a, constOperand(-3)), Shape::MulNegConst);
  EXPECT_EQ(classify('*', a, constOperand(3)), Shape::GenericMul);
  EXPECT_EQ(classify('*', a, a2), Shape::MulEqual);
  EXPECT_EQ(classify('*', a, b), Shape::GenericMul);
  auto call = varOperand("$f_1", "f()");
  call.sideEffect = true;
  EXPECT_EQ(classify('*', call, call), Shape::GenericMul);
}

TEST(Checker, BoundsPickNarrowerType) {
  auto t = LimitsTable::standard();
  EXPECT_EQ(boundsFor(t, CType::Short, CType::Int).type, CType::Short);
  EXPECT_EQ(boundsFor(t, CType::Int64, CType::Int).type, CType::Int);
  EXPECT_EQ(boundsFor(t, CType::Int, CType::UInt).type, CType::UInt);
  EXPECT_EQ(boundsFor(t, CType::UInt, CType::Int).type, CType::Int);
  EXPECT_EQ(boundsFor(t, CType::Int, CType::Int).maxVal, 2147483647);
  EXPECT_EQ(boundsFor(t, CType::Int, CType::Int).minVal, -Int(2147483647) - 1);
}

TEST(Checker, PaperLiteralMinFlag) {
  auto t = LimitsTable::standard();
  t.setPaperLiteralMin(true);
  EXPECT_EQ(t.bounds(CType::Int).minVal, -Int(2147483647) + 1);
  EXPECT_EQ(t.bounds(CType::UInt).minVal, 0);
}

TEST(Checker, ProblemIdFormat) {
  std::string id = problemId("dir/a.c", 12, BoundKind::Overflow);
  EXPECT_EQ(id.rfind("IOF-", 0), 0u);
  EXPECT_EQ(id.size(), 4 + 8 + 1 + 2 + 1 + 3);
  EXPECT_EQ(id.substr(12), "-12-ovf");
  EXPECT_EQ(problemId("dir/a.c", 12, BoundKind::Underflow).substr(12), "-12-unf");
  EXPECT_NE(problemId("dir/b.c", 12, BoundKind::Overflow), id);
}

TEST(Checker, UnconstrainedAddConstIsReported) {
  auto r = analyze("int main(int data) {\n  int r;\n  r = data + 1;\n  return r;\n}\n");
  ASSERT_EQ(r.reports.size(), 1u);
  const auto& rep = r.reports[0];
  EXPECT_EQ(rep.shape, Shape::AddConst);
  EXPECT_EQ(rep.kind, BoundKind::Overflow);
  EXPECT_EQ(rep.line, 3);
  EXPECT_EQ(rep.statement, "r = data + 1;");
  EXPECT_EQ(rep.targetVar.name, "r_1");
  EXPECT_TRUE(rep.dependentVars.empty());
  ASSERT_TRUE(rep.witness);
  // The witness must drive the mathematical sum past INT_MAX.
  Int data = rep.witness->at("data_1");
  EXPECT_GT(data + 1, Int(2147483647));
  EXPECT_EQ(data, 2147483647);
}

TEST(Checker, GuardedSquareIsNotReported) {
  auto r = analyze(
      "int main(int data) {\n  int r = 0;\n  if (data <= 46340 && data >= 0) {\n    r = data * data;\n  }\n"
      "  return r;\n}\n");
  EXPECT_TRUE(r.reports.empty());
  EXPECT_LE(Int(46340) * 46340, Int(2147483647));
}

TEST(Checker, UnguardedInt64SquareIsReported) {
  auto r = analyze("int64_t main(int64_t data) {\n  int64_t r = data * data;\n  return r;\n}\n");
  ASSERT_EQ(r.reports.size(), 1u);
  EXPECT_EQ(r.reports[0].shape, Shape::MulEqual);
  EXPECT_EQ(r.reports[0].bounds.type, CType::Int64);
  Int w = r.reports[0].witness->at("data_1");
  EXPECT_GT(w * w, Int(9223372036854775807LL));
}

TEST(Checker, DependentVarsFollowDataFlow) {
  auto r = analyze("int main(int a) {\n  int y = a;\n  int r = y + y;\n  int z = r;\n  return z;\n}\n");
  ASSERT_FALSE(r.reports.empty());
  const auto& rep = r.reports[0];
  ASSERT_EQ(rep.operandVars.size(), 1u);
  EXPECT_EQ(rep.operandVars[0].name, "y_1");
  ASSERT_EQ(rep.dependentVars.size(), 1u);
  EXPECT_EQ(rep.dependentVars[0].name, "a_1");
}

TEST(Checker, OneReportPerStatementAndKind) {
  auto r = analyze(
      "int main(int a, int b) {\n  int i = 0;\n  int r = 0;\n  while (i < 3) {\n    if (b > i) {\n      r = a * -2;\n"
      "    }\n    i = i + 1;\n  }\n  return r;\n}\n");
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0].kind, BoundKind::Overflow);
  EXPECT_EQ(r.reports[1].kind, BoundKind::Underflow);
  EXPECT_EQ(r.reports[0].line, r.reports[1].line);
  EXPECT_NE(r.reports[0].problemId, r.reports[1].problemId);
}

TEST(Checker, DetectionScriptIsSatAndTagged) {
  auto r = analyze("int main(int a) {\n  int r = a * a;\n  return r;\n}\n");
  ASSERT_EQ(r.reports.size(), 1u);
  const auto& s = r.reports[0].detectionScript;
  std::string text = smt::emit(s);
  EXPECT_NE(text.find("(assert (= r_1 (* a_1 a_1)))"), std::string::npos);
  EXPECT_NE(text.find("(assert (> r_1 2147483647))"), std::string::npos);
  std::size_t tagged = 0;
  for (const auto& a : s.asserts()) tagged += a.tag == smt::Tag::Checker;
  EXPECT_EQ(tagged, 2u);
  auto exact = smt::makeIntervalSolver();
  EXPECT_EQ(exact->check(s).status, smt::Status::Sat);
}

TEST(Checker, JsonShape) {
  auto r = analyze("int main(int a) {\n  int r = a * -3;\n  return r;\n}\n");
  ASSERT_EQ(r.reports.size(), 2u);
  auto j = toJson(r.reports[0]);
  for (const char* k : {"problemId", "checkerId", "file", "line", "statement", "shape", "typeName", "witness"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["checkerId"], "ID-Integer_Overflow_Fault");
  EXPECT_EQ(j["shape"], "MulNegConst");
  EXPECT_EQ(j["typeName"], "int");
}

TEST(Checker, UnsignedAndCharTypes) {
  auto r = analyze(
      "int main(void) {\n  unsigned int u = rand();\n  u = u * 3;\n  char c = 100;\n  c = c + 27;\n  c = c + 1;\n"
      "  return 0;\n}\n");
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0].line, 3);
  EXPECT_EQ(r.reports[0].bounds.type, CType::UInt);
  EXPECT_EQ(r.reports[1].line, 6);
  EXPECT_EQ(r.reports[1].bounds.type, CType::Char);
}

// The same text checked under short and int flips exactly where plain
// arithmetic says the sum leaves the type.
TEST(Checker, MultiPrecisionFlip) {
  for (const char* type : {"short", "int"}) {
    Int max = std::string(type) == "short" ? 32767 : 2147483647;
    for (Int k : {Int(100), Int(32000), Int(32760), Int(32761), Int(40000), Int(2147483000), Int(2147483640),
                  Int(2147483641)}) {
      if (k > max) continue;
      std::string src = std::string("int main(void) {\n  ") + type + " a = " + toString(k) + ";\n  " + type +
                        " r;\n  r = a + 7;\n  return 0;\n}\n";
      auto r = analyze(src);
      EXPECT_EQ(!r.reports.empty(), k + 7 > max) << src;
    }
  }
}

namespace {

enum class Right { Const, Var, Same };

// Runs the checker on `r = a op right` with every operand pinned to a
// concrete value; returns {overflow reported, underflow reported}.
std::pair<bool, bool> runSite(const LimitsTable& table, CType type, char op, Int a, Right kind, Int b,
                              smt::Solver& solver) {
  static const auto unit = frontend::loadText("o.c", "int main(void) {\n  int r = 0;\n  return r;\n}\n");
  const frontend::AstNode& stmt = *unit.ast[0]->body()->child(0);
  symex::PathState st;
  st.script.declare({"a_1", type});
  st.script.add(smt::eq(smt::var("a_1"), smt::constant(a)));
  symex::Operand left = varOperand("a_1", "a");
  symex::Operand right;
  if (kind == Right::Same) {
    right = varOperand("a_1", "a");
  } else if (kind == Right::Var) {
    st.script.declare({"b_1", type});
    st.script.add(smt::eq(smt::var("b_1"), smt::constant(b)));
    right = varOperand("b_1", "b");
  } else {
    right = constOperand(b);
  }
  Formula value = op == '+' ? smt::add(left.formula, right.formula) : smt::mul(left.formula, right.formula);
  symex::CheckSite site{st, unit, stmt, op, left, right, value, {"r_1", type}, type, type, "main", 2, {}};
  OverflowChecker c(table);
  c.check(site, solver);
  std::pair<bool, bool> out{false, false};
  for (const auto& r : c.reports()) (r.kind == BoundKind::Overflow ? out.first : out.second) = true;
  return out;
}

}  // namespace

// Exhaustive over the 8-bit analog: a report is raised exactly when the
// mathematical result leaves the analog bounds.
TEST(Checker, PreconditionOracleOnScaledDomain) {
  auto table = LimitsTable::analog(8);
  auto solver = smt::makeIntervalSolver();
  std::size_t mismatches = 0, cases = 0;
  for (CType type : frontend::kIntegerTypes) {
    auto bounds = table.bounds(type);
    auto expect = [&](Int v) { return std::pair{v > bounds.maxVal, v < bounds.minVal}; };
    auto run = [&](char op, Int a, Right kind, Int b, Int v) {
      ++cases;
      if (runSite(table, type, op, a, kind, b, *solver) != expect(v)) ++mismatches;
    };
    for (Int a = bounds.minVal; a <= bounds.maxVal; ++a) {
      for (Int c : {1, 5, 64, 127}) run('+', a, Right::Const, c, a + c);
      for (Int c : {-1, -2, -3, -100}) run('*', a, Right::Const, c, a * c);
      run('*', a, Right::Same, 0, a * a);
      // Two-variable shapes: full square for int, a stride elsewhere.
      Int stride = type == CType::Int ? 1 : 7;
      for (Int b = bounds.minVal; b <= bounds.maxVal; b += stride) {
        run('+', a, Right::Var, b, a + b);
        run('*', a, Right::Var, b, a * b);
      }
    }
  }
  EXPECT_EQ(mismatches, 0u) << "of " << cases;
}
