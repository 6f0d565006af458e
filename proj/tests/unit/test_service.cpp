#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <httplib.h>

#include "overfix/service/service.hpp"

using namespace overfix;
using namespace overfix::service;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root = fs::temp_directory_path() /
           ("overfix_service_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(root);
    fs::create_directories(root);
    for (const char* f : {"CWE190_add_const_int_01_direct.c", "CWE190_mul_int_06_guarded.c"}) {
      fs::copy_file(fs::path(OVERFIX_CORPUS) / f, root / f);
    }
    std::ofstream(root / "safe.c") << "int main(void)\n{\n    int a = 2;\n    int b = a + 3;\n    return b;\n}\n";
    SessionOptions o;
    o.logPath = (root / "applied.jsonl").string();
    session = std::make_unique<ReviewSession>(root.string(), o);
    server = std::make_unique<Server>(*session);
    port = server->start("127.0.0.1", 0);
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
  }
  void TearDown() override {
    server->stop();
    server.reset();
    session.reset();
    fs::remove_all(root);
  }

  json body(const httplib::Result& r) { return json::parse(r->body); }

  json startRun(std::string& runId) {
    auto r = client->Post("/runs", "{}", "application/json");
    EXPECT_EQ(r->status, 201);
    runId = body(r)["runId"];
    auto f = client->Get("/runs/" + runId + "/faults");
    EXPECT_EQ(f->status, 200);
    return body(f);
  }

  std::string problemIn(const json& faults, const std::string& file) {
    for (const auto& f : faults) {
      if (f["file"] == file) return f["problemId"];
    }
    return "";
  }

  fs::path root;
  std::unique_ptr<ReviewSession> session;
  std::unique_ptr<Server> server;
  std::unique_ptr<httplib::Client> client;
  int port = 0;
};

}  // namespace

TEST_F(ServiceTest, RunListsFaults) {
  auto r = client->Post("/runs", "{}", "application/json");
  ASSERT_TRUE(r);
  ASSERT_EQ(r->status, 201);
  json j = body(r);
  EXPECT_EQ(j["faultCount"], 2);
  auto f = client->Get("/runs/" + j["runId"].get<std::string>() + "/faults");
  ASSERT_EQ(f->status, 200);
  json faults = body(f);
  ASSERT_EQ(faults.size(), 2u);
  for (const auto& x : faults) EXPECT_NE(x["file"], "safe.c");
}

TEST_F(ServiceTest, CandidatesCarryDiffAndViews) {
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_add_const_int_01_direct.c");
  ASSERT_FALSE(pid.empty());
  auto r = client->Get("/faults/" + pid + "/candidates");
  ASSERT_EQ(r->status, 200);
  json c = body(r);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c[0]["rank"], 1);
  EXPECT_TRUE(c[0]["valid"].get<bool>());
  EXPECT_EQ(c[0]["original"], slurp(root / "CWE190_add_const_int_01_direct.c"));
  EXPECT_NE(c[0]["repaired"], c[0]["original"]);
  EXPECT_NE(c[0]["diff"].get<std::string>().find("@@"), std::string::npos);
}

TEST_F(ServiceTest, ApplyThenVerifyCorrect) {
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_add_const_int_01_direct.c");
  json c = body(client->Get("/faults/" + pid + "/candidates"));
  std::string pattern = c[0]["patternId"];
  std::string before = slurp(root / "CWE190_add_const_int_01_direct.c");

  auto a = client->Post("/faults/" + pid + "/apply", json{{"patternId", pattern}}.dump(), "application/json");
  ASSERT_EQ(a->status, 202);
  std::string job = body(a)["jobId"];
  EXPECT_EQ(slurp(root / "CWE190_add_const_int_01_direct.c"), c[0]["repaired"].get<std::string>());
  EXPECT_EQ(slurp(root / "CWE190_add_const_int_01_direct.c.orig"), before);

  session->drain();
  auto v = client->Get("/verify/" + job);
  ASSERT_EQ(v->status, 200);
  EXPECT_EQ(body(v)["status"], "correct");
  EXPECT_TRUE(body(v)["newReports"].empty());

  auto log = session->appliedLog();
  ASSERT_EQ(log.size(), 1u);
  EXPECT_EQ(log[0].problemId, pid);
  EXPECT_EQ(log[0].patternId, pattern);
  EXPECT_EQ(log[0].verifyOutcome, VerifyStatus::Correct);
  json httpLog = body(client->Get("/log"));
  ASSERT_EQ(httpLog.size(), 1u);
  EXPECT_EQ(httpLog[0]["verifyOutcome"], "correct");

  // The mirror holds the pending entry and its update, in that order.
  std::istringstream lines(slurp(root / "applied.jsonl"));
  std::vector<json> mirrored;
  for (std::string l; std::getline(lines, l);) mirrored.push_back(json::parse(l));
  ASSERT_EQ(mirrored.size(), 2u);
  EXPECT_EQ(mirrored[0]["verifyOutcome"], "pending");
  EXPECT_EQ(mirrored[1]["verifyOutcome"], "correct");
  EXPECT_EQ(mirrored[1]["jobId"], job);

  // A new run no longer reports the repaired file.
  std::string run2;
  EXPECT_TRUE(problemIn(startRun(run2), "CWE190_add_const_int_01_direct.c").empty());
}

TEST_F(ServiceTest, ExternallyModifiedFileConflicts) {
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_add_const_int_01_direct.c");
  json c = body(client->Get("/faults/" + pid + "/candidates"));
  std::ofstream(root / "CWE190_add_const_int_01_direct.c", std::ios::app) << "/* edited */\n";
  std::string edited = slurp(root / "CWE190_add_const_int_01_direct.c");
  auto a = client->Post("/faults/" + pid + "/apply", json{{"patternId", c[0]["patternId"]}}.dump(),
                        "application/json");
  EXPECT_EQ(a->status, 409);
  EXPECT_EQ(slurp(root / "CWE190_add_const_int_01_direct.c"), edited);
  EXPECT_TRUE(session->appliedLog().empty());
}

TEST_F(ServiceTest, InvalidCandidateIsRefused) {
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_mul_int_06_guarded.c");
  json c = body(client->Get("/faults/" + pid + "/candidates"));
  std::string invalid;
  for (const auto& x : c) {
    if (!x["valid"].get<bool>()) invalid = x["patternId"];
  }
  ASSERT_FALSE(invalid.empty());
  std::string before = slurp(root / "CWE190_mul_int_06_guarded.c");
  auto a = client->Post("/faults/" + pid + "/apply", json{{"patternId", invalid}}.dump(), "application/json");
  EXPECT_EQ(a->status, 422);
  EXPECT_EQ(slurp(root / "CWE190_mul_int_06_guarded.c"), before);
}

TEST_F(ServiceTest, UnknownIdsAreNotFound) {
  EXPECT_EQ(client->Get("/runs/run-99/faults")->status, 404);
  EXPECT_EQ(client->Get("/faults/IOF-00000000-1-ovf/candidates")->status, 404);
  EXPECT_EQ(client->Get("/verify/job-99")->status, 404);
  EXPECT_EQ(client->Post("/faults/IOF-00000000-1-ovf/apply", R"({"patternId":"x"})", "application/json")->status,
            404);
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_add_const_int_01_direct.c");
  EXPECT_EQ(client->Post("/faults/" + pid + "/apply", R"({"patternId":"NoSuchPattern"})", "application/json")->status,
            404);
}

TEST_F(ServiceTest, MalformedBodyIsBadRequest) {
  std::string run;
  json faults = startRun(run);
  std::string pid = problemIn(faults, "CWE190_add_const_int_01_direct.c");
  EXPECT_EQ(client->Post("/faults/" + pid + "/apply", "not json", "application/json")->status, 400);
}

TEST(ServiceBind, ParsesHostAndPort) {
  EXPECT_EQ(parseBind("0.0.0.0:8080"), (std::pair<std::string, int>{"0.0.0.0", 8080}));
  EXPECT_EQ(parseBind("9000"), (std::pair<std::string, int>{"127.0.0.1", 9000}));
}
