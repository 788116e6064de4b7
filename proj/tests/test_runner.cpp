#include <doctest.h>

#include "linkagelab/runner.hpp"

using namespace linkagelab;

namespace {

const char* kNode = R"(format: 1
char 2
vars x, y
quotient x*y
module R rank 1
module line rank 1 relations [x]
ideal a = x
ideal b = y
ideal zero =
ideal ysq = y^2
)";

TaskResult with_status(TaskStatus s) {
  TaskResult r;
  r.status = s;
  return r;
}

TaskArgs link_args(const char* module, const char* a, const char* b, const char* i) {
  TaskArgs t;
  t.module = module;
  t.a = a;
  t.b = b;
  t.i = i;
  return t;
}

}  // namespace

TEST_CASE("exit codes follow status priority") {
  using S = TaskStatus;
  CHECK(exit_code({}) == 0);
  CHECK(exit_code({with_status(S::ok)}) == 0);
  CHECK(exit_code({with_status(S::ok), with_status(S::hypotheses_failed)}) == 2);
  CHECK(exit_code({with_status(S::hypotheses_failed), with_status(S::inconclusive)}) == 3);
  CHECK(exit_code({with_status(S::inconclusive), with_status(S::resource)}) == 5);
  CHECK(exit_code({with_status(S::resource), with_status(S::fail)}) == 1);
}

TEST_CASE("link command over the node ring and the line") {
  auto s = parse_session(kNode);
  auto over_r = run_task(s, "link", {}, link_args("R", "a", "b", "zero"), "node");
  REQUIRE(over_r.size() == 1);
  CHECK(over_r[0].verdict == "linked");
  CHECK(over_r[0].status == TaskStatus::ok);

  auto over_line = run_task(s, "link", {}, link_args("line", "a", "b", "zero"), "node");
  CHECK(over_line[0].verdict == "not-linked");
  CHECK(over_line[0].conclusions.at("b_m_equals_colon_a") == "fail");

  auto self = run_task(s, "link", {}, link_args("line", "b", "b", "ysq"), "node");
  CHECK(self[0].verdict == "linked");

  auto bad = run_task(s, "link", {}, link_args("line", "a", "b", "ysq"), "node");
  CHECK(bad[0].status == TaskStatus::hypotheses_failed);
  CHECK(exit_code(bad) == 2);
}

TEST_CASE("unknown names are usage errors") {
  auto s = parse_session(kNode);
  CHECK_THROWS_AS(run_task(s, "link", {}, link_args("R", "nope", "b", "zero"), "node"), UsageError);
  CHECK_THROWS_AS(run_task(s, "link", {}, link_args("nope", "a", "b", "zero"), "node"), UsageError);
  CHECK_THROWS_AS(run_task(s, "frobnicate", {}, TaskArgs{}, "node"), UsageError);
}

TEST_CASE("computation commands fill their payloads") {
  auto s = parse_session(kNode);
  TaskArgs t;
  t.module = "line";
  t.a = "b";
  auto g = run_task(s, "grade", {}, t, "node");
  CHECK(g[0].payload["grade"] == 1);
  t.poly = "x^2*y + y^3";
  auto nf = run_task(s, "nf", {}, t, "node");
  CHECK(nf[0].payload["normal_form"] == "0");
  auto gor = run_task(s, "gorenstein", {}, TaskArgs{}, "node");
  CHECK(gor[0].payload["gorenstein"] == true);
}

TEST_CASE("reports are deterministic without timings") {
  auto first = report_json("suite", "", {1, 2}, run_suite(2, 0, 4), false).dump();
  auto second = report_json("suite", "", {1, 2}, run_suite(2, 0, 1), false).dump();
  CHECK(first == second);
  auto timed = report_json("suite", "", {1}, run_suite(1, 0, 2), true);
  CHECK(timed["results"][0]["timings"].contains("total_ms"));
}

TEST_CASE("error reports carry the position") {
  auto e = error_json("link", "characteristic must be prime", 2, 6);
  CHECK(e["exit_code"] == 4);
  CHECK(e["error"]["line"] == 2);
  CHECK(e["error"]["column"] == 6);
}
