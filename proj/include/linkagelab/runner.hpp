#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkagelab/linkage.hpp"
#include "linkagelab/session.hpp"

namespace linkagelab {

/// Bad command line or task arguments (exit code 4).
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class TaskStatus { ok, fail, hypotheses_failed, inconclusive, resource };
std::string to_string(TaskStatus s);

struct TaskResult {
  std::string id;
  std::string fixture;
  TaskStatus status = TaskStatus::ok;
  std::string verdict;
  /// Clause name -> outcome text.
  std::map<std::string, std::string> hypotheses;
  std::map<std::string, std::string> conclusions;
  std::vector<std::string> witnesses;
  nlohmann::json payload = nlohmann::json::object();
  double milliseconds = 0;
};

/// Names taken from a session; empty fields fall back to the defaults
/// (first module, ideals named a, b, i with I = 0 when i is undefined).
struct TaskArgs {
  std::optional<std::string> module;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> i;
  std::optional<std::string> poly;
  std::size_t window = 0;
  std::uint64_t seed = 0;
  /// Instance count for oracle-crosscheck.
  std::uint64_t seeds = 50;
};

/// Overrides `base` with the options of a task statement.
TaskArgs merge_task_args(TaskArgs base, const TaskDecl& task);

/// Runs one command against a session. Throws UsageError for unknown names
/// and missing arguments; engine errors become task statuses.
std::vector<TaskResult> run_task(const SessionFile& session, const std::string& command, const std::vector<std::string>& words,
                    const TaskArgs& args, const std::string& fixture);

/// Results for one generated fixture: linkage plus every instance verifier.
std::vector<TaskResult> run_fixture(const Fixture& fixture, std::size_t window);
/// All fixture kinds for seeds 1..seeds, in parallel; ordered by kind, then seed.
std::vector<TaskResult> run_suite(std::uint64_t seeds, std::size_t window, unsigned threads);
std::vector<TaskResult> run_crosscheck(std::uint64_t seeds, unsigned threads);

/// 0 ok, 1 fail, 2 hypotheses-failed only, 3 inconclusive, 5 resource.
int exit_code(const std::vector<TaskResult>& results);
/// LINKAGELAB_THREADS, else the hardware concurrency.
unsigned thread_count();

nlohmann::json to_json(const TaskResult& r, bool timings);
/// Deterministic report; timings are included only on request.
nlohmann::json report_json(const std::string& command, const std::string& input, const std::vector<std::uint64_t>& seeds,
                           const std::vector<TaskResult>& results, bool timings);
nlohmann::json error_json(const std::string& command, const std::string& message, int line = 0, int column = 0);

/// The JSON schema reports conform to.
const char* report_schema();

}  // namespace linkagelab
