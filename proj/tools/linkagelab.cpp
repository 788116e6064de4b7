#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "linkagelab/runner.hpp"

using namespace linkagelab;

namespace {

struct Options {
  std::string session;
  std::string verifier;
  std::optional<std::string> module, a, b, i, poly;
  std::size_t window = 0;
  unsigned degree_cap = 0;
  std::uint64_t seed = 0;
  std::uint64_t seeds = 0;
  bool timings = false;
  bool compact = false;
};

int emit(const nlohmann::json& report, const Options& o) {
  std::cout << report.dump(o.compact ? -1 : 2) << "\n";
  return report["exit_code"].get<int>();
}

int usage_error(const std::string& command, const std::string& message, const Options& o, int line = 0,
                int column = 0) {
  std::cerr << "linkagelab: " << message << "\n";
  return emit(error_json(command, message, line, column), o);
}

SessionFile load(const std::string& path, unsigned degree_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str(), degree_cap);
}

TaskArgs task_args(const Options& o) {
  TaskArgs t;
  t.module = o.module;
  t.a = o.a;
  t.b = o.b;
  t.i = o.i;
  t.poly = o.poly;
  t.window = o.window;
  t.seed = o.seed;
  if (o.seeds) t.seeds = o.seeds;
  return t;
}

std::vector<std::uint64_t> seed_list(std::uint64_t n) {
  std::vector<std::uint64_t> s(n);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

int run_command(const std::string& command, const Options& o) {
  try {
    if (command == "suite") {
      std::uint64_t n = o.seeds ? o.seeds : 5;
      return emit(report_json(command, "", seed_list(n), run_suite(n, o.window, thread_count()), o.timings), o);
    }
    if (command == "oracle-crosscheck") {
      std::uint64_t n = o.seeds ? o.seeds : 50;
      return emit(report_json(command, "", seed_list(n), run_crosscheck(n, thread_count()), o.timings), o);
    }
    SessionFile s = load(o.session, o.degree_cap);
    std::vector<TaskResult> results;
    std::vector<std::uint64_t> seeds = {o.seed};
    if (command == "run") {
      for (std::size_t k = 0; k < s.tasks.size(); ++k) {
        const auto& t = s.tasks[k];
        auto part = run_task(s, t.command, t.words, merge_task_args(task_args(o), t), o.session);
        for (auto& r : part) {
          r.id = "task-" + std::to_string(k + 1) + " " + r.id;
          results.push_back(std::move(r));
        }
      }
    } else {
      std::vector<std::string> words;
      if (command == "verify") words.push_back(o.verifier);
      results = run_task(s, command, words, task_args(o), o.session);
    }
    return emit(report_json(command, o.session, seeds, results, o.timings), o);
  } catch (const ParseError& e) {
    std::cerr << o.session << ":" << e.what() << "\n";
    return emit(error_json(command, e.message(), e.line(), e.column()), o);
  } catch (const UsageError& e) {
    return usage_error(command, e.what(), o);
  } catch (const ResourceError& e) {
    std::cerr << "linkagelab: " << e.what() << "\n";
    nlohmann::json report = error_json(command, e.what());
    report["status"] = "resource";
    report["exit_code"] = 5;
    std::cout << report.dump(o.compact ? -1 : 2) << "\n";
    return 5;
  } catch (const Error& e) {
    return usage_error(command, e.what(), o);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkage of ideals over modules: Gröbner engine, verifiers and finite oracle."};
  app.set_help_all_flag("--help-all", "Show help for every command");
  app.fallthrough();
  Options o;
  bool schema = false;
  app.add_flag("--json-schema", schema, "Print the JSON schema of reports and exit");
  app.add_flag("--compact", o.compact, "Print JSON on one line");
  app.add_flag("--timings", o.timings, "Include wall-clock timings (reports are then not reproducible)");

  auto add_instance_flags = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "Module name (default: the first module, else R)");
    sub->add_option("--ideal-a", o.a, "Ideal a (default: the ideal named a)");
    sub->add_option("--ideal-b", o.b, "Ideal b (default: the ideal named b)");
    sub->add_option("--ideal-i", o.i, "Ideal I (default: the ideal named i, else 0)");
    sub->add_option("--window", o.window, "Ext window for resolutions over R (default 2n+2)");
    sub->add_option("--degree-cap", o.degree_cap, "Degree cap for Gröbner computations")->check(CLI::Range(1, 65535));
    sub->add_option("--seed", o.seed, "Seed for randomized searches");
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands = {
      {"gb", "Reduced Gröbner basis of an ideal (--ideal-a) or of a module's relations"},
      {"nf", "Normal form of --poly modulo an ideal (--ideal-a) or the quotient ring"},
      {"colon", "IM :_M a"},
      {"dim", "Krull dimension of M, or of M/aM with --ideal-a"},
      {"depth", "Depth of M, or of M/aM with --ideal-a"},
      {"grade", "grade(a, M)"},
      {"cm", "Cohen-Macaulay test for M, or M/aM with --ideal-a"},
      {"unmixed", "Unmixedness test for M, or M/aM with --ideal-a"},
      {"canonical", "Canonical module of R"},
      {"gorenstein", "Gorenstein test for R"},
      {"link", "Decide whether a and b are linked by I over M"},
      {"run", "Run the tasks listed in the session file"},
  };
  std::string chosen;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("session", o.session, "Session file")->required();
    add_instance_flags(sub);
    if (std::string(c.name) == "nf") sub->add_option("--poly", o.poly, "Polynomial to reduce")->required();
    sub->callback([&chosen, name = std::string(c.name)] { chosen = name; });
  }
  auto* verify = app.add_subcommand("verify", "Run a verifier on the session instance");
  verify->add_option("verifier", o.verifier, "Verifier name")
      ->required()
      ->check(CLI::IsMember(task_verifiers()));
  verify->add_option("session", o.session, "Session file")->required();
  add_instance_flags(verify);
  verify->callback([&] { chosen = "verify"; });

  auto* cross = app.add_subcommand("oracle-crosscheck", "Engine against the finite oracle on random Artinian instances");
  cross->add_option("--seeds", o.seeds, "Number of instances (default 50)")->check(CLI::Range(1, 100000));
  cross->callback([&] { chosen = "oracle-crosscheck"; });

  auto* suite = app.add_subcommand("suite", "Every verifier on generated fixtures of every kind");
  suite->add_option("--seeds", o.seeds, "Seeds per fixture kind (default 5)")->check(CLI::Range(1, 100000));
  suite->add_option("--window", o.window, "Ext window for resolutions over R");
  suite->callback([&] { chosen = "suite"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }
  if (schema) {
    std::cout << report_schema();
    return 0;
  }
  if (chosen.empty()) {
    std::cerr << app.help();
    return 4;
  }
  return run_command(chosen, o);
}
