#include "linkagelab/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "linkagelab/crosscheck.hpp"
#include "linkagelab/homological.hpp"
#include "linkagelab/parse.hpp"

namespace linkagelab {

namespace {

using nlohmann::json;

TaskStatus status_of(Outcome o) {
  switch (o) {
    case Outcome::fail: return TaskStatus::fail;
    case Outcome::hypotheses_failed: return TaskStatus::hypotheses_failed;
    case Outcome::inconclusive: return TaskStatus::inconclusive;
    case Outcome::pass:
    case Outcome::skipped: return TaskStatus::ok;
  }
  return TaskStatus::ok;
}

std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

json strings(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json strings(const std::vector<FreeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

json clauses_json(const std::vector<Clause>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

void fill_from_verifier(TaskResult& r, const VerifierReport& rep) {
  r.status = status_of(rep.outcome);
  r.verdict = to_string(rep.outcome);
  json parts = json::array();
  for (const auto& p : rep.parts) {
    for (const auto& c : p.hypotheses) {
      r.hypotheses[p.name + "/" + c.name] = to_string(c.status);
      if (c.status == Outcome::inconclusive || c.status == Outcome::fail)
        r.witnesses.push_back(p.name + "/" + c.name + ": " + (c.detail.empty() ? to_string(c.status) : c.detail));
    }
    for (const auto& c : p.conclusions) {
      r.conclusions[p.name + "/" + c.name] = to_string(c.status);
      if ((c.status == Outcome::fail || c.status == Outcome::inconclusive) && !c.detail.empty())
        r.witnesses.push_back(p.name + "/" + c.name + ": " + c.detail);
    }
    parts.push_back({{"name", p.name},
                     {"status", to_string(p.status)},
                     {"hypotheses", clauses_json(p.hypotheses)},
                     {"conclusions", clauses_json(p.conclusions)}});
  }
  r.payload = {{"verifier", rep.verifier}, {"parts", parts}, {"values", rep.values}};
}

void fill_from_linkage(TaskResult& r, const LinkageReport& rep) {
  r.verdict = to_string(rep.verdict);
  r.status = rep.verdict == Verdict::hypotheses_failed ? TaskStatus::hypotheses_failed : TaskStatus::ok;
  for (const auto& [k, v] : rep.hypotheses) r.hypotheses[k] = pass_fail(v);
  for (const auto& [k, v] : rep.conclusions) r.conclusions[k] = pass_fail(v);
  r.witnesses = rep.witnesses;
  r.payload = {{"geometric", rep.geometric},
               {"selflinked", rep.selflinked},
               {"grades", rep.grades},
               {"failure_index", rep.failure_index ? json(*rep.failure_index) : json(nullptr)}};
}

/// Runs `body`, turning engine errors into statuses.
TaskResult guarded(std::string id, std::string fixture, const std::function<void(TaskResult&)>& body) {
  TaskResult r;
  r.id = std::move(id);
  r.fixture = std::move(fixture);
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const ResourceError& e) {
    r.status = TaskStatus::resource;
    r.verdict = "resource";
    r.witnesses.push_back(e.what());
  } catch (const PreconditionError& e) {
    r.status = TaskStatus::hypotheses_failed;
    r.verdict = "hypotheses-failed";
    r.witnesses.push_back(e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    r.status = TaskStatus::fail;
    r.verdict = "error";
    r.witnesses.push_back(e.what());
  }
  r.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct Resolved {
  std::string module_name;
  PresentedModulePtr module;
  std::optional<IdealHandle> a, b;
  IdealHandle i;
};

Resolved resolve(const SessionFile& s, const TaskArgs& args) {
  auto ideal = [&](const std::optional<std::string>& given, const std::string& fallback) -> std::optional<IdealHandle> {
    if (given) {
      if (!s.find_ideal(*given)) throw UsageError("undefined ideal '" + *given + "'");
      return s.ideal(*given);
    }
    if (s.find_ideal(fallback)) return s.ideal(fallback);
    return std::nullopt;
  };
  Resolved r{"", nullptr, ideal(args.a, "a"), ideal(args.b, "b"), IdealHandle::zero(s.ring)};
  if (args.module) {
    if (!s.find_module(*args.module)) throw UsageError("undefined module '" + *args.module + "'");
    r.module_name = *args.module;
    r.module = s.module(*args.module);
  } else if (!s.modules.empty()) {
    r.module_name = s.modules.front().name;
    r.module = s.module(r.module_name);
  } else {
    r.module_name = "R";
    r.module = PresentedModule::free(s.ring, 1);
  }
  if (auto i = ideal(args.i, "i")) r.i = *i;
  return r;
}

const IdealHandle& require(const std::optional<IdealHandle>& h, const char* name) {
  if (!h) throw UsageError(std::string("ideal '") + name + "' is required");
  return *h;
}

/// M, or M/aM when an ideal was named explicitly.
std::pair<std::string, PresentedModulePtr> target(const Resolved& r, const TaskArgs& args) {
  if (args.a) return {r.module_name + "/" + *args.a + r.module_name, scalar_module(*r.a, r.module).quotient()};
  return {r.module_name, r.module};
}

VerifierReport run_verifier(const std::string& name, const LinkageInstance& inst, const VerifyOptions& opts) {
  if (name == "grade-support") return verify_grade_support(inst);
  if (name == "ass-and-height") return verify_ass_and_height(inst);
  if (name == "canonical-transfer") return verify_canonical_transfer(inst);
  if (name == "cm-equivalence") return verify_cm_equivalence(inst, opts);
  if (name == "sum-and-reduction") return verify_sum_and_reduction(inst, opts);
  if (name == "radical-faithful") return verify_radical_faithful(inst);
  if (name == "double-annihilator") return verify_double_annihilator(inst.a);
  throw UsageError("unknown verifier '" + name + "'");
}

const std::vector<std::string> kInstanceVerifiers = {"grade-support",  "ass-and-height",    "canonical-transfer",
                                                     "cm-equivalence", "sum-and-reduction", "radical-faithful"};

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) job(k);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::ok: return "ok";
    case TaskStatus::fail: return "fail";
    case TaskStatus::hypotheses_failed: return "hypotheses-failed";
    case TaskStatus::inconclusive: return "inconclusive";
    case TaskStatus::resource: return "resource";
  }
  return "";
}

TaskArgs merge_task_args(TaskArgs base, const TaskDecl& task) {
  for (const auto& [k, v] : task.options) {
    if (k == "module") base.module = v;
    else if (k == "a") base.a = v;
    else if (k == "b") base.b = v;
    else if (k == "i") base.i = v;
    else if (k == "poly") base.poly = v;
    else if (k == "window") base.window = std::stoul(v);
    else if (k == "seed") base.seed = std::stoull(v);
    else if (k == "seeds") base.seeds = std::stoull(v);
  }
  return base;
}

std::vector<TaskResult> run_task(const SessionFile& s, const std::string& command, const std::vector<std::string>& words,
                                 const TaskArgs& args, const std::string& fixture) {
  Resolved r = resolve(s, args);
  std::size_t window = args.window ? args.window : default_window(*s.ring);
  LinkageInstance inst{s.ring, r.module, r.a.value_or(IdealHandle::zero(s.ring)), r.b.value_or(IdealHandle::zero(s.ring)),
                       r.i};
  VerifyOptions opts{window, args.seed, nullptr};
  std::vector<TaskResult> out;

  if (command == "verify") {
    if (words.size() != 1) throw UsageError("verify takes one verifier name");
    std::vector<std::string> names = words[0] == "all" ? kInstanceVerifiers : std::vector<std::string>{words[0]};
    require(r.a, "a");
    if (words[0] != "double-annihilator") require(r.b, "b");
    for (const auto& name : names)
      out.push_back(guarded("verify " + name, fixture, [&](TaskResult& t) { fill_from_verifier(t, run_verifier(name, inst, opts)); }));
    return out;
  }
  if (command == "link") {
    require(r.a, "a");
    require(r.b, "b");
    out.push_back(guarded("link", fixture, [&](TaskResult& t) { fill_from_linkage(t, check_linked(inst)); }));
    return out;
  }
  if (command == "colon") require(r.a, "a");
  if (command == "grade") require(r.a, "a");
  if (command == "nf" && !args.poly) throw UsageError("nf needs a polynomial (--poly)");
  if (command == "oracle-crosscheck") return run_crosscheck(args.seeds, thread_count());

  out.push_back(guarded(command, fixture, [&](TaskResult& t) {
    t.verdict = "computed";
    json& p = t.payload;
    if (command == "gb") {
      if (args.a) {
        p["target"] = "ideal " + *args.a;
        p["basis"] = strings(r.a->canonical().gens());
      } else {
        p["target"] = "module " + r.module_name;
        p["basis"] = strings(r.module->lift_basis().elements());
      }
    } else if (command == "nf") {
      Polynomial f = parse_polynomial(s.ring->base(), *args.poly);
      Polynomial nf = args.a ? r.a->lift_basis().normal_form(FreeVector::single(r.a->lift_basis().module(), 0, f)).component(0)
                             : s.ring->reduce(f);
      p["target"] = args.a ? "ideal " + *args.a : std::string("quotient ring");
      p["poly"] = f.to_string();
      p["normal_form"] = nf.to_string();
    } else if (command == "colon") {
      auto c = colon_module(scalar_module(r.i, r.module), *r.a);
      p["module"] = r.module_name;
      p["generators"] = strings(c.gens());
      p["is_whole"] = c.is_whole();
    } else if (command == "dim" || command == "depth" || command == "cm" || command == "unmixed") {
      auto [name, m] = target(r, args);
      p["module"] = name;
      if (command == "dim") p["dim"] = krull_dim(m);
      if (command == "depth") p["depth"] = depth(m);
      if (command == "cm") p["cohen_macaulay"] = is_cohen_macaulay(m);
      if (command == "unmixed") p["unmixed"] = is_unmixed(m);
    } else if (command == "grade") {
      p["module"] = r.module_name;
      p["grade"] = grade(*r.a, r.module);
    } else if (command == "canonical") {
      auto w = canonical_module(s.ring);
      p["rank"] = w->rank();
      p["relations"] = strings(w->relations());
      p["minimal_generators"] = minimal_generator_count(w);
    } else if (command == "gorenstein") {
      p["gorenstein"] = is_gorenstein(s.ring);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  }));
  return out;
}

std::vector<TaskResult> run_fixture(const Fixture& f, std::size_t window) {
  std::vector<TaskResult> out;
  const auto& inst = f.instance;
  VerifyOptions opts{window ? window : default_window(*inst.ring), f.seed, nullptr};
  out.push_back(guarded(f.id + "/link", f.id, [&](TaskResult& t) { fill_from_linkage(t, check_linked(inst)); }));
  for (const auto& name : kInstanceVerifiers)
    out.push_back(guarded(f.id + "/" + name, f.id, [&](TaskResult& t) { fill_from_verifier(t, run_verifier(name, inst, opts)); }));
  return out;
}

std::vector<TaskResult> run_suite(std::uint64_t seeds, std::size_t window, unsigned threads) {
  const std::vector<FixtureKind> kinds = {FixtureKind::monomial_ci_selflink, FixtureKind::regular_selflink,
                                          FixtureKind::node_pair,            FixtureKind::colon_constructed,
                                          FixtureKind::semigroup,            FixtureKind::semigroup_reduction};
  std::vector<std::pair<FixtureKind, std::uint64_t>> jobs;
  for (auto k : kinds)
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) jobs.emplace_back(k, seed);
  std::vector<std::vector<TaskResult>> slots(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t k) {
    auto [kind, seed] = jobs[k];
    std::string id = to_string(kind) + "-" + std::to_string(seed);
    std::optional<Fixture> f;
    TaskResult gen = guarded(id + "/generate", id, [&](TaskResult& t) {
      f = generate_fixture(kind, seed, 1 + seed % 3);
      t.verdict = f ? "generated" : "not-generated";
      if (!f) {
        t.status = TaskStatus::inconclusive;
        t.witnesses.push_back("no validated fixture for this seed");
      }
    });
    if (!f) {
      slots[k].push_back(std::move(gen));
      return;
    }
    slots[k] = run_fixture(*f, window);
  });
  std::vector<TaskResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<TaskResult> run_crosscheck(std::uint64_t seeds, unsigned threads) {
  std::vector<TaskResult> out(seeds);
  parallel_for(seeds, threads, [&](std::size_t k) {
    std::uint64_t seed = k + 1;
    std::string id = "crosscheck-" + std::to_string(seed);
    out[k] = guarded(id, id, [&](TaskResult& t) {
      CrosscheckReport rep = oracle_crosscheck(seed);
      json items = json::array();
      for (const auto& item : rep.items) {
        t.conclusions[item.name] = pass_fail(item.agree);
        if (!item.agree) t.witnesses.push_back(item.name + ": engine " + item.engine + ", oracle " + item.oracle);
        items.push_back({{"name", item.name}, {"engine", item.engine}, {"oracle", item.oracle}});
      }
      t.status = rep.agree() ? TaskStatus::ok : TaskStatus::fail;
      t.verdict = rep.agree() ? "agree" : "disagree";
      t.payload = {{"ring", rep.ring}, {"a", rep.ideal_a}, {"b", rep.ideal_b}, {"items", items}};
    });
  });
  return out;
}

int exit_code(const std::vector<TaskResult>& results) {
  auto any = [&](TaskStatus s) {
    return std::any_of(results.begin(), results.end(), [&](const TaskResult& r) { return r.status == s; });
  };
  if (any(TaskStatus::fail)) return 1;
  if (any(TaskStatus::resource)) return 5;
  if (any(TaskStatus::inconclusive)) return 3;
  if (any(TaskStatus::hypotheses_failed)) return 2;
  return 0;
}

unsigned thread_count() {
  if (const char* env = std::getenv("LINKAGELAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

json to_json(const TaskResult& r, bool timings) {
  json t = json::object();
  if (timings) t["total_ms"] = r.milliseconds;
  return {{"id", r.id},
          {"fixture", r.fixture},
          {"status", to_string(r.status)},
          {"verdict", r.verdict},
          {"hypotheses", r.hypotheses},
          {"conclusions", r.conclusions},
          {"witnesses", r.witnesses},
          {"timings", t},
          {"payload", r.payload}};
}

json report_json(const std::string& command, const std::string& input, const std::vector<std::uint64_t>& seeds,
                 const std::vector<TaskResult>& results, bool timings) {
  static const char* names[] = {"ok", "fail", "hypotheses-failed", "inconclusive", "usage", "resource"};
  int code = exit_code(results);
  json summary = {{"ok", 0}, {"fail", 0}, {"hypotheses-failed", 0}, {"inconclusive", 0}, {"resource", 0}};
  json items = json::array();
  for (const auto& r : results) {
    summary[to_string(r.status)] = summary[to_string(r.status)].get<int>() + 1;
    items.push_back(to_json(r, timings));
  }
  return {{"format", 1},     {"tool", "linkagelab"}, {"command", command}, {"input", input},
          {"rng", "mt19937_64"}, {"seeds", seeds},   {"status", names[code]}, {"exit_code", code},
          {"summary", summary}, {"results", items}};
}

json error_json(const std::string& command, const std::string& message, int line, int column) {
  json err = {{"message", message}};
  if (line > 0) {
    err["line"] = line;
    err["column"] = column;
  }
  return {{"format", 1}, {"tool", "linkagelab"}, {"command", command}, {"status", "usage"}, {"exit_code", 4},
          {"error", err}};
}

}  // namespace linkagelab
