// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "linkagelab/crosscheck.hpp"
#include "linkagelab/finite_oracle.hpp"
#include "linkagelab/linkage.hpp"
#include "linkagelab/monomial_ideal.hpp"
#include "linkagelab/runner.hpp"
#include "test_support.hpp"

using namespace linkagelab;
using namespace testing_support;

namespace {

/// Seeds per fixture kind for the fixture pool.
constexpr std::uint64_t kPoolSeeds = 8;
constexpr int kMonomialCiPerSize = 10;
constexpr std::size_t kMinGradeSupportFixtures = 20;
constexpr std::size_t kMinSemigroupFixtures = 5;
constexpr std::size_t kMinInjdimFixtures = 3;
constexpr std::uint64_t kCrosscheckSeeds = 60;
constexpr std::size_t kMinCrosscheckSeeds = 50;
constexpr std::size_t kGradeFixtures = 20;
constexpr int kGbIdeals = 100;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

int failures = 0;

void report(int number, const std::string& name, Check& c, double seconds) {
  std::cout << (c.ok ? "PASS" : "FAIL") << " " << number << " " << name << ": " << c.detail.str() << "(" << std::fixed
            << std::setprecision(1) << seconds << " s)" << std::endl;
  if (!c.ok) ++failures;
}

template <class F>
void criterion(int number, const std::string& name, F body) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  report(number, name, c, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

const VerifierPart* part_of(const VerifierReport& rep, const std::string& name) {
  for (const auto& p : rep.parts)
    if (p.name == name) return &p;
  return nullptr;
}

Outcome part_status(const VerifierReport& rep, const std::string& name) {
  const VerifierPart* p = part_of(rep, name);
  return p ? p->status : Outcome::skipped;
}

/// A verifier passes when it has no failing or inconclusive part and at least one passing part.
bool passes(const VerifierReport& rep) { return rep.outcome == Outcome::pass; }

std::string failing_clauses(const VerifierReport& rep) {
  std::string out;
  for (const auto& p : rep.parts)
    for (const auto& c : p.conclusions)
      if (c.status == Outcome::fail) out += p.name + "/" + c.name + " (" + c.detail + ") ";
  return out;
}

std::vector<Fixture> fixture_pool() {
  std::vector<Fixture> out;
  for (auto kind : {FixtureKind::monomial_ci_selflink, FixtureKind::regular_selflink, FixtureKind::node_pair,
                    FixtureKind::colon_constructed, FixtureKind::semigroup, FixtureKind::semigroup_reduction}) {
    std::uint64_t seeds = kind == FixtureKind::node_pair ? 1 : kPoolSeeds;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed)
      if (auto f = generate_fixture(kind, seed, 1 + seed % 3)) out.push_back(std::move(*f));
  }
  return out;
}

/// Every fixture instance plus the node pair over the line and the self-link of y over the line.
std::vector<std::pair<std::string, LinkageInstance>> instance_pool(const std::vector<Fixture>& fixtures) {
  std::vector<std::pair<std::string, LinkageInstance>> out;
  for (const auto& f : fixtures) {
    out.emplace_back(f.id, f.instance);
    for (std::size_t k = 1; k < f.modules.size(); ++k) {
      LinkageInstance inst = f.instance;
      inst.module = f.modules[k].second;
      out.emplace_back(f.id + "/" + f.modules[k].first, inst);
    }
  }
  auto r = qring(2, {"x", "y"}, "x*y");
  out.emplace_back("node-line-self", LinkageInstance{r, cyclic(r, "x"), ideal_of(r, "y"), ideal_of(r, "y"), ideal_of(r, "y^2")});
  return out;
}

bool is_gorenstein_fixture(const LinkageInstance& inst) { return is_gorenstein(inst.ring); }

}  // namespace

int main() {
  auto total_start = std::chrono::steady_clock::now();
  const auto fixtures = fixture_pool();
  const auto instances = instance_pool(fixtures);
  std::vector<bool> linked_flags;
  for (const auto& [id, inst] : instances) linked_flags.push_back(is_linked(inst));

  criterion(1, "node ring verdicts", [&](Check& c) {
    auto r = qring(2, {"x", "y"}, "x*y");
    auto free = PresentedModule::free(r, 1);
    auto line = cyclic(r, "x");
    auto x = ideal_of(r, "x"), y = ideal_of(r, "y"), zero = IdealHandle::zero(r);
    c.require(check_linked({r, free, x, y, zero}).verdict == Verdict::linked, "(x), (y) by 0 over R");
    c.require(check_linked({r, line, y, y, ideal_of(r, "y^2")}).verdict == Verdict::linked, "(y), (y) by y^2 over R/(x)");
    c.require(check_linked({r, line, x, y, zero}).verdict == Verdict::not_linked, "(x), (y) by 0 over R/(x)");
    std::size_t tried = 0;
    for (const char* gens : {"x", "y", "y^2", "x^2", "x + y", "x^2 + y^2", "y^3", "x, y", "y^2, x^3"}) {
      auto rep = check_linked({r, line, x, y, ideal_of(r, gens)});
      bool witness = std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                                 [](const std::string& w) { return w.rfind("grade_m_a = 0", 0) == 0; });
      c.require(rep.verdict == Verdict::hypotheses_failed, std::string("verdict for I = (") + gens + ")");
      c.require(rep.grades.count("grade_m_a") && rep.grades.at("grade_m_a") == 0, std::string("grade for I = (") + gens + ")");
      c.require(witness, std::string("grade witness for I = (") + gens + ")");
      ++tried;
    }
    c.detail << tried << " nonzero I rejected with grade_M (x) = 0; ";
  });

  criterion(2, "monomial complete intersection self-links", [&](Check& c) {
    int passed = 0, total = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (int seed = 1; seed <= kMonomialCiPerSize; ++seed) {
        ++total;
        auto f = generate_fixture(FixtureKind::monomial_ci_selflink, static_cast<std::uint64_t>(seed), n);
        c.require(f.has_value(), "fixture n = " + std::to_string(n) + " seed " + std::to_string(seed));
        if (!f) continue;
        auto rep = check_linked(f->instance);
        bool ok = rep.verdict == Verdict::linked && rep.selflinked;
        c.require(ok, f->id + " n = " + std::to_string(n));
        passed += ok;
      }
    c.require(passed == total, "all pass");
    c.detail << passed << "/" << total << " self-linked; ";
  });

  criterion(3, "grade and support identities", [&](Check& c) {
    std::size_t checked = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      if (!linked_flags[k]) continue;
      auto rep = verify_grade_support(instances[k].second);
      c.require(passes(rep), instances[k].first + ": " + failing_clauses(rep));
      ++checked;
    }
    c.require(checked >= kMinGradeSupportFixtures, "at least " + std::to_string(kMinGradeSupportFixtures) + " linked fixtures");
    c.detail << checked << " linked fixtures; ";
  });

  std::vector<VerifierReport> ass_reports(instances.size());
  for (std::size_t k = 0; k < instances.size(); ++k)
    if (linked_flags[k]) ass_reports[k] = verify_ass_and_height(instances[k].second);

  criterion(4, "Artinian equivalence and dimension formula", [&](Check& c) {
    std::size_t artinian = 0, equidim = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      if (!linked_flags[k]) continue;
      const auto& rep = ass_reports[k];
      const VerifierPart* art = part_of(rep, "artinian-equivalence");
      const VerifierPart* dim = part_of(rep, "dimension-formula");
      c.require(art && art->status != Outcome::fail, instances[k].first + " artinian: " + failing_clauses(rep));
      c.require(dim && dim->status != Outcome::fail, instances[k].first + " dimension: " + failing_clauses(rep));
      if (art && std::any_of(art->conclusions.begin(), art->conclusions.end(), [](const Clause& cl) {
            return cl.name == "artinian_not_geometric" && cl.status == Outcome::pass;
          }))
        ++artinian;
      if (dim && dim->status == Outcome::pass) ++equidim;
    }
    c.require(artinian > 0, "some Artinian linked fixture");
    c.require(equidim > 0, "some equidimensional fixture");
    c.detail << artinian << " Artinian, " << equidim << " equidimensional fixtures; ";
  });

  criterion(5, "associated primes", [&](Check& c) {
    std::size_t multi_path = 0, relation_checks = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      if (!linked_flags[k]) continue;
      const auto& rep = ass_reports[k];
      for (const char* name : {"ass-ground-truth", "ass-relations"})
        c.require(part_status(rep, name) != Outcome::fail, instances[k].first + ": " + failing_clauses(rep));
      for (const auto& cl : part_of(rep, "ass-ground-truth")->conclusions) multi_path += cl.status == Outcome::pass;
      relation_checks += part_status(rep, "ass-relations") == Outcome::pass;
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
      Coeff p = t % 2 ? 3 : 2;
      std::size_t n = 2 + t % 2;
      auto r = qring(p, n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"}, "");
      std::vector<Polynomial> g;
      for (std::size_t v = 0; v < n; ++v)
        if (t % 4 < 2) g.push_back(Polynomial::variable(r->base(), v, 2 + static_cast<int>(rng() % 2)));
      for (int e = 0; e < 2; ++e) {
        Monomial m = random_monomial(rng, n, 2);
        if (!m.is_one()) g.push_back(Polynomial::monomial(r->base(), m));
      }
      if (g.empty()) continue;
      auto res = associated_primes(PresentedModule::cyclic(IdealHandle(r, g)));
      if (res.paths.size() < 2) continue;
      c.require(res.agree, "random monomial quotient " + std::to_string(t));
      ++multi_path;
    }
    c.require(relation_checks > 0, "some fixture passes the Ass relations");
    c.detail << multi_path << " multi-path agreements, " << relation_checks << " fixtures with Ass relations; ";
  });

  criterion(6, "canonical module transfer", [&](Check& c) {
    std::size_t gorenstein = 0, semigroup = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const auto& inst = instances[k].second;
      bool semi = instances[k].first.rfind("semigroup-", 0) == 0 && instances[k].first.find('/') == std::string::npos;
      bool gor = is_gorenstein_fixture(inst);
      if (!gor && !semi) continue;
      auto rep = verify_canonical_transfer(inst);
      c.require(rep.outcome != Outcome::fail && rep.outcome != Outcome::inconclusive,
                instances[k].first + ": " + failing_clauses(rep));
      LinkageInstance over_r = inst;
      over_r.module = PresentedModule::free(inst.ring, 1);
      if (gor && is_linked(over_r)) {
        c.require(passes(rep), instances[k].first + " does not pass");
        ++gorenstein;
      }
      if (semi && !gor && passes(rep)) ++semigroup;
    }
    c.require(gorenstein > 0, "some linked Gorenstein fixture");
    c.require(semigroup >= kMinSemigroupFixtures, "at least " + std::to_string(kMinSemigroupFixtures) + " semigroup fixtures");

    auto r = qring(2, {"x"}, "x^4");
    auto c2 = ideal_of(r, "x^2");
    c.require(passes(verify_double_annihilator(c2)), "engine double annihilator");
    auto reg = FiniteModule::regular(FiniteAlgebra::make(r->base(), r->relations()));
    ElementSet zero = oracle_span(reg, {});
    ElementSet target = oracle_ideal_times(reg, c2.gens());
    ElementSet ann = oracle_colon(reg, zero, c2.gens());
    std::vector<Polynomial> ann_elements;
    for (std::uint64_t code = 0; code < reg.cardinality(); ++code) {
      if (!ann[code]) continue;
      FpVector v = reg.decode(code);
      std::vector<Term> ts;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) ts.push_back(Term{reg.algebra().basis()[j], v[j], 0});
      ann_elements.push_back(Polynomial(r->base(), ts));
    }
    c.require(oracle_colon(reg, zero, ann_elements) == target, "oracle 0 : (0 : (x^2)) = (x^2)");
    c.detail << gorenstein << " Gorenstein, " << semigroup << " semigroup fixtures, double annihilator exact; ";
  });

  criterion(7, "Cohen-Macaulay equivalences", [&](Check& c) {
    std::size_t iff = 0, gdim_exact = 0, gdim_inconclusive = 0, injdim = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const auto& inst = instances[k].second;
      auto rep = verify_cm_equivalence(inst);
      for (const char* name : {"ring-linkage", "canonical-linkage", "gdim-cm", "module-cm"})
        c.require(part_status(rep, name) != Outcome::fail, instances[k].first + ": " + failing_clauses(rep));
      iff += part_status(rep, "ring-linkage") == Outcome::pass || part_status(rep, "canonical-linkage") == Outcome::pass;
      Outcome gd = part_status(rep, "gdim-cm");
      if (is_gorenstein_fixture(inst))
        c.require(gd != Outcome::inconclusive, instances[k].first + " G-dimension not exact on a Gorenstein ring");
      gdim_exact += gd == Outcome::pass;
      gdim_inconclusive += gd == Outcome::inconclusive;
      injdim += part_status(rep, "module-cm") == Outcome::pass;
    }
    c.require(iff > 0, "some fixture satisfies the ring hypotheses");
    c.require(injdim >= kMinInjdimFixtures, "at least " + std::to_string(kMinInjdimFixtures) + " finite injdim fixtures");
    c.detail << iff << " ring iff checks, " << gdim_exact << " exact and " << gdim_inconclusive
             << " inconclusive G-dimension checks, " << injdim << " finite injdim fixtures; ";
  });

  criterion(8, "engine against the finite oracle", [&](Check& c) {
    auto results = run_crosscheck(kCrosscheckSeeds, thread_count());
    std::size_t agree = 0, linked = 0;
    for (const auto& r : results) {
      c.require(r.status == TaskStatus::ok, r.id + ": " + (r.witnesses.empty() ? r.verdict : r.witnesses.front()));
      agree += r.status == TaskStatus::ok;
      for (const auto& item : r.payload["items"])
        if (item["name"].get<std::string>().rfind("linkage", 0) == 0 && item["engine"].get<std::string>().rfind("linked", 0) == 0)
          ++linked;
    }
    c.require(agree >= kMinCrosscheckSeeds, "at least " + std::to_string(kMinCrosscheckSeeds) + " agreeing instances");
    c.detail << agree << "/" << results.size() << " instances agree, " << linked << " linked verdicts; ";
  });

  criterion(9, "homological self-consistency", [&](Check& c) {
    std::size_t ab = 0;
    for (const auto& f : fixtures) {
      const auto& inst = f.instance;
      std::vector<PresentedModulePtr> modules = {PresentedModule::free(inst.ring, 1)};
      for (const auto& [name, m] : f.modules) modules.push_back(m);
      for (const auto* x : {&inst.a, &inst.b, &inst.i})
        if (!x->is_zero()) modules.push_back(PresentedModule::cyclic(*x));
      std::size_t n = inst.ring->base()->nvars();
      for (const auto& m : modules) {
        if (m->is_zero()) continue;
        auto pd = resolve_over_S(m, n + 1).projective_dimension();
        c.require(pd && static_cast<long>(*pd) + depth(m) == static_cast<long>(n), f.id + " Auslander-Buchsbaum");
        ++ab;
      }
    }

    std::mt19937_64 rng(9);
    std::size_t grades = 0;
    for (const auto& [id, inst] : instances) {
      if (grades == kGradeFixtures) break;
      for (const auto* x : {&inst.a, &inst.b}) {
        if (!is_proper(*x, inst.module)) continue;
        auto seq = greedy_regular_sequence(*x, inst.module, rng);
        c.require(seq && static_cast<long>(seq->size()) == grade(*x, inst.module), id + " grade by regular sequence");
      }
      ++grades;
    }
    c.require(grades == kGradeFixtures, std::to_string(kGradeFixtures) + " grade fixtures");

    int unique = 0;
    for (int t = 0; t < kGbIdeals; ++t) {
      Coeff p = std::vector<Coeff>{2, 3, 5}[t % 3];
      auto s = ring(p, {"x", "y", "z"}, t % 2 ? OrderKind::lex : OrderKind::grevlex);
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) gens.push_back(random_homogeneous(rng, s, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3)));
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& f : shuffled) f = f * Polynomial::constant(s, 1 + static_cast<Coeff>(rng() % (p - 1)));
      bool same = buchberger(SubmoduleGens::ideal(gens, s)) == buchberger(SubmoduleGens::ideal(shuffled, s));
      c.require(same, "reduced basis of random ideal " + std::to_string(t));
      unique += same;
    }
    c.detail << ab << " Auslander-Buchsbaum identities, " << grades << " grade comparisons, " << unique << "/" << kGbIdeals
             << " reduced bases unique; ";
  });

  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing criteria, " << std::fixed
            << std::setprecision(1) << total << " s)" << std::endl;
  return failures ? 1 : 0;
}
