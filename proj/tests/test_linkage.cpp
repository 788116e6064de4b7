#include <doctest.h>

#include "linkagelab/finite_oracle.hpp"
#include "linkagelab/linkage.hpp"
#include "test_support.hpp"

using namespace linkagelab;
using namespace testing_support;

namespace {

LinkageInstance instance(const QuotientRingPtr& r, const PresentedModulePtr& m, const std::string& a,
                         const std::string& b, const std::string& i) {
  return LinkageInstance{r, m, ideal_of(r, a), ideal_of(r, b), i.empty() ? IdealHandle::zero(r) : ideal_of(r, i)};
}

Outcome part_status(const VerifierReport& rep, const std::string& name) {
  for (const auto& p : rep.parts)
    if (p.name == name) return p.status;
  FAIL("missing part " << name);
  return Outcome::skipped;
}

}  // namespace

TEST_CASE("node ring pair is linked over R but not over the line") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto R = PresentedModule::free(r, 1);
  auto over_r = check_linked(instance(r, R, "x", "y", ""));
  CHECK(over_r.verdict == Verdict::linked);
  CHECK(over_r.geometric);
  CHECK_FALSE(over_r.selflinked);

  auto line = cyclic(r, "x");
  auto over_line = check_linked(instance(r, line, "x", "y", ""));
  CHECK(over_line.verdict == Verdict::not_linked);
  CHECK_FALSE(over_line.conclusions.at("b_m_equals_colon_a"));
  CHECK(over_line.grades.at("grade_m_a") == 0);

  auto with_i = check_linked(instance(r, line, "x", "y", "x*y"));
  CHECK(with_i.verdict == Verdict::hypotheses_failed);
  CHECK(with_i.failure_index == 1u);
  CHECK_FALSE(with_i.hypotheses.at("i_regular_on_m"));
  bool grade_witness = false;
  for (const auto& w : with_i.witnesses) grade_witness |= w.rfind("grade_m_a = 0", 0) == 0;
  CHECK(grade_witness);
}

TEST_CASE("y is self-linked over the line by y^2 but not over R") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto line = cyclic(r, "x");
  auto rep = check_linked(instance(r, line, "y", "y", "y^2"));
  CHECK(rep.verdict == Verdict::linked);
  CHECK(rep.selflinked);
  auto R = PresentedModule::free(r, 1);
  CHECK(grade(ideal_of(r, "y"), R) == 0);
  CHECK(check_linked(instance(r, R, "y", "y", "")).verdict == Verdict::not_linked);
  CHECK(check_linked(instance(r, R, "y", "y", "y^2")).verdict == Verdict::hypotheses_failed);
}

TEST_CASE("regular sequences are self-linked") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  auto rep = check_linked(instance(s, S, "x, y", "x, y", "x^2, y"));
  CHECK(rep.verdict == Verdict::linked);
  CHECK(rep.selflinked);
  CHECK(rep.grades.at("grade_m_i") == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto f = generate_fixture(FixtureKind::regular_selflink, 0, n);
    REQUIRE(f);
    CHECK(is_linked(f->instance));
  }
}

TEST_CASE("linkage is symmetric") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto f = generate_fixture(FixtureKind::colon_constructed, seed);
    if (!f) continue;
    auto inst = f->instance;
    auto swapped = LinkageInstance{inst.ring, inst.module, inst.b, inst.a, inst.i};
    CHECK(check_linked(inst).verdict == check_linked(swapped).verdict);
  }
}

TEST_CASE("colon constructed fixtures validate") {
  auto f = generate_fixture(FixtureKind::colon_constructed, 7);
  REQUIRE(f);
  CHECK(f->instance.ring->characteristic() == 3);
  CHECK(f->instance.ring->nvars() == 3);
  CHECK(is_linked(f->instance));
  auto again = generate_fixture(FixtureKind::colon_constructed, 7);
  REQUIRE(again);
  CHECK(again->instance.a == f->instance.a);
  CHECK(again->instance.b == f->instance.b);
}

TEST_CASE("colon fixed point") {
  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    auto f = generate_fixture(FixtureKind::colon_constructed, seed);
    if (!f) continue;
    const auto& inst = f->instance;
    IdealHandle b = ideal_colon(inst.i, inst.a);
    IdealHandle a2 = ideal_colon(inst.i, b);
    CHECK(ideal_colon(inst.i, a2) == b);
  }
}

TEST_CASE("grade and support verifier") {
  auto s = qring(2, {"x", "y"}, "");
  auto rep = verify_grade_support(instance(s, PresentedModule::free(s, 1), "x, y", "x, y", "x^2, y"));
  CHECK(rep.outcome == Outcome::pass);
  CHECK(rep.values.at("grade_m_a") == "2");
  auto r = qring(2, {"x", "y"}, "x*y");
  auto line = verify_grade_support(instance(r, cyclic(r, "x"), "y", "y", "y^2"));
  CHECK(line.outcome == Outcome::pass);
  CHECK(line.values.at("grade_m_a") == "1");
  auto neg = verify_grade_support(instance(r, cyclic(r, "x"), "x", "y", ""));
  CHECK(neg.outcome == Outcome::hypotheses_failed);
}

TEST_CASE("associated primes across paths") {
  auto s = qring(2, {"x", "y"}, "");
  auto res = associated_primes(cyclic(s, "x^2, x*y"));
  REQUIRE(res.primes);
  CHECK(*res.primes == std::vector<VariablePrime>{{0}, {0, 1}});
  CHECK(res.agree);
  auto art = associated_primes(cyclic(s, "x^2, x*y, y^2"));
  REQUIRE(art.primes);
  CHECK(art.paths.size() == 3);
  CHECK(art.agree);
  auto t = qring(5, {"x", "y", "z"}, "x*z - y^2, x^2*y - z^2, x^3 - y*z", {3, 4, 5});
  CHECK_FALSE(associated_primes(PresentedModule::free(t, 1)).primes);
}

TEST_CASE("ass and height verifier on geometric and Artinian pairs") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto geo = verify_ass_and_height(instance(r, PresentedModule::free(r, 1), "x", "y", ""));
  CHECK(geo.outcome == Outcome::pass);
  CHECK(geo.values.at("ass_m_mod_a") == "{(x)}");
  CHECK(geo.values.at("ass_m_mod_b") == "{(y)}");
  for (const auto& p : geo.parts)
    if (p.name == "ass-relations")
      for (const auto& c : p.conclusions)
        if (c.name == "geometric_ass_disjoint") CHECK(c.status == Outcome::pass);

  auto q = qring(2, {"x"}, "x^2");
  auto art = verify_ass_and_height(instance(q, PresentedModule::free(q, 1), "x", "x", ""));
  CHECK(art.outcome == Outcome::pass);
  CHECK(part_status(art, "artinian-equivalence") == Outcome::pass);

  auto s = qring(2, {"x", "y"}, "");
  auto reg = verify_ass_and_height(instance(s, PresentedModule::free(s, 1), "x, y", "x, y", "x^2, y"));
  CHECK(reg.outcome == Outcome::pass);
  CHECK(part_status(reg, "dimension-formula") == Outcome::pass);
}

TEST_CASE("canonical transfer on the node ring") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto rep = verify_canonical_transfer(instance(r, PresentedModule::free(r, 1), "x", "y", ""));
  CHECK(rep.outcome == Outcome::pass);
  CHECK(part_status(rep, "canonical-to-ring") == Outcome::pass);
  CHECK(part_status(rep, "ring-to-canonical") == Outcome::pass);
}

TEST_CASE("canonical transfer on semigroup fixtures") {
  int built = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto f = generate_fixture(FixtureKind::semigroup, seed);
    if (!f) continue;
    ++built;
    CHECK_FALSE(is_gorenstein(f->instance.ring));
    auto rep = verify_canonical_transfer(f->instance);
    CHECK(rep.outcome == Outcome::pass);
  }
  CHECK(built >= 2);
}

TEST_CASE("double annihilator") {
  auto r = qring(2, {"x"}, "x^4");
  auto rep = verify_double_annihilator(ideal_of(r, "x^2"));
  CHECK(rep.outcome == Outcome::pass);
  auto reg = FiniteModule::regular(FiniteAlgebra::make(r->base(), r->relations()));
  auto zero = oracle_span(reg, {});
  auto ann = oracle_colon(reg, zero, polys(r->base(), "x^2"));
  CHECK(ann == oracle_ideal_times(reg, polys(r->base(), "x^2")));
}

TEST_CASE("cm equivalence on the node ring") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto rep = verify_cm_equivalence(instance(r, PresentedModule::free(r, 1), "x", "y", ""));
  CHECK(rep.outcome == Outcome::pass);
  CHECK(rep.values.at("r_mod_a_cm") == "true");
  CHECK(rep.values.at("r_mod_b_cm") == "true");
  CHECK(part_status(rep, "module-cm") == Outcome::pass);
  CHECK(part_status(rep, "gdim-cm") == Outcome::pass);
  CHECK(rep.values.at("gdim_a") == "0");
}

TEST_CASE("direct sums, restriction and reduction") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto rep = verify_sum_and_reduction(instance(r, PresentedModule::free(r, 1), "x", "y", ""));
  CHECK(part_status(rep, "direct-sum") == Outcome::pass);
  CHECK(part_status(rep, "restriction-from-polynomial-ring") == Outcome::pass);
  CHECK(rep.outcome != Outcome::fail);
  VerifyOptions opts;
  opts.second_module = cyclic(r, "x");
  auto mixed = verify_sum_and_reduction(instance(r, PresentedModule::free(r, 1), "x", "y", ""), opts);
  CHECK(part_status(mixed, "direct-sum") == Outcome::pass);
}

TEST_CASE("radical pair over a faithful module") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto f = FreeModule::make(r->base(), 2);
  auto m = PresentedModule::free(r, 2);
  auto rep = verify_radical_faithful(instance(r, m, "x", "y", ""));
  CHECK(rep.outcome == Outcome::pass);
}

TEST_CASE("radicality is decided for Artinian quotients") {
  auto r = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z, x^2", {3, 4, 5});
  auto m = PresentedModule::free(r, 1);
  auto rep = verify_radical_faithful(instance(r, m, "x, y, z", "x, y^2", ""));
  const auto& hyps = rep.parts[0].hypotheses;
  auto status = [&](const std::string& name) {
    for (const auto& c : hyps)
      if (c.name == name) return c.status;
    return Outcome::skipped;
  };
  CHECK(status("a_radical") == Outcome::pass);
  CHECK(status("b_radical") == Outcome::fail);
}
