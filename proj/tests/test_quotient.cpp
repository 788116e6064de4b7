#include <doctest.h>

#include "test_support.hpp"

using namespace linkagelab;
using namespace testing_support;

TEST_CASE("scalar module over the node ring") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto m = PresentedModule::free(r, 1);
  auto xm = scalar_module(ideal_of(r, "x"), m);
  const auto& g = xm.lift_basis().elements();
  REQUIRE(g.size() == 1);
  CHECK(g[0].component(0) == poly(r->base(), "x"));
  CHECK(scalar_module(IdealHandle::zero(r), m).is_zero());
}

TEST_CASE("colon module examples") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto R = PresentedModule::free(r, 1);
  auto c = colon_module(SubmoduleHandle::zero(R), ideal_of(r, "x"));
  CHECK(c == scalar_module(ideal_of(r, "y"), R));
  auto n = scalar_module(ideal_of(r, "x^2, y"), R);
  CHECK(colon_module(n, ideal_of(r, "1")) == n);
  auto M = cyclic(r, "x");
  CHECK(colon_module(SubmoduleHandle::zero(M), ideal_of(r, "x")).is_whole());
  CHECK(colon_module(n, ideal_of(r, "x*y")).is_whole());
}

TEST_CASE("properness") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  CHECK(is_proper(ideal_of(s, "x, y"), S));
  CHECK_FALSE(is_proper(ideal_of(s, "1"), S));
  CHECK_FALSE(is_proper(ideal_of(s, "1"), PresentedModule::free(s, 3)));
  auto base = ring(2, {"x", "y"});
  CHECK_THROWS_AS(QuotientRing::make(base, polys(base, "x-1")), PreconditionError);
  CHECK_THROWS_AS(ideal_of(s, "y+1"), PreconditionError);
}

TEST_CASE("submodule equality") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  CHECK(scalar_module(ideal_of(s, "x, y^2"), S) == scalar_module(ideal_of(s, "y^2, x"), S));
  CHECK_FALSE(scalar_module(ideal_of(s, "x"), S) == scalar_module(ideal_of(s, "y"), S));
  auto xy = scalar_module(ideal_of(s, "x*y"), S);
  CHECK(submodule_equal(colon_module(xy, ideal_of(s, "x")), scalar_module(ideal_of(s, "y"), S)));
}

TEST_CASE("annihilators") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(annihilator(PresentedModule::free(s, 1)).is_zero());
  CHECK(annihilator(cyclic(s, "x^2, x*y")) == ideal_of(s, "x^2, x*y"));
  auto f = FreeModule::make(s->base(), 2);
  auto m = PresentedModule::make(s, 2, {vec(f, "[x, 0]"), vec(f, "[0, y]")});
  CHECK(annihilator(m) == ideal_of(s, "x*y"));
  CHECK(annihilator(PresentedModule::free(s, 0)).is_unit());
}

TEST_CASE("regular sequences") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  CHECK(regular_sequence_check(polys(s->base(), "x, y"), S).regular);
  auto r = qring(2, {"x", "y"}, "x*y");
  auto res = regular_sequence_check(polys(r->base(), "x"), PresentedModule::free(r, 1));
  CHECK_FALSE(res.regular);
  CHECK(res.failure_index == 1);
  CHECK(regular_sequence_check(polys(r->base(), "y"), cyclic(r, "x")).regular);
  auto unit = regular_sequence_check(polys(s->base(), "x, 1"), S);
  CHECK_FALSE(unit.regular);
  CHECK(unit.failure_index == 0);
}

TEST_CASE("direct sums") {
  auto r = qring(2, {"x", "y"}, "x*y");
  auto R = PresentedModule::free(r, 1);
  auto rr = direct_sum(R, R);
  CHECK(rr->rank() == 2);
  CHECK(rr->relations().empty());
  auto zero = PresentedModule::free(r, 0);
  auto m = cyclic(r, "x");
  CHECK(direct_sum(m, zero)->lift_basis() == m->lift_basis());
}

TEST_CASE("support comparisons") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(support_equal(cyclic(s, "x"), cyclic(s, "x^2")));
  CHECK_FALSE(support_equal(cyclic(s, "x"), cyclic(s, "y")));
  CHECK(support_contained(cyclic(s, "x, y"), cyclic(s, "x")));
  CHECK_FALSE(support_contained(cyclic(s, "x"), cyclic(s, "x, y")));
}

TEST_CASE("hom from a cyclic module into a quotient") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  CHECK(hom_into_quotient(ideal_of(s, "x"), SubmoduleHandle::zero(S))->is_zero());
  auto h = hom_into_quotient(ideal_of(s, "x"), scalar_module(ideal_of(s, "x"), S))->minimalized();
  CHECK(h->rank() == 1);
  CHECK(annihilator(h) == ideal_of(s, "x"));
}

TEST_CASE("shift inference and minimal presentations") {
  auto s = qring(3, {"x", "y"}, "");
  auto f = FreeModule::make(s->base(), 3);
  auto m = PresentedModule::make(s, 3, {vec(f, "[x, 1, 0]"), vec(f, "[0, y, x^2]")});
  CHECK(m->shifts() == std::vector<long>{0, 1, 0});
  auto mm = m->minimalized();
  CHECK(mm->rank() == 2);
  CHECK(mm->relations().size() == 1);
  CHECK_THROWS_AS(PresentedModule::make(s, 2, {vec(FreeModule::make(s->base(), 2), "[x, y^2]"),
                                              vec(FreeModule::make(s->base(), 2), "[x, y]")}),
                  PreconditionError);
  auto weighted = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z", {3, 4, 5});
  CHECK(weighted->relation_basis().size() == 3);
}

TEST_CASE("colon laws on random monomial instances") {
  std::mt19937_64 rng(5);
  auto s = qring(3, {"x", "y", "z"}, "");
  auto S = PresentedModule::free(s, 1);
  auto rand_ideal = [&](int k) {
    std::vector<Polynomial> g;
    for (int i = 0; i < k; ++i) g.push_back(Polynomial::monomial(s->base(), random_monomial(rng, 3, 2)));
    return IdealHandle(s, g);
  };
  for (int t = 0; t < 12; ++t) {
    auto n = scalar_module(rand_ideal(3), S);
    auto a = rand_ideal(2), b = rand_ideal(1);
    if (a.is_zero() || b.is_zero()) continue;
    auto na = colon_module(n, a);
    CHECK(colon_module(na, b) == colon_module(n, a * b));
    CHECK(colon_module(n, a + b).contains(SubmoduleHandle::zero(S)));
    CHECK(na.contains(colon_module(n, a + b)));
  }
}
