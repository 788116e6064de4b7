#include <doctest.h>

#include "linkagelab/homological.hpp"
#include "linkagelab/monomial_ideal.hpp"
#include "test_support.hpp"

using namespace linkagelab;
using namespace testing_support;

TEST_CASE("free resolutions over S") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  auto r0 = resolve_over_S(S, 4);
  CHECK(r0.complete);
  CHECK(*r0.projective_dimension() == 0);
  auto k = resolve_over_S(cyclic(s, "x, y"), 4);
  CHECK(k.betti() == std::vector<std::size_t>{1, 2, 1});
  auto q = resolve_over_S(cyclic(s, "x^2, x*y"), 4);
  CHECK(q.betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(*q.projective_dimension() == 2);
  // d1 d2 = 0
  for (const auto& col : q.maps[1]) {
    Polynomial acc(s->base());
    for (std::size_t j = 0; j < col.rank(); ++j) acc = acc + col.component(j) * q.maps[0][j].component(0);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("Ext over S") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  auto e0 = ext_over_S(0, S);
  CHECK(e0->rank() == 1);
  CHECK(e0->relations().empty());
  auto e2 = ext_over_S(2, cyclic(s, "x, y"));
  CHECK(e2->rank() == 1);
  CHECK(annihilator(e2) == ideal_of(s, "x, y"));
  auto e1 = ext_over_S(1, cyclic(s, "x*y"));
  CHECK(e1->rank() == 1);
  CHECK(annihilator(e1) == ideal_of(s, "x*y"));
  CHECK(ext_over_S(1, cyclic(s, "x, y"))->is_zero());
}

TEST_CASE("grade") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(grade(ideal_of(s, "x, y"), PresentedModule::free(s, 1)) == 2);
  auto r = qring(2, {"x", "y"}, "x*y");
  auto m = cyclic(r, "x");
  CHECK(grade(ideal_of(r, "y"), m) == 1);
  CHECK(grade(ideal_of(r, "y"), PresentedModule::free(r, 1)) == 0);
  CHECK(grade(ideal_of(r, "x"), PresentedModule::free(r, 1)) == 0);
  CHECK_THROWS_WITH(grade(ideal_of(r, "1"), m), "grade undefined (unit action)");
}

TEST_CASE("dimension") {
  auto r = qring(2, {"x", "y"}, "x*y");
  CHECK(krull_dim(PresentedModule::free(r, 1)) == 1);
  auto a = qring(2, {"x", "y"}, "x^2, y^2");
  CHECK(krull_dim(PresentedModule::free(a, 1)) == 0);
  auto s = qring(2, {"x", "y"}, "");
  auto f = FreeModule::make(s->base(), 2);
  auto mixed = PresentedModule::make(s, 2, {vec(f, "[x, y]"), vec(f, "[y^2, 0]"), vec(f, "[0, x^2]"),
                                            vec(f, "[x^2, 0]"), vec(f, "[0, y^2]")});
  CHECK(krull_dim(mixed) == 0);
  CHECK(krull_dim(PresentedModule::free(s, 0)) == -1);
}

TEST_CASE("depth") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(depth(PresentedModule::free(s, 1)) == 2);
  CHECK(depth(cyclic(s, "x^2, x*y")) == 0);
  CHECK(depth_by_projective_dimension(cyclic(s, "x^2, x*y")) == 0);
  auto sg = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z", {3, 4, 5});
  auto R = PresentedModule::free(sg, 1);
  CHECK(depth(R) == 1);
  CHECK(depth_by_projective_dimension(R) == 1);
  CHECK(*resolve_over_S(R, 4).projective_dimension() == 2);
}

TEST_CASE("height on a module") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(height_on_module(ideal_of(s, "x"), PresentedModule::free(s, 1)) == 1);
  auto r = qring(2, {"x", "y"}, "x*y");
  CHECK(height_on_module(ideal_of(r, "x, y"), PresentedModule::free(r, 1)) == 1);
}

TEST_CASE("unmixedness via Ext") {
  auto s = qring(2, {"x", "y"}, "");
  CHECK(is_unmixed(cyclic(s, "x")));
  CHECK_FALSE(is_unmixed(cyclic(s, "x^2, x*y")));
  CHECK(is_unmixed(cyclic(s, "x*y")));
}

TEST_CASE("canonical modules and Gorenstein rings") {
  auto s = qring(2, {"x", "y"}, "");
  auto ws = canonical_module(s);
  CHECK(ws->rank() == 1);
  CHECK(ws->relations().empty());
  CHECK(is_gorenstein(s));
  auto node = qring(2, {"x", "y"}, "x*y");
  auto wn = canonical_module(node);
  CHECK(wn->rank() == 1);
  CHECK(annihilator(wn).is_zero());
  CHECK(is_gorenstein(node));
  auto sg = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z", {3, 4, 5});
  auto w = canonical_module(sg);
  CHECK(w->rank() == 2);
  CHECK_FALSE(is_gorenstein(sg));
  CHECK(is_maximal_cohen_macaulay(w));
  auto embedded = qring(2, {"x", "y"}, "x^2, x*y");
  CHECK_THROWS_WITH(canonical_module(embedded), "canonical module requires CM ring");
}

TEST_CASE("Ext over R") {
  auto s = qring(2, {"x", "y"}, "");
  auto S = PresentedModule::free(s, 1);
  auto e0 = ext_over_R(0, S, cyclic(s, "x^3"), 3);
  CHECK(e0->rank() == 1);
  CHECK(annihilator(e0) == ideal_of(s, "x^3"));
  auto rx = cyclic(s, "x");
  CHECK(ext_over_R(0, rx, S, 3)->is_zero());
  auto e1 = ext_over_R(1, rx, S, 3);
  CHECK(annihilator(e1) == ideal_of(s, "x"));
  CHECK(e1->rank() == 1);
  // Over the Gorenstein node ring only Ext^1(k, R) survives.
  auto node = qring(2, {"x", "y"}, "x*y");
  auto k = cyclic(node, "x, y");
  auto R = PresentedModule::free(node, 1);
  auto res = resolve_over_R(k, 5);
  CHECK_FALSE(res.complete);
  CHECK(ext_vanishes(res, 0, R));
  CHECK_FALSE(ext_vanishes(res, 1, R));
  for (std::size_t i = 2; i <= 4; ++i) CHECK(ext_vanishes(res, i, R));
  for (std::size_t i = 0; i <= 4; ++i) CHECK_FALSE(ext_vanishes(res, i, k));
}

TEST_CASE("G-dimension reports") {
  auto node = qring(2, {"x", "y"}, "x*y");
  auto R = PresentedModule::free(node, 1);
  auto g0 = gdim_report(R, 6);
  CHECK(g0.status == WindowStatus::exact);
  CHECK(g0.value == 0);
  auto gx = gdim_report(cyclic(node, "x"), 6);
  CHECK(gx.status == WindowStatus::exact);
  CHECK(gx.value == 0);
}

TEST_CASE("injective dimension reports") {
  auto s = qring(2, {"x", "y"}, "");
  auto is = injdim_report(PresentedModule::free(s, 1), default_window(*s));
  CHECK(is.status == WindowStatus::exact);
  CHECK(is.value == 2);
  auto node = qring(2, {"x", "y"}, "x*y");
  auto in = injdim_report(canonical_module(node), default_window(*node));
  CHECK(in.status == WindowStatus::exact);
  CHECK(in.value == 1);
  auto dual = qring(2, {"x"}, "x^2");
  auto id = injdim_report(PresentedModule::free(dual, 1), default_window(*dual));
  CHECK(id.status == WindowStatus::exact);
  CHECK(id.value == 0);
  auto kd = injdim_report(cyclic(dual, "x"), default_window(*dual));
  CHECK(kd.status == WindowStatus::exact);
  CHECK(kd.infinite);
  CHECK(kd.value == 1);
}

TEST_CASE("Auslander-Buchsbaum and grade cross-checks on monomial quotients") {
  std::mt19937_64 rng(31);
  auto s = qring(3, {"x", "y", "z"}, "");
  for (int t = 0; t < 12; ++t) {
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) {
      Monomial m = random_monomial(rng, 3, 2);
      if (!m.is_one()) g.push_back(Polynomial::monomial(s->base(), m));
    }
    auto m = PresentedModule::cyclic(IdealHandle(s, g));
    CHECK(depth(m) == depth_by_projective_dimension(m));
    CHECK(depth(m) <= krull_dim(m));
    auto mono = *MonomialIdeal::from_polynomials(3, g);
    CHECK(krull_dim(m) == mono_dimension(mono));
    CHECK(is_unmixed(m) == mono_unmixed(mono));
    auto a = IdealHandle::maximal(s);
    auto seq = greedy_regular_sequence(a, m, rng);
    REQUIRE(seq);
    CHECK(static_cast<long>(seq->size()) == grade(a, m));
  }
}

TEST_CASE("G-dimension of the residue field over a non-Gorenstein ring is infinite") {
  auto sg = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z", {3, 4, 5});
  auto g = gdim_report(cyclic(sg, "x, y, z"), 6);
  CHECK(g.status == WindowStatus::exact);
  CHECK(g.infinite);
  CHECK(g.value == 2);
  CHECK(g.nonzero == std::vector<long>{1, 2});
}

TEST_CASE("G-dimension of a free module over a non-Gorenstein ring is zero") {
  auto sg = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z", {3, 4, 5});
  auto g = gdim_report(PresentedModule::free(sg, 1), 3);
  CHECK(g.status == WindowStatus::exact);
  CHECK(g.value == 0);
  CHECK(g.method == "finite projective dimension");
}

TEST_CASE("periodic resolutions decide the G-dimension") {
  auto r = qring(5, {"x", "y", "z"}, "x*z-y^2, x^2*y-z^2, x^3-y*z, x^2", {3, 4, 5});
  auto g = gdim_report(cyclic(r, "x"), 8);
  CHECK(g.status == WindowStatus::exact);
  CHECK_FALSE(g.infinite);
  CHECK(g.value == 0);
  CHECK(g.method == "periodic resolution");
  auto inj = injdim_report(PresentedModule::free(r, 1), 8);
  CHECK(inj.status == WindowStatus::exact);
  CHECK(inj.infinite);
}
