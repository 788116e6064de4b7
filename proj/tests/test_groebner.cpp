#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace linkagelab;
using namespace testing_support;

namespace {

bool contains(const SubmoduleGens& n, const FreeVector& v) { return buchberger(n).contains(v); }

bool subset(const SubmoduleGens& a, const SubmoduleGens& b) { return buchberger(b).contains_all(a.gens()); }

}  // namespace

TEST_CASE("normal form examples") {
  auto r = ring(5, {"x", "y"});
  auto f = FreeModule::make(r, 1);
  auto nf = [&](const std::string& v, const std::string& g) {
    return buchberger(ideal(r, g)).normal_form(FreeVector::single(f, 0, poly(r, v))).component(0);
  };
  CHECK(nf("x^2*y", "x^2").is_zero());
  CHECK(nf("x*y+y", "x") == poly(r, "y"));
  CHECK(nf("x^3+y^3", "x+y").is_zero());
}

TEST_CASE("buchberger examples") {
  auto r = ring(5, {"x", "y"});
  auto g = buchberger(ideal(r, "x^2, x*y"));
  REQUIRE(g.size() == 2);
  CHECK(g.is_everything() == false);
  CHECK(buchberger(ideal(r, "1, x^2+y")).is_everything());
  CHECK(buchberger(ideal(r, "1, x^2+y")).size() == 1);

  auto lex = ring(7, {"z", "y", "x"}, OrderKind::lex);
  auto tc = buchberger(ideal(lex, "y-x^2, z-x^3"));
  CHECK(tc.contains(FreeVector::single(tc.module(), 0, poly(lex, "y^3-z^2"))));
}

TEST_CASE("syzygy examples") {
  auto r = ring(5, {"x", "y"});
  auto g = buchberger(ideal(r, "x, y"));
  auto s = syzygies(g);
  REQUIRE(s.size() == 1);
  auto row = s.gens()[0].components();
  CHECK((row[0] * g.elements()[0].component(0) + row[1] * g.elements()[1].component(0)).is_zero());
  CHECK(syzygies(buchberger(ideal(r, "1"))).empty());

  auto g3 = buchberger(ideal(r, "x^2, x*y, y^2"));
  auto s3 = syzygies(g3);
  CHECK(s3.size() == 2);
  for (const auto& v : s3.gens()) {
    Polynomial acc(r);
    for (std::size_t i = 0; i < g3.size(); ++i) acc = acc + v.component(i) * g3.elements()[i].component(0);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("intersection examples") {
  auto r2 = ring(2, {"x", "y"});
  CHECK(same_submodule(intersect(ideal(r2, "x"), ideal(r2, "y")), ideal(r2, "x*y")));
  auto n = ideal(r2, "x^2+y, x*y");
  CHECK(same_submodule(intersect(n, n), n));
  auto r5 = ring(5, {"x", "y"});
  auto i = intersect(ideal(r5, "x^2, x*y"), ideal(r5, "y^2"));
  CHECK(same_submodule(i, ideal(r5, "x*y^2")));
}

TEST_CASE("colon examples") {
  auto r2 = ring(2, {"x", "y"});
  CHECK(same_submodule(colon_by_ideal(ideal(r2, "x*y"), polys(r2, "x")), ideal(r2, "y")));
  auto n = ideal(r2, "x^2+y, x*y");
  CHECK(same_submodule(colon_by_ideal(n, polys(r2, "1")), n));
  auto r1 = ring(2, {"x"});
  CHECK(same_submodule(colon_by_ideal(ideal(r1, "x^2"), polys(r1, "x")), ideal(r1, "x")));
  CHECK_THROWS_WITH(colon_by_ideal(n, {}), "colon by zero ideal");
  CHECK_THROWS_WITH(colon_by_ideal(n, polys(r2, "0")), "colon by zero ideal");
}

TEST_CASE("module colon and intersection") {
  auto r = ring(3, {"x", "y"});
  auto f = FreeModule::make(r, 2);
  SubmoduleGens n(f, {vec(f, "[x^2, 0]"), vec(f, "[y, x]")});
  auto c = colon_by_ideal(n, polys(r, "x, y"));
  for (const auto& v : c.gens()) {
    CHECK(contains(n, v.times(poly(r, "x"))));
    CHECK(contains(n, v.times(poly(r, "y"))));
  }
  CHECK(subset(n, c));
}

TEST_CASE("elimination examples") {
  Ring::Options o;
  o.elimination_block = 1;
  auto r = Ring::make(5, {"t", "x", "y"}, o);
  auto e = eliminate(ideal(r, "t*x, (1-t)*y"), 1);
  REQUIRE(e.size() == 1);
  CHECK(e.gens()[0].component(0) == poly(r, "x*y"));

  auto plain = ring(5, {"x", "y"});
  auto n = ideal(plain, "x^2+y, x*y");
  CHECK(same_submodule(eliminate(n, 0), n));
  CHECK_THROWS_AS(eliminate(ideal(r, "t*x"), 2), StructuralError);

  Ring::Options o2;
  o2.elimination_block = 1;
  auto tc = Ring::make(7, {"x", "y", "z"}, o2);
  auto el = eliminate(ideal(tc, "y-x^2, z-x^3"), 1);
  CHECK(buchberger(el).contains(FreeVector::single(el.module(), 0, poly(tc, "y^3-z^2"))));
}

TEST_CASE("radical membership") {
  auto r = ring(5, {"x", "y"});
  CHECK(in_radical(poly(r, "x"), polys(r, "x^3, y")));
  CHECK(in_radical(poly(r, "x+y"), polys(r, "x^2, y^5")));
  CHECK_FALSE(in_radical(poly(r, "x"), polys(r, "x*y")));
}

TEST_CASE("kernel of a map of free modules") {
  auto r = ring(5, {"x", "y", "z"});
  auto f = FreeModule::make(r, 1);
  std::vector<FreeVector> cols{vec(f, "[x]"), vec(f, "[y]"), vec(f, "[z]"), vec(f, "[0]")};
  auto k = kernel(f, cols);
  // Koszul relations plus the zero column.
  auto km = k.front().module();
  SubmoduleGens got(km, k);
  SubmoduleGens expect(km, {vec(km, "[y, -x, 0, 0]"), vec(km, "[z, 0, -x, 0]"), vec(km, "[0, z, -y, 0]"),
                            vec(km, "[0, 0, 0, 1]")});
  CHECK(same_submodule(got, expect));
  // Modulo a base submodule.
  auto k2 = kernel(f, {vec(f, "[x]")}, {vec(f, "[x*y]")});
  SubmoduleGens got2(k2.front().module(), k2);
  CHECK(same_submodule(got2, SubmoduleGens(got2.module(), {vec(got2.module(), "[y]")})));
}

TEST_CASE("gb properties on random ideals") {
  std::mt19937_64 rng(99);
  auto r = ring(7, {"x", "y", "z"});
  for (int t = 0; t < 25; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_homogeneous(rng, r, 3, 2 + static_cast<int>(rng() % 2)));
    auto s = SubmoduleGens::ideal(gens, r);
    auto g = buchberger(s);
    for (const auto& v : s.gens()) CHECK(g.contains(v));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(buchberger(SubmoduleGens::ideal(shuffled, r)) == g);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (i != j) CHECK_FALSE(g.elements()[i].leading_term().mono.divides(g.elements()[j].leading_term().mono));
    // syzygy exactness
    for (const auto& v : syzygies(g).gens()) {
      Polynomial acc(r);
      for (std::size_t i = 0; i < g.size(); ++i) acc = acc + v.component(i) * g.elements()[i].component(0);
      CHECK(acc.is_zero());
    }
    // colon axioms
    auto a = SubmoduleGens::ideal({random_homogeneous(rng, r, 2, 1)}, r);
    std::vector<Polynomial> agens;
    for (const auto& v : a.gens()) agens.push_back(v.component(0));
    if (agens.empty()) continue;
    auto c = colon_by_ideal(s, agens);
    CHECK(subset(s, c));
    for (const auto& v : c.gens()) CHECK(g.contains(v.times(agens[0])));
    auto bigger = agens;
    bigger.push_back(random_homogeneous(rng, r, 2, 1));
    CHECK(subset(colon_by_ideal(s, bigger), c));
  }
}

TEST_CASE("degree cap raises a resource error") {
  Ring::Options o;
  o.degree_cap = 3;
  auto r = Ring::make(5, {"x", "y", "z"}, o);
  CHECK_THROWS_AS(buchberger(ideal(r, "x^2 - y*z, x*y - z^2, y^3 + x*z^2")), ResourceError);
}
