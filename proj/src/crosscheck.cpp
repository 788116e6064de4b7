#include "linkagelab/crosscheck.hpp"

#include <algorithm>
#include <random>

#include "linkagelab/finite_oracle.hpp"
#include "linkagelab/homological.hpp"
#include "linkagelab/linkage.hpp"

namespace linkagelab {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string primes_text(const std::vector<VariablePrime>& ps, const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + prime_to_string(ps[k], names);
  return s + "}";
}

Polynomial nonzero_form(std::mt19937_64& rng, const QuotientRingPtr& r, long degree) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Polynomial f = random_form(rng, r->base(), degree);
    if (!r->is_zero(f)) return f;
  }
  return Polynomial::variable(r->base(), 0, static_cast<unsigned>(degree));
}

}  // namespace

bool CrosscheckReport::agree() const {
  return std::all_of(items.begin(), items.end(), [](const CrosscheckItem& i) { return i.agree; });
}

CrosscheckReport oracle_crosscheck(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CrosscheckReport rep;
  rep.seed = seed;
  Coeff p = seed % 3 == 0 ? 3 : 2;
  std::vector<std::string> names = {"x", "y"};
  if (p == 2 && seed % 4 == 1) names.push_back("z");
  auto base = Ring::make(p, names);
  std::vector<Polynomial> rels;
  for (std::size_t i = 0; i < names.size(); ++i)
    rels.push_back(Polynomial::variable(base, i, 2 + static_cast<unsigned>(p == 2 && names.size() == 2 ? rng() % 2 : 0)));
  if (rng() % 2) rels.push_back(random_form(rng, base, 2));
  auto r = QuotientRing::make(base, rels);
  rep.ring = r->to_string();

  auto alg = FiniteAlgebra::make(base, rels, 14);
  auto reg = FiniteModule::regular(alg);
  auto R = PresentedModule::free(r, 1);

  std::vector<Polynomial> ag = {nonzero_form(rng, r, 1 + static_cast<long>(rng() % 2))};
  if (rng() % 3 == 0) ag.push_back(random_form(rng, base, 2));
  std::vector<Polynomial> bg = {nonzero_form(rng, r, 1), random_form(rng, base, 2)};
  IdealHandle ia(r, ag), ib(r, bg);
  rep.ideal_a = ia.to_string();
  rep.ideal_b = ib.to_string();
  ElementSet sa = oracle_ideal_times(reg, ag), sb = oracle_ideal_times(reg, bg);

  auto item = [&](std::string name, const std::string& engine, const std::string& oracle) {
    rep.items.push_back(CrosscheckItem{std::move(name), engine == oracle, engine, oracle});
  };

  for (int k = 0; k < 4; ++k) {
    Polynomial f = random_form(rng, base, 1 + k % 3);
    item("membership " + f.to_string(), yes_no(ia.contains(f)), yes_no(sa[reg.encode(alg.element_of(f))]));
  }
  item("equality", yes_no(ia == ib), yes_no(sa == sb));
  item("ideal_times_ring", std::to_string(oracle_count(oracle_submodule(reg, scalar_module(ia, R).gens()))),
       std::to_string(oracle_count(sa)));
  if (!ia.is_zero()) {
    auto engine = oracle_submodule(reg, colon_module(scalar_module(ib, R), ia).gens());
    auto oracle = oracle_colon(reg, sb, ag);
    item("colon", std::to_string(oracle_count(engine)) + (engine == oracle ? "" : " (different set)"),
         std::to_string(oracle_count(oracle)));
  }

  std::vector<FreeVector> brel;
  for (const auto& g : bg) brel.push_back(g * FreeVector::basis(R->ambient(), 0));
  auto qm = FiniteModule::make(alg, 1, brel);
  std::vector<VariablePrime> oracle_primes;
  bool variable_primes = true;
  for (const auto& s : oracle_ass(qm)) {
    auto vp = oracle_variable_prime(alg, s);
    if (vp) oracle_primes.push_back(*vp);
    else variable_primes = false;
  }
  item("ass_r_mod_b", primes_text(ass_variable_primes(PresentedModule::cyclic(ib)), names),
       variable_primes ? primes_text(oracle_primes, names) : "non-variable prime");

  auto zero = IdealHandle::zero(r);
  auto link_item = [&](const std::string& name, const IdealHandle& a, const IdealHandle& b) {
    LinkageReport engine = check_linked(LinkageInstance{r, R, a, b, zero});
    OracleLinkage oracle = oracle_is_linked(reg, a.gens(), b.gens(), {});
    auto text = [](Verdict v, bool geometric) {
      return to_string(v) + (v == Verdict::linked && geometric ? " geometric" : "");
    };
    Verdict ov = !oracle.hypotheses_ok ? Verdict::hypotheses_failed : oracle.linked ? Verdict::linked : Verdict::not_linked;
    item(name, text(engine.verdict, engine.geometric), text(ov, oracle.geometric));
  };
  link_item("linkage_a_b", ia, ib);
  if (!ia.is_zero()) link_item("linkage_a_annihilator", ia, ideal_colon(zero, ia));
  return rep;
}

}  // namespace linkagelab
