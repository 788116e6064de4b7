#include "linkagelab/linkage.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "linkagelab/finite_oracle.hpp"
#include "linkagelab/monomial_ideal.hpp"
#include "linkagelab/parse.hpp"

namespace linkagelab {

namespace {

/// Oracle Ass enumerates element pairs, so it uses a tighter cap.
constexpr unsigned kAssOracleCapLog2 = 12;

Clause clause(std::string name, bool ok, std::string detail = {}) {
  return Clause{std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(detail)};
}

Clause skipped(std::string name, std::string why) { return Clause{std::move(name), Outcome::skipped, std::move(why)}; }

Clause inconclusive(std::string name, std::string why) {
  return Clause{std::move(name), Outcome::inconclusive, std::move(why)};
}

void finish(VerifierPart& part) {
  auto any = [](const std::vector<Clause>& cs, Outcome o) {
    return std::any_of(cs.begin(), cs.end(), [o](const Clause& c) { return c.status == o; });
  };
  if (any(part.hypotheses, Outcome::fail)) {
    part.status = Outcome::hypotheses_failed;
    for (auto& c : part.conclusions)
      if (c.status != Outcome::skipped) c = skipped(c.name, "hypotheses failed");
    return;
  }
  if (any(part.hypotheses, Outcome::inconclusive)) {
    part.status = Outcome::inconclusive;
    return;
  }
  if (any(part.conclusions, Outcome::fail))
    part.status = Outcome::fail;
  else if (any(part.conclusions, Outcome::inconclusive))
    part.status = Outcome::inconclusive;
  else if (any(part.conclusions, Outcome::pass))
    part.status = Outcome::pass;
  else
    part.status = Outcome::skipped;
}

void finish(VerifierReport& rep) {
  auto any = [&](Outcome o) {
    return std::any_of(rep.parts.begin(), rep.parts.end(), [o](const VerifierPart& p) { return p.status == o; });
  };
  if (any(Outcome::fail))
    rep.outcome = Outcome::fail;
  else if (any(Outcome::inconclusive))
    rep.outcome = Outcome::inconclusive;
  else if (any(Outcome::pass))
    rep.outcome = Outcome::pass;
  else if (any(Outcome::hypotheses_failed))
    rep.outcome = Outcome::hypotheses_failed;
  else
    rep.outcome = Outcome::skipped;
}

/// Verdict of a hand-built instance, used by the verifiers.
bool linked(const QuotientRingPtr& r, const PresentedModulePtr& m, const IdealHandle& a, const IdealHandle& b,
            const IdealHandle& i) {
  return is_linked(LinkageInstance{r, m, a, b, i});
}

bool prime_contains(const VariablePrime& p, const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
    return std::any_of(p.begin(), p.end(), [&](std::size_t v) { return t.mono[v] > 0; });
  });
}

bool prime_subset(const VariablePrime& a, const VariablePrime& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool prime_order(const VariablePrime& a, const VariablePrime& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::vector<VariablePrime> canonical(std::vector<VariablePrime> ps) {
  std::sort(ps.begin(), ps.end(), prime_order);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

std::vector<VariablePrime> minimal_primes(const std::vector<VariablePrime>& ps) {
  std::vector<VariablePrime> out;
  for (const auto& p : ps)
    if (std::none_of(ps.begin(), ps.end(), [&](const VariablePrime& q) { return q != p && prime_subset(q, p); }))
      out.push_back(p);
  return out;
}

std::vector<VariablePrime> set_union(const std::vector<VariablePrime>& a, const std::vector<VariablePrime>& b) {
  std::vector<VariablePrime> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonical(std::move(out));
}

std::vector<VariablePrime> restrict_to(const std::vector<VariablePrime>& ps, const IdealHandle& a) {
  std::vector<VariablePrime> out;
  auto gens = a.lift_gens();
  for (const auto& p : ps)
    if (std::all_of(gens.begin(), gens.end(), [&](const Polynomial& f) { return prime_contains(p, f); }))
      out.push_back(p);
  return out;
}

std::string primes_string(const std::vector<VariablePrime>& ps, const Ring& ring) {
  std::string s = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) s += ", ";
    s += prime_to_string(ps[k], ring.names());
  }
  return s + "}";
}

bool is_single_term(const FreeVector& v) { return v.terms().size() <= 1; }

/// Per-component monomial ideals when every relation of M and of R is a
/// single term; M is then the direct sum of the cyclic quotients.
std::optional<std::vector<MonomialIdeal>> monomial_components(const PresentedModulePtr& m) {
  const auto& ring = m->ring();
  std::size_t n = ring->nvars();
  std::vector<std::vector<Monomial>> comps(m->rank());
  for (const auto& g : ring->relations()) {
    if (g.terms().size() > 1) return std::nullopt;
    for (auto& c : comps)
      if (!g.is_zero()) c.push_back(g.terms()[0].mono);
  }
  for (const auto& r : m->relations()) {
    if (!is_single_term(r)) return std::nullopt;
    if (r.is_zero()) continue;
    const Term& t = r.terms()[0];
    comps[t.comp].push_back(t.mono);
  }
  std::vector<MonomialIdeal> out;
  for (auto& c : comps) out.emplace_back(n, std::move(c));
  return out;
}

long dimension_of_prime(const VariablePrime& p, std::size_t n) { return static_cast<long>(n - p.size()); }

/// M_P for a monomial module, Cohen-Macaulay test after inverting the
/// variables outside P.
bool localized_cm(const std::vector<MonomialIdeal>& comps, const VariablePrime& p, const Ring& ring) {
  if (p.empty()) return true;
  std::vector<std::string> names;
  std::vector<int> weights;
  for (auto v : p) {
    names.push_back(ring.names()[v]);
    weights.push_back(ring.weights()[v]);
  }
  Ring::Options o;
  o.weights = weights;
  RingPtr local = Ring::make(ring.characteristic(), names, o);
  std::optional<long> common_dim;
  for (const auto& c : comps) {
    std::vector<Polynomial> gens;
    bool unit = false;
    for (const auto& g : c.gens()) {
      Monomial m(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) m.set(k, g[p[k]]);
      if (m.is_one()) unit = true;
      gens.push_back(Polynomial::monomial(local, m));
    }
    if (unit) continue;
    auto q = QuotientRing::make(local, gens);
    auto summand = PresentedModule::free(q, 1);
    if (!is_cohen_macaulay(summand)) return false;
    long d = krull_dim(summand);
    if (common_dim && *common_dim != d) return false;
    common_dim = d;
  }
  return true;
}

std::optional<std::vector<VariablePrime>> oracle_ass_primes(const PresentedModulePtr& m) {
  try {
    auto alg = FiniteAlgebra::make(m->base(), annihilator_lift(m), kAssOracleCapLog2);
    auto fm = FiniteModule::make(alg, m->rank(), m->lift_gens(), kAssOracleCapLog2);
    std::vector<VariablePrime> out;
    for (const auto& s : oracle_ass(fm)) {
      auto vp = oracle_variable_prime(alg, s);
      if (!vp) return std::vector<VariablePrime>{};
      out.push_back(*vp);
    }
    return canonical(std::move(out));
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Homogeneous candidates for a regular element: variables, then sums of
/// variables of equal weight with random coefficients.
std::vector<Polynomial> regular_element_candidates(const QuotientRingPtr& r, std::mt19937_64& rng) {
  const RingPtr& s = r->base();
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < s->nvars(); ++v) out.push_back(Polynomial::variable(s, v));
  for (int attempt = 0; attempt < 8; ++attempt) {
    int w = s->weights()[rng() % s->nvars()];
    Polynomial f(s);
    for (std::size_t v = 0; v < s->nvars(); ++v)
      if (s->weights()[v] == w) f = f + Polynomial::variable(s, v).scaled(static_cast<Coeff>(1 + rng() % (s->characteristic() - 1)));
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::linked: return "linked";
    case Verdict::not_linked: return "not-linked";
    case Verdict::hypotheses_failed: return "hypotheses-failed";
  }
  return "";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::hypotheses_failed: return "hypotheses-failed";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::skipped: return "skipped";
  }
  return "";
}

IdealHandle as_ideal(const SubmoduleHandle& n) {
  if (n.module()->rank() != 1) throw StructuralError("submodule of a module of rank other than 1");
  std::vector<Polynomial> gens;
  for (const auto& g : n.gens()) gens.push_back(g.component(0));
  return IdealHandle(n.module()->ring(), gens);
}

IdealHandle ideal_colon(const IdealHandle& i, const IdealHandle& a) {
  auto r = PresentedModule::free(i.ring(), 1);
  return as_ideal(colon_module(scalar_module(i, r), a)).canonical();
}

LinkageReport check_linked(const LinkageInstance& inst) {
  const auto& m = inst.module;
  require_same_quotient(*inst.ring, *m->ring());
  for (const auto* h : {&inst.a, &inst.b, &inst.i}) require_same_quotient(*inst.ring, *h->ring());
  LinkageReport rep;
  auto& hyp = rep.hypotheses;
  hyp["a_nonzero_proper"] = !inst.a.is_zero() && !inst.a.is_unit();
  hyp["b_nonzero_proper"] = !inst.b.is_zero() && !inst.b.is_unit();
  hyp["i_in_a_and_b"] = inst.a.contains(inst.i) && inst.b.contains(inst.i);
  hyp["a_proper_on_m"] = is_proper(inst.a, m);
  hyp["b_proper_on_m"] = is_proper(inst.b, m);
  RegularSequenceResult reg = regular_sequence_check(inst.i.gens(), m);
  hyp["i_regular_on_m"] = reg.regular;
  if (reg.failure_index) rep.failure_index = reg.failure_index;

  if (hyp["a_proper_on_m"]) rep.grades["grade_m_a"] = grade(inst.a, m);
  if (hyp["b_proper_on_m"]) rep.grades["grade_m_b"] = grade(inst.b, m);
  if (is_proper(inst.i, m)) rep.grades["grade_m_i"] = grade(inst.i, m);
  rep.selflinked = inst.a == inst.b;

  bool ok = std::all_of(hyp.begin(), hyp.end(), [](const auto& kv) { return kv.second; });
  if (!ok) {
    if (!hyp["a_nonzero_proper"]) rep.witnesses.push_back("a is zero or the unit ideal");
    if (!hyp["b_nonzero_proper"]) rep.witnesses.push_back("b is zero or the unit ideal");
    if (!hyp["i_in_a_and_b"]) rep.witnesses.push_back("I is not contained in the intersection of a and b");
    if (!hyp["a_proper_on_m"]) rep.witnesses.push_back("aM = M");
    if (!hyp["b_proper_on_m"]) rep.witnesses.push_back("bM = M");
    if (!reg.regular) rep.witnesses.push_back(reg.reason);
    std::size_t t = inst.i.gens().size();
    for (const char* key : {"grade_m_a", "grade_m_b"}) {
      auto it = rep.grades.find(key);
      if (it != rep.grades.end() && it->second < static_cast<long>(t))
        rep.witnesses.push_back(std::string(key) + " = " + std::to_string(it->second) +
                                " is less than the number of generators of I (" + std::to_string(t) + ")");
    }
    rep.verdict = Verdict::hypotheses_failed;
    return rep;
  }

  SubmoduleHandle im = scalar_module(inst.i, m);
  SubmoduleHandle am = scalar_module(inst.a, m), bm = scalar_module(inst.b, m);
  SubmoduleHandle ca = colon_module(im, inst.a), cb = colon_module(im, inst.b);
  bool first = ca == bm, second = cb == am;
  rep.conclusions["b_m_equals_colon_a"] = first;
  rep.conclusions["a_m_equals_colon_b"] = second;
  auto witness = [&](const SubmoduleHandle& big, const SubmoduleHandle& small, const std::string& what) {
    for (const auto& g : big.gens())
      if (!small.contains(g)) {
        rep.witnesses.push_back(g.to_string() + " lies in " + what);
        return;
      }
  };
  if (!first) {
    witness(ca, bm, "IM :_M a but not in bM");
    witness(bm, ca, "bM but not in IM :_M a");
  }
  if (!second) {
    witness(cb, am, "IM :_M b but not in aM");
    witness(am, cb, "aM but not in IM :_M b");
  }
  rep.geometric = intersect(am, bm) == im;
  rep.verdict = first && second ? Verdict::linked : Verdict::not_linked;
  return rep;
}

bool is_linked(const LinkageInstance& inst) { return check_linked(inst).verdict == Verdict::linked; }

AssResult associated_primes(const PresentedModulePtr& m) {
  AssResult res;
  if (m->is_zero()) {
    res.primes = std::vector<VariablePrime>{};
    res.paths.push_back("zero module");
    return res;
  }
  std::vector<std::vector<VariablePrime>> found;
  auto comps = monomial_components(m);
  if (comps) {
    std::vector<VariablePrime> ps;
    for (const auto& c : *comps) {
      if (c.is_unit()) continue;
      auto a = mono_ass_primes(c);
      ps.insert(ps.end(), a.begin(), a.end());
    }
    found.push_back(canonical(std::move(ps)));
    res.paths.push_back("monomial");
  }
  bool artinian = is_artinian(m);
  if (artinian) {
    if (auto o = oracle_ass_primes(m)) {
      found.push_back(*o);
      res.paths.push_back("oracle");
    }
  }
  if (comps || artinian) {
    found.push_back(canonical(ass_variable_primes(m)));
    res.paths.push_back("engine");
  }
  if (found.empty()) return res;
  res.primes = found.front();
  res.agree = std::all_of(found.begin(), found.end(), [&](const auto& f) { return f == found.front(); });
  return res;
}

VerifierReport verify_grade_support(const LinkageInstance& inst) {
  VerifierReport rep;
  rep.verifier = "grade-support";
  VerifierPart part;
  part.name = "grade-and-support";
  LinkageReport lr = check_linked(inst);
  part.hypotheses.push_back(clause("linked", lr.verdict == Verdict::linked, to_string(lr.verdict)));
  if (lr.verdict == Verdict::linked) {
    const auto& m = inst.module;
    long ga = lr.grades.at("grade_m_a"), gb = lr.grades.at("grade_m_b"), gi = lr.grades.at("grade_m_i");
    std::ostringstream d;
    d << "grade_M a = " << ga << ", grade_M b = " << gb << ", grade_M I = " << gi;
    part.conclusions.push_back(clause("grades_equal", ga == gb && gb == gi, d.str()));
    SubmoduleHandle im = scalar_module(inst.i, m);
    auto hom = hom_into_quotient(inst.a, im);
    auto ma = scalar_module(inst.a, m).quotient(), mb = scalar_module(inst.b, m).quotient();
    part.conclusions.push_back(clause("hom_support_equals_quotient_support", support_equal(hom, ma)));
    auto union_ann = intersect_ideals(annihilator_lift(ma), annihilator_lift(mb));
    part.conclusions.push_back(
        clause("support_union", same_radical(annihilator_lift(im.quotient()), union_ann, m->base())));
    rep.values["grade_m_a"] = std::to_string(ga);
  }
  finish(part);
  rep.parts.push_back(std::move(part));
  finish(rep);
  return rep;
}

VerifierReport verify_ass_and_height(const LinkageInstance& inst) {
  VerifierReport rep;
  rep.verifier = "ass-and-height";
  const auto& m = inst.module;
  const Ring& s = *m->base();
  std::size_t n = s.nvars();
  LinkageReport lr = check_linked(inst);
  bool is_linked_pair = lr.verdict == Verdict::linked;
  Clause linked_clause = clause("linked", is_linked_pair, to_string(lr.verdict));
  if (!is_linked_pair) {
    VerifierPart part{"ass-relations", {linked_clause}, {}, Outcome::skipped};
    finish(part);
    rep.parts.push_back(std::move(part));
    finish(rep);
    return rep;
  }

  SubmoduleHandle im = scalar_module(inst.i, m), am = scalar_module(inst.a, m), bm = scalar_module(inst.b, m);
  auto mi = im.quotient(), ma = am.quotient(), mb = bm.quotient();
  AssResult ass_i = associated_primes(mi), ass_a = associated_primes(ma), ass_b = associated_primes(mb);
  bool known = ass_i.primes && ass_a.primes && ass_b.primes;
  bool geometric = lr.geometric;
  long t = lr.grades.at("grade_m_i");

  VerifierPart paths;
  paths.name = "ass-ground-truth";
  for (auto [label, res] : {std::pair{"m_mod_i", &ass_i}, {"m_mod_a", &ass_a}, {"m_mod_b", &ass_b}}) {
    std::string joined;
    for (const auto& p : res->paths) joined += (joined.empty() ? "" : "+") + p;
    if (res->paths.size() >= 2)
      paths.conclusions.push_back(clause(std::string("ass_paths_agree_") + label, res->agree, joined));
    else
      paths.conclusions.push_back(skipped(std::string("ass_paths_agree_") + label, "fewer than two paths: " + joined));
    if (res->primes) rep.values[std::string("ass_") + label] = primes_string(*res->primes, s);
  }
  finish(paths);
  rep.parts.push_back(std::move(paths));

  // Ass(M/IM) = Min Ass(M/IM): decided from Ass when known, else from unmixedness.
  std::optional<bool> gate;
  if (ass_i.primes)
    gate = minimal_primes(*ass_i.primes) == *ass_i.primes;
  else if (is_unmixed(mi))
    gate = true;
  Clause gate_clause = gate ? clause("ass_equals_min_ass", *gate)
                            : inconclusive("ass_equals_min_ass", "no Ass ground truth and M/IM is mixed");

  VerifierPart ass;
  ass.name = "ass-relations";
  ass.hypotheses.push_back(linked_clause);
  if (known) {
    auto min_i = minimal_primes(*ass_i.primes);
    auto min_ab = set_union(minimal_primes(*ass_a.primes), minimal_primes(*ass_b.primes));
    ass.conclusions.push_back(clause("min_ass_covered", std::all_of(min_i.begin(), min_i.end(), [&](const auto& p) {
                                       return std::find(min_ab.begin(), min_ab.end(), p) != min_ab.end();
                                     })));
    auto embeds = [&](const std::vector<VariablePrime>& sub) {
      return std::all_of(sub.begin(), sub.end(), [&](const auto& p) {
        return std::find(ass_i.primes->begin(), ass_i.primes->end(), p) != ass_i.primes->end();
      });
    };
    ass.conclusions.push_back(clause("quotient_ass_embeds", embeds(*ass_a.primes) && embeds(*ass_b.primes)));
    if (gate && *gate) {
      ass.conclusions.push_back(clause("ass_union", set_union(*ass_a.primes, *ass_b.primes) == *ass_i.primes));
      ass.conclusions.push_back(clause("ass_restriction", restrict_to(*ass_i.primes, inst.a) == *ass_a.primes));
    } else {
      ass.conclusions.push_back(skipped("ass_union", "Ass(M/IM) has embedded primes"));
      ass.conclusions.push_back(skipped("ass_restriction", "Ass(M/IM) has embedded primes"));
    }
    if (geometric) {
      ass.conclusions.push_back(
          clause("geometric_ass_restriction", restrict_to(*ass_i.primes, inst.a) == *ass_a.primes));
      bool disjoint = std::none_of(ass_a.primes->begin(), ass_a.primes->end(), [&](const auto& p) {
        return std::find(ass_b.primes->begin(), ass_b.primes->end(), p) != ass_b.primes->end();
      });
      ass.conclusions.push_back(clause("geometric_ass_disjoint", disjoint));
    } else {
      ass.conclusions.push_back(skipped("geometric_ass_restriction", "not geometrically linked"));
      ass.conclusions.push_back(skipped("geometric_ass_disjoint", "not geometrically linked"));
    }
  } else {
    ass.conclusions.push_back(skipped("min_ass_covered", "no Ass ground truth"));
  }
  finish(ass);
  rep.parts.push_back(std::move(ass));

  VerifierPart art;
  art.name = "artinian-equivalence";
  art.hypotheses = {linked_clause, gate_clause};
  bool ai = is_artinian(mi), aa = is_artinian(ma), ab = is_artinian(mb);
  art.conclusions.push_back(clause("artinian_flags_agree", ai == aa && aa == ab,
                                   yes_no(ai) + ", " + yes_no(aa) + ", " + yes_no(ab)));
  if (ai)
    art.conclusions.push_back(clause("artinian_not_geometric", !geometric));
  else
    art.conclusions.push_back(skipped("artinian_not_geometric", "M/IM is not Artinian"));
  finish(art);
  rep.parts.push_back(std::move(art));

  VerifierPart height;
  height.name = "height-grade";
  height.hypotheses = {linked_clause, gate_clause};
  long ha = height_on_module(inst.a, m), hb = height_on_module(inst.b, m);
  long ga = lr.grades.at("grade_m_a"), gb = lr.grades.at("grade_m_b");
  std::ostringstream d;
  d << "h_a = " << ha << ", h_b = " << hb << ", g_a = " << ga << ", g_b = " << gb << ", t = " << t;
  height.conclusions.push_back(clause("heights_equal_grade", ha == t && hb == t && ga == t && gb == t, d.str()));
  IdealHandle sum = inst.a + inst.b;
  if (!geometric && is_proper(sum, m)) {
    long hs = height_on_module(sum, m);
    height.conclusions.push_back(clause("sum_height_equals_grade", hs == ga, "h_(a+b) = " + std::to_string(hs)));
  } else {
    height.conclusions.push_back(skipped("sum_height_equals_grade", "geometrically linked"));
  }
  rep.values["height_m_a"] = std::to_string(ha);
  finish(height);
  rep.parts.push_back(std::move(height));

  VerifierPart dim;
  dim.name = "dimension-formula";
  dim.hypotheses = {linked_clause, gate_clause};
  std::optional<bool> equidim;
  if (ass_i.primes) {
    const auto& ps = *ass_i.primes;
    equidim = std::all_of(ps.begin(), ps.end(), [&](const auto& p) {
      return dimension_of_prime(p, n) == dimension_of_prime(ps.front(), n);
    });
  } else if (gate && *gate) {
    equidim = true;
  }
  dim.hypotheses.push_back(equidim ? clause("m_mod_i_equidimensional", *equidim)
                                   : inconclusive("m_mod_i_equidimensional", "no Ass ground truth"));
  long dm = krull_dim(m), dma = krull_dim(ma);
  dim.conclusions.push_back(clause("dimension_formula", dm == ha + dma,
                                   std::to_string(dm) + " = " + std::to_string(ha) + " + " + std::to_string(dma)));
  if (ass_a.primes) {
    bool all = true;
    for (const auto& p : minimal_primes(*ass_a.primes)) {
      std::vector<Polynomial> gens;
      for (auto v : p) gens.push_back(Polynomial::variable(m->base(), v));
      IdealHandle ph(m->ring(), gens);
      if (!is_proper(ph, m) || dm != height_on_module(ph, m) + dimension_of_prime(p, n)) all = false;
    }
    dim.conclusions.push_back(clause("prime_dimension_formula", all));
  }
  finish(dim);
  rep.parts.push_back(std::move(dim));

  VerifierPart local;
  local.name = "localized-cm";
  local.hypotheses = {linked_clause, gate_clause};
  auto comps = monomial_components(m);
  if (comps && ass_a.primes) {
    bool heights = true, cm = true;
    for (const auto& p : minimal_primes(*ass_a.primes)) {
      std::vector<Polynomial> gens;
      for (auto v : p) gens.push_back(Polynomial::variable(m->base(), v));
      IdealHandle ph(m->ring(), gens);
      if (height_on_module(ph, m) != t) heights = false;
      if (!localized_cm(*comps, p, s)) cm = false;
    }
    local.conclusions.push_back(clause("minimal_prime_heights", heights));
    local.conclusions.push_back(clause("localization_cohen_macaulay", cm));
  } else {
    local.conclusions.push_back(skipped("localization_cohen_macaulay", "module is not monomial"));
  }
  finish(local);
  rep.parts.push_back(std::move(local));
  finish(rep);
  return rep;
}

VerifierReport verify_canonical_transfer(const LinkageInstance& inst) {
  VerifierReport rep;
  rep.verifier = "canonical-transfer";
  const auto& r = inst.ring;
  auto free = PresentedModule::free(r, 1);
  bool cm = is_cohen_macaulay(free);
  Clause cm_clause = clause("ring_cohen_macaulay", cm);
  if (!cm) {
    rep.parts.push_back(VerifierPart{"canonical-to-ring", {cm_clause}, {}, Outcome::skipped});
    rep.parts.push_back(VerifierPart{"ring-to-canonical", {cm_clause}, {}, Outcome::skipped});
    for (auto& p : rep.parts) finish(p);
    finish(rep);
    return rep;
  }
  auto omega = canonical_module(r);
  rep.values["canonical_generators"] = std::to_string(minimal_generator_count(omega));
  bool over_omega = linked(r, omega, inst.a, inst.b, inst.i);
  bool over_r = linked(r, free, inst.a, inst.b, inst.i);
  auto unmixed_quotient = [&](const IdealHandle& x, const PresentedModulePtr& carrier) {
    return is_unmixed(scalar_module(x, carrier).quotient());
  };

  VerifierPart down;
  down.name = "canonical-to-ring";
  down.hypotheses = {cm_clause, clause("linked_over_canonical", over_omega), clause("r_mod_a_unmixed", unmixed_quotient(inst.a, free)),
                     clause("r_mod_b_unmixed", unmixed_quotient(inst.b, free))};
  down.conclusions.push_back(clause("b_equals_i_colon_a", ideal_colon(inst.i, inst.a) == inst.b.canonical()));
  down.conclusions.push_back(clause("a_equals_i_colon_b", ideal_colon(inst.i, inst.b) == inst.a.canonical()));
  down.conclusions.push_back(clause("linked_over_ring", over_r));
  finish(down);
  rep.parts.push_back(std::move(down));

  VerifierPart up;
  up.name = "ring-to-canonical";
  up.hypotheses = {cm_clause, clause("linked_over_ring", over_r), clause("a_differs_from_i", !(inst.a == inst.i)),
                   clause("b_differs_from_i", !(inst.b == inst.i)),
                   clause("omega_mod_a_unmixed", unmixed_quotient(inst.a, omega)),
                   clause("omega_mod_b_unmixed", unmixed_quotient(inst.b, omega))};
  SubmoduleHandle iw = scalar_module(inst.i, omega);
  up.conclusions.push_back(clause("b_omega_equals_colon", colon_module(iw, inst.a) == scalar_module(inst.b, omega)));
  up.conclusions.push_back(clause("linked_over_canonical", over_omega));
  finish(up);
  rep.parts.push_back(std::move(up));
  finish(rep);
  return rep;
}

VerifierReport verify_cm_equivalence(const LinkageInstance& inst, const VerifyOptions& opts) {
  VerifierReport rep;
  rep.verifier = "cm-equivalence";
  const auto& r = inst.ring;
  std::size_t window = opts.window ? opts.window : default_window(*r);
  auto free = PresentedModule::free(r, 1);
  bool cm = is_cohen_macaulay(free);
  Clause cm_clause = clause("ring_cohen_macaulay", cm);
  auto quotient_cm = [](const IdealHandle& x, const PresentedModulePtr& carrier) {
    auto q = scalar_module(x, carrier).quotient();
    return !q->is_zero() && is_cohen_macaulay(q);
  };
  auto unmixed_quotient = [](const IdealHandle& x, const PresentedModulePtr& carrier) {
    return is_unmixed(scalar_module(x, carrier).quotient());
  };

  PresentedModulePtr omega = cm ? canonical_module(r) : nullptr;
  bool ra = quotient_cm(inst.a, free), rb = quotient_cm(inst.b, free);
  rep.values["r_mod_a_cm"] = yes_no(ra);
  rep.values["r_mod_b_cm"] = yes_no(rb);

  VerifierPart ring_part;
  ring_part.name = "ring-linkage";
  ring_part.hypotheses.push_back(cm_clause);
  if (cm) {
    RegularSequenceResult reg = regular_sequence_check(inst.i.gens(), free);
    ring_part.hypotheses.push_back(clause("i_regular_on_r", reg.regular, reg.reason));
    ring_part.hypotheses.push_back(clause("a_differs_from_i", !(inst.a == inst.i)));
    ring_part.hypotheses.push_back(clause("b_differs_from_i", !(inst.b == inst.i)));
    bool colon_ok = !inst.a.is_zero() && ideal_colon(inst.i, inst.a) == inst.b.canonical();
    ring_part.hypotheses.push_back(clause("b_equals_i_colon_a", colon_ok));
    if (std::all_of(ring_part.hypotheses.begin(), ring_part.hypotheses.end(),
                    [](const Clause& c) { return c.status == Outcome::pass; })) {
      bool wa = quotient_cm(inst.a, omega);
      bool right = unmixed_quotient(inst.a, omega) && rb;
      ring_part.conclusions.push_back(
          clause("omega_mod_a_cm_iff_unmixed_and_r_mod_b_cm", wa == right, yes_no(wa) + " vs " + yes_no(right)));
    }
  }
  finish(ring_part);
  rep.parts.push_back(std::move(ring_part));

  VerifierPart canon;
  canon.name = "canonical-linkage";
  canon.hypotheses.push_back(cm_clause);
  std::vector<Clause> canon_hyps;
  if (cm) {
    canon_hyps = {clause("linked_over_canonical", linked(r, omega, inst.a, inst.b, inst.i)),
                  clause("r_mod_a_unmixed", unmixed_quotient(inst.a, free)),
                  clause("r_mod_b_unmixed", unmixed_quotient(inst.b, free))};
    canon.hypotheses.insert(canon.hypotheses.end(), canon_hyps.begin(), canon_hyps.end());
  }
  bool canon_ok = std::all_of(canon.hypotheses.begin(), canon.hypotheses.end(),
                              [](const Clause& c) { return c.status == Outcome::pass; });
  if (canon_ok) {
    bool wa = quotient_cm(inst.a, omega);
    canon.conclusions.push_back(clause("omega_mod_a_cm_iff_r_mod_b_cm", wa == rb, yes_no(wa) + " vs " + yes_no(rb)));
  }
  finish(canon);
  rep.parts.push_back(std::move(canon));

  VerifierPart gd;
  gd.name = "gdim-cm";
  gd.hypotheses.push_back(cm_clause);
  if (cm) gd.hypotheses.insert(gd.hypotheses.end(), canon_hyps.begin(), canon_hyps.end());
  if (canon_ok) {
    // Each side is "finite Gdim and CM"; a CM-false side is false regardless of Gdim.
    auto side = [&](const IdealHandle& x, bool cm_side, const std::string& tag) -> std::optional<bool> {
      if (!cm_side) return false;
      WindowReport w = gdim_report(scalar_module(x, free).quotient(), window);
      rep.values["gdim_" + tag] = w.status != WindowStatus::exact ? ">= " + std::to_string(w.value) + " (inconclusive)"
                                  : w.infinite                     ? "infinite"
                                                                   : std::to_string(w.value);
      rep.values["gdim_" + tag + "_method"] = w.method;
      if (w.status == WindowStatus::exact) return !w.infinite;
      return std::nullopt;
    };
    auto left = side(inst.a, ra, "a"), right = side(inst.b, rb, "b");
    if (left && right)
      gd.conclusions.push_back(clause("finite_gdim_and_cm_equivalent", *left == *right));
    else
      gd.conclusions.push_back(inconclusive("finite_gdim_and_cm_equivalent", "G-dimension window inconclusive"));
  }
  finish(gd);
  rep.parts.push_back(std::move(gd));

  VerifierPart mod;
  mod.name = "module-cm";
  const auto& m = inst.module;
  mod.hypotheses.push_back(clause("i_is_zero", inst.i.is_zero()));
  if (inst.i.is_zero()) {
    mod.hypotheses.push_back(clause("linked_over_m", is_linked(inst)));
    bool mcm = is_cohen_macaulay(m);
    mod.hypotheses.push_back(clause("m_cohen_macaulay", mcm));
    WindowReport inj = injdim_report(m, window);
    bool exact = inj.status == WindowStatus::exact;
    rep.values["injdim_m"] = !exact ? "inconclusive" : inj.infinite ? "infinite" : std::to_string(inj.value);
    mod.hypotheses.push_back(exact ? clause("m_finite_injective_dimension", !inj.infinite, rep.values["injdim_m"])
                                   : inconclusive("m_finite_injective_dimension", "Bass scan inconclusive"));
    long dr = depth(free);
    auto qa = scalar_module(inst.a, free).quotient(), qb = scalar_module(inst.b, free).quotient();
    bool depths = !qa->is_zero() && !qb->is_zero() && depth(qa) == dr && depth(qb) == dr;
    mod.hypotheses.push_back(clause("depths_equal", depths));
    if (std::all_of(mod.hypotheses.begin(), mod.hypotheses.end(),
                    [](const Clause& c) { return c.status == Outcome::pass; })) {
      bool left = quotient_cm(inst.a, m), right = quotient_cm(inst.b, m);
      mod.conclusions.push_back(clause("m_mod_a_cm_iff_m_mod_b_cm", left == right, yes_no(left) + " vs " + yes_no(right)));
    }
  }
  finish(mod);
  rep.parts.push_back(std::move(mod));
  finish(rep);
  return rep;
}

VerifierReport verify_sum_and_reduction(const LinkageInstance& inst, const VerifyOptions& opts) {
  VerifierReport rep;
  rep.verifier = "sum-and-reduction";
  const auto& r = inst.ring;
  const auto& m = inst.module;
  auto free = PresentedModule::free(r, 1);
  std::size_t window = opts.window ? opts.window : default_window(*r);
  bool over_m = is_linked(inst);

  VerifierPart sum;
  sum.name = "direct-sum";
  PresentedModulePtr other = opts.second_module ? opts.second_module : free;
  bool over_n = linked(r, other, inst.a, inst.b, inst.i);
  bool over_sum = linked(r, direct_sum(m, other), inst.a, inst.b, inst.i);
  sum.conclusions.push_back(clause("sum_iff_both", over_sum == (over_m && over_n),
                                   yes_no(over_sum) + " vs " + yes_no(over_m) + " and " + yes_no(over_n)));
  bool over_r = linked(r, free, inst.a, inst.b, inst.i);
  for (std::size_t l : {2, 3}) {
    bool over_f = linked(r, PresentedModule::free(r, l), inst.a, inst.b, inst.i);
    sum.conclusions.push_back(clause("free_rank_" + std::to_string(l), over_f == over_r));
  }
  finish(sum);
  rep.parts.push_back(std::move(sum));

  VerifierPart base;
  base.name = "restriction-from-polynomial-ring";
  auto s = QuotientRing::polynomial(r->base());
  IdealHandle a0(s, inst.a.gens()), b0(s, inst.b.gens());
  base.hypotheses.push_back(clause("lifts_nonzero_proper", !a0.is_zero() && !a0.is_unit() && !b0.is_zero() && !b0.is_unit()));
  if (base.hypotheses.back().status == Outcome::pass) {
    bool upstairs = linked(s, m->over(s), a0, b0, IdealHandle::zero(s));
    bool downstairs = linked(r, m, inst.a, inst.b, IdealHandle::zero(r));
    base.conclusions.push_back(clause("restriction_preserves_linkage", upstairs == downstairs,
                                      yes_no(upstairs) + " vs " + yes_no(downstairs)));
  }
  finish(base);
  rep.parts.push_back(std::move(base));

  VerifierPart red;
  red.name = "reduction-by-regular-element";
  red.hypotheses.push_back(clause("i_is_zero", inst.i.is_zero()));
  if (inst.i.is_zero()) {
    red.hypotheses.push_back(clause("linked_over_m", over_m));
    if (over_m) {
      auto qa = PresentedModule::cyclic(inst.a), qb = PresentedModule::cyclic(inst.b);
      red.hypotheses.push_back(clause("ext1_a_vanishes", ext_over_R(1, qa, m, window)->is_zero()));
      red.hypotheses.push_back(clause("ext1_b_vanishes", ext_over_R(1, qb, m, window)->is_zero()));
      std::mt19937_64 rng(opts.seed);
      std::optional<Polynomial> x;
      for (const auto& f : regular_element_candidates(r, rng)) {
        IdealHandle xi(r, {f});
        if (!regular_sequence_check({f}, m).regular) continue;
        if (!is_proper(inst.a + xi, m) || !is_proper(inst.b + xi, m)) continue;
        x = f;
        break;
      }
      red.hypotheses.push_back(x ? clause("regular_element_found", true, x->to_string())
                                 : clause("regular_element_found", false, "no homogeneous M-regular element found"));
      if (x) {
        IdealHandle xi(r, {*x});
        auto mx = scalar_module(xi, m).quotient();
        rep.values["regular_element"] = x->to_string();
        red.conclusions.push_back(clause("extended_pair_linked", linked(r, mx, inst.a + xi, inst.b + xi, IdealHandle::zero(r))));
        red.conclusions.push_back(clause("pair_linked_modulo_x", linked(r, mx, inst.a, inst.b, IdealHandle::zero(r))));
      }
    }
  }
  finish(red);
  rep.parts.push_back(std::move(red));
  finish(rep);
  return rep;
}

VerifierReport verify_radical_faithful(const LinkageInstance& inst) {
  VerifierReport rep;
  rep.verifier = "radical-faithful";
  const auto& r = inst.ring;
  VerifierPart part;
  part.name = "descent-to-ring";
  part.hypotheses.push_back(clause("i_is_zero", inst.i.is_zero()));
  part.hypotheses.push_back(clause("linked_over_m", is_linked(inst)));
  part.hypotheses.push_back(clause("m_faithful", annihilator(inst.module).is_zero()));
  for (auto [label, ideal] : {std::pair{"a_radical", &inst.a}, {"b_radical", &inst.b}}) {
    auto mono = MonomialIdeal::from_polynomials(r->nvars(), ideal->lift_gens());
    if (mono) {
      part.hypotheses.push_back(clause(label, mono->is_radical()));
    } else if (!ideal->is_unit() && is_artinian(PresentedModule::cyclic(*ideal))) {
      // A graded ideal with Artinian quotient has the maximal ideal as radical.
      bool maximal = *ideal == IdealHandle::maximal(r);
      part.hypotheses.push_back(clause(label, maximal, maximal ? "maximal ideal" : "Artinian quotient, not the maximal ideal"));
    } else {
      part.hypotheses.push_back(
          inconclusive(label, "radicality is only decided for monomial ideals and Artinian quotients"));
    }
  }
  part.conclusions.push_back(
      clause("linked_over_ring", linked(r, PresentedModule::free(r, 1), inst.a, inst.b, IdealHandle::zero(r))));
  finish(part);
  rep.parts.push_back(std::move(part));
  finish(rep);
  return rep;
}

VerifierReport verify_double_annihilator(const IdealHandle& c) {
  VerifierReport rep;
  rep.verifier = "double-annihilator";
  const auto& r = c.ring();
  auto free = PresentedModule::free(r, 1);
  VerifierPart part;
  part.name = "double-annihilator";
  part.hypotheses.push_back(clause("ring_gorenstein", is_gorenstein(r)));
  part.hypotheses.push_back(clause("c_nonzero_proper", !c.is_zero() && !c.is_unit()));
  if (part.hypotheses.back().status == Outcome::pass) {
    auto q = PresentedModule::cyclic(c);
    part.hypotheses.push_back(clause("c_unmixed", is_unmixed(q)));
    part.hypotheses.push_back(clause("c_height_zero", krull_dim(q) == krull_dim(free)));
    IdealHandle ann = as_ideal(colon_module(SubmoduleHandle::zero(free), c));
    if (ann.is_zero()) {
      part.conclusions.push_back(clause("double_annihilator_equals_c", false, "0 : c is zero"));
    } else {
      IdealHandle back = as_ideal(colon_module(SubmoduleHandle::zero(free), ann));
      rep.values["annihilator"] = ann.canonical().to_string();
      part.conclusions.push_back(clause("double_annihilator_equals_c", back == c));
    }
  }
  finish(part);
  rep.parts.push_back(std::move(part));
  finish(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Fixtures

std::string to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::monomial_ci_selflink: return "monomial-ci-selflink";
    case FixtureKind::regular_selflink: return "regular-selflink";
    case FixtureKind::node_pair: return "node-pair";
    case FixtureKind::colon_constructed: return "colon-constructed";
    case FixtureKind::semigroup: return "semigroup";
    case FixtureKind::semigroup_reduction: return "semigroup-reduction";
  }
  return "";
}

std::optional<FixtureKind> fixture_kind_from_string(const std::string& s) {
  for (auto k : {FixtureKind::monomial_ci_selflink, FixtureKind::regular_selflink, FixtureKind::node_pair,
                 FixtureKind::colon_constructed, FixtureKind::semigroup, FixtureKind::semigroup_reduction})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

std::vector<std::string> variable_names(std::size_t n) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(n <= 4 ? letters[k] : "x" + std::to_string(k + 1));
  return out;
}

Polynomial random_monomial_of_degree(std::mt19937_64& rng, const RingPtr& s, long degree) {
  auto monos = monomials_of_degree(s->nvars(), s->weights(), degree);
  return Polynomial::monomial(s, monos[rng() % monos.size()]);
}

Fixture make_fixture(FixtureKind kind, std::uint64_t seed, LinkageInstance inst,
                     std::vector<std::pair<std::string, PresentedModulePtr>> extra = {}) {
  Fixture f{to_string(kind) + "-" + std::to_string(seed), kind, seed, inst, {{"M", inst.module}}};
  for (auto& e : extra) f.modules.push_back(std::move(e));
  return f;
}

QuotientRingPtr semigroup_ring(const std::vector<std::string>& extra_relations) {
  Ring::Options o;
  o.weights = {3, 4, 5};
  auto s = Ring::make(5, {"x", "y", "z"}, o);
  std::string rels = "x*z - y^2, x^2*y - z^2, x^3 - y*z";
  for (const auto& e : extra_relations) rels += ", " + e;
  return QuotientRing::make(s, parse_polynomial_list(s, rels));
}

}  // namespace

std::optional<Fixture> generate_fixture(FixtureKind kind, std::uint64_t seed, std::size_t size) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case FixtureKind::regular_selflink: {
      std::size_t n = std::max<std::size_t>(size, 1);
      auto s = Ring::make(2, variable_names(n));
      auto r = QuotientRing::polynomial(s);
      std::vector<Polynomial> a, i;
      for (std::size_t v = 0; v < n; ++v) {
        a.push_back(Polynomial::variable(s, v));
        i.push_back(Polynomial::variable(s, v, v == 0 ? 2 : 1));
      }
      IdealHandle ia(r, a);
      return make_fixture(kind, seed, {r, PresentedModule::free(r, 1), ia, ia, IdealHandle(r, i)});
    }
    case FixtureKind::monomial_ci_selflink: {
      // Pure powers of n variables, plus an optional extra variable killed by
      // a power, which keeps the powers regular.
      std::size_t n = std::max<std::size_t>(size, 1);
      bool extra = n < 4 && rng() % 2;
      Coeff p = std::vector<Coeff>{2, 3, 5}[rng() % 3];
      auto s = Ring::make(p, variable_names(n + (extra ? 1 : 0)));
      std::vector<Polynomial> rels;
      if (extra) rels.push_back(Polynomial::variable(s, n, 1 + static_cast<int>(rng() % 3)));
      auto r = QuotientRing::make(s, rels);
      std::vector<Polynomial> a, i;
      for (std::size_t v = 0; v < n; ++v) {
        int e = 1 + static_cast<int>(rng() % 3);
        a.push_back(Polynomial::variable(s, v, e));
        i.push_back(Polynomial::variable(s, v, v == 0 ? 2 * e : e));
      }
      IdealHandle ia(r, a);
      return make_fixture(kind, seed, {r, PresentedModule::free(r, 1), ia, ia, IdealHandle(r, i)});
    }
    case FixtureKind::node_pair: {
      auto s = Ring::make(2, {"x", "y"});
      auto r = QuotientRing::make(s, {parse_polynomial(s, "x*y")});
      IdealHandle a(r, {Polynomial::variable(s, 0)}), b(r, {Polynomial::variable(s, 1)});
      auto line = PresentedModule::cyclic(a);
      return make_fixture(kind, seed, {r, PresentedModule::free(r, 1), a, b, IdealHandle::zero(r)}, {{"line", line}});
    }
    case FixtureKind::colon_constructed: {
      Coeff p = seed % 2 ? 3 : 2;
      std::size_t n = seed % 3 ? 3 : 2;
      auto s = Ring::make(p, variable_names(n));
      for (int attempt = 0; attempt < 24; ++attempt) {
        // R = S / (pure powers of a random subset), a complete intersection.
        std::vector<Polynomial> rels;
        std::vector<std::size_t> free_vars;
        for (std::size_t v = 0; v < n; ++v) {
          if (rng() % 3 == 0)
            rels.push_back(Polynomial::variable(s, v, 2 + static_cast<int>(rng() % 2)));
          else
            free_vars.push_back(v);
        }
        auto r = QuotientRing::make(s, rels);
        std::size_t t = free_vars.empty() ? 0 : rng() % (free_vars.size() + 1);
        std::vector<Polynomial> ig;
        for (std::size_t k = 0; k < t; ++k) ig.push_back(Polynomial::variable(s, free_vars[k], 1 + static_cast<int>(rng() % 2)));
        IdealHandle i(r, ig);
        std::vector<Polynomial> ag = ig;
        std::size_t extra = 1 + rng() % 2;
        for (std::size_t k = 0; k < extra; ++k)
          ag.push_back(random_monomial_of_degree(rng, s, 1 + static_cast<long>(rng() % 2)));
        IdealHandle a(r, ag);
        if (a.is_unit() || a.is_zero() || a == i) continue;
        IdealHandle b = ideal_colon(i, a);
        if (b.is_unit() || b.is_zero()) continue;
        LinkageInstance inst{r, PresentedModule::free(r, 1), a.canonical(), b, i};
        if (!is_linked(inst)) continue;
        return make_fixture(kind, seed, inst);
      }
      return std::nullopt;
    }
    case FixtureKind::semigroup: {
      auto r = semigroup_ring({});
      const RingPtr& s = r->base();
      auto omega = canonical_module(r);
      for (int attempt = 0; attempt < 48; ++attempt) {
        // A nonzero form is a parameter of the one-dimensional domain R.
        Polynomial f = r->reduce(random_form(rng, s, 3 + static_cast<long>(rng() % 5)));
        if (f.is_zero()) continue;
        IdealHandle i(r, {f});
        std::vector<Polynomial> ag = {f};
        std::size_t extra = 1 + rng() % 2;
        for (std::size_t k = 0; k < extra; ++k) ag.push_back(random_form(rng, s, 3 + static_cast<long>(rng() % 6)));
        IdealHandle a(r, ag);
        if (a.is_unit() || a == i) continue;
        // b is read off from the colon submodule, not from I :_R a.
        SubmoduleHandle bw = colon_module(scalar_module(i, omega), a);
        IdealHandle b = colon_submodules(bw, SubmoduleHandle::whole(omega)).canonical();
        if (b.is_unit() || !(scalar_module(b, omega) == bw)) continue;
        LinkageInstance inst{r, omega, a.canonical(), b, i};
        if (!is_linked(inst)) continue;
        return make_fixture(kind, seed, inst, {{"R", PresentedModule::free(r, 1)}});
      }
      return std::nullopt;
    }
    case FixtureKind::semigroup_reduction: {
      auto r = semigroup_ring({"x^2"});
      const RingPtr& s = r->base();
      auto omega = canonical_module(r);
      SubmoduleHandle zero = SubmoduleHandle::zero(omega);
      for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Polynomial> ag;
        std::size_t extra = 1 + rng() % 2;
        for (std::size_t k = 0; k < extra; ++k) ag.push_back(random_form(rng, s, 3 + static_cast<long>(rng() % 6)));
        IdealHandle a(r, ag);
        if (a.is_unit() || a.is_zero()) continue;
        SubmoduleHandle bw = colon_module(zero, a);
        IdealHandle b = colon_submodules(bw, SubmoduleHandle::whole(omega)).canonical();
        if (b.is_unit() || b.is_zero() || !(scalar_module(b, omega) == bw)) continue;
        LinkageInstance inst{r, omega, a.canonical(), b, IdealHandle::zero(r)};
        if (!is_linked(inst)) continue;
        return make_fixture(kind, seed, inst, {{"R", PresentedModule::free(r, 1)}});
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace linkagelab
