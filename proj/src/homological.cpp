#include "linkagelab/homological.hpp"

#include <algorithm>
#include <numeric>

#include "linkagelab/monomial_ideal.hpp"

namespace linkagelab {

namespace {

long vector_degree(const FreeVector& v, const std::vector<long>& shifts, const std::vector<int>& weights) {
  if (v.is_zero()) throw InternalError("degree of the zero vector");
  long d = static_cast<long>(v.terms()[0].mono.weighted_degree(weights)) + shifts[v.terms()[0].comp];
  for (const auto& t : v.terms())
    if (static_cast<long>(t.mono.weighted_degree(weights)) + shifts[t.comp] != d)
      throw InternalError("non-homogeneous vector in a graded computation: " + v.to_string());
  return d;
}

FreeVector rewrap(const FreeModulePtr& target, const FreeVector& v) { return FreeVector(target, v.terms()); }

std::vector<FreeVector> rewrap_all(const FreeModulePtr& target, const std::vector<FreeVector>& vs) {
  std::vector<FreeVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(rewrap(target, v));
  return out;
}

/// Resolution of a minimal presentation, using `base_ring` to supply the
/// relations J * F_i at every step (the zero ideal for S-resolutions).
FreeResolution resolve_presented(const PresentedModulePtr& m, const QuotientRingPtr& base_ring,
                                 std::size_t max_length) {
  const RingPtr& s = m->base();
  const auto& w = s->weights();
  FreeResolution res;
  res.ring = base_ring;
  res.modules.push_back(m->ambient());
  res.shifts.push_back(m->shifts());
  std::vector<FreeVector> cols = m->relations();
  for (std::size_t step = 1;; ++step) {
    if (cols.empty()) {
      res.complete = true;
      break;
    }
    if (step > max_length) break;
    const FreeModulePtr& prev = res.modules.back();
    std::vector<long> shifts;
    for (const auto& c : cols) shifts.push_back(vector_degree(c, res.shifts.back(), w));
    auto next = FreeModule::make(s, cols.size());
    std::vector<FreeVector> k = kernel(prev, cols, base_ring->relation_vectors(prev));
    res.maps.push_back(rewrap_all(prev, cols));
    res.modules.push_back(next);
    res.shifts.push_back(shifts);
    cols = minimal_generators(rewrap_all(next, k), base_ring->relation_vectors(next), shifts, w);
  }
  return res;
}

struct HomComplexData {
  FreeModulePtr module;  // B^{b_i} as S^{t b_i}
  std::vector<long> shifts;
  std::vector<FreeVector> cycles;
  std::vector<FreeVector> boundaries;  // images plus U^{b_i}
};

FreeVector place_in_block(const FreeModulePtr& target, const FreeVector& u, std::size_t block, std::size_t t) {
  std::vector<long> map(t);
  std::iota(map.begin(), map.end(), static_cast<long>(block * t));
  return u.remapped(target, map);
}

/// Columns of Hom(d, B): for each basis element (j, l) of B^{b_src}, the
/// vector sum_k a_{jk} e_{k,l} of B^{b_dst}, where d maps F_dst -> F_src.
std::vector<FreeVector> dual_columns(const std::vector<FreeVector>& d, std::size_t b_src, std::size_t t,
                                     const FreeModulePtr& target) {
  std::vector<std::vector<Term>> cols(b_src * t);
  for (std::size_t k = 0; k < d.size(); ++k)
    for (const auto& term : d[k].terms())
      for (std::size_t l = 0; l < t; ++l)
        cols[term.comp * t + l].push_back(Term{term.mono, term.coef, static_cast<std::uint32_t>(k * t + l)});
  std::vector<FreeVector> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.emplace_back(target, std::move(c));
  return out;
}

HomComplexData hom_complex(const FreeResolution& res, std::size_t i, const PresentedModulePtr& b) {
  if (!res.ring->base()->same_as(*b->base())) throw StructuralError("Ext arguments over different polynomial rings");
  HomComplexData h;
  const RingPtr& s = b->base();
  std::size_t t = b->rank();
  std::size_t bi = i < res.modules.size() ? res.modules[i]->rank() : 0;
  if (i >= res.modules.size() && !res.complete) throw InternalError("resolution too short for the requested Ext");
  h.module = FreeModule::make(s, t * bi);
  for (std::size_t j = 0; j < bi; ++j)
    for (std::size_t l = 0; l < t; ++l) h.shifts.push_back(b->shifts()[l] - res.shifts[i][j]);
  if (bi == 0) return h;
  std::vector<FreeVector> u = b->lift_gens();
  if (i < res.maps.size()) {
    std::size_t bn = res.modules[i + 1]->rank();
    auto target = FreeModule::make(s, t * bn);
    std::vector<FreeVector> base;
    for (std::size_t k = 0; k < bn; ++k)
      for (const auto& v : u) base.push_back(place_in_block(target, v, k, t));
    h.cycles = rewrap_all(h.module, kernel(target, dual_columns(res.maps[i], bi, t, target), base));
  } else if (res.complete) {
    for (std::size_t r = 0; r < t * bi; ++r) h.cycles.push_back(FreeVector::basis(h.module, r));
  } else {
    throw InternalError("resolution too short for the requested Ext");
  }
  if (i >= 1) h.boundaries = dual_columns(res.maps[i - 1], res.modules[i - 1]->rank(), t, h.module);
  for (std::size_t k = 0; k < bi; ++k)
    for (const auto& v : u) h.boundaries.push_back(place_in_block(h.module, v, k, t));
  return h;
}

QuotientRingPtr polynomial_ring_of(const PresentedModulePtr& m) { return QuotientRing::polynomial(m->base()); }

PresentedModulePtr as_S_module(const PresentedModulePtr& m) {
  return PresentedModule::make(polynomial_ring_of(m), m->rank(), m->lift_gens(), m->shifts());
}

bool is_regular_on(const Polynomial& f, const SubmoduleHandle& n) {
  IdealHandle fi(n.module()->ring(), {f});
  if (fi.is_zero()) return false;
  return colon_module(n, fi) == n;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, const std::vector<int>& weights, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (long e = 0; e * weights[i] <= left; ++e) {
      cur.set(i, static_cast<int>(e));
      self(self, i + 1, left - e * weights[i]);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<std::size_t> FreeResolution::betti() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules) out.push_back(m->rank());
  return out;
}

std::optional<std::size_t> FreeResolution::projective_dimension() const {
  if (!complete) return std::nullopt;
  if (modules.size() == 1 && modules[0]->rank() == 0) return 0;
  return maps.size();
}

FreeResolution resolve_over_S(const PresentedModulePtr& m, std::size_t max_length) {
  PresentedModulePtr ms = as_S_module(m)->minimalized();
  return resolve_presented(ms, ms->ring(), max_length);
}

FreeResolution resolve_over_R(const PresentedModulePtr& m, std::size_t max_length) {
  PresentedModulePtr mm = m->minimalized();
  return resolve_presented(mm, mm->ring(), max_length);
}

bool ext_vanishes(const FreeResolution& res, std::size_t i, const PresentedModulePtr& b) {
  HomComplexData h = hom_complex(res, i, b);
  if (h.cycles.empty()) return true;
  if (h.boundaries.empty()) return false;
  return buchberger(SubmoduleGens(h.module, h.boundaries)).contains_all(h.cycles);
}

PresentedModulePtr ext_from_resolution(const FreeResolution& res, std::size_t i, const PresentedModulePtr& b) {
  HomComplexData h = hom_complex(res, i, b);
  const auto& w = b->base()->weights();
  std::vector<FreeVector> gens = minimal_generators(h.cycles, h.boundaries, h.shifts, w);
  std::vector<long> shifts;
  for (const auto& g : gens) shifts.push_back(vector_degree(g, h.shifts, w));
  std::vector<FreeVector> rels = gens.empty() ? std::vector<FreeVector>{} : kernel(h.module, gens, h.boundaries);
  return PresentedModule::make(b->ring(), gens.size(), std::move(rels), std::move(shifts))->minimalized();
}

PresentedModulePtr ext_over_S(std::size_t i, const PresentedModulePtr& m) {
  std::size_t n = m->base()->nvars();
  if (i > n) return PresentedModule::free(polynomial_ring_of(m), 0);
  FreeResolution res = resolve_over_S(m, i + 1);
  return ext_from_resolution(res, i, PresentedModule::free(polynomial_ring_of(m), 1));
}

PresentedModulePtr ext_over_R(std::size_t i, const PresentedModulePtr& a, const PresentedModulePtr& b,
                              std::size_t window) {
  if (i > window) throw PreconditionError("Ext index exceeds the window");
  require_same_quotient(*a->ring(), *b->ring());
  FreeResolution res = resolve_over_R(a, i + 1);
  return ext_from_resolution(res, i, b);
}

std::size_t default_window(const QuotientRing& ring) { return 2 * ring.nvars() + 2; }

long grade(const IdealHandle& a, const PresentedModulePtr& m) {
  require_same_quotient(*a.ring(), *m->ring());
  if (!is_proper(a, m)) throw PreconditionError("grade undefined (unit action)");
  std::size_t n = m->base()->nvars();
  auto q = polynomial_ring_of(m);
  PresentedModulePtr quotient = PresentedModule::cyclic(IdealHandle(q, a.gens()));
  FreeResolution res = resolve_over_S(quotient, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    if (!ext_vanishes(res, i, m)) return static_cast<long>(i);
  throw InternalError("no nonvanishing Ext found below the number of variables");
}

long depth(const PresentedModulePtr& m) {
  if (m->is_zero()) throw PreconditionError("depth of the zero module");
  return grade(IdealHandle::maximal(m->ring()), m);
}

long depth_by_projective_dimension(const PresentedModulePtr& m) {
  if (m->is_zero()) throw PreconditionError("depth of the zero module");
  std::size_t n = m->base()->nvars();
  FreeResolution res = resolve_over_S(m, n + 1);
  auto pd = res.projective_dimension();
  if (!pd) throw InternalError("S-resolution longer than the number of variables");
  return static_cast<long>(n) - static_cast<long>(*pd);
}

long krull_dim(const PresentedModulePtr& m) {
  if (m->is_zero()) return -1;
  std::size_t n = m->base()->nvars();
  std::vector<std::vector<Monomial>> lts(m->rank());
  for (const auto& e : m->lift_basis().elements()) {
    const Term& lt = e.leading_term();
    lts[lt.comp].push_back(lt.mono);
  }
  long best = -1;
  for (const auto& l : lts) best = std::max(best, mono_dimension(n, l));
  return best;
}

long height_on_module(const IdealHandle& a, const PresentedModulePtr& m) {
  if (!is_proper(a, m)) throw PreconditionError("height undefined (unit action)");
  return krull_dim(m) - krull_dim(scalar_module(a, m).quotient());
}

bool is_artinian(const PresentedModulePtr& m) { return krull_dim(m) <= 0; }

bool is_cohen_macaulay(const PresentedModulePtr& m) {
  if (m->is_zero()) return false;
  return depth(m) == krull_dim(m);
}

bool is_maximal_cohen_macaulay(const PresentedModulePtr& m) {
  return is_cohen_macaulay(m) && krull_dim(m) == krull_dim(PresentedModule::free(m->ring(), 1));
}

bool is_unmixed(const PresentedModulePtr& m) {
  if (m->is_zero()) return true;
  long n = static_cast<long>(m->base()->nvars());
  long c = n - krull_dim(m);
  FreeResolution res = resolve_over_S(m, static_cast<std::size_t>(n) + 1);
  auto s = PresentedModule::free(polynomial_ring_of(m), 1);
  for (long i = c + 1; i <= n; ++i) {
    if (static_cast<std::size_t>(i) > res.length()) break;
    if (ext_vanishes(res, static_cast<std::size_t>(i), s)) continue;
    PresentedModulePtr e = ext_from_resolution(res, static_cast<std::size_t>(i), s);
    if (n - krull_dim(e) == i) return false;
  }
  return true;
}

std::size_t minimal_generator_count(const PresentedModulePtr& m) { return m->minimalized()->rank(); }

long codimension(const PresentedModulePtr& m) { return static_cast<long>(m->base()->nvars()) - krull_dim(m); }

std::vector<VariablePrime> ass_variable_primes(const PresentedModulePtr& m) {
  std::vector<VariablePrime> out;
  if (m->is_zero()) return out;
  const auto& ring = m->ring();
  std::size_t n = ring->nvars();
  std::vector<VariablePrime> candidates;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VariablePrime p;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) p.push_back(i);
    candidates.push_back(std::move(p));
  }
  std::sort(candidates.begin(), candidates.end(), [](const VariablePrime& a, const VariablePrime& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& p : candidates) {
    bool contains_j = std::all_of(ring->relations().begin(), ring->relations().end(), [&](const Polynomial& g) {
      return std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
        return std::any_of(p.begin(), p.end(), [&](std::size_t i) { return t.mono[i] > 0; });
      });
    });
    if (!contains_j) continue;
    std::vector<Polynomial> gens;
    for (auto i : p) gens.push_back(Polynomial::variable(ring->base(), i));
    IdealHandle prime(ring, gens);
    PresentedModulePtr h = p.empty() ? m : hom_into_quotient(prime, SubmoduleHandle::zero(m));
    if (h->is_zero()) continue;
    if (annihilator(h) == prime) out.push_back(p);
  }
  return out;
}

PresentedModulePtr canonical_module(const QuotientRingPtr& ring) {
  auto r = PresentedModule::free(ring, 1);
  if (!is_cohen_macaulay(r)) throw PreconditionError("canonical module requires CM ring");
  std::size_t n = ring->nvars();
  std::size_t c = n - static_cast<std::size_t>(krull_dim(r));
  auto q = QuotientRing::polynomial(ring->base());
  auto s_mod_j = PresentedModule::cyclic(IdealHandle(q, ring->relations()));
  FreeResolution res = resolve_over_S(s_mod_j, c + 1);
  PresentedModulePtr e = ext_from_resolution(res, c, PresentedModule::free(q, 1));
  PresentedModulePtr omega = e->over(ring)->minimalized();
  if (!is_maximal_cohen_macaulay(omega))
    throw InternalError("computed canonical module is not maximal Cohen-Macaulay");
  if (!same_radical(annihilator_lift(omega), IdealHandle::zero(ring).lift_gens(), ring->base()))
    throw InternalError("computed canonical module has the wrong support");
  return omega;
}

bool is_gorenstein(const QuotientRingPtr& ring) {
  if (!is_cohen_macaulay(PresentedModule::free(ring, 1))) return false;
  PresentedModulePtr omega = canonical_module(ring);
  return omega->rank() == 1 && annihilator(omega).is_zero();
}

namespace {

/// (q, p) with d_{q+p} = d_q among the computed maps, q + p smallest; the
/// tail from q is then periodic.
std::optional<std::pair<std::size_t, std::size_t>> periodicity(const FreeResolution& res) {
  auto same = [&](std::size_t i, std::size_t j) {
    if (res.maps[i].size() != res.maps[j].size() || res.modules[i]->rank() != res.modules[j]->rank()) return false;
    for (std::size_t c = 0; c < res.maps[i].size(); ++c)
      if (res.maps[i][c].to_string() != res.maps[j][c].to_string()) return false;
    return true;
  };
  for (std::size_t end = 1; end < res.length(); ++end)
    for (std::size_t q = 0; q < end; ++q)
      if (same(q, end)) return std::pair{q, end - q};
  return std::nullopt;
}

}  // namespace

WindowReport gdim_report(const PresentedModulePtr& a, std::size_t window) {
  if (a->is_zero()) throw PreconditionError("G-dimension of the zero module");
  WindowReport rep;
  rep.window = window;
  const auto& ring = a->ring();
  if (is_gorenstein(ring)) {
    rep.status = WindowStatus::exact;
    rep.value = depth(PresentedModule::free(ring, 1)) - depth(a);
    rep.method = "auslander-bridger";
    return rep;
  }
  auto r = PresentedModule::free(ring, 1);
  // Finite G-dimension equals depth R - depth A and bounds the nonvanishing Ext.
  long bound = depth(r) - depth(a);
  rep.method = "ext scan";
  FreeResolution res = resolve_over_R(a, 2);
  for (std::size_t i = 1;; ++i) {
    if (res.complete) {
      rep.status = WindowStatus::exact;
      rep.value = static_cast<long>(*res.projective_dimension());
      rep.method = "finite projective dimension";
      rep.nonzero.clear();
      return rep;
    }
    if (i > window) break;
    if (res.length() < i + 1) {
      res = resolve_over_R(a, std::min(window + 1, 2 * i + 2));
      if (res.complete) continue;
    }
    if (!ext_vanishes(res, i, r)) {
      rep.nonzero.push_back(static_cast<long>(i));
      if (static_cast<long>(i) > bound) {
        rep.status = WindowStatus::exact;
        rep.infinite = true;
        rep.value = static_cast<long>(i);
        rep.method = "ext beyond depth difference";
        return rep;
      }
    }
    // Ext vanishing over one period makes the q-th syzygy totally reflexive.
    auto period = periodicity(res);
    if (period && period->first + period->second <= i) {
      auto [q, p] = *period;
      rep.status = WindowStatus::exact;
      rep.method = "periodic resolution";
      auto recurring = std::find_if(rep.nonzero.begin(), rep.nonzero.end(), [q = q](long k) { return k > static_cast<long>(q); });
      if (recurring != rep.nonzero.end()) {
        rep.infinite = true;
        rep.value = *recurring;
      } else {
        rep.value = rep.nonzero.empty() ? 0 : rep.nonzero.back();
      }
      return rep;
    }
  }
  rep.value = rep.nonzero.empty() ? 0 : rep.nonzero.back();
  rep.status = WindowStatus::inconclusive;
  return rep;
}

WindowReport injdim_report(const PresentedModulePtr& m, std::size_t window) {
  if (m->is_zero()) throw PreconditionError("injective dimension of the zero module");
  WindowReport rep;
  rep.window = window;
  rep.method = "bass scan";
  const auto& ring = m->ring();
  auto k = PresentedModule::cyclic(IdealHandle::maximal(ring));
  auto r = PresentedModule::free(ring, 1);
  long dim_r = krull_dim(r);
  long depth_r = depth(r);
  // The resolution of k is extended only as far as the scan needs it.
  FreeResolution res = resolve_over_R(k, 1);
  long scanned = -1;
  for (std::size_t i = 0; i <= window; ++i) {
    if (i > res.length() && res.complete) break;
    if (res.length() < i + 1 && !res.complete) res = resolve_over_R(k, std::min(window + 1, 2 * i + 2));
    if (!ext_vanishes(res, i, m)) {
      rep.nonzero.push_back(static_cast<long>(i));
      // A finite injective dimension equals depth R.
      if (static_cast<long>(i) > depth_r) {
        rep.status = WindowStatus::exact;
        rep.infinite = true;
        rep.value = static_cast<long>(i);
        rep.method = "bass number beyond depth";
        return rep;
      }
    }
    scanned = static_cast<long>(i);
    if (!rep.nonzero.empty() && scanned - rep.nonzero.back() >= dim_r + 1) break;
  }
  long last = rep.nonzero.empty() ? -1 : rep.nonzero.back();
  rep.value = last;
  bool tail = scanned - last >= dim_r + 1;
  rep.status = (last >= 0 && tail) || (res.complete && last >= 0) ? WindowStatus::exact : WindowStatus::inconclusive;
  return rep;
}

Polynomial random_form(std::mt19937_64& rng, const RingPtr& s, long degree) {
  Polynomial f(s);
  for (const auto& mono : monomials_of_degree(s->nvars(), s->weights(), degree)) {
    Coeff c = static_cast<Coeff>(rng() % s->characteristic());
    if (c) f = f + Polynomial::monomial(s, mono, c);
  }
  return f;
}

std::optional<std::vector<Polynomial>> greedy_regular_sequence(const IdealHandle& a, const PresentedModulePtr& m,
                                                               std::mt19937_64& rng, int attempts_per_degree) {
  require_same_quotient(*a.ring(), *m->ring());
  if (!is_proper(a, m)) throw PreconditionError("grade undefined (unit action)");
  const auto& ring = m->ring();
  const RingPtr& s = ring->base();
  const auto& w = s->weights();
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens())
    if (!ring->is_zero(g)) gens.push_back(g);
  std::vector<Polynomial> xs;
  if (gens.empty()) return xs;
  long top = 0;
  for (const auto& g : gens) top = std::max(top, g.weighted_degree(w));
  for (;;) {
    SubmoduleHandle n = scalar_module(IdealHandle(ring, xs), m);
    if (!(colon_module(n, a) == n)) return xs;
    std::optional<Polynomial> found;
    for (const auto& g : gens)
      if (is_regular_on(g, n)) {
        found = g;
        break;
      }
    for (long d = top; !found && d <= top + 6; ++d) {
      for (int attempt = 0; attempt < attempts_per_degree && !found; ++attempt) {
        Polynomial f(s);
        for (const auto& g : gens) {
          for (const auto& mono : monomials_of_degree(s->nvars(), w, d - g.weighted_degree(w))) {
            Coeff c = static_cast<Coeff>(rng() % s->characteristic());
            if (c) f = f + g.times_monomial(mono, c);
          }
        }
        f = ring->reduce(f);
        if (!f.is_zero() && is_regular_on(f, n)) found = f;
      }
    }
    if (!found) return std::nullopt;
    xs.push_back(*found);
  }
}

}  // namespace linkagelab
