#include "linkagelab/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

namespace linkagelab {

class GroebnerAccess {
 public:
  static GroebnerBasis make(FreeModulePtr module, std::vector<FreeVector> elems) {
    GroebnerBasis g(std::move(module));
    g.elements_ = std::move(elems);
    return g;
  }
};

SubmoduleGens::SubmoduleGens(FreeModulePtr module, std::vector<FreeVector> gens) : module_(std::move(module)) {
  for (auto& g : gens) add(g);
}

SubmoduleGens SubmoduleGens::ideal(const std::vector<Polynomial>& gens, RingPtr ring) {
  auto m = FreeModule::make(std::move(ring), 1);
  SubmoduleGens s(m);
  for (const auto& g : gens) s.add(FreeVector::single(m, 0, g));
  return s;
}

void SubmoduleGens::add(const FreeVector& v) {
  require_same_module(*module_, *v.module());
  if (!v.is_zero()) gens_.push_back(v);
}

SubmoduleGens SubmoduleGens::plus(const SubmoduleGens& o) const {
  SubmoduleGens r = *this;
  for (const auto& g : o.gens_) r.add(g);
  return r;
}

namespace {

struct Elem {
  std::vector<Term> v;
  std::vector<Term> track;
};

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const noexcept {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    for (std::size_t k = 0; k < a.lcm.size(); ++k)
      if (a.lcm[k] != b.lcm[k]) return a.lcm[k] < b.lcm[k];
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

class Engine {
 public:
  Engine(const FreeModule& mod, const FreeModule* track_mod)
      : ord_{&mod}, p_(mod.ring()->characteristic()), cap_(mod.ring()->degree_cap()),
        rank_one_(mod.rank() == 1), tord_{track_mod ? track_mod : &mod}, tracking_(track_mod != nullptr) {}

  long find_reducer(const Term& t) const {
    for (std::size_t k = 0; k < g_.size(); ++k) {
      if (dead_[k]) continue;
      const Term& lt = g_[k].v[0];
      if (lt.comp == t.comp && lt.mono.divides(t.mono)) return static_cast<long>(k);
    }
    return -1;
  }

  void subtract(Elem& h, std::size_t k, Coeff c, const Monomial& q) const {
    Coeff nc = fp::neg(c, p_);
    h.v = detail::axpy(h.v, nc, q, g_[k].v, ord_, p_);
    if (tracking_) h.track = detail::axpy(h.track, nc, q, g_[k].track, tord_, p_);
  }

  void top_reduce(Elem& h) const {
    while (!h.v.empty()) {
      long k = find_reducer(h.v[0]);
      if (k < 0) return;
      subtract(h, static_cast<std::size_t>(k), h.v[0].coef, h.v[0].mono / g_[k].v[0].mono);
    }
  }

  /// Reduces every term; the irreducible part is returned in h.v.
  void full_reduce(Elem& h) const {
    std::vector<Term> rem;
    while (!h.v.empty()) {
      long k = find_reducer(h.v[0]);
      if (k < 0) {
        rem.push_back(h.v[0]);
        h.v.erase(h.v.begin());
        continue;
      }
      subtract(h, static_cast<std::size_t>(k), h.v[0].coef, h.v[0].mono / g_[k].v[0].mono);
    }
    h.v = std::move(rem);
  }

  void make_monic(Elem& e) const {
    Coeff inv = fp::inv(e.v[0].coef, p_);
    detail::scale(e.v, inv, p_);
    if (tracking_) detail::scale(e.track, inv, p_);
  }

  void add(Elem e) {
    make_monic(e);
    auto idx = static_cast<std::uint32_t>(g_.size());
    const Term& lt = e.v[0];
    for (std::uint32_t k = 0; k < idx; ++k) {
      const Term& ltk = g_[k].v[0];
      if (ltk.comp != lt.comp) continue;
      if (rank_one_ && ltk.mono.coprime(lt.mono)) continue;
      Pair pr{k, idx, lcm(ltk.mono, lt.mono)};
      pending_.insert(pr);
      pending_keys_.insert(pair_key(k, idx));
    }
    g_.push_back(std::move(e));
    dead_.push_back(false);
  }

  bool chain_criterion(const Pair& pr) const {
    std::uint32_t comp = g_[pr.i].v[0].comp;
    for (std::uint32_t k = 0; k < g_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      const Term& lt = g_[k].v[0];
      if (lt.comp != comp || !lt.mono.divides(pr.lcm)) continue;
      if (pending_keys_.count(pair_key(pr.i, k)) || pending_keys_.count(pair_key(pr.j, k))) continue;
      return true;
    }
    return false;
  }

  Elem spair(const Pair& pr) const {
    const Elem& a = g_[pr.i];
    const Elem& b = g_[pr.j];
    Monomial ma = pr.lcm / a.v[0].mono;
    Monomial mb = pr.lcm / b.v[0].mono;
    Elem s;
    s.v = detail::axpy(detail::axpy({}, 1, ma, a.v, ord_, p_), fp::neg(1, p_), mb, b.v, ord_, p_);
    if (tracking_)
      s.track = detail::axpy(detail::axpy({}, 1, ma, a.track, tord_, p_), fp::neg(1, p_), mb, b.track, tord_, p_);
    return s;
  }

  void run(std::vector<Elem> inputs) {
    for (auto& e : inputs) {
      if (e.v.empty()) continue;
      top_reduce(e);
      if (!e.v.empty()) add(std::move(e));
    }
    while (!pending_.empty()) {
      Pair pr = *pending_.begin();
      pending_.erase(pending_.begin());
      pending_keys_.erase(pair_key(pr.i, pr.j));
      if (pr.lcm.degree() > cap_)
        throw ResourceError("Groebner basis computation exceeded the degree cap of " + std::to_string(cap_));
      if (chain_criterion(pr)) continue;
      Elem s = spair(pr);
      top_reduce(s);
      if (!s.v.empty()) add(std::move(s));
    }
    finalize();
  }

  /// Drops redundant leading terms, reduces tails and sorts ascending.
  void finalize() {
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const Term& lt = g_[i].v[0];
      for (std::size_t j = 0; j < g_.size(); ++j) {
        if (i == j || dead_[j]) continue;
        const Term& o = g_[j].v[0];
        if (o.comp != lt.comp || !o.mono.divides(lt.mono)) continue;
        if (!(o.mono == lt.mono) || j < i) {
          dead_[i] = true;
          break;
        }
      }
    }
    std::vector<Elem> kept;
    for (std::size_t i = 0; i < g_.size(); ++i)
      if (!dead_[i]) kept.push_back(std::move(g_[i]));
    g_ = std::move(kept);
    dead_.assign(g_.size(), false);
    for (std::size_t i = 0; i < g_.size(); ++i) {
      Elem tail{std::vector<Term>(g_[i].v.begin() + 1, g_[i].v.end()), g_[i].track};
      Term lead = g_[i].v[0];
      dead_[i] = true;
      full_reduce(tail);
      dead_[i] = false;
      g_[i].v.clear();
      g_[i].v.push_back(lead);
      g_[i].v.insert(g_[i].v.end(), tail.v.begin(), tail.v.end());
      g_[i].track = std::move(tail.track);
    }
    std::sort(g_.begin(), g_.end(), [&](const Elem& a, const Elem& b) { return ord_(a.v[0], b.v[0]) < 0; });
  }

  std::vector<Elem>& basis() { return g_; }

 private:
  ModuleOrder ord_;
  Coeff p_;
  unsigned cap_;
  bool rank_one_;
  ModuleOrder tord_;
  bool tracking_;
  std::vector<Elem> g_;
  std::vector<bool> dead_;
  std::set<Pair, PairLess> pending_;
  std::unordered_set<std::uint64_t> pending_keys_;
};

std::vector<Term> unit_track(std::size_t j, const Ring& ring) {
  return {Term{ring.one(), 1, static_cast<std::uint32_t>(j)}};
}

/// Sum of sigma_k * tracks_k.
std::vector<Term> combine(const std::vector<Term>& sigma, const std::vector<std::vector<Term>>& tracks,
                          const ModuleOrder& tord, Coeff p) {
  std::vector<Term> out;
  for (const auto& t : sigma) out = detail::axpy(out, t.coef, t.mono, tracks[t.comp], tord, p);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const SubmoduleGens& gens) {
  Engine eng(*gens.module(), nullptr);
  std::vector<Elem> in;
  for (const auto& g : gens.gens()) in.push_back(Elem{g.terms(), {}});
  eng.run(std::move(in));
  std::vector<FreeVector> out;
  for (auto& e : eng.basis()) out.emplace_back(gens.module(), std::move(e.v));
  return GroebnerAccess::make(gens.module(), std::move(out));
}

TrackedBasis buchberger_tracked(const SubmoduleGens& gens) {
  auto tmod = FreeModule::make(gens.ring(), gens.size());
  Engine eng(*gens.module(), tmod.get());
  std::vector<Elem> in;
  for (std::size_t j = 0; j < gens.size(); ++j) in.push_back(Elem{gens.gens()[j].terms(), unit_track(j, *gens.ring())});
  eng.run(std::move(in));
  std::vector<FreeVector> out, rep;
  for (auto& e : eng.basis()) {
    out.emplace_back(gens.module(), std::move(e.v));
    rep.emplace_back(tmod, std::move(e.track));
  }
  return TrackedBasis{GroebnerAccess::make(gens.module(), std::move(out)), std::move(rep)};
}

namespace {

/// Schreyer syzygies of a monic Gröbner basis given as raw term lists.
std::vector<std::vector<Term>> schreyer(const FreeModule& mod, const std::vector<std::vector<Term>>& g,
                                        const FreeModule& smod) {
  Coeff p = mod.ring()->characteristic();
  ModuleOrder ord{&mod};
  ModuleOrder sord{&smod};
  std::vector<std::vector<Term>> out;
  auto reducer = [&](const Term& t) -> long {
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k][0].comp == t.comp && g[k][0].mono.divides(t.mono)) return static_cast<long>(k);
    return -1;
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<std::pair<std::size_t, Monomial>> cand;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[j][0].comp != g[i][0].comp) continue;
      cand.emplace_back(j, lcm(g[i][0].mono, g[j][0].mono) / g[i][0].mono);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cand.size() && minimal; ++b) {
        if (a == b || !cand[b].second.divides(cand[a].second)) continue;
        if (!(cand[b].second == cand[a].second) || b < a) minimal = false;
      }
      if (!minimal) continue;
      std::size_t j = cand[a].first;
      Monomial l = lcm(g[i][0].mono, g[j][0].mono);
      Monomial mi = l / g[i][0].mono, mj = l / g[j][0].mono;
      Coeff minus = fp::neg(1, p);
      std::vector<Term> h = detail::axpy(detail::axpy({}, 1, mi, g[i], ord, p), minus, mj, g[j], ord, p);
      std::vector<Term> tr{Term{mi, 1, static_cast<std::uint32_t>(i)}, Term{mj, minus, static_cast<std::uint32_t>(j)}};
      detail::canonicalize(tr, sord, p);
      while (!h.empty()) {
        long k = reducer(h[0]);
        if (k < 0) throw InternalError("syzygy computation received a non-Groebner basis");
        Monomial q = h[0].mono / g[k][0].mono;
        Coeff c = fp::neg(h[0].coef, p);
        h = detail::axpy(h, c, q, g[k], ord, p);
        tr = detail::axpy(tr, c, q, {Term{mod.ring()->one(), 1, static_cast<std::uint32_t>(k)}}, sord, p);
      }
      out.push_back(std::move(tr));
    }
  }
  return out;
}

}  // namespace

SubmoduleGens syzygies(const GroebnerBasis& basis) {
  auto smod = FreeModule::make(basis.module()->ring(), basis.size());
  std::vector<std::vector<Term>> g;
  for (const auto& e : basis.elements()) g.push_back(e.terms());
  SubmoduleGens out(smod);
  for (auto& s : schreyer(*basis.module(), g, *smod)) out.add(FreeVector(smod, std::move(s)));
  return out;
}

std::vector<FreeVector> kernel(const FreeModulePtr& target, const std::vector<FreeVector>& columns,
                               const std::vector<FreeVector>& base) {
  const RingPtr& ring = target->ring();
  Coeff p = ring->characteristic();
  std::size_t m = columns.size();
  auto tmod = FreeModule::make(ring, m);
  ModuleOrder tord{tmod.get()};
  std::vector<FreeVector> result;
  auto emit = [&](std::vector<Term> ts) {
    if (ts.empty()) return;
    FreeVector v(tmod, std::move(ts));
    for (const auto& r : result)
      if (r == v) return;
    result.push_back(std::move(v));
  };

  std::vector<Elem> in;
  std::vector<std::size_t> nonzero_cols;
  for (std::size_t j = 0; j < m; ++j) {
    require_same_module(*columns[j].module(), *target);
    if (columns[j].is_zero()) {
      emit(unit_track(j, *ring));
    } else {
      in.push_back(Elem{columns[j].terms(), unit_track(j, *ring)});
      nonzero_cols.push_back(j);
    }
  }
  for (const auto& b : base) {
    require_same_module(*b.module(), *target);
    if (!b.is_zero()) in.push_back(Elem{b.terms(), {}});
  }
  if (nonzero_cols.empty()) return result;

  Engine eng(*target, tmod.get());
  eng.run(in);
  auto& g = eng.basis();
  std::vector<std::vector<Term>> gv, tracks;
  for (auto& e : g) {
    gv.push_back(e.v);
    tracks.push_back(e.track);
  }
  auto smod = FreeModule::make(ring, gv.size());
  for (auto& sigma : schreyer(*target, gv, *smod)) emit(combine(sigma, tracks, tord, p));
  for (std::size_t j : nonzero_cols) {
    Elem h{columns[j].terms(), unit_track(j, *ring)};
    eng.top_reduce(h);
    if (!h.v.empty()) throw InternalError("input generator does not reduce to zero");
    emit(std::move(h.track));
  }
  for (const auto& b : base) {
    if (b.is_zero()) continue;
    Elem h{b.terms(), {}};
    eng.top_reduce(h);
    emit(std::move(h.track));
  }
  return result;
}

SubmoduleGens intersect(const SubmoduleGens& a, const SubmoduleGens& b) {
  require_same_module(*a.module(), *b.module());
  if (a.empty() || b.empty()) return SubmoduleGens(a.module());
  const RingPtr& ring = a.ring();
  RingPtr tr = ring->with_tag_variables(1);
  auto tmod = FreeModule::make(tr, a.module()->rank(), a.module()->priority());
  Polynomial t = Polynomial::variable(tr, 0);
  Polynomial one_minus_t = Polynomial::constant(tr, 1) - t;
  SubmoduleGens lifted(tmod);
  for (const auto& v : a.gens()) lifted.add(v.lifted_to(tmod, 1).times(t));
  for (const auto& w : b.gens()) lifted.add(w.lifted_to(tmod, 1).times(one_minus_t));
  GroebnerBasis gb = buchberger(lifted);
  SubmoduleGens out(a.module());
  for (const auto& e : gb.elements())
    if (e.leading_term().mono[0] == 0) out.add(e.dropped_to(a.module(), 1));
  return out;
}

namespace {

FreeVector divide_vector(const FreeVector& v, const Polynomial& f) {
  std::vector<Polynomial> comps = v.components();
  for (auto& c : comps) c = c.divide_exact(f);
  return FreeVector::from_components(v.module(), comps);
}

}  // namespace

SubmoduleGens colon_by_ideal(const SubmoduleGens& n, const std::vector<Polynomial>& ideal) {
  std::optional<SubmoduleGens> acc;
  for (const auto& f : ideal) {
    if (f.is_zero()) continue;
    require_same_ring(*f.ring(), *n.ring());
    SubmoduleGens part(n.module());
    if (f.is_constant()) {
      part = n;
    } else {
      SubmoduleGens fs(n.module());
      for (std::size_t i = 0; i < n.module()->rank(); ++i) fs.add(FreeVector::single(n.module(), i, f));
      SubmoduleGens inter = intersect(n, fs);
      for (const auto& g : inter.gens()) part.add(divide_vector(g, f));
    }
    acc = acc ? intersect(*acc, part) : part;
  }
  if (!acc) throw PreconditionError("colon by zero ideal");
  return *acc;
}

SubmoduleGens eliminate(const SubmoduleGens& n, std::size_t k) {
  if (n.ring()->elimination_block() != k)
    throw StructuralError("elimination requires an elimination-block order on the eliminated variables");
  GroebnerBasis gb = buchberger(n);
  SubmoduleGens out(n.module());
  for (const auto& e : gb.elements()) {
    const Monomial& lm = e.leading_term().mono;
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && lm[i] == 0;
    if (free) out.add(e);
  }
  return out;
}

bool in_radical(const Polynomial& f, const std::vector<Polynomial>& ideal) {
  if (f.is_zero()) return true;
  RingPtr tr = f.ring()->with_tag_variables(1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal) gens.push_back(g.moved_to(tr, 1));
  Polynomial t = Polynomial::variable(tr, 0);
  gens.push_back(Polynomial::constant(tr, 1) - t * f.moved_to(tr, 1));
  return buchberger(SubmoduleGens::ideal(gens, tr)).is_everything();
}

std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.empty() && b.empty()) return {};
  RingPtr ring = a.empty() ? b.front().ring() : a.front().ring();
  SubmoduleGens r = intersect(SubmoduleGens::ideal(a, ring), SubmoduleGens::ideal(b, ring));
  std::vector<Polynomial> out;
  for (const auto& g : r.gens()) out.push_back(g.component(0));
  return out;
}

FreeVector GroebnerBasis::normal_form(const FreeVector& v) const {
  require_same_module(*module_, *v.module());
  const Ring& ring = *module_->ring();
  Coeff p = ring.characteristic();
  ModuleOrder ord{module_.get()};
  std::vector<Term> h = v.terms(), rem;
  while (!h.empty()) {
    const Term& lt = h[0];
    const FreeVector* red = nullptr;
    for (const auto& g : elements_) {
      const Term& gl = g.terms()[0];
      if (gl.comp == lt.comp && gl.mono.divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      rem.push_back(lt);
      h.erase(h.begin());
      continue;
    }
    Monomial q = lt.mono / red->terms()[0].mono;
    h = detail::axpy(h, fp::neg(lt.coef, p), q, red->terms(), ord, p);
  }
  return FreeVector(module_, std::move(rem));
}

bool GroebnerBasis::contains_all(const std::vector<FreeVector>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const FreeVector& v) { return contains(v); });
}

bool GroebnerBasis::is_everything() const {
  std::size_t units = 0;
  for (const auto& e : elements_)
    if (e.terms()[0].mono.is_one()) ++units;
  return units == module_->rank();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.module_->same_as(*b.module_) || a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i)
    if (!(a.elements_[i] == b.elements_[i])) return false;
  return true;
}

}  // namespace linkagelab
