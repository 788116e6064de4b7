#include "linkagelab/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace linkagelab {

namespace {

FreeModulePtr line(const RingPtr& ring) { return FreeModule::make(ring, 1); }

std::vector<Polynomial> nonzero(std::vector<Polynomial> ps) {
  ps.erase(std::remove_if(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_zero(); }), ps.end());
  return ps;
}

std::vector<Polynomial> first_components(const std::vector<FreeVector>& vs) {
  std::vector<Polynomial> out;
  for (const auto& v : vs) out.push_back(v.component(0));
  return out;
}

FreeVector rewrap(const FreeModulePtr& target, const FreeVector& v) {
  require_same_module(*target, *v.module());
  return FreeVector(target, v.terms());
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

}  // namespace

QuotientRingPtr QuotientRing::make(RingPtr base, std::vector<Polynomial> relations) {
  relations = nonzero(std::move(relations));
  for (const auto& f : relations) {
    require_same_ring(*f.ring(), *base);
    if (!f.is_homogeneous(base->weights()))
      throw PreconditionError("quotient generator " + f.to_string() + " is not homogeneous for the grading");
  }
  GroebnerBasis gb = buchberger(SubmoduleGens::ideal(relations, base));
  if (gb.is_everything()) throw PreconditionError("quotient by the unit ideal gives the zero ring");
  return QuotientRingPtr(new QuotientRing(std::move(base), std::move(relations), std::move(gb)));
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  return basis_.normal_form(FreeVector::single(basis_.module(), 0, f)).component(0);
}

std::vector<FreeVector> QuotientRing::relation_vectors(const FreeModulePtr& module) const {
  std::vector<FreeVector> out;
  for (std::size_t i = 0; i < module->rank(); ++i)
    for (const auto& g : basis_.elements()) out.push_back(FreeVector::single(module, i, g.component(0)));
  return out;
}

bool QuotientRing::same_as(const QuotientRing& o) const {
  return this == &o || (base_->same_as(*o.base_) && basis_ == o.basis_);
}

std::string QuotientRing::to_string() const {
  std::string vars;
  for (std::size_t i = 0; i < base_->nvars(); ++i) vars += (i ? "," : "") + base_->names()[i];
  std::string s = "F" + std::to_string(base_->characteristic()) + "[" + vars + "]";
  if (!relations_.empty()) s += "/(" + join(relations_) + ")";
  return s;
}

void require_same_quotient(const QuotientRing& a, const QuotientRing& b) {
  if (!a.same_as(b)) throw StructuralError("operands live over different quotient rings");
}

IdealHandle::IdealHandle(QuotientRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(nonzero(std::move(gens))), basis_(line(ring_->base())) {
  for (const auto& f : gens_) {
    require_same_ring(*f.ring(), *ring_->base());
    if (!f.is_homogeneous(ring_->base()->weights()))
      throw PreconditionError("ideal generator " + f.to_string() + " is not homogeneous for the grading");
  }
  basis_ = buchberger(SubmoduleGens::ideal(lift_gens(), ring_->base()));
}

IdealHandle IdealHandle::unit(QuotientRingPtr ring) {
  RingPtr base = ring->base();
  return IdealHandle(std::move(ring), {Polynomial::constant(base, 1)});
}

IdealHandle IdealHandle::maximal(QuotientRingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring->base(), i));
  return IdealHandle(std::move(ring), std::move(vars));
}

std::vector<Polynomial> IdealHandle::lift_gens() const {
  std::vector<Polynomial> out = gens_;
  for (const auto& f : ring_->relations()) out.push_back(f);
  return out;
}

bool IdealHandle::contains(const Polynomial& f) const {
  return basis_.contains(FreeVector::single(basis_.module(), 0, f));
}

bool IdealHandle::contains(const IdealHandle& o) const {
  require_same_quotient(*ring_, *o.ring_);
  return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Polynomial& f) { return contains(f); });
}

IdealHandle IdealHandle::operator+(const IdealHandle& o) const {
  require_same_quotient(*ring_, *o.ring_);
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return IdealHandle(ring_, std::move(g));
}

IdealHandle IdealHandle::operator*(const IdealHandle& o) const {
  require_same_quotient(*ring_, *o.ring_);
  std::vector<Polynomial> g;
  for (const auto& f : gens_)
    for (const auto& h : o.gens_) g.push_back(ring_->reduce(f * h));
  return IdealHandle(ring_, std::move(g));
}

IdealHandle IdealHandle::canonical() const {
  std::vector<Polynomial> g;
  for (const auto& e : basis_.elements()) {
    Polynomial f = e.component(0);
    if (!ring_->is_zero(f)) g.push_back(f);
  }
  return IdealHandle(ring_, std::move(g));
}

std::string IdealHandle::to_string() const { return "(" + join(gens_) + ")"; }

std::optional<std::vector<long>> infer_shifts(std::size_t rank, const std::vector<FreeVector>& vectors,
                                              const std::vector<int>& weights) {
  // Weighted union-find: shift[i] = shift[root] + pot[i].
  std::vector<std::size_t> parent(rank);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<long> pot(rank, 0);
  auto find = [&](std::size_t i) {
    std::vector<std::size_t> path;
    while (parent[i] != i) {
      path.push_back(i);
      i = parent[i];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      std::size_t p = parent[*it];
      if (p != i) {
        pot[*it] += pot[p];
        parent[*it] = i;
      }
    }
    return i;
  };
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    const Term& t0 = v.terms()[0];
    long d0 = static_cast<long>(t0.mono.weighted_degree(weights));
    for (const auto& t : v.terms()) {
      // d0 + s[c0] = d + s[c]
      long d = static_cast<long>(t.mono.weighted_degree(weights));
      std::size_t a = t0.comp, b = t.comp;
      std::size_t ra = find(a), rb = find(b);
      long want = d0 - d;  // s[b] - s[a]
      if (ra == rb) {
        if (pot[b] - pot[a] != want) return std::nullopt;
        continue;
      }
      // attach the larger root below the smaller one
      if (ra < rb) {
        parent[rb] = ra;
        pot[rb] = pot[a] + want - pot[b];
      } else {
        parent[ra] = rb;
        pot[ra] = pot[b] - want - pot[a];
      }
    }
  }
  std::vector<long> shifts(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    find(i);
    shifts[i] = parent[i] == i ? 0 : pot[i];
  }
  return shifts;
}

std::optional<long> PresentedModule::degree_of(const FreeVector& v) const {
  if (v.is_zero()) return std::nullopt;
  const auto& w = base()->weights();
  std::optional<long> d;
  for (const auto& t : v.terms()) {
    long e = static_cast<long>(t.mono.weighted_degree(w)) + shifts_[t.comp];
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

PresentedModulePtr PresentedModule::make(QuotientRingPtr ring, std::size_t rank, std::vector<FreeVector> relations,
                                         std::optional<std::vector<long>> shifts) {
  auto m = std::shared_ptr<PresentedModule>(new PresentedModule());
  m->ring_ = std::move(ring);
  m->ambient_ = FreeModule::make(m->ring_->base(), rank);
  for (const auto& r : relations)
    if (!r.is_zero()) m->relations_.push_back(rewrap(m->ambient_, r));
  if (!shifts) {
    shifts = infer_shifts(rank, m->relations_, m->ring_->base()->weights());
    if (!shifts) throw PreconditionError("module presentation is not homogeneous for any choice of generator degrees");
  }
  if (shifts->size() != rank) throw StructuralError("shift vector length does not match rank");
  m->shifts_ = std::move(*shifts);
  for (const auto& r : m->relations_)
    if (!m->degree_of(r)) throw PreconditionError("relation " + r.to_string() + " is not homogeneous");
  m->basis_ = buchberger(SubmoduleGens(m->ambient_, m->lift_gens()));
  return m;
}

PresentedModulePtr PresentedModule::free(QuotientRingPtr ring, std::size_t rank) {
  return make(std::move(ring), rank, {}, std::vector<long>(rank, 0));
}

PresentedModulePtr PresentedModule::cyclic(const IdealHandle& a) {
  auto f = FreeModule::make(a.ring()->base(), 1);
  std::vector<FreeVector> rels;
  for (const auto& g : a.gens()) rels.push_back(FreeVector::single(f, 0, g));
  return make(a.ring(), 1, std::move(rels), std::vector<long>{0});
}

std::vector<FreeVector> PresentedModule::lift_gens() const {
  std::vector<FreeVector> out = relations_;
  for (auto& v : ring_->relation_vectors(ambient_)) out.push_back(std::move(v));
  return out;
}

std::vector<FreeVector> minimal_generators(const std::vector<FreeVector>& gens, const std::vector<FreeVector>& base,
                                           const std::vector<long>& shifts, const std::vector<int>& weights) {
  std::vector<std::pair<long, FreeVector>> byDeg;
  FreeModulePtr amb;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    amb = g.module();
    long d = 0;
    bool first = true;
    for (const auto& t : g.terms()) {
      long e = static_cast<long>(t.mono.weighted_degree(weights)) + shifts[t.comp];
      if (!first && e != d) throw InternalError("minimal_generators received a non-homogeneous vector");
      d = e;
      first = false;
    }
    byDeg.emplace_back(d, g);
  }
  std::stable_sort(byDeg.begin(), byDeg.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FreeVector> kept;
  if (byDeg.empty()) return kept;
  ModuleOrder ord{amb.get()};
  Coeff p = amb->ring()->characteristic();
  std::size_t i = 0;
  while (i < byDeg.size()) {
    long d = byDeg[i].first;
    SubmoduleGens sofar(amb);
    for (const auto& b : base) sofar.add(b);
    for (const auto& k : kept) sofar.add(k);
    std::optional<GroebnerBasis> gb;
    if (!sofar.empty()) gb = buchberger(sofar);
    std::vector<std::vector<Term>> rows;
    for (; i < byDeg.size() && byDeg[i].first == d; ++i) {
      const FreeVector& v = byDeg[i].second;
      std::vector<Term> r = gb ? gb->normal_form(v).terms() : v.terms();
      bool progress = true;
      while (!r.empty() && progress) {
        progress = false;
        for (const auto& row : rows) {
          if (row[0].comp == r[0].comp && row[0].mono == r[0].mono) {
            r = detail::axpy(r, fp::neg(r[0].coef, p), amb->ring()->one(), row, ord, p);
            progress = true;
            break;
          }
        }
      }
      if (r.empty()) continue;
      detail::scale(r, fp::inv(r[0].coef, p), p);
      rows.push_back(std::move(r));
      kept.push_back(v);
    }
  }
  return kept;
}

PresentedModulePtr PresentedModule::minimalized() const {
  Coeff p = ring_->characteristic();
  std::vector<FreeVector> rels = relations_;
  std::vector<bool> alive(rank(), true);
  for (;;) {
    std::size_t ri = rels.size(), comp = 0;
    Coeff unit = 0;
    for (std::size_t r = 0; r < rels.size() && ri == rels.size(); ++r) {
      for (auto it = rels[r].terms().rbegin(); it != rels[r].terms().rend(); ++it) {
        if (it->mono.is_one() && rels[r].component(it->comp).is_constant()) {
          ri = r;
          comp = it->comp;
          unit = it->coef;
          break;
        }
      }
    }
    if (ri == rels.size()) break;
    FreeVector pivot = rels[ri];
    Coeff inv = fp::inv(unit, p);
    std::vector<FreeVector> next;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (r == ri) continue;
      Polynomial a = rels[r].component(comp);
      FreeVector v = a.is_zero() ? rels[r] : rels[r] - pivot.times(a.scaled(inv));
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    rels = std::move(next);
    alive[comp] = false;
  }
  std::vector<long> map(rank(), -1);
  std::vector<long> shifts;
  long k = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    if (alive[i]) {
      map[i] = k++;
      shifts.push_back(shifts_[i]);
    }
  auto amb = FreeModule::make(base(), static_cast<std::size_t>(k));
  std::vector<FreeVector> mapped;
  for (const auto& r : rels) mapped.push_back(r.remapped(amb, map));
  std::vector<FreeVector> minimal =
      minimal_generators(mapped, ring_->relation_vectors(amb), shifts, base()->weights());
  return make(ring_, static_cast<std::size_t>(k), std::move(minimal), std::move(shifts));
}

PresentedModulePtr PresentedModule::over(QuotientRingPtr other) const {
  if (!other->base()->same_as(*base())) throw StructuralError("rings have different polynomial bases");
  return make(std::move(other), rank(), lift_gens(), shifts_);
}

std::string PresentedModule::to_string() const {
  std::ostringstream os;
  os << "coker(rank " << rank() << "; ";
  for (std::size_t i = 0; i < relations_.size(); ++i) os << (i ? ", " : "") << relations_[i].to_string();
  os << ") over " << ring_->to_string();
  return os.str();
}

SubmoduleHandle::SubmoduleHandle(PresentedModulePtr module, std::vector<FreeVector> gens)
    : module_(std::move(module)), basis_(module_->ambient()) {
  for (const auto& g : gens)
    if (!g.is_zero()) gens_.push_back(rewrap(module_->ambient(), g));
  basis_ = buchberger(SubmoduleGens(module_->ambient(), lift_gens()));
}

SubmoduleHandle SubmoduleHandle::whole(PresentedModulePtr module) {
  std::vector<FreeVector> g;
  for (std::size_t i = 0; i < module->rank(); ++i) g.push_back(module->basis_vector(i));
  return SubmoduleHandle(std::move(module), std::move(g));
}

std::vector<FreeVector> SubmoduleHandle::lift_gens() const {
  std::vector<FreeVector> out = gens_;
  for (auto& v : module_->lift_gens()) out.push_back(std::move(v));
  return out;
}

SubmoduleHandle SubmoduleHandle::operator+(const SubmoduleHandle& o) const {
  require_same_quotient(*module_->ring(), *o.module_->ring());
  std::vector<FreeVector> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return SubmoduleHandle(module_, std::move(g));
}

PresentedModulePtr SubmoduleHandle::quotient() const {
  std::vector<FreeVector> rels = module_->relations();
  rels.insert(rels.end(), gens_.begin(), gens_.end());
  return PresentedModule::make(module_->ring(), module_->rank(), std::move(rels), module_->shifts());
}

PresentedModulePtr SubmoduleHandle::as_module() const {
  std::vector<FreeVector> rels = kernel(module_->ambient(), gens_, module_->lift_gens());
  std::vector<long> shifts;
  for (const auto& g : gens_) {
    auto d = module_->degree_of(g);
    if (!d) throw PreconditionError("submodule generator " + g.to_string() + " is not homogeneous");
    shifts.push_back(*d);
  }
  return PresentedModule::make(module_->ring(), gens_.size(), std::move(rels), std::move(shifts));
}

bool operator==(const SubmoduleHandle& a, const SubmoduleHandle& b) {
  return a.module_->ambient()->same_as(*b.module_->ambient()) && a.basis_ == b.basis_;
}

SubmoduleHandle scalar_module(const IdealHandle& a, const PresentedModulePtr& m) {
  require_same_quotient(*a.ring(), *m->ring());
  std::vector<FreeVector> g;
  for (const auto& f : a.gens())
    for (std::size_t i = 0; i < m->rank(); ++i) g.push_back(FreeVector::single(m->ambient(), i, f));
  return SubmoduleHandle(m, std::move(g));
}

SubmoduleHandle scalar_submodule(const IdealHandle& a, const SubmoduleHandle& n) {
  require_same_quotient(*a.ring(), *n.module()->ring());
  std::vector<FreeVector> g;
  for (const auto& f : a.gens())
    for (const auto& v : n.gens()) g.push_back(v.times(f));
  return SubmoduleHandle(n.module(), std::move(g));
}

SubmoduleHandle colon_module(const SubmoduleHandle& n, const IdealHandle& a) {
  require_same_quotient(*a.ring(), *n.module()->ring());
  if (a.is_zero()) return SubmoduleHandle::whole(n.module());
  const auto& m = n.module();
  SubmoduleGens lifted(m->ambient(), n.lift_gens());
  SubmoduleGens c = colon_by_ideal(lifted, a.gens());
  GroebnerBasis gb = buchberger(c);
  std::vector<FreeVector> g;
  for (const auto& v : gb.elements())
    if (!m->lift_basis().contains(v)) g.push_back(v);
  return SubmoduleHandle(m, std::move(g));
}

IdealHandle colon_submodules(const SubmoduleHandle& n, const SubmoduleHandle& other) {
  require_same_quotient(*n.module()->ring(), *other.module()->ring());
  const auto& ring = n.module()->ring();
  std::optional<std::vector<Polynomial>> acc;
  std::vector<FreeVector> base = n.lift_gens();
  for (const auto& v : other.gens()) {
    std::vector<Polynomial> part = first_components(kernel(n.module()->ambient(), {v}, base));
    acc = acc ? intersect_ideals(*acc, part) : part;
  }
  if (!acc) return IdealHandle::unit(ring);
  return IdealHandle(ring, *acc);
}

SubmoduleHandle intersect(const SubmoduleHandle& a, const SubmoduleHandle& b) {
  require_same_quotient(*a.module()->ring(), *b.module()->ring());
  const auto& m = a.module();
  SubmoduleGens r = intersect(SubmoduleGens(m->ambient(), a.lift_gens()), SubmoduleGens(m->ambient(), b.lift_gens()));
  std::vector<FreeVector> g;
  for (const auto& v : buchberger(r).elements())
    if (!m->lift_basis().contains(v)) g.push_back(v);
  return SubmoduleHandle(m, std::move(g));
}

bool is_proper(const IdealHandle& a, const PresentedModulePtr& m) { return !scalar_module(a, m).is_whole(); }

bool submodule_equal(const SubmoduleHandle& a, const SubmoduleHandle& b) {
  require_same_module(*a.module()->ambient(), *b.module()->ambient());
  if (!(a.module()->lift_basis() == b.module()->lift_basis()))
    throw StructuralError("submodules of different modules");
  return a == b;
}

std::vector<Polynomial> annihilator_lift(const PresentedModulePtr& m) {
  std::optional<std::vector<Polynomial>> acc;
  std::vector<FreeVector> base = m->lift_gens();
  for (std::size_t i = 0; i < m->rank(); ++i) {
    std::vector<Polynomial> part = first_components(kernel(m->ambient(), {m->basis_vector(i)}, base));
    acc = acc ? intersect_ideals(*acc, part) : part;
  }
  if (!acc) return {Polynomial::constant(m->base(), 1)};
  GroebnerBasis gb = buchberger(SubmoduleGens::ideal(*acc, m->base()));
  return first_components(gb.elements());
}

IdealHandle annihilator(const PresentedModulePtr& m) { return IdealHandle(m->ring(), annihilator_lift(m)).canonical(); }

RegularSequenceResult regular_sequence_check(const std::vector<Polynomial>& xs, const PresentedModulePtr& m) {
  RegularSequenceResult res;
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    SubmoduleHandle n = scalar_module(IdealHandle(m->ring(), prefix), m);
    IdealHandle xi(m->ring(), {xs[i]});
    bool regular;
    if (n.is_whole()) {
      res.reason = "the module is already killed by the first " + std::to_string(i) + " elements";
      return res;
    }
    if (xi.is_zero()) {
      regular = false;
    } else {
      regular = colon_module(n, xi) == n;
    }
    if (!regular) {
      res.failure_index = i + 1;
      res.reason = "element " + std::to_string(i + 1) + " (" + xs[i].to_string() +
                   ") is a zero divisor on the module modulo the previous elements";
      return res;
    }
    prefix.push_back(xs[i]);
  }
  if (scalar_module(IdealHandle(m->ring(), prefix), m).is_whole()) {
    res.reason = "the sequence generates an ideal a with aM = M";
    return res;
  }
  res.regular = true;
  return res;
}

PresentedModulePtr direct_sum(const PresentedModulePtr& a, const PresentedModulePtr& b) {
  require_same_quotient(*a->ring(), *b->ring());
  std::size_t sa = a->rank(), sb = b->rank();
  auto amb = FreeModule::make(a->base(), sa + sb);
  std::vector<long> map_a(sa), map_b(sb);
  std::iota(map_a.begin(), map_a.end(), 0L);
  std::iota(map_b.begin(), map_b.end(), static_cast<long>(sa));
  std::vector<FreeVector> rels;
  for (const auto& r : a->relations()) rels.push_back(r.remapped(amb, map_a));
  for (const auto& r : b->relations()) rels.push_back(r.remapped(amb, map_b));
  std::vector<long> shifts = a->shifts();
  shifts.insert(shifts.end(), b->shifts().begin(), b->shifts().end());
  return PresentedModule::make(a->ring(), sa + sb, std::move(rels), std::move(shifts));
}

bool same_radical(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const RingPtr&) {
  auto inside = [](const std::vector<Polynomial>& xs, const std::vector<Polynomial>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const Polynomial& f) { return in_radical(f, ys); });
  };
  return inside(a, b) && inside(b, a);
}

bool support_equal(const PresentedModulePtr& a, const PresentedModulePtr& b) {
  return same_radical(annihilator_lift(a), annihilator_lift(b), a->base());
}

bool support_contained(const PresentedModulePtr& a, const PresentedModulePtr& b) {
  std::vector<Polynomial> ann_a = annihilator_lift(a), ann_b = annihilator_lift(b);
  return std::all_of(ann_b.begin(), ann_b.end(), [&](const Polynomial& f) { return in_radical(f, ann_a); });
}

PresentedModulePtr hom_into_quotient(const IdealHandle& a, const SubmoduleHandle& n) {
  SubmoduleHandle c = colon_module(n, a);
  // generators of the colon, relations landing in N
  const auto& m = n.module();
  std::vector<FreeVector> rels = kernel(m->ambient(), c.gens(), n.lift_gens());
  std::vector<long> shifts;
  for (const auto& g : c.gens()) {
    auto d = m->degree_of(g);
    if (!d) throw InternalError("colon generator is not homogeneous");
    shifts.push_back(*d);
  }
  return PresentedModule::make(m->ring(), c.gens().size(), std::move(rels), std::move(shifts));
}

}  // namespace linkagelab
