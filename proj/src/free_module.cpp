#include "linkagelab/free_module.hpp"

#include <numeric>

namespace linkagelab {

FreeModulePtr FreeModule::make(RingPtr ring, std::size_t rank) {
  std::vector<std::uint32_t> prio(rank);
  std::iota(prio.begin(), prio.end(), 0U);
  return make(std::move(ring), rank, std::move(prio));
}

FreeModulePtr FreeModule::make(RingPtr ring, std::size_t rank, std::vector<std::uint32_t> priority) {
  if (priority.size() != rank) throw StructuralError("priority vector length mismatch");
  auto m = std::shared_ptr<FreeModule>(new FreeModule());
  m->ring_ = std::move(ring);
  m->rank_ = rank;
  m->priority_ = std::move(priority);
  return m;
}

FreeVector::FreeVector(FreeModulePtr module, std::vector<Term> terms)
    : module_(std::move(module)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    module_->ring()->check(t.mono);
    if (t.comp >= module_->rank()) throw StructuralError("component index out of range");
  }
  detail::canonicalize(terms_, ModuleOrder{module_.get()}, module_->ring()->characteristic());
}

FreeVector FreeVector::basis(FreeModulePtr module, std::size_t i) {
  if (i >= module->rank()) throw StructuralError("basis index out of range");
  std::vector<Term> ts{Term{module->ring()->one(), 1, static_cast<std::uint32_t>(i)}};
  return FreeVector(std::move(module), std::move(ts));
}

FreeVector FreeVector::from_components(FreeModulePtr module, const std::vector<Polynomial>& comps) {
  if (comps.size() != module->rank()) throw StructuralError("component count does not match rank");
  std::vector<Term> ts;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    require_same_ring(*comps[i].ring(), *module->ring());
    for (const auto& t : comps[i].terms()) ts.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(i)});
  }
  return FreeVector(std::move(module), std::move(ts));
}

FreeVector FreeVector::single(FreeModulePtr module, std::size_t i, const Polynomial& f) {
  if (i >= module->rank()) throw StructuralError("basis index out of range");
  require_same_ring(*f.ring(), *module->ring());
  std::vector<Term> ts;
  for (const auto& t : f.terms()) ts.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(i)});
  return FreeVector(std::move(module), std::move(ts));
}

const Term& FreeVector::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero vector has no leading term");
  return terms_[0];
}

Polynomial FreeVector::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == i) ts.push_back(Term{t.mono, t.coef, 0});
  return Polynomial(ring(), std::move(ts));
}

std::vector<Polynomial> FreeVector::components() const {
  std::vector<std::vector<Term>> buckets(rank());
  for (const auto& t : terms_) buckets[t.comp].push_back(Term{t.mono, t.coef, 0});
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (auto& b : buckets) out.emplace_back(ring(), std::move(b));
  return out;
}

bool FreeVector::has_unit_entry() const noexcept {
  for (const auto& t : terms_) {
    if (!t.mono.is_one()) continue;
    bool alone = true;
    for (const auto& u : terms_)
      if (u.comp == t.comp && !u.mono.is_one()) alone = false;
    if (alone) return true;
  }
  return false;
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
  require_same_module(*module_, *o.module_);
  FreeVector r(module_);
  r.terms_ = detail::axpy(terms_, 1, ring()->one(), o.terms_, ModuleOrder{module_.get()}, ring()->characteristic());
  return r;
}

FreeVector FreeVector::operator-(const FreeVector& o) const {
  require_same_module(*module_, *o.module_);
  Coeff p = ring()->characteristic();
  FreeVector r(module_);
  r.terms_ = detail::axpy(terms_, p - 1, ring()->one(), o.terms_, ModuleOrder{module_.get()}, p);
  return r;
}

FreeVector FreeVector::operator-() const { return scaled(ring()->characteristic() - 1); }

FreeVector FreeVector::scaled(Coeff c) const {
  Coeff p = ring()->characteristic();
  FreeVector r(module_);
  if (c % p == 0) return r;
  r.terms_ = terms_;
  detail::scale(r.terms_, c % p, p);
  return r;
}

FreeVector FreeVector::times(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring());
  FreeVector r(module_);
  ModuleOrder ord{module_.get()};
  for (const auto& t : f.terms())
    r.terms_ = detail::axpy(r.terms_, t.coef, t.mono, terms_, ord, ring()->characteristic());
  return r;
}

FreeVector FreeVector::times_term(Coeff c, const Monomial& m) const {
  FreeVector r(module_);
  r.terms_ = detail::axpy({}, c, m, terms_, ModuleOrder{module_.get()}, ring()->characteristic());
  return r;
}

FreeVector FreeVector::monic() const {
  if (terms_.empty()) return *this;
  return scaled(fp::inv(terms_[0].coef, ring()->characteristic()));
}

FreeVector FreeVector::reordered(const FreeModulePtr& target) const {
  if (target->rank() != rank()) throw StructuralError("rank mismatch");
  require_same_ring(*target->ring(), *ring());
  return FreeVector(target, terms_);
}

FreeVector FreeVector::lifted_to(const FreeModulePtr& target, std::size_t shift) const {
  if (target->rank() != rank() || target->ring()->nvars() != ring()->nvars() + shift)
    throw StructuralError("incompatible target module");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(Term{t.mono.prepend(shift), t.coef, t.comp});
  return FreeVector(target, std::move(ts));
}

FreeVector FreeVector::dropped_to(const FreeModulePtr& target, std::size_t count) const {
  if (target->rank() != rank() || target->ring()->nvars() + count != ring()->nvars())
    throw StructuralError("incompatible target module");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < count; ++i)
      if (t.mono[i] != 0) throw PreconditionError("vector involves an eliminated variable");
    ts.push_back(Term{t.mono.drop_front(count), t.coef, t.comp});
  }
  return FreeVector(target, std::move(ts));
}

FreeVector FreeVector::remapped(const FreeModulePtr& target, const std::vector<long>& map) const {
  require_same_ring(*target->ring(), *ring());
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    long c = map.at(t.comp);
    if (c < 0) throw PreconditionError("dropped component is nonzero");
    ts.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(c)});
  }
  return FreeVector(target, std::move(ts));
}

bool FreeVector::is_homogeneous(std::span<const int> weights, std::span<const long> shifts) const noexcept {
  if (terms_.empty()) return true;
  auto deg = [&](const Term& t) { return static_cast<long>(t.mono.weighted_degree(weights)) + shifts[t.comp]; };
  long d = deg(terms_[0]);
  for (const auto& t : terms_)
    if (deg(t) != d) return false;
  return true;
}

std::string FreeVector::to_string() const {
  std::string s = "[";
  auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + "]";
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  if (!a.module_->same_as(*b.module_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const Term &x = a.terms_[i], &y = b.terms_[i];
    if (x.coef != y.coef || x.comp != y.comp || !(x.mono == y.mono)) return false;
  }
  return true;
}

}  // namespace linkagelab
