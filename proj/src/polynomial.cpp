#include "linkagelab/polynomial.hpp"

#include <sstream>

namespace linkagelab {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    ring_->check(t.mono);
    t.comp = 0;
  }
  detail::canonicalize(terms_, PolyOrder{ring_.get()}, ring_->characteristic());
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Coeff v = fp::reduce(c, ring->characteristic());
  Polynomial r(ring);
  if (v != 0) r.terms_.push_back(Term{ring->one(), v, 0});
  return r;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int exponent) {
  if (index >= ring->nvars()) throw StructuralError("variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index, exponent);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  ring->check(m);
  Polynomial r(ring);
  c %= ring->characteristic();
  if (c != 0) r.terms_.push_back(Term{m, c, 0});
  return r;
}

std::pair<Coeff, Monomial> Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return {terms_[0].coef, terms_[0].mono};
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_[0].mono;
}

Coeff Polynomial::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

long Polynomial::total_degree() const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const noexcept {
  if (terms_.empty()) return true;
  auto d = terms_[0].mono.weighted_degree(weights);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(weights) != d) return false;
  return true;
}

long Polynomial::weighted_degree(std::span<const int> weights) const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_[0].mono.weighted_degree(weights));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_ = detail::axpy(terms_, 1, ring_->one(), o.terms_, PolyOrder{ring_.get()}, ring_->characteristic());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Coeff p = ring_->characteristic();
  Polynomial r(ring_);
  r.terms_ = detail::axpy(terms_, p - 1, ring_->one(), o.terms_, PolyOrder{ring_.get()}, p);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->characteristic() - 1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Coeff p = ring_->characteristic();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back(Term{a.mono * b.mono, fp::mul(a.coef, b.coef, p), 0});
  return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Coeff p = ring_->characteristic();
  c %= p;
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  detail::scale(r.terms_, c, p);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  Polynomial r(ring_);
  r.terms_ = detail::axpy({}, c % ring_->characteristic(), m, terms_, PolyOrder{ring_.get()}, ring_->characteristic());
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(fp::inv(terms_[0].coef, ring_->characteristic()));
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  check_ring(d);
  if (d.is_zero()) throw PreconditionError("division by zero polynomial");
  Coeff p = ring_->characteristic();
  PolyOrder ord{ring_.get()};
  std::vector<Term> rest = terms_;
  std::vector<Term> quot;
  Coeff lc_inv = fp::inv(d.terms_[0].coef, p);
  const Monomial& lm = d.terms_[0].mono;
  while (!rest.empty()) {
    if (!lm.divides(rest[0].mono)) throw PreconditionError("polynomial is not divisible");
    Monomial q = rest[0].mono / lm;
    Coeff c = fp::mul(rest[0].coef, lc_inv, p);
    quot.push_back(Term{q, c, 0});
    rest = detail::axpy(rest, fp::neg(c, p), q, d.terms_, ord, p);
  }
  Polynomial r(ring_);
  r.terms_ = std::move(quot);  // produced in descending order
  return r;
}

Polynomial Polynomial::moved_to(const RingPtr& target, std::size_t shift) const {
  if (target->nvars() != ring_->nvars() + shift || target->characteristic() != ring_->characteristic())
    throw StructuralError("incompatible target ring");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(Term{shift ? t.mono.prepend(shift) : t.mono, t.coef, 0});
  return Polynomial(target, std::move(ts));
}

Polynomial Polynomial::dropped_to(const RingPtr& target, std::size_t count) const {
  if (target->nvars() + count != ring_->nvars()) throw StructuralError("incompatible target ring");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < count; ++i)
      if (t.mono[i] != 0) throw PreconditionError("polynomial involves an eliminated variable");
    ts.push_back(Term{t.mono.drop_front(count), t.coef, 0});
  }
  return Polynomial(target, std::move(ts));
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i > 0) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else if (t.coef == 1) {
      s += monomial_to_string(t.mono, *ring_);
    } else {
      s += std::to_string(t.coef) + "*" + monomial_to_string(t.mono, *ring_);
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

}  // namespace linkagelab
