#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkagelab/ring.hpp"

namespace linkagelab {

/// coefficient * monomial * e_comp. Polynomials use comp == 0.
struct Term {
  Monomial mono;
  Coeff coef = 0;
  std::uint32_t comp = 0;
};

namespace detail {

/// Sorts descending under `cmp`, merges equal terms and drops zeros.
template <class Cmp>
void canonicalize(std::vector<Term>& ts, const Cmp& cmp, Coeff p) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Term t = ts[i];
    t.coef %= p;
    std::size_t j = i + 1;
    while (j < ts.size() && cmp(ts[j], t) == 0) {
      t.coef = fp::add(t.coef, ts[j].coef % p, p);
      ++j;
    }
    if (t.coef != 0) ts[out++] = t;
    i = j;
  }
  ts.resize(out);
}

/// a + c * m * b, both inputs canonical; result canonical.
template <class Cmp>
std::vector<Term> axpy(const std::vector<Term>& a, Coeff c, const Monomial& m, const std::vector<Term>& b,
                       const Cmp& cmp, Coeff p) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term bt;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      bt.mono = b[j].mono * m;
      bt.coef = fp::mul(b[j].coef, c, p);
      bt.comp = b[j].comp;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  if (c != 0) load_b();
  while (i < a.size() || have_b) {
    if (!have_b) {
      r.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      r.push_back(bt);
      ++j;
      load_b();
      continue;
    }
    int s = cmp(a[i], bt);
    if (s > 0) {
      r.push_back(a[i++]);
    } else if (s < 0) {
      r.push_back(bt);
      ++j;
      load_b();
    } else {
      Coeff v = fp::add(a[i].coef, bt.coef, p);
      if (v != 0) r.push_back(Term{a[i].mono, v, a[i].comp});
      ++i;
      ++j;
      load_b();
    }
  }
  return r;
}

inline void scale(std::vector<Term>& ts, Coeff c, Coeff p) {
  for (auto& t : ts) t.coef = fp::mul(t.coef, c, p);
}

}  // namespace detail

/// Multivariate polynomial over F_p in canonical form: strictly descending
/// terms under the ring order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // canonicalizes

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index, int exponent = 1);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const& noexcept { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading coefficient and monomial. Throws for the zero polynomial.
  std::pair<Coeff, Monomial> leading_term() const;
  const Monomial& leading_monomial() const;
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the constant monomial.
  Coeff constant_term() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Maximal total degree; -1 for zero.
  long total_degree() const noexcept;
  bool is_homogeneous(std::span<const int> weights) const noexcept;
  /// Weighted degree of the leading term (meaningful for homogeneous input).
  long weighted_degree(std::span<const int> weights) const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  /// Exact division; throws PreconditionError if `d` does not divide *this.
  Polynomial divide_exact(const Polynomial& d) const;

  /// Re-expresses the polynomial in another ring with the same variables
  /// (possibly prepended by `shift` extra variables).
  Polynomial moved_to(const RingPtr& target, std::size_t shift = 0) const;
  /// Inverse of moved_to: drops `count` leading variables that must not occur.
  Polynomial dropped_to(const RingPtr& target, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const { require_same_ring(*ring_, *o.ring_); }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Comparator adapter for polynomial terms.
struct PolyOrder {
  const Ring* ring;
  int operator()(const Term& a, const Term& b) const noexcept { return ring->compare_unchecked(a.mono, b.mono); }
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace linkagelab
