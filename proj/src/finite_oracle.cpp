#include "linkagelab/finite_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "linkagelab/groebner.hpp"

namespace linkagelab {

namespace {

FpMatrix identity(std::size_t d) {
  FpMatrix m(d, FpVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, Coeff p) {
  std::size_t d = a.size();
  FpMatrix c(d, FpVector(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] = fp::add(c[i][j], fp::mul(a[i][k], b[k][j], p), p);
    }
  return c;
}

void add_scaled(FpMatrix& acc, const FpMatrix& m, Coeff c, Coeff p) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = 0; j < acc.size(); ++j) acc[i][j] = fp::add(acc[i][j], fp::mul(c, m[i][j], p), p);
}

FpVector apply(const FpMatrix& m, const FpVector& v, Coeff p) {
  FpVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<std::uint64_t>(m[i][j]) * v[j];
    out[i] = static_cast<Coeff>(s % p);
  }
  return out;
}

bool is_zero_vector(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

/// Row echelon basis kept fully reduced.
class Echelon {
 public:
  Echelon(std::size_t width, Coeff p) : width_(width), p_(p) {}

  FpVector reduce(FpVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Coeff c = v[pivots_[r]];
      if (!c) continue;
      Coeff neg = fp::neg(c, p_);
      for (std::size_t j = 0; j < width_; ++j) v[j] = fp::add(v[j], fp::mul(neg, rows_[r][j], p_), p_);
    }
    return v;
  }

  /// Adds v when independent; returns true if added.
  bool insert(const FpVector& v) {
    FpVector r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](Coeff c) { return c != 0; });
    if (it == r.end()) return false;
    std::size_t piv = static_cast<std::size_t>(it - r.begin());
    Coeff inv = fp::inv(r[piv], p_);
    for (auto& c : r) c = fp::mul(c, inv, p_);
    for (auto& row : rows_) {
      Coeff c = row[piv];
      if (!c) continue;
      Coeff neg = fp::neg(c, p_);
      for (std::size_t j = 0; j < width_; ++j) row[j] = fp::add(row[j], fp::mul(neg, r[j], p_), p_);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<FpVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t width_;
  Coeff p_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::uint64_t checked_size(Coeff p, std::size_t dim, unsigned cap_log2) {
  double bits = static_cast<double>(dim) * std::log2(static_cast<double>(p));
  if (bits > cap_log2 + 1e-9)
    throw ResourceError("finite oracle size p^" + std::to_string(dim) + " exceeds 2^" + std::to_string(cap_log2));
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < dim; ++i) s *= p;
  return s;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::make(RingPtr ring, const std::vector<Polynomial>& ideal, unsigned cap_log2) {
  FiniteAlgebra a;
  a.ring_ = ring;
  std::size_t n = ring->nvars();
  GroebnerBasis gb = buchberger(SubmoduleGens::ideal(ideal, ring));
  std::vector<Monomial> lts;
  for (const auto& e : gb.elements()) lts.push_back(e.leading_term().mono);
  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
    if (support == 0) std::fill(bound.begin(), bound.end(), 0);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) throw PreconditionError("quotient is not Artinian; the finite oracle does not apply");
  std::vector<int> e(n, 0);
  bool empty = std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; });
  while (!empty) {
    Monomial m(e);
    if (std::none_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(m); })) {
      a.basis_.push_back(m);
      checked_size(ring->characteristic(), a.basis_.size(), cap_log2);
    }
    std::size_t i = 0;
    while (i < n && e[i] + 1 >= bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < a.basis_.size(); ++j) index.emplace(a.basis_[j], j);
  std::size_t d = a.basis_.size();
  auto line = gb.module();
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix m(d, FpVector(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
      Monomial prod = a.basis_[j] * Monomial::variable(n, i);
      FreeVector nf = gb.normal_form(FreeVector(line, {Term{prod, 1, 0}}));
      for (const auto& t : nf.terms()) m[index.at(t.mono)][j] = t.coef;
    }
    a.mult_.push_back(std::move(m));
  }
  a.validate(ideal);
  return a;
}

void FiniteAlgebra::validate(const std::vector<Polynomial>& ideal) const {
  Coeff p = characteristic();
  for (std::size_t i = 0; i < mult_.size(); ++i)
    for (std::size_t j = i + 1; j < mult_.size(); ++j)
      if (multiply(mult_[i], mult_[j], p) != multiply(mult_[j], mult_[i], p))
        throw InternalError("finite algebra multiplication matrices do not commute");
  for (const auto& g : ideal)
    if (!is_zero_vector(element_of(g))) throw InternalError("finite algebra does not kill its defining ideal");
  std::size_t d = dim();
  if (d <= 8) {
    std::vector<FpMatrix> bm;
    for (const auto& b : basis_) bm.push_back(matrix_of(Polynomial::monomial(ring_, b)));
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          FpMatrix lhs = multiply(multiply(bm[x], bm[y], p), bm[z], p);
          FpMatrix rhs = multiply(bm[x], multiply(bm[y], bm[z], p), p);
          if (lhs != rhs) throw InternalError("finite algebra multiplication is not associative");
        }
  }
}

FpMatrix FiniteAlgebra::matrix_of(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  Coeff p = characteristic();
  std::size_t d = dim();
  FpMatrix acc(d, FpVector(d, 0));
  for (const auto& t : f.terms()) {
    FpMatrix m = identity(d);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) m = multiply(m, mult_[i], p);
    add_scaled(acc, m, t.coef, p);
  }
  return acc;
}

FpVector FiniteAlgebra::element_of(const Polynomial& f) const {
  std::size_t d = dim();
  FpVector one(d, 0);
  if (d == 0) return one;
  auto it = std::find(basis_.begin(), basis_.end(), ring_->one());
  one[static_cast<std::size_t>(it - basis_.begin())] = 1;
  return apply(matrix_of(f), one, characteristic());
}

FiniteModule FiniteModule::make(const FiniteAlgebra& algebra, std::size_t rank,
                                const std::vector<FreeVector>& relations, unsigned cap_log2) {
  FiniteModule m;
  m.algebra_ = std::make_shared<const FiniteAlgebra>(algebra);
  m.rank_ = rank;
  Coeff p = algebra.characteristic();
  std::size_t d = algebra.dim(), big = rank * d;
  std::vector<FpMatrix> basis_mats;
  for (const auto& b : algebra.basis()) basis_mats.push_back(algebra.matrix_of(Polynomial::monomial(algebra.ring(), b)));
  Echelon rel(big, p);
  for (const auto& r : relations) {
    if (r.rank() != rank) throw StructuralError("relation rank does not match module rank");
    std::vector<FpVector> comps;
    for (std::size_t c = 0; c < rank; ++c) comps.push_back(algebra.element_of(r.component(c)));
    for (const auto& bm : basis_mats) {
      FpVector v(big, 0);
      for (std::size_t c = 0; c < rank; ++c) {
        FpVector part = apply(bm, comps[c], p);
        std::copy(part.begin(), part.end(), v.begin() + static_cast<long>(c * d));
      }
      rel.insert(v);
    }
  }
  std::vector<bool> pivot(big, false);
  for (auto piv : rel.pivots()) pivot[piv] = true;
  std::vector<std::size_t> free_coords;
  for (std::size_t k = 0; k < big; ++k)
    if (!pivot[k]) free_coords.push_back(k);
  m.dim_ = free_coords.size();
  m.size_ = checked_size(p, m.dim_, cap_log2);
  m.projection_.assign(m.dim_, FpVector(big, 0));
  for (std::size_t k = 0; k < big; ++k) {
    FpVector unit(big, 0);
    unit[k] = 1;
    FpVector red = rel.reduce(unit);
    for (std::size_t q = 0; q < m.dim_; ++q) m.projection_[q][k] = red[free_coords[q]];
  }
  for (std::size_t i = 0; i < algebra.ring()->nvars(); ++i) {
    const FpMatrix& x = algebra.variable_matrix(i);
    FpMatrix act(m.dim_, FpVector(m.dim_, 0));
    for (std::size_t q = 0; q < m.dim_; ++q) {
      std::size_t k = free_coords[q];
      std::size_t c = k / d, j = k % d;
      FpVector image(big, 0);
      for (std::size_t r = 0; r < d; ++r) image[c * d + r] = x[r][j];
      FpVector proj = apply(m.projection_, image, p);
      for (std::size_t r = 0; r < m.dim_; ++r) act[r][q] = proj[r];
    }
    m.actions_.push_back(std::move(act));
  }
  return m;
}

FiniteModule FiniteModule::regular(const FiniteAlgebra& algebra, unsigned cap_log2) {
  return make(algebra, 1, {}, cap_log2);
}

FpVector FiniteModule::act(const FpMatrix& m, const FpVector& v) const {
  return apply(m, v, algebra_->characteristic());
}

FpMatrix FiniteModule::action_of(const Polynomial& f) const {
  Coeff p = algebra_->characteristic();
  FpMatrix acc(dim_, FpVector(dim_, 0));
  for (const auto& t : f.terms()) {
    FpMatrix m = identity(dim_);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) m = multiply(m, actions_[i], p);
    add_scaled(acc, m, t.coef, p);
  }
  return acc;
}

FpVector FiniteModule::element_of(const FreeVector& v) const {
  if (v.rank() != rank_) throw StructuralError("vector rank does not match module rank");
  std::size_t d = algebra_->dim();
  FpVector big(rank_ * d, 0);
  for (std::size_t c = 0; c < rank_; ++c) {
    FpVector part = algebra_->element_of(v.component(c));
    std::copy(part.begin(), part.end(), big.begin() + static_cast<long>(c * d));
  }
  return apply(projection_, big, algebra_->characteristic());
}

std::uint64_t FiniteModule::encode(const FpVector& v) const {
  std::uint64_t code = 0;
  for (std::size_t i = dim_; i-- > 0;) code = code * algebra_->characteristic() + v[i];
  return code;
}

FpVector FiniteModule::decode(std::uint64_t code) const {
  FpVector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = static_cast<Coeff>(code % algebra_->characteristic());
    code /= algebra_->characteristic();
  }
  return v;
}

ElementSet oracle_span(const FiniteModule& m, const std::vector<FpVector>& gens) {
  Coeff p = m.algebra().characteristic();
  std::size_t nv = m.algebra().ring()->nvars();
  std::vector<FpMatrix> xs;
  for (std::size_t i = 0; i < nv; ++i) xs.push_back(m.action_of(Polynomial::variable(m.algebra().ring(), i)));
  Echelon span(m.dim(), p);
  std::vector<FpVector> queue = gens;
  while (!queue.empty()) {
    FpVector v = std::move(queue.back());
    queue.pop_back();
    if (!span.insert(v)) continue;
    for (const auto& x : xs) queue.push_back(m.act(x, v));
  }
  ElementSet out(m.cardinality(), false);
  const auto& rows = span.rows();
  std::vector<Coeff> coef(rows.size(), 0);
  for (;;) {
    FpVector v(m.dim(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (coef[r])
        for (std::size_t j = 0; j < m.dim(); ++j) v[j] = fp::add(v[j], fp::mul(coef[r], rows[r][j], p), p);
    out[m.encode(v)] = true;
    std::size_t r = 0;
    while (r < rows.size() && coef[r] + 1 == p) coef[r++] = 0;
    if (r == rows.size()) break;
    ++coef[r];
  }
  return out;
}

ElementSet oracle_submodule(const FiniteModule& m, const std::vector<FreeVector>& gens) {
  std::vector<FpVector> vs;
  for (const auto& g : gens) vs.push_back(m.element_of(g));
  return oracle_span(m, vs);
}

ElementSet oracle_ideal_times(const FiniteModule& m, const std::vector<Polynomial>& ideal) {
  std::vector<FpVector> vs;
  for (const auto& g : ideal) {
    FpMatrix a = m.action_of(g);
    for (std::size_t q = 0; q < m.dim(); ++q) {
      FpVector col(m.dim());
      for (std::size_t r = 0; r < m.dim(); ++r) col[r] = a[r][q];
      vs.push_back(std::move(col));
    }
  }
  return oracle_span(m, vs);
}

ElementSet oracle_colon(const FiniteModule& m, const ElementSet& n, const std::vector<Polynomial>& a) {
  std::vector<FpMatrix> mats;
  for (const auto& g : a) mats.push_back(m.action_of(g));
  ElementSet out(m.cardinality(), false);
  for (std::uint64_t code = 0; code < m.cardinality(); ++code) {
    FpVector v = m.decode(code);
    out[code] = std::all_of(mats.begin(), mats.end(), [&](const FpMatrix& g) { return n[m.encode(m.act(g, v))]; });
  }
  return out;
}

ElementSet oracle_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool oracle_is_whole(const ElementSet& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); }

std::size_t oracle_count(const ElementSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

OracleRegularity oracle_regular_sequence(const FiniteModule& m, const std::vector<Polynomial>& xs) {
  OracleRegularity res;
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ElementSet sub = oracle_ideal_times(m, prefix);
    FpMatrix x = m.action_of(xs[i]);
    for (std::uint64_t code = 0; code < m.cardinality(); ++code) {
      if (sub[code]) continue;
      if (sub[m.encode(m.act(x, m.decode(code)))]) {
        res.failure_index = i + 1;
        return res;
      }
    }
    prefix.push_back(xs[i]);
  }
  res.regular = !oracle_is_whole(oracle_ideal_times(m, prefix));
  return res;
}

OracleLinkage oracle_is_linked(const FiniteModule& m, const std::vector<Polynomial>& a,
                               const std::vector<Polynomial>& b, const std::vector<Polynomial>& i) {
  OracleLinkage out;
  FiniteModule reg = FiniteModule::regular(m.algebra());
  ElementSet aa = oracle_ideal_times(reg, a), bb = oracle_ideal_times(reg, b);
  for (const auto* s : {&aa, &bb})
    if (oracle_count(*s) == 1 || oracle_is_whole(*s)) {
      out.reason = "a and b must be nonzero proper ideals";
      return out;
    }
  for (const auto& g : i) {
    auto code = reg.encode(m.algebra().element_of(g));
    if (!aa[code] || !bb[code]) {
      out.reason = "I is not contained in the intersection of a and b";
      return out;
    }
  }
  OracleRegularity r = oracle_regular_sequence(m, i);
  if (!r.regular) {
    out.reason = "the generators of I do not form a regular sequence";
    return out;
  }
  ElementSet am = oracle_ideal_times(m, a), bm = oracle_ideal_times(m, b), im = oracle_ideal_times(m, i);
  if (oracle_is_whole(am) || oracle_is_whole(bm)) {
    out.reason = "aM = M or bM = M";
    return out;
  }
  out.hypotheses_ok = true;
  out.linked = oracle_colon(m, im, a) == bm && oracle_colon(m, im, b) == am;
  out.geometric = oracle_intersection(am, bm) == im;
  return out;
}

std::vector<ElementSet> oracle_ass(const FiniteModule& m) {
  const FiniteAlgebra& alg = m.algebra();
  Coeff p = alg.characteristic();
  FiniteModule reg = FiniteModule::regular(alg);
  std::size_t d = alg.dim();
  std::vector<FpMatrix> basis_actions;
  std::vector<FpMatrix> basis_mult;
  for (const auto& b : alg.basis()) {
    Polynomial f = Polynomial::monomial(alg.ring(), b);
    basis_actions.push_back(m.action_of(f));
    basis_mult.push_back(alg.matrix_of(f));
  }
  std::map<std::vector<bool>, bool> anns;
  for (std::uint64_t code = 1; code < m.cardinality(); ++code) {
    FpVector v = m.decode(code);
    std::vector<FpVector> images;
    for (const auto& ba : basis_actions) images.push_back(m.act(ba, v));
    // Walk A in encoding order, updating r v digit by digit.
    ElementSet ann(reg.cardinality(), false);
    FpVector r(d, 0);
    FpVector rv(m.dim(), 0);
    for (std::uint64_t rc = 0;; ++rc) {
      ann[rc] = is_zero_vector(rv);
      if (rc + 1 == reg.cardinality()) break;
      std::size_t j = 0;
      while (r[j] + 1 == p) {
        r[j] = 0;
        for (std::size_t k = 0; k < rv.size(); ++k) rv[k] = fp::add(rv[k], images[j][k], p);
        ++j;
      }
      ++r[j];
      for (std::size_t k = 0; k < rv.size(); ++k) rv[k] = fp::add(rv[k], images[j][k], p);
    }
    anns.emplace(std::move(ann), false);
  }
  std::vector<ElementSet> out;
  for (const auto& [ann, unused] : anns) {
    if (oracle_is_whole(ann)) continue;
    Echelon ideal(d, p);
    for (std::uint64_t rc = 0; rc < reg.cardinality(); ++rc)
      if (ann[rc]) ideal.insert(reg.decode(rc));
    // A/P is a domain: multiplication by each r outside P is injective on A/P.
    bool prime = true;
    for (std::uint64_t rc = 0; rc < reg.cardinality() && prime; ++rc) {
      if (ann[rc]) continue;
      FpVector r = reg.decode(rc);
      FpMatrix mr(d, FpVector(d, 0));
      for (std::size_t j = 0; j < d; ++j)
        if (r[j]) add_scaled(mr, basis_mult[j], r[j], p);
      Echelon image = ideal;
      std::size_t rank = 0;
      for (std::size_t j = 0; j < d; ++j) {
        FpVector e(d, 0);
        e[j] = 1;
        if (image.insert(apply(mr, e, p))) ++rank;
      }
      if (rank + ideal.rows().size() != d) prime = false;
    }
    if (prime) out.push_back(ann);
  }
  return out;
}

std::optional<VariablePrime> oracle_variable_prime(const FiniteAlgebra& a, const ElementSet& ideal) {
  FiniteModule reg = FiniteModule::regular(a);
  VariablePrime vars;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
    Polynomial x = Polynomial::variable(a.ring(), i);
    if (ideal[reg.encode(a.element_of(x))]) {
      vars.push_back(i);
      gens.push_back(x);
    }
  }
  if (oracle_ideal_times(reg, gens) != ideal) return std::nullopt;
  return vars;
}

}  // namespace linkagelab
