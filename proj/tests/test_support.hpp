#pragma once

#include <random>
#include <string>
#include <vector>

#include "linkagelab/groebner.hpp"
#include "linkagelab/parse.hpp"
#include "linkagelab/quotient.hpp"

namespace testing_support {

using namespace linkagelab;

inline RingPtr ring(Coeff p, std::vector<std::string> names, OrderKind order = OrderKind::grevlex) {
  Ring::Options o;
  o.order = order;
  return Ring::make(p, std::move(names), o);
}

inline Polynomial poly(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline std::vector<Polynomial> polys(const RingPtr& r, const std::string& s) { return parse_polynomial_list(r, s); }

inline SubmoduleGens ideal(const RingPtr& r, const std::string& s) { return SubmoduleGens::ideal(polys(r, s), r); }

inline FreeVector vec(const FreeModulePtr& m, const std::string& s) { return parse_vector(m, s); }

inline bool same_submodule(const SubmoduleGens& a, const SubmoduleGens& b) { return buchberger(a) == buchberger(b); }

/// Random monomial with each exponent in [0, max_exp].
inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1)));
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int terms, int max_exp) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back(Term{random_monomial(rng, r->nvars(), max_exp),
                      static_cast<Coeff>(rng() % r->characteristic()), 0});
  return Polynomial(r, ts);
}

/// Random homogeneous polynomial of the given standard degree.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& r, int terms, int degree) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->nvars());
    for (int d = 0; d < degree; ++d) {
      std::size_t i = rng() % r->nvars();
      m.set(i, m[i] + 1);
    }
    ts.push_back(Term{m, static_cast<Coeff>(rng() % r->characteristic()), 0});
  }
  return Polynomial(r, ts);
}

inline QuotientRingPtr qring(Coeff p, std::vector<std::string> names, const std::string& rels,
                             std::vector<int> weights = {}) {
  Ring::Options o;
  o.weights = std::move(weights);
  auto s = Ring::make(p, std::move(names), o);
  return QuotientRing::make(s, polys(s, rels));
}

inline IdealHandle ideal_of(const QuotientRingPtr& r, const std::string& gens) {
  return IdealHandle(r, polys(r->base(), gens));
}

/// R/a as a module.
inline PresentedModulePtr cyclic(const QuotientRingPtr& r, const std::string& gens) {
  return PresentedModule::cyclic(ideal_of(r, gens));
}

}  // namespace testing_support
