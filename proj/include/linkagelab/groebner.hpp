#pragma once

#include <vector>

#include "linkagelab/free_module.hpp"

namespace linkagelab {

/// Generators of a submodule of a free module. Zero generators are dropped.
class SubmoduleGens {
 public:
  explicit SubmoduleGens(FreeModulePtr module) : module_(std::move(module)) {}
  SubmoduleGens(FreeModulePtr module, std::vector<FreeVector> gens);

  static SubmoduleGens ideal(const std::vector<Polynomial>& gens, RingPtr ring);

  const FreeModulePtr& module() const noexcept { return module_; }
  const RingPtr& ring() const noexcept { return module_->ring(); }
  const std::vector<FreeVector>& gens() const& noexcept { return gens_; }
  std::vector<FreeVector> gens() && { return std::move(gens_); }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void add(const FreeVector& v);
  SubmoduleGens plus(const SubmoduleGens& o) const;

 private:
  FreeModulePtr module_;
  std::vector<FreeVector> gens_;
};

/// Reduced, monic Gröbner basis sorted ascending by leading term.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(FreeModulePtr module) : module_(std::move(module)) {}

  const FreeModulePtr& module() const noexcept { return module_; }
  const std::vector<FreeVector>& elements() const& noexcept { return elements_; }
  std::vector<FreeVector> elements() && { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }

  FreeVector normal_form(const FreeVector& v) const;
  bool contains(const FreeVector& v) const { return normal_form(v).is_zero(); }
  bool contains_all(const std::vector<FreeVector>& vs) const;
  /// True when the submodule is the whole free module.
  bool is_everything() const;
  SubmoduleGens as_gens() const { return SubmoduleGens(module_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  friend class GroebnerAccess;
  FreeModulePtr module_;
  std::vector<FreeVector> elements_;
};

/// A Gröbner basis together with the expression of every element in terms of
/// the input generators (vectors of S^m, m = number of inputs).
struct TrackedBasis {
  GroebnerBasis basis;
  std::vector<FreeVector> representation;
};

GroebnerBasis buchberger(const SubmoduleGens& gens);
TrackedBasis buchberger_tracked(const SubmoduleGens& gens);

/// Kernel of S^|G| -> S^s, e_i -> G_i, from the S-pair reductions of G.
SubmoduleGens syzygies(const GroebnerBasis& basis);

/// {a in S^m : sum a_j columns_j in <base>} for columns in a common free module.
/// The result lives in S^m with the default order.
std::vector<FreeVector> kernel(const FreeModulePtr& target, const std::vector<FreeVector>& columns,
                               const std::vector<FreeVector>& base = {});

/// Intersection via a tag variable t: t*N1 + (1-t)*N2, eliminating t.
SubmoduleGens intersect(const SubmoduleGens& a, const SubmoduleGens& b);

/// {v : f v in N for all f in ideal}; throws for the zero ideal.
SubmoduleGens colon_by_ideal(const SubmoduleGens& n, const std::vector<Polynomial>& ideal);

/// N ∩ (subring without the first k variables)^s. The ring must carry an
/// elimination block of exactly k variables.
SubmoduleGens eliminate(const SubmoduleGens& n, std::size_t k);

/// f in sqrt(I) iff 1 in I + (1 - t f) in S[t].
bool in_radical(const Polynomial& f, const std::vector<Polynomial>& ideal);

/// Intersection of ideals given by generators.
std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace linkagelab
