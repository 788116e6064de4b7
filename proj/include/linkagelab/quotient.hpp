#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linkagelab/groebner.hpp"

namespace linkagelab {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// R = S/J for a proper weighted-homogeneous ideal J of S. The maximal ideal
/// is generated by the variables.
class QuotientRing {
 public:
  static QuotientRingPtr make(RingPtr base, std::vector<Polynomial> relations);
  static QuotientRingPtr polynomial(RingPtr base) { return make(std::move(base), {}); }

  const RingPtr& base() const noexcept { return base_; }
  std::size_t nvars() const noexcept { return base_->nvars(); }
  Coeff characteristic() const noexcept { return base_->characteristic(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const GroebnerBasis& relation_basis() const noexcept { return basis_; }
  bool is_polynomial_ring() const noexcept { return basis_.size() == 0; }

  /// Normal form modulo J.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  /// J * e_i for every i < module->rank().
  std::vector<FreeVector> relation_vectors(const FreeModulePtr& module) const;

  bool same_as(const QuotientRing& o) const;
  std::string to_string() const;

 private:
  QuotientRing(RingPtr base, std::vector<Polynomial> relations, GroebnerBasis basis)
      : base_(std::move(base)), relations_(std::move(relations)), basis_(std::move(basis)) {}

  RingPtr base_;
  std::vector<Polynomial> relations_;
  GroebnerBasis basis_;
};

void require_same_quotient(const QuotientRing& a, const QuotientRing& b);

/// Ideal of R given by representatives in S, with the Gröbner basis of
/// (generators) + J cached.
class IdealHandle {
 public:
  IdealHandle(QuotientRingPtr ring, std::vector<Polynomial> gens);

  static IdealHandle zero(QuotientRingPtr ring) { return IdealHandle(std::move(ring), {}); }
  static IdealHandle unit(QuotientRingPtr ring);
  /// (x_1, ..., x_n)
  static IdealHandle maximal(QuotientRingPtr ring);

  const QuotientRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  /// Generators followed by the generators of J.
  std::vector<Polynomial> lift_gens() const;
  const GroebnerBasis& lift_basis() const noexcept { return basis_; }

  bool is_zero() const noexcept { return basis_ == ring_->relation_basis(); }
  bool is_unit() const noexcept { return basis_.is_everything(); }
  bool contains(const Polynomial& f) const;
  bool contains(const IdealHandle& o) const;

  IdealHandle operator+(const IdealHandle& o) const;
  IdealHandle operator*(const IdealHandle& o) const;

  /// Reduced Gröbner basis generators of the lift, minus those in J.
  IdealHandle canonical() const;

  std::string to_string() const;

  friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
    return a.ring_->same_as(*b.ring_) && a.basis_ == b.basis_;
  }

 private:
  QuotientRingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis basis_;
};

class PresentedModule;
using PresentedModulePtr = std::shared_ptr<const PresentedModule>;

/// M = R^s / im(P) with P given by vectors of S^s. The lift of the relation
/// module is <P> + J S^s. Generators carry degree shifts making every relation
/// homogeneous.
class PresentedModule {
 public:
  /// Shifts are inferred from the relations when not given; unconstrained
  /// generators get shift 0.
  static PresentedModulePtr make(QuotientRingPtr ring, std::size_t rank, std::vector<FreeVector> relations,
                                 std::optional<std::vector<long>> shifts = std::nullopt);
  static PresentedModulePtr free(QuotientRingPtr ring, std::size_t rank);
  /// R/a
  static PresentedModulePtr cyclic(const IdealHandle& a);

  const QuotientRingPtr& ring() const noexcept { return ring_; }
  const RingPtr& base() const noexcept { return ring_->base(); }
  std::size_t rank() const noexcept { return ambient_->rank(); }
  const FreeModulePtr& ambient() const noexcept { return ambient_; }
  const std::vector<FreeVector>& relations() const noexcept { return relations_; }
  const std::vector<long>& shifts() const noexcept { return shifts_; }

  /// P followed by J e_i.
  std::vector<FreeVector> lift_gens() const;
  const GroebnerBasis& lift_basis() const noexcept { return basis_; }

  bool is_zero() const noexcept { return basis_.is_everything(); }
  FreeVector reduce(const FreeVector& v) const { return basis_.normal_form(v); }
  FreeVector basis_vector(std::size_t i) const { return FreeVector::basis(ambient_, i); }
  /// Degree of a homogeneous vector under the shifts; nullopt for zero or
  /// non-homogeneous input.
  std::optional<long> degree_of(const FreeVector& v) const;

  /// Minimal graded presentation: redundant generators removed by unit-entry
  /// elimination, relations reduced to a minimal generating set modulo J.
  PresentedModulePtr minimalized() const;

  /// The same module over R' = S/J' for J' ⊆ Ann M (J ⊆ J' not required).
  PresentedModulePtr over(QuotientRingPtr other) const;

  std::string to_string() const;

 private:
  PresentedModule() = default;

  QuotientRingPtr ring_;
  FreeModulePtr ambient_;
  std::vector<FreeVector> relations_;
  std::vector<long> shifts_;
  GroebnerBasis basis_{nullptr};
};

/// Shifts making every vector homogeneous, or nullopt when inconsistent.
std::optional<std::vector<long>> infer_shifts(std::size_t rank, const std::vector<FreeVector>& vectors,
                                              const std::vector<int>& weights);

/// A submodule N of M given by representatives in S^s, with the Gröbner basis
/// of the lift (generators + lift of M) cached.
class SubmoduleHandle {
 public:
  SubmoduleHandle(PresentedModulePtr module, std::vector<FreeVector> gens);

  static SubmoduleHandle zero(PresentedModulePtr module) { return SubmoduleHandle(std::move(module), {}); }
  static SubmoduleHandle whole(PresentedModulePtr module);

  const PresentedModulePtr& module() const noexcept { return module_; }
  const std::vector<FreeVector>& gens() const noexcept { return gens_; }
  std::vector<FreeVector> lift_gens() const;
  const GroebnerBasis& lift_basis() const noexcept { return basis_; }

  bool contains(const FreeVector& v) const { return basis_.contains(v); }
  bool contains(const SubmoduleHandle& o) const { return basis_.contains_all(o.gens_); }
  bool is_zero() const noexcept { return basis_ == module_->lift_basis(); }
  bool is_whole() const noexcept { return basis_.is_everything(); }

  SubmoduleHandle operator+(const SubmoduleHandle& o) const;

  /// M/N
  PresentedModulePtr quotient() const;
  /// N as a module in its own right, generated by gens().
  PresentedModulePtr as_module() const;

  friend bool operator==(const SubmoduleHandle& a, const SubmoduleHandle& b);

 private:
  PresentedModulePtr module_;
  std::vector<FreeVector> gens_;
  GroebnerBasis basis_;
};

/// aM
SubmoduleHandle scalar_module(const IdealHandle& a, const PresentedModulePtr& m);
/// a N
SubmoduleHandle scalar_submodule(const IdealHandle& a, const SubmoduleHandle& n);
/// N :_M a; all of M for the zero ideal.
SubmoduleHandle colon_module(const SubmoduleHandle& n, const IdealHandle& a);
/// N :_R N' = {r in R : r N' ⊆ N}
IdealHandle colon_submodules(const SubmoduleHandle& n, const SubmoduleHandle& other);
SubmoduleHandle intersect(const SubmoduleHandle& a, const SubmoduleHandle& b);
/// aM != M
bool is_proper(const IdealHandle& a, const PresentedModulePtr& m);
bool submodule_equal(const SubmoduleHandle& a, const SubmoduleHandle& b);
/// Ann_R M as an ideal of R.
IdealHandle annihilator(const PresentedModulePtr& m);
/// Ann_S M as polynomials (generators of the S-ideal, J included).
std::vector<Polynomial> annihilator_lift(const PresentedModulePtr& m);

struct RegularSequenceResult {
  bool regular = false;
  /// 1-based index of the first element that is a zero divisor; 0 when the
  /// failure is non-properness or when the sequence is regular.
  std::size_t failure_index = 0;
  std::string reason;
};

RegularSequenceResult regular_sequence_check(const std::vector<Polynomial>& xs, const PresentedModulePtr& m);

PresentedModulePtr direct_sum(const PresentedModulePtr& a, const PresentedModulePtr& b);

/// sqrt(Ann M1) == sqrt(Ann M2)
bool support_equal(const PresentedModulePtr& a, const PresentedModulePtr& b);
/// Supp M1 ⊆ Supp M2, i.e. sqrt(Ann M2) ⊆ sqrt(Ann M1).
bool support_contained(const PresentedModulePtr& a, const PresentedModulePtr& b);
/// sqrt(I1) == sqrt(I2) for ideals of S.
bool same_radical(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const RingPtr& ring);

/// Hom_R(R/a, M/N) presented as (N :_M a)/N.
PresentedModulePtr hom_into_quotient(const IdealHandle& a, const SubmoduleHandle& n);

/// Minimal homogeneous generators of <gens> + <base> modulo <base>, chosen in
/// order of increasing degree. All vectors must be homogeneous for `shifts`.
std::vector<FreeVector> minimal_generators(const std::vector<FreeVector>& gens, const std::vector<FreeVector>& base,
                                           const std::vector<long>& shifts, const std::vector<int>& weights);

}  // namespace linkagelab
