#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linkagelab/free_module.hpp"
#include "linkagelab/monomial_ideal.hpp"

namespace linkagelab {

using FpVector = std::vector<Coeff>;
/// Row-major square matrix acting on column vectors.
using FpMatrix = std::vector<FpVector>;

/// Default enumeration cap: p^d <= 2^20.
inline constexpr unsigned kOracleCapLog2 = 20;

/// Artinian quotient A = S/Q as an F_p-vector space on standard monomials,
/// with one multiplication matrix per variable.
class FiniteAlgebra {
 public:
  /// Throws PreconditionError when S/Q is not Artinian and ResourceError when
  /// p^d exceeds 2^cap_log2.
  static FiniteAlgebra make(RingPtr ring, const std::vector<Polynomial>& ideal, unsigned cap_log2 = kOracleCapLog2);

  const RingPtr& ring() const noexcept { return ring_; }
  Coeff characteristic() const noexcept { return ring_->characteristic(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const FpMatrix& variable_matrix(std::size_t i) const { return mult_[i]; }

  /// Multiplication by f.
  FpMatrix matrix_of(const Polynomial& f) const;
  /// Coordinates of f.
  FpVector element_of(const Polynomial& f) const;

 private:
  FiniteAlgebra() = default;
  void validate(const std::vector<Polynomial>& ideal) const;

  RingPtr ring_;
  std::vector<Monomial> basis_;
  std::vector<FpMatrix> mult_;
};

/// F_p-linear model of A^s / (relations), with the action of each variable.
class FiniteModule {
 public:
  static FiniteModule make(const FiniteAlgebra& algebra, std::size_t rank, const std::vector<FreeVector>& relations,
                           unsigned cap_log2 = kOracleCapLog2);
  /// A as a module over itself.
  static FiniteModule regular(const FiniteAlgebra& algebra, unsigned cap_log2 = kOracleCapLog2);

  const FiniteAlgebra& algebra() const noexcept { return *algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }
  std::uint64_t cardinality() const noexcept { return size_; }

  FpVector act(const FpMatrix& m, const FpVector& v) const;
  FpMatrix action_of(const Polynomial& f) const;
  /// Image of a vector of S^rank.
  FpVector element_of(const FreeVector& v) const;

  std::uint64_t encode(const FpVector& v) const;
  FpVector decode(std::uint64_t code) const;

 private:
  FiniteModule() = default;

  std::shared_ptr<const FiniteAlgebra> algebra_;
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::uint64_t size_ = 1;
  std::vector<FpMatrix> actions_;
  /// Projection A^rank -> module coordinates, dim_ x (rank * d).
  FpMatrix projection_;
};

/// Membership bitmap over all elements of a finite module, indexed by encode().
using ElementSet = std::vector<bool>;

/// All elements of the submodule generated by `gens`.
ElementSet oracle_span(const FiniteModule& m, const std::vector<FpVector>& gens);
ElementSet oracle_submodule(const FiniteModule& m, const std::vector<FreeVector>& gens);
/// aM
ElementSet oracle_ideal_times(const FiniteModule& m, const std::vector<Polynomial>& ideal);
/// {x in M : g x in N for every g in gens(a)}, by enumeration.
ElementSet oracle_colon(const FiniteModule& m, const ElementSet& n, const std::vector<Polynomial>& a);
ElementSet oracle_intersection(const ElementSet& a, const ElementSet& b);
bool oracle_is_whole(const ElementSet& s);
std::size_t oracle_count(const ElementSet& s);

struct OracleRegularity {
  bool regular = false;
  std::size_t failure_index = 0;
};
OracleRegularity oracle_regular_sequence(const FiniteModule& m, const std::vector<Polynomial>& xs);

struct OracleLinkage {
  bool hypotheses_ok = false;
  bool linked = false;
  bool geometric = false;
  std::string reason;
};
OracleLinkage oracle_is_linked(const FiniteModule& m, const std::vector<Polynomial>& a,
                               const std::vector<Polynomial>& b, const std::vector<Polynomial>& i);

/// Prime annihilators of elements, as subsets of A (enumerated over the
/// regular module). Sorted by encoding.
std::vector<ElementSet> oracle_ass(const FiniteModule& m);
/// The variable prime equal to the given ideal of A, if any.
std::optional<VariablePrime> oracle_variable_prime(const FiniteAlgebra& a, const ElementSet& ideal);

}  // namespace linkagelab
