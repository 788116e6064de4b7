#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkagelab/polynomial.hpp"

namespace linkagelab {

/// Sorted variable indices of a prime (x_i : i in P). The empty set is (0).
using VariablePrime = std::vector<std::size_t>;

/// Monomial ideal kept as its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  /// Nullopt unless every generator is a monomial.
  static std::optional<MonomialIdeal> from_polynomials(std::size_t nvars, const std::vector<Polynomial>& gens);

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return gens_.empty(); }
  bool contains(const Monomial& m) const noexcept;
  MonomialIdeal colon(const Monomial& m) const;
  /// Nonempty result when the ideal is generated by variables.
  std::optional<VariablePrime> as_variable_prime() const;
  MonomialIdeal operator+(const MonomialIdeal& o) const;
  bool is_radical() const noexcept;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

std::vector<VariablePrime> mono_min_primes(const MonomialIdeal& ideal);
std::vector<VariablePrime> mono_ass_primes(const MonomialIdeal& ideal);
bool mono_unmixed(const MonomialIdeal& ideal);
/// Krull dimension of S/I; -1 for the unit ideal.
long mono_dimension(const MonomialIdeal& ideal);
/// Krull dimension of S/(ideal generated by the monomials).
long mono_dimension(std::size_t nvars, const std::vector<Monomial>& gens);

std::string prime_to_string(const VariablePrime& p, const std::vector<std::string>& names);

}  // namespace linkagelab
