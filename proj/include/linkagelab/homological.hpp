#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linkagelab/monomial_ideal.hpp"
#include "linkagelab/quotient.hpp"

namespace linkagelab {

/// Minimal graded free resolution F_L -> ... -> F_1 -> F_0 -> M -> 0 over the
/// ring `ring` (S itself or R = S/J). maps[i] holds the columns of
/// d_{i+1}: F_{i+1} -> F_i as vectors of F_i.
struct FreeResolution {
  QuotientRingPtr ring;
  std::vector<FreeModulePtr> modules;
  std::vector<std::vector<long>> shifts;
  std::vector<std::vector<FreeVector>> maps;
  /// True when the resolution ended because a kernel vanished.
  bool complete = false;

  std::size_t length() const noexcept { return maps.size(); }
  std::vector<std::size_t> betti() const;
  /// Projective dimension when complete.
  std::optional<std::size_t> projective_dimension() const;
};

/// Resolution of M as an S-module (S the polynomial ring of M's ring).
FreeResolution resolve_over_S(const PresentedModulePtr& m, std::size_t max_length);
/// Resolution of M as an R-module, truncated after max_length maps.
FreeResolution resolve_over_R(const PresentedModulePtr& m, std::size_t max_length);

/// Ext^i(M, B) from a resolution of M; B must be a module over a quotient of
/// the resolution's ring. The result lives over B's ring.
PresentedModulePtr ext_from_resolution(const FreeResolution& res, std::size_t i, const PresentedModulePtr& b);
bool ext_vanishes(const FreeResolution& res, std::size_t i, const PresentedModulePtr& b);

/// Ext^i_S(M, S).
PresentedModulePtr ext_over_S(std::size_t i, const PresentedModulePtr& m);
/// Ext^i_R(A, B) with the R-resolution of A truncated at the window.
PresentedModulePtr ext_over_R(std::size_t i, const PresentedModulePtr& a, const PresentedModulePtr& b,
                              std::size_t window);

std::size_t default_window(const QuotientRing& ring);

/// grade(a, M) = min{i : Ext^i(R/a, M) != 0}; throws when aM = M.
long grade(const IdealHandle& a, const PresentedModulePtr& m);
long depth(const PresentedModulePtr& m);
/// n - pd_S M
long depth_by_projective_dimension(const PresentedModulePtr& m);
/// -1 for the zero module.
long krull_dim(const PresentedModulePtr& m);
/// dim M - dim M/aM
long height_on_module(const IdealHandle& a, const PresentedModulePtr& m);
bool is_artinian(const PresentedModulePtr& m);
bool is_cohen_macaulay(const PresentedModulePtr& m);
bool is_maximal_cohen_macaulay(const PresentedModulePtr& m);
/// Every associated prime has dimension dim M.
bool is_unmixed(const PresentedModulePtr& m);
/// Minimal number of generators.
std::size_t minimal_generator_count(const PresentedModulePtr& m);
/// Codimension in S of the support of M.
long codimension(const PresentedModulePtr& m);
/// The associated primes of M that are generated by variables, sorted by size
/// then lexicographically. For monomial modules this is all of Ass M.
/// P is associated iff H = 0 :_M P is nonzero with Ann H = P.
std::vector<VariablePrime> ass_variable_primes(const PresentedModulePtr& m);

/// Ext^c_S(R, S), c = n - dim R, presented over R. Throws unless R is CM.
PresentedModulePtr canonical_module(const QuotientRingPtr& ring);
bool is_gorenstein(const QuotientRingPtr& ring);

enum class WindowStatus { exact, inconclusive };

struct WindowReport {
  WindowStatus status = WindowStatus::inconclusive;
  /// Exact value, or the best lower bound when inconclusive.
  long value = 0;
  /// Exact and infinite; value is then the first index proving it.
  bool infinite = false;
  std::string method;
  /// Indices i <= window with nonzero Ext, when a scan was run.
  std::vector<long> nonzero;
  std::size_t window = 0;
};

/// G-dimension of A over R: Auslander-Bridger on Gorenstein rings, otherwise
/// an Ext scan decided by finite projective dimension, a nonzero Ext beyond
/// depth R - depth A, or a periodic minimal resolution.
WindowReport gdim_report(const PresentedModulePtr& a, std::size_t window);
/// Injective dimension of M over R by a Bass-number scan, stopping after
/// dim R + 1 vanishing Bass numbers past the last nonzero one, or at a
/// nonzero Bass number beyond depth R (infinite).
WindowReport injdim_report(const PresentedModulePtr& m, std::size_t window);

/// Monomials of the given weighted degree.
std::vector<Monomial> monomials_of_degree(std::size_t n, const std::vector<int>& weights, long degree);
/// Form of the given weighted degree with uniform random coefficients.
Polynomial random_form(std::mt19937_64& rng, const RingPtr& s, long degree);

/// Greedy search for a maximal M-regular sequence of homogeneous elements of
/// a; nullopt when random search fails to extend a non-maximal sequence.
std::optional<std::vector<Polynomial>> greedy_regular_sequence(const IdealHandle& a, const PresentedModulePtr& m,
                                                               std::mt19937_64& rng, int attempts_per_degree = 24);

}  // namespace linkagelab
