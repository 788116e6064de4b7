#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkagelab/homological.hpp"
#include "linkagelab/quotient.hpp"

namespace linkagelab {

/// Ideals a, b, I of R together with an R-module M.
struct LinkageInstance {
  QuotientRingPtr ring;
  PresentedModulePtr module;
  IdealHandle a;
  IdealHandle b;
  IdealHandle i;
};

enum class Verdict { linked, not_linked, hypotheses_failed };
std::string to_string(Verdict v);

struct LinkageReport {
  Verdict verdict = Verdict::hypotheses_failed;
  /// Keys: a_nonzero_proper, b_nonzero_proper, i_in_a_and_b, a_proper_on_m,
  /// b_proper_on_m, i_regular_on_m.
  std::map<std::string, bool> hypotheses;
  /// Keys: b_m_equals_colon_a, a_m_equals_colon_b (absent when a hypothesis fails).
  std::map<std::string, bool> conclusions;
  std::vector<std::string> witnesses;
  /// 1-based index of the first zero divisor in the generators of I.
  std::optional<std::size_t> failure_index;
  bool geometric = false;
  bool selflinked = false;
  /// grade_m_a, grade_m_b, grade_m_i where defined.
  std::map<std::string, long> grades;
};

/// a ~ b by I over M: I ⊆ a ∩ b generated by an M-regular sequence,
/// aM != M != bM, bM = IM :_M a and aM = IM :_M b.
LinkageReport check_linked(const LinkageInstance& inst);
bool is_linked(const LinkageInstance& inst);

enum class Outcome { pass, fail, hypotheses_failed, inconclusive, skipped };
std::string to_string(Outcome o);

struct Clause {
  std::string name;
  Outcome status = Outcome::skipped;
  std::string detail;
};

/// One implication checked on an instance: hypotheses first, then conclusions.
struct VerifierPart {
  std::string name;
  std::vector<Clause> hypotheses;
  std::vector<Clause> conclusions;
  Outcome status = Outcome::skipped;
};

struct VerifierReport {
  std::string verifier;
  Outcome outcome = Outcome::skipped;
  std::vector<VerifierPart> parts;
  std::map<std::string, std::string> values;
};

struct VerifyOptions {
  /// Window for R-resolutions; 0 selects default_window.
  std::size_t window = 0;
  std::uint64_t seed = 0;
  /// Second summand for the direct-sum check; R when absent.
  PresentedModulePtr second_module;
};

/// Grade equality of a, b, I on M and the two support identities.
VerifierReport verify_grade_support(const LinkageInstance& inst);
/// Associated-prime relations, Artinian equivalence and height formulas,
/// gated on Ass(M/IM) = Min Ass(M/IM) and on available Ass ground truth.
VerifierReport verify_ass_and_height(const LinkageInstance& inst);
/// Transfer of linkage between R and its canonical module.
VerifierReport verify_canonical_transfer(const LinkageInstance& inst);
/// Cohen-Macaulay equivalences across a linked pair.
VerifierReport verify_cm_equivalence(const LinkageInstance& inst, const VerifyOptions& opts = {});
/// Direct sums, free modules, restriction from S and reduction modulo a
/// regular element.
VerifierReport verify_sum_and_reduction(const LinkageInstance& inst, const VerifyOptions& opts = {});
/// Linkage over a faithful module with radical ideals descends to R.
VerifierReport verify_radical_faithful(const LinkageInstance& inst);
/// 0 : (0 : c) = c for a height-zero unmixed ideal c of a Gorenstein ring.
VerifierReport verify_double_annihilator(const IdealHandle& c);

/// Ideal of R underlying a submodule of R^1.
IdealHandle as_ideal(const SubmoduleHandle& n);
/// I :_R a
IdealHandle ideal_colon(const IdealHandle& i, const IdealHandle& a);

/// Associated primes where ground truth exists: monomial modules (combinatorial
/// Ass), Artinian modules under the oracle cap (enumeration), and the engine
/// variable-prime scan when either applies.
struct AssResult {
  std::optional<std::vector<VariablePrime>> primes;
  std::vector<std::string> paths;
  bool agree = true;
};
AssResult associated_primes(const PresentedModulePtr& m);

enum class FixtureKind { monomial_ci_selflink, regular_selflink, node_pair, colon_constructed, semigroup, semigroup_reduction };
std::string to_string(FixtureKind k);
std::optional<FixtureKind> fixture_kind_from_string(const std::string& s);

struct Fixture {
  std::string id;
  FixtureKind kind;
  std::uint64_t seed = 0;
  LinkageInstance instance;
  /// Named modules over the instance ring, the instance module first.
  std::vector<std::pair<std::string, PresentedModulePtr>> modules;
};

/// Deterministic fixture for (kind, seed); nullopt when validation fails.
/// `size` is the number of regular elements for the self-link kinds.
std::optional<Fixture> generate_fixture(FixtureKind kind, std::uint64_t seed, std::size_t size = 2);

}  // namespace linkagelab
