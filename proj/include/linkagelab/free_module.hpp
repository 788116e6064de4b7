#pragma once

#include <memory>
#include <vector>

#include "linkagelab/polynomial.hpp"

namespace linkagelab {

class FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

/// S^s with a position-over-term order. Component priority: smaller value
/// ranks higher; by default lower component index is greater. When the ring
/// has an elimination block it is compared before the component.
class FreeModule {
 public:
  static FreeModulePtr make(RingPtr ring, std::size_t rank);
  static FreeModulePtr make(RingPtr ring, std::size_t rank, std::vector<std::uint32_t> priority);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::uint32_t>& priority() const noexcept { return priority_; }

  int compare(const Term& a, const Term& b) const noexcept {
    int c = ring_->compare_block(a.mono, b.mono);
    if (c != 0) return c;
    if (a.comp != b.comp) return priority_[a.comp] < priority_[b.comp] ? 1 : -1;
    return ring_->compare_base(a.mono, b.mono);
  }

  bool same_as(const FreeModule& o) const noexcept {
    return rank_ == o.rank_ && priority_ == o.priority_ && ring_->same_as(*o.ring_);
  }

 private:
  FreeModule() = default;
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> priority_;
};

struct ModuleOrder {
  const FreeModule* module;
  int operator()(const Term& a, const Term& b) const noexcept { return module->compare(a, b); }
};

inline void require_same_module(const FreeModule& a, const FreeModule& b) {
  if (&a != &b && !a.same_as(b)) throw StructuralError("vectors live in different free modules or orders");
}

/// Element of a free module in canonical sorted form.
class FreeVector {
 public:
  explicit FreeVector(FreeModulePtr module) : module_(std::move(module)) {}
  FreeVector(FreeModulePtr module, std::vector<Term> terms);  // canonicalizes

  static FreeVector basis(FreeModulePtr module, std::size_t i);
  static FreeVector from_components(FreeModulePtr module, const std::vector<Polynomial>& comps);
  /// f * e_i
  static FreeVector single(FreeModulePtr module, std::size_t i, const Polynomial& f);

  const FreeModulePtr& module() const noexcept { return module_; }
  const RingPtr& ring() const noexcept { return module_->ring(); }
  std::size_t rank() const noexcept { return module_->rank(); }
  const std::vector<Term>& terms() const& noexcept { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading_term() const;
  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;
  /// True if some component is a nonzero constant.
  bool has_unit_entry() const noexcept;

  FreeVector operator+(const FreeVector& o) const;
  FreeVector operator-(const FreeVector& o) const;
  FreeVector operator-() const;
  FreeVector scaled(Coeff c) const;
  FreeVector times(const Polynomial& f) const;
  FreeVector times_term(Coeff c, const Monomial& m) const;
  FreeVector monic() const;

  /// Same ring and rank, different component priority.
  FreeVector reordered(const FreeModulePtr& target) const;
  /// Into a free module over a ring with `shift` extra leading variables.
  FreeVector lifted_to(const FreeModulePtr& target, std::size_t shift) const;
  FreeVector dropped_to(const FreeModulePtr& target, std::size_t count) const;
  /// Reindexes component c to map[c]; entries mapped to -1 must be zero.
  FreeVector remapped(const FreeModulePtr& target, const std::vector<long>& map) const;

  bool is_homogeneous(std::span<const int> weights, std::span<const long> shifts) const noexcept;

  std::string to_string() const;

  friend bool operator==(const FreeVector& a, const FreeVector& b);

 private:
  FreeModulePtr module_;
  std::vector<Term> terms_;
};

inline FreeVector operator*(const Polynomial& f, const FreeVector& v) { return v.times(f); }

}  // namespace linkagelab
