#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linkagelab/field.hpp"
#include "linkagelab/monomial.hpp"

namespace linkagelab {

enum class OrderKind { grevlex, lex };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// S = F_p[x_1..x_n] together with its monomial order.
///
/// With an elimination block of size k the first k variables are compared
/// first (graded reverse lexicographic within the block), and the remaining
/// variables are compared by the base order. Weights describe the grading
/// used for homogeneity checks; they do not change the order.
class Ring {
 public:
  struct Options {
    OrderKind order = OrderKind::grevlex;
    std::size_t elimination_block = 0;
    std::vector<int> weights;  // empty means all 1
    unsigned degree_cap = 64;
  };

  static RingPtr make(Coeff p, std::vector<std::string> names, Options opts);
  static RingPtr make(Coeff p, std::vector<std::string> names) { return make(p, std::move(names), Options{}); }

  Coeff characteristic() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  OrderKind order() const noexcept { return order_; }
  std::size_t elimination_block() const noexcept { return elim_; }
  unsigned degree_cap() const noexcept { return degree_cap_; }
  const Options& options() const noexcept { return opts_; }

  /// Index of a variable name, or -1.
  int variable_index(const std::string& name) const;

  Monomial one() const { return Monomial(nvars()); }

  /// -1, 0 or 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    check(a);
    check(b);
    return compare_unchecked(a, b);
  }

  int compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
    if (elim_ > 0) {
      int c = grevlex(a, b, 0, elim_);
      if (c != 0) return c;
    }
    return compare_base(a, b);
  }

  /// Elimination block part only (0 when no block).
  int compare_block(const Monomial& a, const Monomial& b) const noexcept {
    return elim_ > 0 ? grevlex(a, b, 0, elim_) : 0;
  }
  /// Variables outside the elimination block.
  int compare_base(const Monomial& a, const Monomial& b) const noexcept {
    return order_ == OrderKind::grevlex ? grevlex(a, b, elim_, names_.size()) : lex(a, b, elim_, names_.size());
  }

  /// A ring with `count` new variables prepended, forming the elimination block.
  RingPtr with_tag_variables(std::size_t count) const;
  RingPtr with_degree_cap(unsigned cap) const;
  /// Same variables without an elimination block.
  RingPtr without_elimination() const;

  /// Structural equality (characteristic, names, order, block, weights).
  bool same_as(const Ring& o) const noexcept;

  void check(const Monomial& m) const {
    if (m.size() != nvars()) throw StructuralError("monomial length does not match ring");
  }

 private:
  Ring() = default;

  static int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
    std::uint32_t da = 0, db = 0;
    if (lo == 0 && hi == a.size()) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  static int lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  Coeff p_ = 2;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  OrderKind order_ = OrderKind::grevlex;
  std::size_t elim_ = 0;
  unsigned degree_cap_ = 64;
  Options opts_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (&a != &b && !a.same_as(b)) throw StructuralError("operands live in different rings or orders");
}

}  // namespace linkagelab
