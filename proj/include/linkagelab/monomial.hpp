#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "linkagelab/error.hpp"

namespace linkagelab {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of fixed length with 16-bit exponents. Overflow throws.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw StructuralError("too many variables");
  }
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(const std::vector<int>& exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  std::uint16_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  std::uint32_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, int e) {
    if (e < 0 || e > 0xFFFF) throw StructuralError("exponent out of 16-bit range");
    deg_ = deg_ - exp_[i] + static_cast<std::uint32_t>(e);
    exp_[i] = static_cast<std::uint16_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    same_length(o);
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t e = std::uint32_t{exp_[i]} + o.exp_[i];
      if (e > 0xFFFF) throw StructuralError("exponent overflow");
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const noexcept {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] != 0 && o.exp_[i] != 0) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.same_length(b);
    Monomial r(a.n_);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d += r.exp_[i];
    }
    r.deg_ = d;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.same_length(b);
    Monomial r(a.n_);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d += r.exp_[i];
    }
    r.deg_ = d;
    return r;
  }

  /// Returns a copy with `count` zero exponents inserted at the front.
  Monomial prepend(std::size_t count) const {
    Monomial r(n_ + count);
    for (std::size_t i = 0; i < n_; ++i) r.exp_[i + count] = exp_[i];
    r.deg_ = deg_;
    return r;
  }
  /// Drops the first `count` exponents; they must be zero.
  Monomial drop_front(std::size_t count) const {
    Monomial r(n_ - count);
    for (std::size_t i = count; i < n_; ++i) r.exp_[i - count] = exp_[i];
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.n_; ++i) r.deg_ += r.exp_[i];
    return r;
  }

  std::uint64_t weighted_degree(std::span<const int> weights) const noexcept {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += static_cast<std::uint64_t>(weights[i]) * exp_[i];
    return d;
  }

  std::vector<int> exponents() const { return {exp_.begin(), exp_.begin() + n_}; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 131 + exp_[i];
    return h;
  }

  void same_length(const Monomial& o) const {
    if (n_ != o.n_) throw StructuralError("monomials of different length");
  }

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace linkagelab
