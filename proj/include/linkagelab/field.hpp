#pragma once

#include <cstdint>
#include <ostream>

#include "linkagelab/error.hpp"

namespace linkagelab {

using Coeff = std::uint32_t;

/// Raw arithmetic in Z/p for p < 2^16. Operands must already be reduced.
namespace fp {

inline Coeff add(Coeff a, Coeff b, Coeff p) noexcept {
  Coeff s = a + b;
  return s >= p ? s - p : s;
}
inline Coeff sub(Coeff a, Coeff b, Coeff p) noexcept { return a >= b ? a - b : a + p - b; }
inline Coeff neg(Coeff a, Coeff p) noexcept { return a == 0 ? 0 : p - a; }
inline Coeff mul(Coeff a, Coeff b, Coeff p) noexcept {
  return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p);
}
inline Coeff pow(Coeff a, std::uint64_t e, Coeff p) noexcept {
  Coeff r = 1 % p;
  while (e > 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}
/// Fermat inverse; a must be nonzero.
inline Coeff inv(Coeff a, Coeff p) noexcept { return pow(a, p - 2, p); }

/// Maps a signed integer into [0, p).
inline Coeff reduce(long long v, Coeff p) noexcept {
  long long r = v % static_cast<long long>(p);
  return static_cast<Coeff>(r < 0 ? r + p : r);
}

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fp

/// An element of the prime field F_p carrying its characteristic.
class FieldElem {
 public:
  FieldElem(Coeff value, Coeff p) : p_(p) {
    if (p < 2 || p >= (1U << 16) || !fp::is_prime(p))
      throw PreconditionError("characteristic must be prime and below 2^16");
    value_ = value % p;
  }

  Coeff value() const noexcept { return value_; }
  Coeff characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {fp::add(value_, check(o).value_, p_), p_}; }
  FieldElem operator-(const FieldElem& o) const { return {fp::sub(value_, check(o).value_, p_), p_}; }
  FieldElem operator*(const FieldElem& o) const { return {fp::mul(value_, check(o).value_, p_), p_}; }
  FieldElem operator-() const { return {fp::neg(value_, p_), p_}; }
  FieldElem inverse() const {
    if (value_ == 0) throw PreconditionError("zero has no inverse");
    return {fp::inv(value_, p_), p_};
  }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.value_; }

 private:
  const FieldElem& check(const FieldElem& o) const {
    if (o.p_ != p_) throw StructuralError("field elements of different characteristic");
    return o;
  }

  Coeff value_;
  Coeff p_;
};

}  // namespace linkagelab
