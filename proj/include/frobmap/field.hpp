#pragma once

#include <cstdint>

#include "frobmap/errors.hpp"

namespace frobmap {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Residue in [0, p).  The modulus lives in the ring context and is passed
// to every operation; elements of different characteristics never mix
// because polynomials check context equality first.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement reduce(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return FieldElement(v);
  }

  static FieldElement one() { return FieldElement(1); }

  std::int64_t value() const { return r_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  FieldElement add(FieldElement o, std::int64_t p) const {
    std::int64_t s = r_ + o.r_;
    if (s >= p) s -= p;
    return FieldElement(s);
  }

  FieldElement sub(FieldElement o, std::int64_t p) const {
    std::int64_t s = r_ - o.r_;
    if (s < 0) s += p;
    return FieldElement(s);
  }

  FieldElement neg(std::int64_t p) const {
    return r_ == 0 ? FieldElement(0) : FieldElement(p - r_);
  }

  // Requires p < 2^31 so the product fits in 64 bits; RingContext enforces
  // that bound at construction.
  FieldElement mul(FieldElement o, std::int64_t p) const {
    return FieldElement((r_ * o.r_) % p);
  }

  FieldElement inv(std::int64_t p) const {
    if (r_ == 0) throw Error("inverse of zero in GF(p)");
    // extended Euclid
    std::int64_t a = r_, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw InternalError("non-invertible residue; p not prime?");
    if (x0 < 0) x0 += p;
    return FieldElement(x0);
  }

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.r_ == b.r_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) {
    return a.r_ != b.r_;
  }

 private:
  explicit FieldElement(std::int64_t r) : r_(r) {}
  std::int64_t r_ = 0;
};

}  // namespace frobmap
