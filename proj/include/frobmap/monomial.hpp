#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "frobmap/errors.hpp"

namespace frobmap {

using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("exponent overflow in addition");
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("exponent overflow in multiplication");
  return r;
}

// base^exp with overflow detection; exp >= 0.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw ConfigError("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

enum class OrderKind { DegRevLex, Lex };

// elim_block > 0 makes the first elim_block variables an elimination block:
// monomials are compared on that block first (degrevlex), then on the rest
// by `kind`.  Any monomial involving a block variable is then greater than
// any monomial free of them, which is what elimination needs.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int elim_block = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {
    for (Exponent x : e_)
      if (x < 0) throw ConfigError("negative exponent in monomial");
  }

  static Monomial one(int width) {
    return Monomial(std::vector<Exponent>(static_cast<std::size_t>(width), 0));
  }

  int width() const { return static_cast<int>(e_.size()); }
  Exponent operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  Exponent degree() const {
    Exponent d = 0;
    for (Exponent x : e_) d = checked_add(d, x);
    return d;
  }

  bool is_one() const {
    for (Exponent x : e_)
      if (x != 0) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    check_width(o);
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = checked_add(e_[i], o.e_[i]);
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& m) const {
    check_width(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  // this / d; requires d | this.
  Monomial divide_exact(const Monomial& d) const {
    check_width(d);
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (d.e_[i] > e_[i]) throw InternalError("inexact monomial division");
      r[i] = e_[i] - d.e_[i];
    }
    return Monomial(std::move(r));
  }

  // Generator transform of the colon ideal: this / gcd(this, m),
  // i.e. componentwise max(e - m, 0).
  Monomial colon(const Monomial& m) const {
    check_width(m);
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = e_[i] > m.e_[i] ? e_[i] - m.e_[i] : 0;
    return Monomial(std::move(r));
  }

  Monomial lcm(const Monomial& o) const {
    check_width(o);
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
    return Monomial(std::move(r));
  }

  Monomial gcd(const Monomial& o) const {
    check_width(o);
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = e_[i] < o.e_[i] ? e_[i] : o.e_[i];
    return Monomial(std::move(r));
  }

  bool coprime_with(const Monomial& o) const {
    check_width(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  // The bracket-power transform: every exponent times q.
  Monomial scaled(std::int64_t q) const {
    if (q <= 0) throw ConfigError("bracket scale must be positive");
    std::vector<Exponent> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = checked_mul(e_[i], q);
    return Monomial(std::move(r));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return a.e_ != b.e_;
  }

 private:
  void check_width(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw ContextMismatchError("monomial width mismatch");
  }

  std::vector<Exponent> e_;
};

namespace detail {

inline std::strong_ordering cmp_degrevlex(const std::vector<Exponent>& a,
                                          const std::vector<Exponent>& b,
                                          std::size_t lo, std::size_t hi) {
  Exponent da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da = checked_add(da, a[i]);
    db = checked_add(db, b[i]);
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i])
      return a[i] < b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering cmp_lex(const std::vector<Exponent>& a,
                                    const std::vector<Exponent>& b,
                                    std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering mono_compare(const Monomial& a, const Monomial& b,
                                         const MonomialOrder& order) {
  if (a.width() != b.width())
    throw ContextMismatchError("monomial width mismatch in comparison");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  std::size_t n = ea.size();
  std::size_t k = static_cast<std::size_t>(order.elim_block);
  if (k > n) k = n;
  if (k > 0) {
    auto c = detail::cmp_degrevlex(ea, eb, 0, k);
    if (c != std::strong_ordering::equal) return c;
  }
  return order.kind == OrderKind::DegRevLex ? detail::cmp_degrevlex(ea, eb, k, n)
                                            : detail::cmp_lex(ea, eb, k, n);
}

inline bool mono_less(const Monomial& a, const Monomial& b,
                      const MonomialOrder& order) {
  return mono_compare(a, b, order) == std::strong_ordering::less;
}

}  // namespace frobmap
