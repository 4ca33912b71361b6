#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/monomial.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {

// Monomial ideal in canonical form: the unique minimal generating set (a
// divisibility antichain), sorted ascending in the ring order.  Equality of
// ideals is therefore equality of generator lists.
class MonomialIdeal {
 public:
  static MonomialIdeal make(RingContextPtr ring, std::vector<Monomial> gens) {
    for (const Monomial& m : gens)
      if (m.width() != ring->width())
        throw ContextMismatchError("monomial width does not match ring");
    MonomialIdeal I;
    I.ring_ = std::move(ring);
    I.gens_ = minimalize(std::move(gens), I.ring_->order());
    return I;
  }

  static MonomialIdeal zero(RingContextPtr ring) {
    return make(std::move(ring), {});
  }

  static MonomialIdeal unit(RingContextPtr ring) {
    Monomial one = Monomial::one(ring->width());
    return make(std::move(ring), {one});
  }

  const RingContextPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

 private:
  // Ascending sort puts every divisor before its multiples (monomial orders
  // refine divisibility), so one forward sweep yields the antichain.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens,
                                          const MonomialOrder& ord) {
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
      return mono_compare(a, b, ord) == std::strong_ordering::less;
    });
    std::vector<Monomial> out;
    for (Monomial& m : gens) {
      bool redundant = false;
      for (const Monomial& g : out)
        if (g.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(std::move(m));
    }
    return out;
  }

  RingContextPtr ring_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal mono_minimalize(RingContextPtr ring,
                                     std::vector<Monomial> gens) {
  return MonomialIdeal::make(std::move(ring), std::move(gens));
}

inline bool mono_membership(const Monomial& m, const MonomialIdeal& I) {
  if (m.width() != I.ring()->width())
    throw ContextMismatchError("monomial width does not match ideal ring");
  for (const Monomial& g : I.generators())
    if (g.divides(m)) return true;
  return false;
}

inline MonomialIdeal mono_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

inline MonomialIdeal mono_intersection(const MonomialIdeal& I,
                                       const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(a.lcm(b));
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

// (I : m) is generated by g / gcd(g, m) over the generators g of I.
inline MonomialIdeal mono_colon_single(const MonomialIdeal& I,
                                       const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

inline MonomialIdeal mono_colon(const MonomialIdeal& I,
                                const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw ConfigError("colon by the zero monomial ideal");
  MonomialIdeal r = mono_colon_single(I, J.generators()[0]);
  for (std::size_t j = 1; j < J.generators().size(); ++j)
    r = mono_intersection(r, mono_colon_single(I, J.generators()[j]));
  return r;
}

inline MonomialIdeal mono_product(const MonomialIdeal& I,
                                  const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(a.mul(b));
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

inline MonomialIdeal mono_bracket(const MonomialIdeal& I, std::int64_t q) {
  if (q <= 0) throw ConfigError("bracket power must be positive");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(g.scaled(q));
  return MonomialIdeal::make(I.ring(), std::move(gens));
}

inline bool mono_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const Monomial& g : J.generators())
    if (!mono_membership(g, I)) return false;
  return true;
}

}  // namespace frobmap
