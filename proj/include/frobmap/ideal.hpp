#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/monomial.hpp"
#include "frobmap/monomial_ideal.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {

// Global ceiling on basis computations.  A "step" is one reduction
// subtraction or one S-pair considered; the default is generous enough for
// everything in the test suite while still stopping runaway runs.
struct EngineLimits {
  std::int64_t max_steps = 2'000'000'000;
};

inline EngineLimits& engine_limits() {
  static EngineLimits limits;
  return limits;
}

// Reduced monic Groebner basis: elements monic, no term of any element
// divisible by the leading monomial of another, sorted ascending by leading
// monomial.  Unique per (ideal, order), which makes it the canonical form
// used for ideal equality.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingContextPtr ring, std::vector<Polynomial> elems)
      : ring_(std::move(ring)), elems_(std::move(elems)) {}

  const RingContextPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  bool is_zero() const { return elems_.empty(); }
  bool is_unit() const {
    return elems_.size() == 1 && elems_[0].is_constant();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const GroebnerBasis& a, const GroebnerBasis& b) {
    return !(a == b);
  }

 private:
  RingContextPtr ring_;
  std::vector<Polynomial> elems_;
};

namespace detail {

// Full reduction of f by the reducers, tried in list order, leading term
// first.  No cofactors; scratch buffers reused across steps so the inner
// loop is a single merge.  steps, when given, enforces the engine budget.
inline Polynomial reduce_full(const Polynomial& f,
                              const std::vector<Polynomial>& reducers,
                              std::int64_t* steps = nullptr,
                              std::int64_t limit = 0) {
  const RingContextPtr& ring = f.ring();
  const std::int64_t p = ring->characteristic();
  std::vector<Term> h = f.terms();
  std::size_t start = 0;
  std::vector<Term> rem;
  std::vector<Term> buf;
  while (start < h.size()) {
    const Term& lt = h[start];
    const Polynomial* red = nullptr;
    for (const Polynomial& b : reducers)
      if (!b.is_zero() && b.leading_monomial().divides(lt.mono)) {
        red = &b;
        break;
      }
    if (!red) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    if (steps) {
      ++*steps;
      if (limit > 0 && *steps > limit)
        throw ResourceLimitError("reduction step budget exceeded");
    }
    FieldElement c = lt.coeff.mul(red->leading_coeff().inv(p), p);
    Monomial u = lt.mono.divide_exact(red->leading_monomial());
    const std::vector<Term>& bt = red->terms();
    buf.clear();
    std::size_t i = start + 1, j = 1;
    const MonomialOrder& ord = ring->order();
    while (i < h.size() && j < bt.size()) {
      Monomial bm = bt[j].mono.mul(u);
      auto cmp = mono_compare(h[i].mono, bm, ord);
      if (cmp == std::strong_ordering::greater) {
        buf.push_back(h[i++]);
      } else if (cmp == std::strong_ordering::less) {
        FieldElement d = c.mul(bt[j].coeff, p).neg(p);
        buf.push_back({d, std::move(bm)});
        ++j;
      } else {
        FieldElement d = h[i].coeff.sub(c.mul(bt[j].coeff, p), p);
        if (!d.is_zero()) buf.push_back({d, h[i].mono});
        ++i, ++j;
      }
    }
    for (; i < h.size(); ++i) buf.push_back(h[i]);
    for (; j < bt.size(); ++j)
      buf.push_back({c.mul(bt[j].coeff, p).neg(p), bt[j].mono.mul(u)});
    h.swap(buf);
    start = 0;
  }
  return Polynomial::from_terms(ring, std::move(rem));
}

class GBWorker {
 public:
  explicit GBWorker(RingContextPtr ring)
      : ring_(std::move(ring)),
        ord_(ring_->order()),
        limit_(engine_limits().max_steps),
        pending_(PairLess{&ord_}) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      Polynomial h = reduce_full(g, basis_, &steps_, limit_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic());
    }
    while (!pending_.empty()) {
      Pair pr = *pending_.begin();
      pending_.erase(pending_.begin());
      ++steps_;
      if (limit_ > 0 && steps_ > limit_)
        throw ResourceLimitError("pair budget exceeded");
      try {
        Polynomial s = spoly(pr);
        Polynomial h = reduce_full(s, basis_, &steps_, limit_);
        if (h.is_zero()) continue;
        if (h.is_constant()) return unit_basis();
        insert(h.monic());
      } catch (const OverflowError& e) {
        throw OverflowError(
            std::string(e.what()) + " while reducing the pair (" +
            render_monomial(basis_[static_cast<std::size_t>(pr.i)]
                                .leading_monomial(),
                            *ring_) +
            ", " +
            render_monomial(basis_[static_cast<std::size_t>(pr.j)]
                                .leading_monomial(),
                            *ring_) +
            ")");
      }
    }
    return finalize();
  }

 private:
  struct Pair {
    Monomial lcm;
    int i;
    int j;
  };

  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      auto c = mono_compare(a.lcm, b.lcm, *ord);
      if (c != std::strong_ordering::equal)
        return c == std::strong_ordering::less;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  GroebnerBasis unit_basis() const {
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)});
  }

  Polynomial spoly(const Pair& pr) {
    const Polynomial& f = basis_[static_cast<std::size_t>(pr.i)];
    const Polynomial& g = basis_[static_cast<std::size_t>(pr.j)];
    Term tf{FieldElement::one(), pr.lcm.divide_exact(f.leading_monomial())};
    Term tg{FieldElement::one(), pr.lcm.divide_exact(g.leading_monomial())};
    return f.term_mul(tf).sub(g.term_mul(tg));
  }

  // Pair bookkeeping after appending a new basis element: new pairs are
  // filtered by the coprime and lcm-divisibility criteria, then surviving
  // old pairs are pruned by the chain criterion.
  void insert(Polynomial h) {
    int t = static_cast<int>(basis_.size());
    const Monomial& lmt = h.leading_monomial();

    struct Cand {
      Monomial l;
      int i;
      bool coprime;
      bool kept = false;
    };
    std::vector<Cand> cands;
    cands.reserve(basis_.size());
    for (int i = 0; i < t; ++i) {
      const Monomial& lmi =
          basis_[static_cast<std::size_t>(i)].leading_monomial();
      cands.push_back({lmi.lcm(lmt), i, lmi.coprime_with(lmt)});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (cands[b].l.divides(cands[a].l)) keep = false;
        for (std::size_t b = 0; b < a && keep; ++b)
          if (cands[b].kept && cands[b].l.divides(cands[a].l)) keep = false;
      }
      cands[a].kept = keep;
    }
    for (const Cand& c : cands)
      if (c.kept && !c.coprime) pending_.insert({c.l, c.i, t});

    for (auto it = pending_.begin(); it != pending_.end();) {
      if (it->j == t) {
        ++it;
        continue;
      }
      const Monomial& lmi =
          basis_[static_cast<std::size_t>(it->i)].leading_monomial();
      const Monomial& lmj =
          basis_[static_cast<std::size_t>(it->j)].leading_monomial();
      if (lmt.divides(it->lcm) && lmi.lcm(lmt) != it->lcm &&
          lmj.lcm(lmt) != it->lcm)
        it = pending_.erase(it);
      else
        ++it;
    }
    basis_.push_back(std::move(h));
  }

  GroebnerBasis finalize() {
    std::vector<int> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      auto c = mono_compare(basis_[static_cast<std::size_t>(a)].leading_monomial(),
                            basis_[static_cast<std::size_t>(b)].leading_monomial(),
                            ord_);
      if (c != std::strong_ordering::equal)
        return c == std::strong_ordering::less;
      return a < b;
    });
    std::vector<Polynomial> kept;
    for (int idx : order) {
      const Monomial& lm =
          basis_[static_cast<std::size_t>(idx)].leading_monomial();
      bool redundant = false;
      for (const Polynomial& k : kept)
        if (k.leading_monomial().divides(lm)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(basis_[static_cast<std::size_t>(idx)]);
    }
    // tail-reduce each element against the others; leading monomials form an
    // antichain so they survive, and only reducer leading monomials matter
    // for the "reduced" property, so one pass suffices
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      kept[i] = reduce_full(kept[i], others, &steps_, limit_).monic();
    }
    return GroebnerBasis(ring_, std::move(kept));
  }

  RingContextPtr ring_;
  MonomialOrder ord_;
  std::int64_t limit_;
  std::int64_t steps_ = 0;
  std::vector<Polynomial> basis_;
  std::set<Pair, PairLess> pending_;
};

}  // namespace detail

inline GroebnerBasis buchberger_basis(const RingContextPtr& ring,
                                      const std::vector<Polynomial>& gens) {
  return detail::GBWorker(ring).run(gens);
}

// Ideal of the ring: a generator list plus a lazily computed, shared,
// at-most-once Groebner basis cache.
class Ideal {
 public:
  static Ideal make(RingContextPtr ring, std::vector<Polynomial> gens) {
    Ideal I;
    I.ring_ = std::move(ring);
    for (Polynomial& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(I.ring_, g.ring());
      I.gens_.push_back(std::move(g));
    }
    I.cache_ = std::make_shared<BasisCache>();
    return I;
  }

  static Ideal zero(RingContextPtr ring) { return make(std::move(ring), {}); }

  static Ideal unit(RingContextPtr ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    return make(std::move(ring), {one});
  }

  static Ideal from_monomial_ideal(const MonomialIdeal& M) {
    std::vector<Polynomial> gens;
    gens.reserve(M.generators().size());
    for (const Monomial& m : M.generators())
      gens.push_back(Polynomial::from_monomial(M.ring(), m));
    return make(M.ring(), std::move(gens));
  }

  // Wraps a finished basis as an ideal whose cache is already filled.
  static Ideal with_basis(GroebnerBasis gb) {
    Ideal I = make(gb.ring(), gb.elements());
    std::call_once(I.cache_->flag, [&] { I.cache_->basis = std::move(gb); });
    return I;
  }

  const RingContextPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool has_constant_generator() const {
    for (const Polynomial& g : gens_)
      if (g.is_constant()) return true;
    return false;
  }

  bool all_monomial() const {
    for (const Polynomial& g : gens_)
      if (!g.is_single_term()) return false;
    return true;
  }

  MonomialIdeal to_monomial_ideal() const {
    std::vector<Monomial> monos;
    monos.reserve(gens_.size());
    for (const Polynomial& g : gens_) {
      if (!g.is_single_term())
        throw InternalError("monomial conversion of a non-monomial ideal");
      monos.push_back(g.leading_monomial());
    }
    return MonomialIdeal::make(ring_, std::move(monos));
  }

  const GroebnerBasis& basis() const {
    std::call_once(cache_->flag,
                   [&] { cache_->basis = buchberger_basis(ring_, gens_); });
    return *cache_->basis;
  }

  bool has_cached_basis() const { return cache_->basis.has_value(); }

 private:
  struct BasisCache {
    std::once_flag flag;
    std::optional<GroebnerBasis> basis;
  };

  RingContextPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<BasisCache> cache_;
};

inline const GroebnerBasis& buchberger(const Ideal& I) { return I.basis(); }

// Routing: Auto sends all-monomial inputs through the combinatorial kernel,
// GeneralOnly forces the basis engine (used for cross-checking).
enum class PathPolicy { Auto, GeneralOnly };

inline bool ideal_membership(const Polynomial& f, const Ideal& I,
                             PathPolicy policy = PathPolicy::Auto) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  if (policy == PathPolicy::Auto && I.all_monomial()) {
    // a polynomial lies in a monomial ideal iff each of its terms does
    MonomialIdeal M = I.to_monomial_ideal();
    for (const Term& t : f.terms())
      if (!mono_membership(t.mono, M)) return false;
    return true;
  }
  return detail::reduce_full(f, I.basis().elements()).is_zero();
}

inline bool ideal_contains(const Ideal& I, const Ideal& J,
                           PathPolicy policy = PathPolicy::Auto) {
  require_same_ring(I.ring(), J.ring());
  for (const Polynomial& g : J.generators())
    if (!ideal_membership(g, I, policy)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J,
                        PathPolicy policy = PathPolicy::Auto) {
  require_same_ring(I.ring(), J.ring());
  if (policy == PathPolicy::Auto && I.all_monomial() && J.all_monomial())
    return I.to_monomial_ideal() == J.to_monomial_ideal();
  return I.basis() == J.basis();
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero_ideal()) return J;
  if (J.is_zero_ideal()) return I;
  if (I.all_monomial() && J.all_monomial())
    return Ideal::from_monomial_ideal(
        mono_sum(I.to_monomial_ideal(), J.to_monomial_ideal()));
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal::make(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  if (I.all_monomial() && J.all_monomial())
    return Ideal::from_monomial_ideal(
        mono_product(I.to_monomial_ideal(), J.to_monomial_ideal()));
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const Polynomial& a : I.generators())
    for (const Polynomial& b : J.generators()) gens.push_back(a.mul(b));
  return Ideal::make(I.ring(), std::move(gens));
}

inline Ideal bracket_power(const Ideal& I, int e) {
  if (e < 0) throw ConfigError("bracket level must be non-negative");
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const Polynomial& g : I.generators())
    gens.push_back(g.frobenius_power(e));
  return Ideal::make(I.ring(), std::move(gens));
}

namespace detail {

inline Polynomial lift_to_elimination(const Polynomial& f,
                                      const RingContextPtr& rt) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<Exponent> e;
    e.reserve(t.mono.exponents().size() + 1);
    e.push_back(0);
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(rt, std::move(terms));
}

inline Polynomial restrict_from_elimination(const Polynomial& f,
                                            const RingContextPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    if (t.mono[0] != 0)
      throw InternalError("auxiliary variable survived elimination");
    std::vector<Exponent> e(t.mono.exponents().begin() + 1,
                            t.mono.exponents().end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace detail

// I cap J by the auxiliary-variable method: the basis of t*I + (1-t)*J under
// an order eliminating t, restricted to its t-free part, is the reduced
// basis of the intersection.
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J,
                                PathPolicy policy = PathPolicy::Auto) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  if (policy == PathPolicy::Auto && I.all_monomial() && J.all_monomial())
    return Ideal::from_monomial_ideal(
        mono_intersection(I.to_monomial_ideal(), J.to_monomial_ideal()));
  if (I.has_constant_generator()) return J;
  if (J.has_constant_generator()) return I;

  RingContextPtr rt = I.ring()->extended_for_elimination();
  Polynomial t = Polynomial::variable(rt, 0);
  Polynomial one_minus_t = Polynomial::constant(rt, 1).sub(t);
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() + J.generators().size());
  for (const Polynomial& g : I.generators())
    gens.push_back(detail::lift_to_elimination(g, rt).mul(t));
  for (const Polynomial& h : J.generators())
    gens.push_back(detail::lift_to_elimination(h, rt).mul(one_minus_t));
  GroebnerBasis gb = buchberger_basis(rt, gens);
  std::vector<Polynomial> kept;
  for (const Polynomial& e : gb.elements())
    if (e.leading_monomial()[0] == 0)
      kept.push_back(detail::restrict_from_elimination(e, I.ring()));
  return Ideal::with_basis(GroebnerBasis(I.ring(), std::move(kept)));
}

namespace detail {

// (I : f) for a single nonzero f: every generator of I cap (f) is divisible
// by f; the exact quotients generate the colon.
inline Ideal colon_single(const Ideal& I, const Polynomial& f,
                          PathPolicy policy) {
  if (f.is_constant()) return I;
  Ideal F = Ideal::make(I.ring(), {f});
  Ideal inter = ideal_intersection(I, F, policy);
  std::vector<Polynomial> quotients;
  quotients.reserve(inter.generators().size());
  for (const Polynomial& g : inter.generators()) {
    DivisionResult d = normal_form(g, {f});
    if (!d.remainder.is_zero())
      throw InternalError("colon quotient division left a remainder");
    quotients.push_back(std::move(d.cofactors[0]));
  }
  return Ideal::make(I.ring(), std::move(quotients));
}

}  // namespace detail

inline Ideal ideal_colon(const Ideal& I, const Ideal& J,
                         PathPolicy policy = PathPolicy::Auto) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());  // vacuous condition
  if (I.is_zero_ideal()) return Ideal::zero(I.ring());
  if (policy == PathPolicy::Auto && I.all_monomial() && J.all_monomial())
    return Ideal::from_monomial_ideal(
        mono_colon(I.to_monomial_ideal(), J.to_monomial_ideal()));
  Ideal r = detail::colon_single(I, J.generators()[0], policy);
  for (std::size_t j = 1; j < J.generators().size(); ++j)
    r = ideal_intersection(
        r, detail::colon_single(I, J.generators()[j], policy), policy);
  return r;
}

// Canonical presentation: minimal generators for monomial ideals, reduced
// basis elements otherwise.
inline Ideal ideal_canonical(const Ideal& I,
                             PathPolicy policy = PathPolicy::Auto) {
  if (policy == PathPolicy::Auto && I.all_monomial())
    return Ideal::from_monomial_ideal(I.to_monomial_ideal());
  return Ideal::with_basis(I.basis());
}

}  // namespace frobmap
