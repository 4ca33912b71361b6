#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/field.hpp"
#include "frobmap/monomial.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {

struct Term {
  FieldElement coeff;
  Monomial mono;
};

// Sparse polynomial over GF(p): term list strictly descending in the ring's
// monomial order, no zero coefficients.  Equal polynomials have identical
// term lists, so equality is memberwise.
class Polynomial {
 public:
  Polynomial() = default;  // null-context placeholder, only for containers

  static Polynomial zero(RingContextPtr ring) {
    Polynomial f;
    f.ring_ = std::move(ring);
    return f;
  }

  static Polynomial constant(RingContextPtr ring, std::int64_t c) {
    FieldElement fc = FieldElement::reduce(c, ring->characteristic());
    Polynomial f = zero(std::move(ring));
    if (!fc.is_zero()) f.terms_.push_back({fc, Monomial::one(f.ring_->width())});
    return f;
  }

  static Polynomial from_monomial(RingContextPtr ring, Monomial m,
                                  std::int64_t c = 1) {
    FieldElement fc = FieldElement::reduce(c, ring->characteristic());
    if (m.width() != ring->width())
      throw ContextMismatchError("monomial width does not match ring");
    Polynomial f = zero(std::move(ring));
    if (!fc.is_zero()) f.terms_.push_back({fc, std::move(m)});
    return f;
  }

  static Polynomial variable(RingContextPtr ring, int i) {
    Monomial m = ring->variable_monomial(i);
    return from_monomial(std::move(ring), std::move(m));
  }

  // Accepts terms in any order, with repeats and zeros; canonicalizes.
  static Polynomial from_terms(RingContextPtr ring, std::vector<Term> terms) {
    for (const Term& t : terms)
      if (t.mono.width() != ring->width())
        throw ContextMismatchError("term width does not match ring");
    Polynomial f = zero(std::move(ring));
    f.terms_ = canonicalize(std::move(terms), f.ring_);
    return f;
  }

  const RingContextPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  FieldElement leading_coeff() const { return leading_term().coeff; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_single_term() const { return terms_.size() == 1; }

  Polynomial add(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const std::int64_t p = ring_->characteristic();
    const MonomialOrder& ord = ring_->order();
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      auto c = mono_compare(terms_[i].mono, o.terms_[j].mono, ord);
      if (c == std::strong_ordering::greater) {
        r.terms_.push_back(terms_[i++]);
      } else if (c == std::strong_ordering::less) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        FieldElement s = terms_[i].coeff.add(o.terms_[j].coeff, p);
        if (!s.is_zero()) r.terms_.push_back({s, terms_[i].mono});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Polynomial neg() const {
    const std::int64_t p = ring_->characteristic();
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = t.coeff.neg(p);
    return r;
  }

  Polynomial sub(const Polynomial& o) const { return add(o.neg()); }

  Polynomial scaled(FieldElement c) const {
    const std::int64_t p = ring_->characteristic();
    if (c.is_zero()) return zero(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = t.coeff.mul(c, p);
    return r;
  }

  // Multiplication by a single term keeps the list order intact.
  Polynomial term_mul(const Term& t) const {
    const std::int64_t p = ring_->characteristic();
    if (t.coeff.is_zero()) return zero(ring_);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& s : terms_)
      r.terms_.push_back({s.coeff.mul(t.coeff, p), s.mono.mul(t.mono)});
    return r;
  }

  Polynomial mul(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const std::int64_t p = ring_->characteristic();
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        prod.push_back({a.coeff.mul(b.coeff, p), a.mono.mul(b.mono)});
    Polynomial r = zero(ring_);
    r.terms_ = canonicalize(std::move(prod), ring_);
    return r;
  }

  // f^(p^e).  Termwise: in characteristic p the q-th power map is additive,
  // and a^q = a on the prime field, so only exponents change.
  Polynomial frobenius_power(int e) const {
    if (e < 0) throw ConfigError("frobenius level must be non-negative");
    if (e == 0) return *this;
    std::int64_t q = checked_pow(ring_->characteristic(), e);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    // scaling exponents by q preserves the term order, so no re-sort
    for (const Term& t : terms_) r.terms_.push_back({t.coeff, t.mono.scaled(q)});
    return r;
  }

  Polynomial without_leading_term() const {
    if (terms_.empty()) throw Error("tail of zero polynomial");
    Polynomial r = zero(ring_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const std::int64_t p = ring_->characteristic();
    return scaled(leading_coeff().inv(p));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coeff != b.terms_[i].coeff ||
          a.terms_[i].mono != b.terms_[i].mono)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  static std::vector<Term> canonicalize(std::vector<Term> terms,
                                        const RingContextPtr& ring) {
    const std::int64_t p = ring->characteristic();
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return mono_compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = out.back().coeff.add(t.coeff, p);
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    return out;
  }

  RingContextPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  return f.add(g);
}
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  return f.mul(g);
}
inline Polynomial poly_frobenius_power(const Polynomial& f, int e) {
  return f.frobenius_power(e);
}

inline std::string render_monomial(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (int i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[static_cast<std::size_t>(i)];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingContext& ring = *f.ring();
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string m = render_monomial(t.mono, ring);
    if (t.coeff.is_one())
      out += m;
    else if (m == "1")
      out += std::to_string(t.coeff.value());
    else
      out += std::to_string(t.coeff.value()) + "*" + m;
  }
  return out;
}

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};

// Multivariate division.  Reducers are tried in list order and the leading
// term is reduced first, so the result is deterministic.  Satisfies
// f = sum(cofactors[i] * G[i]) + remainder, and no remainder term is
// divisible by any LM(G[i]).
inline DivisionResult normal_form(const Polynomial& f,
                                  const std::vector<Polynomial>& G) {
  const RingContextPtr& ring = f.ring();
  const std::int64_t p = ring->characteristic();
  for (const Polynomial& g : G) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) throw Error("zero divisor polynomial in normal_form");
  }
  DivisionResult res;
  res.remainder = Polynomial::zero(ring);
  res.cofactors.assign(G.size(), Polynomial::zero(ring));

  Polynomial h = f;
  std::vector<Term> rem;  // collected in strictly descending order
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!G[i].leading_monomial().divides(lt.mono)) continue;
      Term t{lt.coeff.mul(G[i].leading_coeff().inv(p), p),
             lt.mono.divide_exact(G[i].leading_monomial())};
      h = h.sub(G[i].term_mul(t));
      res.cofactors[i] =
          res.cofactors[i].add(Polynomial::from_monomial(ring, t.mono, 1)
                                   .scaled(t.coeff));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      h = h.without_leading_term();
    }
  }
  res.remainder = Polynomial::from_terms(ring, std::move(rem));
  return res;
}

}  // namespace frobmap
