#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobmap/ideal.hpp"
#include "frobmap/monomial_ideal.hpp"
#include "frobmap/parse.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/ring.hpp"

namespace testutil {

using namespace frobmap;

inline RingContextPtr ring_xyz(std::int64_t p) {
  return RingContext::make(p, {"x", "y", "z"});
}

inline Polynomial pp(const RingContextPtr& R, const std::string& src) {
  return parse_polynomial(R, src);
}

inline Monomial mono(const RingContextPtr& R, const std::string& src) {
  Polynomial f = pp(R, src);
  if (f.num_terms() != 1) throw std::runtime_error("not a monomial: " + src);
  return f.leading_monomial();
}

inline Ideal ideal(const RingContextPtr& R,
                   const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const std::string& g : gens) ps.push_back(pp(R, g));
  return Ideal::make(R, ps);
}

inline MonomialIdeal mideal(const RingContextPtr& R,
                            const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const std::string& g : gens) ms.push_back(mono(R, g));
  return MonomialIdeal::make(R, ms);
}

inline Monomial random_monomial(std::mt19937_64& rng, int width,
                                int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  std::vector<Exponent> e(static_cast<std::size_t>(width));
  for (auto& x : e) x = d(rng);
  return Monomial(std::move(e));
}

// Nonzero random monomial (at least one positive exponent).
inline Monomial random_monomial_nonunit(std::mt19937_64& rng, int width,
                                        int max_exp) {
  for (;;) {
    Monomial m = random_monomial(rng, width, max_exp);
    if (!m.is_one()) return m;
  }
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingContextPtr& R,
                              int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<std::int64_t> c(0, R->characteristic() - 1);
  std::vector<Term> terms;
  int n = nt(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back({FieldElement::reduce(c(rng), R->characteristic()),
                     random_monomial(rng, R->width(), max_exp)});
  return Polynomial::from_terms(R, std::move(terms));
}

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng,
                                           const RingContextPtr& R,
                                           int max_gens, int max_exp) {
  std::uniform_int_distribution<int> ng(1, max_gens);
  std::vector<Monomial> gens;
  int n = ng(rng);
  for (int i = 0; i < n; ++i)
    gens.push_back(random_monomial_nonunit(rng, R->width(), max_exp));
  return MonomialIdeal::make(R, std::move(gens));
}

// Generic power by repeated squaring; the independent oracle for the
// termwise Frobenius implementation.
inline Polynomial poly_pow(const Polynomial& f, std::int64_t k) {
  Polynomial acc = Polynomial::constant(f.ring(), 1);
  Polynomial b = f;
  while (k > 0) {
    if (k & 1) acc = acc.mul(b);
    b = b.mul(b);
    k >>= 1;
  }
  return acc;
}

}  // namespace testutil
