#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/ideal.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {

struct FrobeniusConfig {
  RingContextPtr ring;
  Ideal ideal;
  int e_max = 1;

  static FrobeniusConfig make(Ideal I, int e_max) {
    if (e_max < 1) throw ConfigError("e_max must be at least 1");
    if (I.is_zero_ideal()) throw ConfigError("the ideal must be nonzero");
    Polynomial one = Polynomial::constant(I.ring(), 1);
    if (ideal_membership(one, I))
      throw ConfigError("the ideal must be proper");
    RingContextPtr ring = I.ring();
    return FrobeniusConfig{std::move(ring), std::move(I), e_max};
  }
};

using Composition = std::vector<int>;

namespace detail {

inline void compositions_rec(int remaining, int max_part, Composition& prefix,
                             std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int b = 1; b <= remaining && b <= max_part; ++b) {
    prefix.push_back(b);
    compositions_rec(remaining - b, max_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// All ordered compositions of e with every part in [1, e-1], in lexicographic
// order.  e = 1 has none (no part can be < 1), so the list is empty.
inline std::vector<Composition> compositions(int e) {
  if (e < 1) throw ConfigError("level must be positive");
  std::vector<Composition> out;
  if (e == 1) return out;
  Composition prefix;
  detail::compositions_rec(e, e - 1, prefix, out);
  return out;
}

struct LevelRecord {
  int e = 0;
  std::int64_t q = 0;  // 0 when the level failed before computing p^e
  std::optional<Ideal> K;
  std::optional<Ideal> L;
  std::vector<Polynomial> k_generators;
  std::optional<bool> contained_raw;
  std::optional<bool> contained_mod_bracket;
  std::vector<Polynomial> witnesses;
  std::int64_t wall_ms = 0;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct FrobeniusLadder {
  std::vector<LevelRecord> levels;
};

// Computes the ladder K_e, L_e and the per-level containment verdicts.
// K and N values are memoized, so the recursion and the brute-force
// enumeration share work across levels.
class FrobeniusCalculator {
 public:
  explicit FrobeniusCalculator(FrobeniusConfig cfg,
                               PathPolicy policy = PathPolicy::Auto,
                               bool brute_force_L = false)
      : cfg_(std::move(cfg)), policy_(policy), brute_(brute_force_L) {}

  const FrobeniusConfig& config() const { return cfg_; }
  PathPolicy policy() const { return policy_; }

  // K_e = (I^{[p^e]} : I), in canonical form.
  const Ideal& compute_K(int e) {
    check_level(e);
    auto it = k_.find(e);
    if (it != k_.end()) return it->second;
    Ideal K_e = ideal_canonical(
        ideal_colon(bracket_power(cfg_.ideal, e), cfg_.ideal, policy_),
        policy_);
    return k_.emplace(e, std::move(K_e)).first->second;
  }

  // N_e = sum over ALL compositions of e (parts up to e) of the twisted
  // products; equals K_e + L_e.  Recursion: split a composition by its
  // first part b, the rest is a composition of e-b.
  const Ideal& compute_N(int e) {
    check_level(e);
    auto it = n_.find(e);
    if (it != n_.end()) return it->second;
    Ideal acc = compute_K(e);
    for (int b = 1; b < e; ++b)
      acc = ideal_sum(acc,
                      ideal_product(compute_K(b),
                                    bracket_power(compute_N(e - b), b)));
    acc = ideal_canonical(acc, policy_);
    return n_.emplace(e, std::move(acc)).first->second;
  }

  // K_{c1} * K_{c2}^{[p^{c1}]} * ... with twist exponents the prefix sums.
  Ideal twisted_product(const Composition& c) {
    if (c.empty()) throw ConfigError("empty composition");
    Ideal acc = Ideal::unit(cfg_.ring);
    int shift = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 1) throw ConfigError("composition parts must be positive");
      Ideal factor = bracket_power(compute_K(c[j]), shift);
      acc = j == 0 ? std::move(factor) : ideal_product(acc, factor);
      shift += c[j];
    }
    return acc;
  }

  Ideal compute_L_recursive(int e) {
    check_level(e);
    Ideal acc = Ideal::zero(cfg_.ring);
    for (int b = 1; b < e; ++b)
      acc = ideal_sum(acc,
                      ideal_product(compute_K(b),
                                    bracket_power(compute_N(e - b), b)));
    return ideal_canonical(acc, policy_);
  }

  Ideal compute_L_bruteforce(int e) {
    check_level(e);
    Ideal acc = Ideal::zero(cfg_.ring);
    for (const Composition& c : compositions(e))
      acc = ideal_sum(acc, twisted_product(c));
    return ideal_canonical(acc, policy_);
  }

  Ideal compute_L(int e) {
    return brute_ ? compute_L_bruteforce(e) : compute_L_recursive(e);
  }

  // One level of the finite-generation test: is K_e inside L_e (raw), and
  // inside L_e + I^{[p^e]} (mod bracket)?  Witnesses are the canonical
  // generators of K_e that fail the mod-bracket membership, smallest first.
  LevelRecord finite_generation_step(int e) {
    check_level(e);
    auto t0 = std::chrono::steady_clock::now();
    LevelRecord rec;
    rec.e = e;
    rec.q = checked_pow(cfg_.ring->characteristic(), e);
    const Ideal& K = compute_K(e);
    Ideal L = compute_L(e);
    Ideal M = ideal_sum(L, bracket_power(cfg_.ideal, e));
    rec.contained_raw = ideal_contains(L, K, policy_);
    rec.contained_mod_bracket = ideal_contains(M, K, policy_);
    rec.k_generators = K.generators();
    if (!*rec.contained_mod_bracket)
      for (const Polynomial& g : rec.k_generators)
        if (!ideal_membership(g, M, policy_)) rec.witnesses.push_back(g);
    rec.K = K;
    rec.L = std::move(L);
    rec.wall_ms = elapsed_ms(t0);
    return rec;
  }

  // Levels run in increasing order; a failing level is recorded and the
  // remaining levels are still attempted.
  FrobeniusLadder run() {
    FrobeniusLadder ladder;
    for (int e = 1; e <= cfg_.e_max; ++e) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        ladder.levels.push_back(finite_generation_step(e));
      } catch (const std::exception& ex) {
        LevelRecord rec;
        rec.e = e;
        rec.error = ex.what();
        rec.wall_ms = elapsed_ms(t0);
        ladder.levels.push_back(std::move(rec));
      }
    }
    return ladder;
  }

 private:
  void check_level(int e) const {
    if (e < 1 || e > cfg_.e_max)
      throw ConfigError("level out of range (1.." +
                        std::to_string(cfg_.e_max) + ")");
  }

  static std::int64_t elapsed_ms(
      std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }

  FrobeniusConfig cfg_;
  PathPolicy policy_;
  bool brute_;
  std::map<int, Ideal> k_;
  std::map<int, Ideal> n_;
};

}  // namespace frobmap
