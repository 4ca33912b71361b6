#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/field.hpp"
#include "frobmap/monomial.hpp"

namespace frobmap {

class RingContext;
using RingContextPtr = std::shared_ptr<const RingContext>;

// Polynomial ring GF(p)[vars] with a fixed monomial order.  Immutable;
// everything downstream holds a shared pointer and checks identity/equality
// before mixing operands.
class RingContext {
 public:
  static RingContextPtr make(std::int64_t p, std::vector<std::string> vars,
                             MonomialOrder order = {}) {
    return std::shared_ptr<const RingContext>(
        new RingContext(p, std::move(vars), order));
  }

  std::int64_t characteristic() const { return p_; }
  const std::vector<std::string>& variables() const { return vars_; }
  int width() const { return static_cast<int>(vars_.size()); }
  const MonomialOrder& order() const { return order_; }

  int variable_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  Monomial variable_monomial(int i) const {
    std::vector<Exponent> e(vars_.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return Monomial(std::move(e));
  }

  bool same_ring(const RingContext& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
  }

  // Ring with one auxiliary variable prepended as an elimination block.
  // The "#t" name is not producible by the parser, so it can never collide
  // or leak into printed output.
  RingContextPtr extended_for_elimination() const {
    if (order_.elim_block != 0)
      throw InternalError("nested elimination ring");
    std::vector<std::string> vars;
    vars.reserve(vars_.size() + 1);
    vars.push_back("#t");
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    return std::shared_ptr<const RingContext>(
        new RingContext(p_, std::move(vars), MonomialOrder{order_.kind, 1},
                        /*internal=*/true));
  }

 private:
  RingContext(std::int64_t p, std::vector<std::string> vars,
              MonomialOrder order, bool internal = false)
      : p_(p), vars_(std::move(vars)), order_(order) {
    if (p < 2 || !is_prime(p))
      throw ConfigError("characteristic must be a prime");
    if (p >= (std::int64_t{1} << 31))
      throw ConfigError("characteristic too large (must fit 31 bits)");
    if (vars_.empty()) throw ConfigError("ring needs at least one variable");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (!internal || v != "#t") validate_name(v);
      auto [it, fresh] = index_.emplace(v, static_cast<int>(i));
      (void)it;
      if (!fresh) throw ConfigError("duplicate variable name: " + v);
    }
    if (order_.elim_block < 0 ||
        order_.elim_block > static_cast<int>(vars_.size()))
      throw ConfigError("elimination block out of range");
  }

  static void validate_name(const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw ConfigError("bad variable name: '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ConfigError("bad variable name: '" + v + "'");
  }

  std::int64_t p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::unordered_map<std::string, int> index_;
};

inline void require_same_ring(const RingContextPtr& a,
                              const RingContextPtr& b) {
  if (!a || !b) throw InternalError("null ring context");
  if (a.get() == b.get()) return;
  if (!a->same_ring(*b))
    throw ContextMismatchError("operands live in different rings");
}

}  // namespace frobmap
