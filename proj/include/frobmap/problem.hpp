#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/ideal.hpp"
#include "frobmap/parse.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/presets.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {

// A source-positioned raw expression, parsed once the ring is known.
struct RawExpr {
  std::string text;
  int line = 0;
  int column = 0;
};

// Line-oriented problem file:
//   p = <int>
//   vars = <name>, <name>, ...
//   gens = <poly>, <poly>, ...
//   e_max = <int>
//   preset = <name>           (overrides p/vars/gens/e_max)
// plus the operand keys used by the `op` subcommand:
//   gens2 = <poly>, ...       second ideal
//   arg = <poly>              membership argument
//   e = <int>                 bracket level
struct ProblemFile {
  std::optional<std::int64_t> p;
  std::vector<std::string> vars;
  std::vector<RawExpr> gens;
  std::optional<int> e_max;
  std::optional<std::string> preset;
  std::vector<RawExpr> gens2;
  std::optional<RawExpr> arg;
  std::optional<int> op_e;
};

namespace detail {

inline std::pair<std::string, int> trim_with_offset(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return {s.substr(b, e - b), static_cast<int>(b)};
}

inline std::int64_t parse_int_value(const std::string& raw, int line,
                                    int column) {
  auto [text, off] = trim_with_offset(raw);
  if (text.empty()) throw ParseError("expected an integer", line, column);
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size())
    throw ParseError("expected an integer", line, column + off);
  std::int64_t v = 0;
  bool neg = i == 1;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an integer, found '" + text + "'", line,
                       column + off);
    if (__builtin_mul_overflow(v, std::int64_t{10}, &v) ||
        __builtin_add_overflow(v, std::int64_t{c - '0'}, &v))
      throw ParseError("integer value too large", line, column + off);
  }
  return neg ? -v : v;
}

// Splits a comma-separated value, keeping the source position of each piece.
inline std::vector<RawExpr> split_list(const std::string& raw, int line,
                                       int column) {
  std::vector<RawExpr> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = raw.find(',', start);
    std::string piece =
        comma == std::string::npos ? raw.substr(start) : raw.substr(start, comma - start);
    auto [text, off] = trim_with_offset(piece);
    if (text.empty())
      throw ParseError("empty list entry", line,
                       column + static_cast<int>(start));
    out.push_back({text, line, column + static_cast<int>(start) + off});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  std::vector<std::string> seen;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line =
        nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

    auto [stripped, key_off] = detail::trim_with_offset(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", line_no, key_off + 1);
    auto [key, koff] = detail::trim_with_offset(line.substr(0, eq));
    (void)koff;
    if (key.empty()) throw ParseError("missing key", line_no, 1);
    for (const std::string& s : seen)
      if (s == key)
        throw ParseError("duplicate key '" + key + "'", line_no, 1);
    seen.push_back(key);
    std::string value = line.substr(eq + 1);
    int vcol = static_cast<int>(eq) + 2;  // 1-based column of value start

    if (key == "p") {
      pf.p = detail::parse_int_value(value, line_no, vcol);
    } else if (key == "vars") {
      for (RawExpr& v : detail::split_list(value, line_no, vcol))
        pf.vars.push_back(std::move(v.text));
    } else if (key == "gens") {
      pf.gens = detail::split_list(value, line_no, vcol);
    } else if (key == "e_max") {
      std::int64_t v = detail::parse_int_value(value, line_no, vcol);
      if (v < 1 || v > 1'000'000)
        throw ParseError("e_max out of range", line_no, vcol);
      pf.e_max = static_cast<int>(v);
    } else if (key == "preset") {
      auto [name, noff] = detail::trim_with_offset(value);
      if (name.empty()) throw ParseError("empty preset name", line_no, vcol);
      (void)noff;
      pf.preset = name;
    } else if (key == "gens2") {
      pf.gens2 = detail::split_list(value, line_no, vcol);
    } else if (key == "arg") {
      auto [expr, eoff] = detail::trim_with_offset(value);
      if (expr.empty()) throw ParseError("empty arg", line_no, vcol);
      pf.arg = RawExpr{expr, line_no, vcol + eoff};
    } else if (key == "e") {
      std::int64_t v = detail::parse_int_value(value, line_no, vcol);
      if (v < 0 || v > 1'000'000)
        throw ParseError("e out of range", line_no, vcol);
      pf.op_e = static_cast<int>(v);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }
  return pf;
}

// A problem ready to run: ring built, generators parsed and checked.
struct ResolvedProblem {
  std::string preset_name;  // empty when no preset involved
  std::int64_t p = 0;
  RingContextPtr ring;
  Ideal ideal;
  int e_max = 0;
  std::optional<Ideal> ideal2;
  std::optional<Polynomial> arg;
  std::optional<int> op_e;
};

namespace detail {

inline Ideal parse_generator_list(const RingContextPtr& ring,
                                  const std::vector<RawExpr>& exprs,
                                  const char* what) {
  std::vector<Polynomial> gens;
  gens.reserve(exprs.size());
  for (const RawExpr& ex : exprs) {
    Polynomial g = parse_polynomial(ring, ex.text, ex.line, ex.column);
    if (g.is_zero())
      throw ConfigError(std::string(what) + " '" + ex.text +
                        "' reduces to zero mod p");
    gens.push_back(std::move(g));
  }
  return Ideal::make(ring, std::move(gens));
}

}  // namespace detail

inline ResolvedProblem resolve_problem(
    const ProblemFile& file, std::optional<std::int64_t> p_override = {},
    std::optional<int> e_max_override = {}) {
  ProblemFile pf = file;
  ResolvedProblem rp;
  if (pf.preset) {
    const Preset* pre = find_preset(*pf.preset);
    if (!pre) throw ConfigError("unknown preset '" + *pf.preset + "'");
    rp.preset_name = pre->name;
    // the preset supplies the whole problem; in-file fields are superseded,
    // only command-line overrides can change p or e_max
    pf.p = pre->default_p;
    pf.vars = pre->vars;
    pf.gens.clear();
    for (const std::string& g : pre->gens) pf.gens.push_back({g, 0, 1});
    pf.e_max = pre->default_e_max;
  }
  if (p_override) pf.p = *p_override;
  if (e_max_override) pf.e_max = *e_max_override;

  if (!pf.p) throw ConfigError("characteristic p is required");
  if (pf.vars.empty()) throw ConfigError("variable list is required");
  if (pf.gens.empty()) throw ConfigError("generator list is required");

  rp.p = *pf.p;
  rp.ring = RingContext::make(rp.p, pf.vars);
  rp.ideal = detail::parse_generator_list(rp.ring, pf.gens, "generator");
  rp.e_max = pf.e_max.value_or(3);
  if (!pf.gens2.empty())
    rp.ideal2 = detail::parse_generator_list(rp.ring, pf.gens2, "generator");
  if (pf.arg)
    rp.arg = parse_polynomial(rp.ring, pf.arg->text, pf.arg->line,
                              pf.arg->column);
  rp.op_e = pf.op_e;
  return rp;
}

}  // namespace frobmap
