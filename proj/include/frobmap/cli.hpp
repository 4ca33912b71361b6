#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobmap/errors.hpp"
#include "frobmap/frobenius.hpp"
#include "frobmap/ideal.hpp"
#include "frobmap/problem.hpp"
#include "frobmap/report.hpp"
#include "frobmap/version.hpp"

namespace frobmap {
namespace detail {

// run_cli is re-entrant from tests; the step ceiling is global, so restore
// it when the invocation ends.
struct LimitGuard {
  std::int64_t saved = engine_limits().max_steps;
  ~LimitGuard() { engine_limits().max_steps = saved; }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> rendered_generators(const Ideal& I) {
  std::vector<std::string> out;
  out.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) out.push_back(to_string(g));
  return out;
}

inline ProblemEcho make_echo(const ResolvedProblem& rp) {
  ProblemEcho echo;
  echo.preset = rp.preset_name;
  echo.p = rp.p;
  echo.vars = rp.ring->variables();
  echo.gens = rendered_generators(rp.ideal);
  echo.e_max = rp.e_max;
  return echo;
}

inline bool level_records_agree(const LevelRecord& a, const LevelRecord& b) {
  return a.ok() && b.ok() && a.q == b.q &&
         a.contained_raw == b.contained_raw &&
         a.contained_mod_bracket == b.contained_mod_bracket &&
         a.k_generators == b.k_generators && a.witnesses == b.witnesses;
}

inline std::string op_result_json(const std::string& kind,
                                  const std::vector<std::string>& gens,
                                  std::optional<bool> member,
                                  const std::string& error) {
  nlohmann::ordered_json j;
  j["op"] = kind;
  if (member)
    j["member"] = *member;
  else
    j["generators"] = gens;
  j["error"] = error.empty() ? nlohmann::ordered_json(nullptr)
                             : nlohmann::ordered_json(error);
  j["version"] = kVersion;
  return j.dump(2) + "\n";
}

}  // namespace detail

// Exit codes: 0 success, 1 usage or input error, 2 computation error
// (overflow or resource ceiling), with a partial report still emitted.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  detail::LimitGuard limit_guard;

  CLI::App app{"Frobenius-map ladders over GF(p): K_e = (I^[p^e] : I), the "
               "below-level ideals L_e, and containment verdicts",
               "frobmap"};
  app.require_subcommand(1);

  std::string preset, input, format = "text";
  std::int64_t p_flag = 0;
  int e_max_flag = 0;
  std::int64_t limit = 0;
  bool brute = false, both = false;

  CLI::App* check = app.add_subcommand(
      "check", "run the full ladder and report per-level verdicts");
  check->add_option("--preset", preset,
                    "built-in problem (paper-monomial | paper-determinantal)");
  check->add_option("--input", input, "problem file");
  check->add_option("--p", p_flag, "characteristic override");
  check->add_option("--e-max", e_max_flag, "ladder height override");
  check->add_option("--format", format, "output format (text | json)")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--brute-force-L", brute,
                  "build L_e by enumerating compositions instead of the "
                  "recursion");
  check->add_flag("--both-paths", both,
                  "run the monomial kernel and the basis engine and compare");
  check->add_option("--limit", limit, "step ceiling for basis computations");

  std::string op_kind, op_input, op_format = "text";
  std::int64_t op_limit = 0;
  CLI::App* op = app.add_subcommand("op", "run a single ideal operation");
  op->add_option("kind", op_kind, "operation")
      ->required()
      ->check(CLI::IsMember(
          {"colon", "intersect", "product", "bracket", "gb", "member"}));
  op->add_option("--input", op_input, "problem file")->required();
  op->add_option("--format", op_format, "output format (text | json)")
      ->check(CLI::IsMember({"text", "json"}));
  op->add_option("--limit", op_limit, "step ceiling for basis computations");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed()) {
      if (preset.empty() == input.empty()) {
        err << "error: exactly one of --preset or --input is required\n";
        return 1;
      }
      if (limit > 0) engine_limits().max_steps = limit;

      ProblemFile pf;
      if (!input.empty()) {
        pf = parse_problem(detail::read_file(input));
      } else {
        pf.preset = preset;
      }
      std::optional<std::int64_t> p_override;
      if (check->count("--p")) p_override = p_flag;
      std::optional<int> e_override;
      if (check->count("--e-max")) e_override = e_max_flag;
      ResolvedProblem rp = resolve_problem(pf, p_override, e_override);

      Report report;
      try {
        FrobeniusConfig cfg = FrobeniusConfig::make(rp.ideal, rp.e_max);
        std::string auto_path =
            rp.ideal.all_monomial() ? "monomial" : "groebner";
        if (both) {
          FrobeniusCalculator ca(cfg, PathPolicy::Auto, brute);
          FrobeniusCalculator cg(cfg, PathPolicy::GeneralOnly, brute);
          FrobeniusLadder la = ca.run();
          FrobeniusLadder lg = cg.run();
          report = make_report(detail::make_echo(rp), la, "both");
          for (std::size_t i = 0; i < report.levels.size(); ++i) {
            const LevelRecord& a = la.levels[i];
            const LevelRecord& b = lg.levels[i];
            report.levels[i].paths_agree = detail::level_records_agree(a, b);
            report.levels[i].ms = a.wall_ms + b.wall_ms;
            if (a.ok() && !b.ok()) report.levels[i].error = b.error;
          }
        } else {
          FrobeniusCalculator calc(cfg, PathPolicy::Auto, brute);
          report = make_report(detail::make_echo(rp), calc.run(), auto_path);
        }
      } catch (const Error& e) {
        // config-stage computation failure: emit the (empty) report shell
        report.problem = detail::make_echo(rp);
        err << "error: " << e.what() << "\n";
        out << render_report(report, format);
        return 2;
      }
      out << render_report(report, format);
      if (!report.all_ok()) {
        for (const LevelReport& l : report.levels)
          if (!l.ok()) err << "error at e=" << l.e << ": " << l.error << "\n";
        return 2;
      }
      return 0;
    }

    // op subcommand
    if (op_limit > 0) engine_limits().max_steps = op_limit;
    ResolvedProblem rp = resolve_problem(parse_problem(detail::read_file(op_input)));
    std::vector<std::string> gens;
    std::optional<bool> member;
    try {
      if (op_kind == "colon" || op_kind == "intersect" ||
          op_kind == "product") {
        if (!rp.ideal2)
          throw ConfigError("op " + op_kind + " needs a 'gens2' line");
        Ideal r = op_kind == "colon"
                      ? ideal_colon(rp.ideal, *rp.ideal2)
                      : op_kind == "intersect"
                            ? ideal_intersection(rp.ideal, *rp.ideal2)
                            : ideal_product(rp.ideal, *rp.ideal2);
        gens = detail::rendered_generators(ideal_canonical(r));
      } else if (op_kind == "bracket") {
        if (!rp.op_e) throw ConfigError("op bracket needs an 'e' line");
        gens = detail::rendered_generators(
            ideal_canonical(bracket_power(rp.ideal, *rp.op_e)));
      } else if (op_kind == "gb") {
        gens = detail::rendered_generators(ideal_canonical(
            rp.ideal, PathPolicy::GeneralOnly));
      } else {  // member
        if (!rp.arg) throw ConfigError("op member needs an 'arg' line");
        member = ideal_membership(*rp.arg, rp.ideal);
      }
    } catch (const OverflowError& e) {
      err << "error: " << e.what() << "\n";
      out << (op_format == "json"
                  ? detail::op_result_json(op_kind, {}, {}, e.what())
                  : std::string("error: ") + e.what() + "\n");
      return 2;
    } catch (const ResourceLimitError& e) {
      err << "error: " << e.what() << "\n";
      out << (op_format == "json"
                  ? detail::op_result_json(op_kind, {}, {}, e.what())
                  : std::string("error: ") + e.what() + "\n");
      return 2;
    }
    if (op_format == "json") {
      out << detail::op_result_json(op_kind, gens, member, "");
    } else if (member) {
      out << (*member ? "true" : "false") << "\n";
    } else {
      for (const std::string& g : gens) out << g << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace frobmap
