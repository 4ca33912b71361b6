#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobmap/errors.hpp"
#include "frobmap/frobenius.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/version.hpp"

namespace frobmap {

struct ProblemEcho {
  std::string preset;  // empty when none
  std::int64_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> gens;  // canonical rendering
  int e_max = 0;
};

struct LevelReport {
  int e = 0;
  std::int64_t q = 0;  // 0 = unknown (level failed early)
  std::string path;    // "monomial" | "groebner" | "both"
  int k_generator_count = 0;
  std::optional<bool> contained_raw;
  std::optional<bool> contained_mod_bracket;
  std::vector<std::string> witnesses;
  std::optional<bool> paths_agree;  // set only by --both-paths runs
  std::string error;
  std::int64_t ms = 0;

  bool ok() const { return error.empty(); }
};

struct Report {
  ProblemEcho problem;
  std::vector<LevelReport> levels;
  std::string version = kVersion;

  bool all_ok() const {
    for (const LevelReport& l : levels)
      if (!l.ok()) return false;
    return true;
  }
};

inline LevelReport make_level_report(const LevelRecord& rec,
                                     const std::string& path) {
  LevelReport lr;
  lr.e = rec.e;
  lr.q = rec.q;
  lr.path = path;
  lr.k_generator_count = static_cast<int>(rec.k_generators.size());
  lr.contained_raw = rec.contained_raw;
  lr.contained_mod_bracket = rec.contained_mod_bracket;
  for (const Polynomial& w : rec.witnesses)
    lr.witnesses.push_back(to_string(w));
  lr.error = rec.error;
  lr.ms = rec.wall_ms;
  return lr;
}

inline Report make_report(ProblemEcho echo, const FrobeniusLadder& ladder,
                          const std::string& path) {
  Report r;
  r.problem = std::move(echo);
  for (const LevelRecord& rec : ladder.levels)
    r.levels.push_back(make_level_report(rec, path));
  return r;
}

// JSON schema (fixed key order; the `timings` subobject is the only part
// excluded from the byte-stability guarantee):
//   problem: preset (string|null), p, vars, gens, e_max
//   levels[]: e, q, path, k_generator_count, contained_raw,
//             contained_mod_bracket, witnesses, paths_agree, error, timings
//   version
inline std::string render_report_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  json prob;
  prob["preset"] = r.problem.preset.empty() ? json(nullptr)
                                            : json(r.problem.preset);
  prob["p"] = r.problem.p;
  prob["vars"] = r.problem.vars;
  prob["gens"] = r.problem.gens;
  prob["e_max"] = r.problem.e_max;
  j["problem"] = std::move(prob);
  json levels = json::array();
  for (const LevelReport& l : r.levels) {
    json jl;
    jl["e"] = l.e;
    jl["q"] = l.q > 0 ? json(l.q) : json(nullptr);
    jl["path"] = l.path;
    jl["k_generator_count"] = l.k_generator_count;
    jl["contained_raw"] =
        l.contained_raw ? json(*l.contained_raw) : json(nullptr);
    jl["contained_mod_bracket"] =
        l.contained_mod_bracket ? json(*l.contained_mod_bracket)
                                : json(nullptr);
    jl["witnesses"] = l.witnesses;
    jl["paths_agree"] = l.paths_agree ? json(*l.paths_agree) : json(nullptr);
    jl["error"] = l.error.empty() ? json(nullptr) : json(l.error);
    jl["timings"] = {{"ms", l.ms}};
    levels.push_back(std::move(jl));
  }
  j["levels"] = std::move(levels);
  j["version"] = r.version;
  return j.dump(2) + "\n";
}

inline std::string render_report_text(const Report& r) {
  std::ostringstream out;
  out << "problem: p=" << r.problem.p;
  if (!r.problem.preset.empty()) out << " preset=" << r.problem.preset;
  out << " vars=";
  for (std::size_t i = 0; i < r.problem.vars.size(); ++i)
    out << (i ? "," : "") << r.problem.vars[i];
  out << " gens=";
  for (std::size_t i = 0; i < r.problem.gens.size(); ++i)
    out << (i ? ", " : "") << r.problem.gens[i];
  out << " e_max=" << r.problem.e_max << "\n";
  for (const LevelReport& l : r.levels) {
    out << "e=" << l.e;
    if (l.q > 0) out << " q=" << l.q;
    out << " path=" << l.path;
    if (!l.ok()) {
      out << " ERROR: " << l.error << " (" << l.ms << " ms)\n";
      continue;
    }
    auto verdict = [](const std::optional<bool>& b) {
      return !b ? "?" : (*b ? "true" : "false");
    };
    out << " K-gens=" << l.k_generator_count
        << " contained_raw=" << verdict(l.contained_raw)
        << " contained_mod_bracket=" << verdict(l.contained_mod_bracket);
    if (l.paths_agree) out << " paths_agree=" << verdict(l.paths_agree);
    out << " (" << l.ms << " ms)\n";
    if (!l.witnesses.empty()) {
      out << "  witnesses:";
      for (const std::string& w : l.witnesses) out << " " << w;
      out << "\n";
    }
  }
  return out.str();
}

inline std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return render_report_json(r);
  if (format == "text") return render_report_text(r);
  throw ConfigError("unknown format '" + format + "'");
}

}  // namespace frobmap
