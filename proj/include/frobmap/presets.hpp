#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobmap {

// Built-in problem instances.  paper-monomial is the two-generator monomial
// ideal in three variables; paper-determinantal is the ideal of 2x2 minors
// of the generic 2x3 matrix with rows (x,y,z) and (u,v,w), minors listed by
// column pair (1,2), (1,3), (2,3).
struct Preset {
  std::string name;
  std::int64_t default_p;
  int default_e_max;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"paper-monomial", 2, 3, {"x", "y", "z"}, {"x*y", "y*z"}},
      {"paper-determinantal",
       2,
       2,
       {"x", "y", "z", "u", "v", "w"},
       {"x*v - y*u", "x*w - z*u", "y*w - z*v"}},
  };
  return table;
}

inline const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace frobmap
