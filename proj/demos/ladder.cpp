// Walks the Frobenius-map ladder of I = (x*y, y*z) over GF(p) and prints,
// per level e: the generators of K_e = (I^[p^e] : I), whether K_e lies in
// the below-level ideal L_e (raw and mod the bracket power), and the
// generators that escape.  Usage: demo_ladder [p] [e_max]

#include <cstdint>
#include <iostream>
#include <string>

#include "frobmap/frobenius.hpp"
#include "frobmap/parse.hpp"

using namespace frobmap;

int main(int argc, char** argv) {
  std::int64_t p = argc > 1 ? std::stoll(argv[1]) : 2;
  int e_max = argc > 2 ? std::stoi(argv[2]) : 3;

  RingContextPtr R = RingContext::make(p, {"x", "y", "z"});
  Ideal I = Ideal::make(R, {parse_polynomial(R, "x*y"),
                            parse_polynomial(R, "y*z")});

  FrobeniusCalculator calc(FrobeniusConfig::make(I, e_max));
  FrobeniusLadder ladder = calc.run();

  std::cout << "I = (x*y, y*z) over GF(" << p << ")\n";
  for (const LevelRecord& rec : ladder.levels) {
    if (!rec.ok()) {
      std::cout << "e=" << rec.e << "  ERROR: " << rec.error << "\n";
      continue;
    }
    std::cout << "e=" << rec.e << "  q=" << rec.q << "\n";
    std::cout << "  K_" << rec.e << " = (";
    for (std::size_t i = 0; i < rec.k_generators.size(); ++i)
      std::cout << (i ? ", " : "") << to_string(rec.k_generators[i]);
    std::cout << ")\n";
    std::cout << "  K in L: " << (*rec.contained_raw ? "yes" : "no")
              << "   K in L + I^[q]: "
              << (*rec.contained_mod_bracket ? "yes" : "no") << "\n";
    for (const Polynomial& w : rec.witnesses)
      std::cout << "  escapes: " << to_string(w) << "\n";
  }

  // every level refusing containment is the fingerprint of an algebra of
  // Frobenius maps that no finite set of levels generates
  return 0;
}
