// Tour of the ideal layer: reduced bases, membership, colon, intersection,
// and the monomial kernel giving the same answers as the basis engine.

#include <iostream>
#include <string>
#include <vector>

#include "frobmap/ideal.hpp"
#include "frobmap/monomial_ideal.hpp"
#include "frobmap/parse.hpp"

using namespace frobmap;

static void show(const std::string& label, const Ideal& I) {
  std::cout << label << " = (";
  const std::vector<Polynomial>& gens = I.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    std::cout << (i ? ", " : "") << to_string(gens[i]);
  std::cout << ")\n";
}

int main() {
  RingContextPtr R = RingContext::make(5, {"x", "y", "z"});
  auto f = [&](const std::string& s) { return parse_polynomial(R, s); };

  Ideal I = Ideal::make(R, {f("x*y - z^2"), f("y*z")});
  show("reduced basis of (x*y - z^2, y*z)",
       ideal_canonical(I, PathPolicy::GeneralOnly));

  std::cout << "x*y*z in I: "
            << (ideal_membership(f("x*y*z"), I) ? "yes" : "no") << "\n";
  std::cout << "x in I: " << (ideal_membership(f("x"), I) ? "yes" : "no")
            << "\n";

  show("(x*y - z^2, y*z) : (z)", ideal_colon(I, Ideal::make(R, {f("z")})));
  show("(x + y) meet (x)",
       ideal_intersection(Ideal::make(R, {f("x + y")}),
                          Ideal::make(R, {f("x")})));

  // monomial inputs take the combinatorial kernel; the engine agrees
  MonomialIdeal A = MonomialIdeal::make(
      R, {Monomial({2, 2, 0}), Monomial({0, 2, 2})});
  MonomialIdeal B = MonomialIdeal::make(R, {Monomial({1, 1, 0})});
  MonomialIdeal Q = mono_colon(A, B);
  std::cout << "(x^2*y^2, y^2*z^2) : (x*y), kernel = (";
  for (std::size_t i = 0; i < Q.generators().size(); ++i)
    std::cout << (i ? ", " : "") << render_monomial(Q.generators()[i], *R);
  std::cout << ")\n";

  Ideal Qg = ideal_colon(Ideal::from_monomial_ideal(A),
                         Ideal::from_monomial_ideal(B),
                         PathPolicy::GeneralOnly);
  std::cout << "engine agrees: "
            << (ideal_canonical(Qg, PathPolicy::GeneralOnly)
                        .to_monomial_ideal() == Q
                    ? "yes"
                    : "no")
            << "\n";
  return 0;
}
