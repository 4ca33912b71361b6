#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "frobmap/ideal.hpp"
#include "frobmap/monomial_ideal.hpp"
#include "helpers.hpp"

using namespace frobmap;
using testutil::mideal;
using testutil::mono;

namespace {

// exhaustive enumeration of exponent vectors up to a bound; small cases only
std::vector<Monomial> all_monomials(int width, Exponent cap) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(static_cast<std::size_t>(width), 0);
  for (;;) {
    out.emplace_back(e);
    int i = 0;
    while (i < width && e[static_cast<std::size_t>(i)] == cap) {
      e[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == width) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

TEST_CASE("minimal generating sets") {
  auto R = testutil::ring_xyz(2);

  SECTION("redundant generators are removed") {
    MonomialIdeal I = mideal(R, {"x^2*y", "x*y*z", "x^2*y*z^2", "y*z^2"});
    REQUIRE(I.generators().size() == 3);
    CHECK(I.generators()[0] == mono(R, "y*z^2"));
    CHECK(I.generators()[1] == mono(R, "x*y*z"));
    CHECK(I.generators()[2] == mono(R, "x^2*y"));
  }

  SECTION("duplicates collapse") {
    MonomialIdeal I = mideal(R, {"x*y", "x*y", "x^3*y^2"});
    REQUIRE(I.generators().size() == 1);
    CHECK(I.generators()[0] == mono(R, "x*y"));
  }

  SECTION("single generator survives") {
    MonomialIdeal I = mideal(R, {"x*z^4"});
    REQUIRE(I.generators().size() == 1);
  }

  SECTION("empty input is the zero ideal") {
    CHECK(MonomialIdeal::zero(R).is_zero());
    CHECK(mideal(R, {}).generators().empty());
  }

  SECTION("the unit absorbs everything") {
    MonomialIdeal I = MonomialIdeal::make(
        R, {Monomial::one(3), mono(R, "x*y")});
    CHECK(I.is_unit());
  }

  SECTION("minimalization is idempotent") {
    std::mt19937_64 rng(111);
    for (int iter = 0; iter < 50; ++iter) {
      MonomialIdeal I = testutil::random_monomial_ideal(rng, R, 6, 5);
      CHECK(MonomialIdeal::make(R, I.generators()) == I);
    }
  }
}

TEST_CASE("monomial membership") {
  auto R = testutil::ring_xyz(2);
  MonomialIdeal I = mideal(R, {"x*y", "y*z"});

  CHECK(mono_membership(mono(R, "x^2*y^2"), I));
  CHECK(mono_membership(mono(R, "x*y"), I));
  CHECK_FALSE(mono_membership(mono(R, "x^4*z^4"), I));
  CHECK_FALSE(mono_membership(Monomial::one(3), I));
  CHECK_FALSE(mono_membership(mono(R, "x"), MonomialIdeal::zero(R)));
  CHECK(mono_membership(mono(R, "x"), MonomialIdeal::unit(R)));

  SECTION("membership matches a divisor search on random samples") {
    std::mt19937_64 rng(212);
    for (int iter = 0; iter < 200; ++iter) {
      MonomialIdeal J = testutil::random_monomial_ideal(rng, R, 5, 4);
      Monomial m = testutil::random_monomial(rng, 3, 6);
      bool expect = false;
      for (const Monomial& g : J.generators())
        if (g.divides(m)) expect = true;
      CHECK(mono_membership(m, J) == expect);
    }
  }
}

TEST_CASE("kernel colon") {
  auto R = testutil::ring_xyz(2);

  SECTION("single-monomial examples") {
    MonomialIdeal I = mideal(R, {"x^2*y^2", "y^2*z^2"});
    CHECK(mono_colon_single(I, mono(R, "y*z")) == mideal(R, {"x^2*y", "y*z"}));
    CHECK(mono_colon_single(I, mono(R, "x*y")) == mideal(R, {"x*y", "y*z^2"}));
    CHECK(mono_colon_single(mideal(R, {"x*y"}), mono(R, "x")) ==
          mideal(R, {"y"}));
  }

  SECTION("multi-generator divisor intersects the single colons") {
    MonomialIdeal I = mideal(R, {"x^2*y^2", "y^2*z^2"});
    MonomialIdeal J = mideal(R, {"x*y", "y*z"});
    CHECK(mono_colon(I, J) == mideal(R, {"x^2*y", "x*y*z", "y*z^2"}));
  }

  SECTION("colon by something already inside gives the unit") {
    MonomialIdeal I = mideal(R, {"x*y", "y*z"});
    CHECK(mono_colon(I, mideal(R, {"x*y"})).is_unit());
  }

  SECTION("zero divisor ideal is rejected") {
    MonomialIdeal I = mideal(R, {"x*y"});
    CHECK_THROWS_AS(mono_colon(I, MonomialIdeal::zero(R)), ConfigError);
  }

  SECTION("colon by the unit is the identity") {
    MonomialIdeal I = mideal(R, {"x*y", "y*z"});
    CHECK(mono_colon(I, MonomialIdeal::unit(R)) == I);
  }

  SECTION("exhaustive duality: m in (I : J) iff m*J inside I") {
    MonomialIdeal I = mideal(R, {"x^2*y", "y^3", "x*z^2"});
    MonomialIdeal J = mideal(R, {"x*y", "z"});
    MonomialIdeal C = mono_colon(I, J);
    for (const Monomial& m : all_monomials(3, 4)) {
      bool pushes_in = true;
      for (const Monomial& g : J.generators())
        if (!mono_membership(m.mul(g), I)) pushes_in = false;
      CHECK(mono_membership(m, C) == pushes_in);
    }
  }

  SECTION("randomized duality") {
    std::mt19937_64 rng(313);
    for (int iter = 0; iter < 60; ++iter) {
      MonomialIdeal I = testutil::random_monomial_ideal(rng, R, 4, 3);
      MonomialIdeal J = testutil::random_monomial_ideal(rng, R, 3, 2);
      if (J.is_zero()) continue;
      MonomialIdeal C = mono_colon(I, J);
      Monomial m = testutil::random_monomial(rng, 3, 4);
      bool pushes_in = true;
      for (const Monomial& g : J.generators())
        if (!mono_membership(m.mul(g), I)) pushes_in = false;
      CHECK(mono_membership(m, C) == pushes_in);
    }
  }
}

TEST_CASE("kernel intersection") {
  auto R = testutil::ring_xyz(2);

  CHECK(mono_intersection(mideal(R, {"x"}), mideal(R, {"y"})) ==
        mideal(R, {"x*y"}));
  CHECK(mono_intersection(mideal(R, {"x*y", "y*z^2"}),
                          mideal(R, {"x^2*y", "y*z"})) ==
        mideal(R, {"x^2*y", "x*y*z", "y*z^2"}));
  CHECK(mono_intersection(mideal(R, {"x*y"}), MonomialIdeal::zero(R)).is_zero());

  SECTION("exhaustive membership characterization") {
    MonomialIdeal I = mideal(R, {"x^2", "y*z"});
    MonomialIdeal J = mideal(R, {"x*y", "z^2"});
    MonomialIdeal C = mono_intersection(I, J);
    for (const Monomial& m : all_monomials(3, 4))
      CHECK(mono_membership(m, C) ==
            (mono_membership(m, I) && mono_membership(m, J)));
  }
}

TEST_CASE("kernel sum and product") {
  auto R = testutil::ring_xyz(2);

  CHECK(mono_sum(mideal(R, {"x^2", "x*y"}), mideal(R, {"x"})) ==
        mideal(R, {"x"}));
  CHECK(mono_product(mideal(R, {"x", "y"}), mideal(R, {"x", "y"})) ==
        mideal(R, {"x^2", "x*y", "y^2"}));

  SECTION("product generators factor through the inputs") {
    std::mt19937_64 rng(414);
    for (int iter = 0; iter < 40; ++iter) {
      MonomialIdeal I = testutil::random_monomial_ideal(rng, R, 4, 3);
      MonomialIdeal J = testutil::random_monomial_ideal(rng, R, 4, 3);
      MonomialIdeal P = mono_product(I, J);
      for (const Monomial& m : P.generators()) {
        bool factors = false;
        for (const Monomial& a : I.generators())
          for (const Monomial& b : J.generators())
            if (a.mul(b) == m) factors = true;
        CHECK(factors);
      }
    }
  }
}

TEST_CASE("kernel bracket powers") {
  auto R = testutil::ring_xyz(2);
  MonomialIdeal I = mideal(R, {"x*y", "y*z"});

  CHECK(mono_bracket(I, 1) == I);
  CHECK(mono_bracket(I, 4) == mideal(R, {"x^4*y^4", "y^4*z^4"}));
  CHECK_THROWS_AS(mono_bracket(I, 0), ConfigError);
  CHECK_THROWS_AS(mono_bracket(I, -2), ConfigError);

  SECTION("bracket powers compose multiplicatively") {
    std::mt19937_64 rng(515);
    for (int iter = 0; iter < 30; ++iter) {
      MonomialIdeal J = testutil::random_monomial_ideal(rng, R, 4, 4);
      CHECK(mono_bracket(mono_bracket(J, 2), 3) == mono_bracket(J, 6));
    }
  }

  SECTION("bracket preserves the generator count") {
    // scaling is injective on an antichain, so nothing collapses
    std::mt19937_64 rng(616);
    for (int iter = 0; iter < 30; ++iter) {
      MonomialIdeal J = testutil::random_monomial_ideal(rng, R, 5, 4);
      CHECK(mono_bracket(J, 3).generators().size() == J.generators().size());
    }
  }
}

TEST_CASE("kernel containment") {
  auto R = testutil::ring_xyz(2);
  CHECK(mono_contains(mideal(R, {"x"}), mideal(R, {"x^2", "x*y^3"})));
  CHECK_FALSE(mono_contains(mideal(R, {"x^2"}), mideal(R, {"x"})));
  CHECK(mono_contains(mideal(R, {"x"}), MonomialIdeal::zero(R)));
}

TEST_CASE("kernel operations agree with the basis engine") {
  auto R = testutil::ring_xyz(5);
  std::mt19937_64 rng(717);
  for (int iter = 0; iter < 25; ++iter) {
    MonomialIdeal A = testutil::random_monomial_ideal(rng, R, 4, 3);
    MonomialIdeal B = testutil::random_monomial_ideal(rng, R, 4, 3);
    Ideal IA = Ideal::from_monomial_ideal(A);
    Ideal IB = Ideal::from_monomial_ideal(B);
    if (A.is_zero() || B.is_zero()) continue;

    Ideal inter = ideal_intersection(IA, IB, PathPolicy::GeneralOnly);
    CHECK(ideal_canonical(inter).to_monomial_ideal() ==
          mono_intersection(A, B));

    Ideal col = ideal_colon(IA, IB, PathPolicy::GeneralOnly);
    CHECK(ideal_canonical(col).to_monomial_ideal() == mono_colon(A, B));
  }
}
