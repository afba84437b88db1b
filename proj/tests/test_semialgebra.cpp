#include "doctest.h"
#include "mcop/algebra.hpp"
#include "mcop/semialgebra.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::ints;

namespace {

RatVec v3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

}  // namespace

TEST_CASE("generating sets are normalised") {
  SemiElement a = SemiElement::of({v3(1, 0, 0), v3(0, 0, 0), v3(1, 0, 0)});
  CHECK(a.gens.size() == 2);
  CHECK_FALSE(a.infinity);
  CHECK(oplus(a, SemiElement::inf()).gens == a.gens);
  CHECK(oplus(SemiElement::inf(), SemiElement::inf()).infinity);
}

TEST_CASE("exact equality") {
  auto g = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  DualStructure ds(g);
  SemiElement a = SemiElement::of({v3(0, 0, 0), v3(1, -1, 2)});
  CHECK(equal_exact(ds, a, SemiElement::of({v3(1, -1, 2), v3(0, 0, 0)})).equal);

  Rng rng(0, 1);
  for (int t = 0; t < 10; ++t) {
    RatVec m = random_element(rng, 3, 3);
    SemiElement three = SemiElement::of({v3(0, 0, 0), m, vec_scale(Rat(2), m)});
    SemiElement two = SemiElement::of({v3(0, 0, 0), vec_scale(Rat(2), m)});
    CHECK(equal_exact(ds, three, two).equal);
    CHECK(equal_sampled(g, &ds, three, two, 3).equal);
    CHECK(minimal_form(ds, three).gens.size() <= 2);
  }
  CHECK_FALSE(equal_exact(ds, SemiElement::of({v3(0, 0, 0)}), SemiElement::of({v3(0, 1, 0)})).equal);
  CHECK_FALSE(equal_exact(ds, SemiElement::of({v3(0, 0, 0)}), SemiElement::inf()).equal);
}

TEST_CASE("order on the semialgebra") {
  auto g = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  DualStructure ds(g);
  SemiElement a = SemiElement::of({v3(0, 0, 0)});
  SemiElement ab = SemiElement::of({v3(0, 0, 0), v3(0, 1, 0)});
  CHECK(less_equal_exact(ds, ab, a));
  CHECK(less_equal_exact(ds, a, a));
}

TEST_CASE("star of the two tail generators") {
  auto g = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  DualStructure ds(g);
  Algebra alg(g);
  PolyptychLattice m(g);
  const int q21 = g.coord_of("q21");
  SemiElement lhs = star(m, alg.valuation(alg.x(q21)), alg.valuation(alg.y(q21)));
  SemiElement rhs = SemiElement::of({v3(0, 0, 0), alg.monomial_to_m(alg.y(g.coord_of("q31")).terms.begin()->first)});
  CHECK(equal_exact(ds, lhs, rhs).equal);
  CHECK(equal_sampled(g, &ds, lhs, rhs, 3).equal);
}
