#include "doctest.h"
#include "mcop/polyptych.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::by_name;
using oracle::ints;

namespace {

GradedPoset gtA2() { return oracle::graded(Family::GtA, 2, ints({0, 2, 4})); }
GradedPoset gtC2() { return oracle::graded(Family::GtC, 2, ints({2, 4})); }

StructuralPoint find_point(const GradedPoset& g, const std::string& label) {
  for (const auto& sp : structural_points(g))
    if (sp.label(g) == label) return sp;
  FAIL("missing structural point " << label);
  return {};
}

RatVec v3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

}  // namespace

TEST_CASE("chart addition example") {
  auto g = gtA2();
  PolyptychLattice m(g);
  Chart c = parse_chart(g, "q31");
  CHECK(m.add_in_chart(v3(0, 1, 0), v3(0, -1, 0), c) == v3(0, 0, -1));
  CHECK(m.add_in_chart(v3(1, 2, 3), v3(-4, 5, 6), 0) == v3(-3, 7, 9));
  auto ups = m.upsilon(v3(0, 1, 0), v3(0, -1, 0));
  CHECK(std::find(ups.begin(), ups.end(), v3(0, 0, -1)) != ups.end());
  CHECK(std::find(ups.begin(), ups.end(), v3(0, 0, 0)) != ups.end());
}

TEST_CASE("mutation axioms hold") {
  for (auto f : {Family::GtA, Family::GtC})
    for (int n = 1; n <= 2; ++n) {
      auto g = oracle::graded(f, n);
      Rng rng(0, 2);
      Report r = verify_mutation_axioms(g, 200, 50, rng);
      CHECK(r.pass);
    }
}

TEST_CASE("structural point values") {
  auto g = gtA2();
  for (const auto& sp : structural_points(g)) CHECK(sp.eval(g, v3(0, 0, 0)) == 0);
  CHECK(find_point(g, "phi[q31]").eval(g, v3(0, 1, 0)) == -1);
  CHECK(find_point(g, "phi[q*3,q31]").eval(g, v3(0, 1, 2)) == -2);
}

TEST_CASE("structural points satisfy the point axioms") {
  auto g = gtA2();
  std::vector<NamedPoint> fns;
  for (const auto& sp : structural_points(g))
    fns.push_back({sp.label(g), [&g, sp](const RatVec& m) { return sp.eval(g, m); }});
  Rng rng(0, 3);
  CHECK(verify_point_axiom(PolyptychLattice(g), fns, 100, rng).pass);
}

TEST_CASE("a quadratic functional is not a point") {
  auto g = gtA2();
  std::vector<NamedPoint> fns = {{"square", [](const RatVec& m) { return m[0] * m[0]; }}};
  Rng rng(0, 4);
  CHECK_FALSE(verify_point_axiom(PolyptychLattice(g), fns, 50, rng).pass);
}

TEST_CASE("piecewise linear polytope constants") {
  auto g = gtA2();
  auto hs = pl_hat_delta(g, choose_u(g, true));
  std::map<std::string, Int> a;
  for (const auto& h : hs) a[h.point.label(g)] = h.a;
  for (const char* label : {"phi[q12]", "phi[q21]", "phi[q31]", "phi[q*2,q12]", "phi[q*3,q31]"}) {
    REQUIRE(a.count(label) == 1);
    CHECK(a[label] == -1);
  }
  CHECK(verify_pl_hat_delta(g, choose_u(g, true)).pass);
}

TEST_CASE("dual completion examples") {
  auto g = gtC2();
  DualStructure ds(g);
  auto y = [&](long a, long b, long c, long d) {
    return by_name(g, {{"q11", a}, {"q12", b}, {"q21", c}, {"q31", d}});
  };
  CHECK(ds.complete(y(0, 0, 0, -1)).yp == y(0, 0, 0, -1));
  CHECK(ds.complete(y(0, 0, 0, 0)).yp == y(0, 0, 0, 0));
  CHECK(ds.complete(y(0, 0, 1, 1)).yp == y(2, 0, 2, 1));
  CHECK_FALSE(ds.violation(ds.complete(y(3, -1, 2, 5))).has_value());
}

TEST_CASE("dual pairing values") {
  auto g = gtC2();
  DualStructure ds(g);
  DualElement n = ds.complete(by_name(g, {{"q31", -1}}));
  CHECK(ds.w(n, ds.hat_e(g.coord_of("q31"))) == -1);
  CHECK(ds.w(n, RatVec(g.dim(), Rat(0))) == 0);
  DualElement zero = ds.complete(RatVec(g.dim(), Rat(0)));
  Rng rng(0, 5);
  for (int t = 0; t < 20; ++t) CHECK(ds.w(zero, random_element(rng, g.dim(), 4)) == 0);
}

TEST_CASE("pairing symmetry on the dual basis") {
  auto g = gtC2();
  DualStructure ds(g);
  for (int q = 0; q < g.dim(); ++q)
    for (int c = 0; c < g.dim(); ++c) {
      RatVec m = ds.hat_e(c);
      DualElement n = ds.dual_eps(q);
      CHECK(ds.w(n, m) == ds.v(m, n));
    }
}

TEST_CASE("strict dual pair") {
  auto g = gtC2();
  DualStructure ds(g);
  Rng rng(0, 6);
  Report r = verify_strict_dual(ds, 500, rng);
  CHECK(r.pass);
}

TEST_CASE("the dual lattice needs a builder family") {
  MarkedPoset p;
  p.add("a", true, 0);
  p.add("x");
  p.add("b", true, 2);
  p.add_cover("a", "x");
  p.add_cover("x", "b");
  GradedPoset g(p);
  CHECK_THROWS_AS(DualStructure{g}, Error);
}
