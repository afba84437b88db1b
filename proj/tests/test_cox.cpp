#include <algorithm>

#include "doctest.h"
#include "mcop/algebra.hpp"
#include "mcop/cox.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::ints;

namespace {

const CoxGenerator& find_gen(const SemigroupGenerators& sg, const std::string& name) {
  for (const auto& g : sg.gens)
    if (g.name == name) return g;
  FAIL("missing generator " << name);
  return sg.gens.front();
}

}  // namespace

TEST_CASE("variable counts") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(cox_counts(oracle::graded(Family::GtC, n)).variables == 2 * n * n);
    CHECK(cox_counts(oracle::graded(Family::GtA, n)).variables == n * (n + 1));
  }
}

TEST_CASE("counts on a single chain") {
  MarkedPoset p;
  p.add("a", true, 0);
  p.add("x");
  p.add("b", true, 2);
  p.add_cover("a", "x");
  p.add_cover("x", "b");
  GradedPoset g(p);
  CoxCounts c = cox_counts(g);
  // k[X,Y]/(XY-1) has unit group k^* x Z, one corner pair (b, x) and one inner divisor.
  CHECK(c.U == 1);
  CHECK(c.L == 2);
  CHECK(c.variables == 2);
  Algebra a(g);
  CHECK(unit_and_dimension_report(a).pass);
}

TEST_CASE("semigroup generators for every sign vector") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  DualStructure ds(g);
  const auto m = ds.interior().size();
  REQUIRE(m == 2);
  Rng rng(0, 1);
  for (std::size_t mask = 0; mask < 4; ++mask) {
    std::vector<int> signs = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1};
    auto sg = semigroup_generators(ds, signs);
    CHECK(is_unimodular(sg.transform));
    CHECK(verify_semigroup_generators(ds, sg, rng, 100).pass);
  }
}

TEST_CASE("generators match the worked example") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  DualStructure ds(g);
  auto sg = semigroup_generators(ds, {1, 1});
  auto layout = divisor_points(g);
  auto r_index = [&](const std::string& label) {
    for (std::size_t k = 0; k < layout.size(); ++k)
      if (layout[k].label(g) == label) return static_cast<int>(k);
    FAIL("missing divisor " << label);
    return -1;
  };
  const CoxGenerator& v1 = find_gen(sg, "+v:q12");
  CHECK(v1.x == oracle::by_name(g, {{"q11", 1}, {"q12", 1}}));
  RatVec r(layout.size(), Rat(0));
  r[r_index("phi[q11]")] = -1;
  r[r_index("phi[q12]")] = -1;
  r[r_index("phi[q21]")] = 1;
  r[r_index("phi[q*1,q12]")] = 1;
  CHECK(v1.r == r);
}

TEST_CASE("f pairs sum to unit vectors") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  DualStructure ds(g);
  auto plus = semigroup_generators(ds, {1, 1});
  auto minus = semigroup_generators(ds, {-1, -1});
  for (int p : ds.interior()) {
    const std::string q = g.coord_name(p);
    const auto& a = find_gen(plus, "f:" + q + ",+1");
    const auto& b = find_gen(minus, "f:" + q + ",-1");
    CHECK(is_zero(vec_add(a.x, b.x)));
    RatVec s = vec_add(a.r, b.r);
    CHECK(std::count(s.begin(), s.end(), Rat(1)) == 1);
    CHECK(std::count(s.begin(), s.end(), Rat(0)) == static_cast<long>(s.size()) - 1);
  }
}

TEST_CASE("presentations eliminate to the predicted number of variables") {
  for (int n = 1; n <= 3; ++n) {
    for (auto f : {Family::GtC, Family::GtA}) {
      auto g = oracle::graded(f, n);
      CoxPresentation cp = cox_presentation(g);
      const int expect = f == Family::GtC ? 2 * n * n : n * (n + 1);
      CHECK(static_cast<int>(cp.free_variables.size()) == expect);
      CHECK(verify_cox_presentation(g, cp).pass);
    }
  }
}

TEST_CASE("presentation is unsupported when a unit has no unique marked cover") {
  try {
    cox_presentation(oracle::graded(Family::Pi1, 2));
    FAIL("expected UNSUPPORTED");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unsupported);
  }
}

TEST_CASE("unit exponent patterns") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Report r = eta_unit_check(g);
  CHECK(r.pass);
  std::map<std::string, nlohmann::json> exps;
  for (const auto& c : r.checks) exps[c["name"].get<std::string>()] = c["detail"]["exponents"];
  REQUIRE(exps.count("eta_pattern.q31"));
  REQUIRE(exps.count("eta_pattern.q12"));
  CAPTURE(exps["eta_pattern.q31"].dump());
  CAPTURE(exps["eta_pattern.q12"].dump());
  CHECK(exps["eta_pattern.q31"] == nlohmann::json({{"t[q*2,q31]", -1}, {"t[q31]", 1}}));
  CHECK(exps["eta_pattern.q12"] ==
        nlohmann::json({{"t[q*1,q12]", -1}, {"t[q11]", 1}, {"t[q12]", 1}, {"t[q21]", -1}}));
  CHECK(eta_unit_check(oracle::graded(Family::GtA, 3)).pass);
}
