#include <set>

#include "doctest.h"
#include "mcop/algebra.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::by_name;
using oracle::ints;

namespace {

std::set<std::string> relations(const Algebra& a) {
  std::set<std::string> s;
  for (int c = 0; c < a.dim(); ++c) s.insert(a.relation_str(c));
  return s;
}

Monomial mono(const GradedPoset& g, const std::map<std::string, std::pair<int, int>>& e) {
  Monomial m(2 * g.dim(), 0);
  for (const auto& [name, ab] : e) {
    m[2 * g.coord_of(name)] = ab.first;
    m[2 * g.coord_of(name) + 1] = ab.second;
  }
  return m;
}

Poly poly(std::initializer_list<std::pair<Monomial, long>> terms) {
  Poly p;
  for (const auto& [m, c] : terms) p.terms[m] = Rat(c);
  return p;
}

}  // namespace

TEST_CASE("type C n=2 relations") {
  auto g_a = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Algebra a(g_a);
  std::set<std::string> expected = {"X[q31]*Y[q31] - 1", "X[q21]*Y[q21] - 1 - Y[q31]", "X[q12]*Y[q12] - 1",
                                    "X[q11]*Y[q11] - 1 - Y[q21]"};
  CHECK(relations(a) == expected);
}

TEST_CASE("type A n=2 relations") {
  auto g_a = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  Algebra a(g_a);
  std::set<std::string> expected = {"X[q31]*Y[q31] - 1", "X[q21]*Y[q21] - 1 - Y[q31]", "X[q12]*Y[q12] - 1"};
  CHECK(relations(a) == expected);
}

TEST_CASE("a chain has only pure relations") {
  MarkedPoset p;
  p.add("a", true, 0);
  p.add("x");
  p.add("b", true, 2);
  p.add_cover("a", "x");
  p.add_cover("x", "b");
  GradedPoset g(p);
  Algebra a(g);
  CHECK(relations(a) == std::set<std::string>{"X[x]*Y[x] - 1"});
}

TEST_CASE("normal form examples") {
  auto ga = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  Algebra a(ga);
  const int q21 = ga.coord_of("q21");
  Poly nf = a.mul(a.x(q21), a.y(q21));
  CHECK(nf == poly({{mono(ga, {}), 1}, {mono(ga, {{"q31", {0, 1}}}), 1}}));

  auto gc = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Algebra c(gc);
  Poly f = poly({{mono(gc, {{"q11", {1, 1}}, {"q21", {1, 1}}}), 1}});
  Poly expect = poly({{mono(gc, {}), 1},
                      {mono(gc, {{"q21", {0, 1}}}), 1},
                      {mono(gc, {{"q31", {0, 1}}}), 1},
                      {mono(gc, {{"q21", {0, 1}}, {"q31", {0, 1}}}), 1}});
  CHECK(c.normal_form(f) == expect);

  Poly standard = poly({{mono(gc, {{"q11", {3, 0}}, {"q12", {0, 2}}}), 5}});
  CHECK(c.normal_form(standard) == standard);
}

TEST_CASE("normal form is confluent and idempotent") {
  auto g_c = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Algebra c(g_c);
  Rng rng(0, 1);
  CHECK(verify_normal_form(c, 200, rng).pass);
}

TEST_CASE("monomial exponents") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Algebra a(g);
  CHECK(is_zero(a.monomial_to_m(a.unit_monomial())));
  CHECK(a.monomial_to_m(mono(g, {{"q21", {1, 0}}})) == by_name(g, {{"q21", 1}}));
  CHECK(a.monomial_to_m(mono(g, {{"q12", {1, 0}}})) == by_name(g, {{"q11", 1}, {"q12", 1}}));
  Rng rng(0, 2);
  for (int t = 0; t < 30; ++t) {
    RatVec x = random_element(rng, g.dim(), 4);
    CHECK(a.monomial_to_m(a.m_to_monomial(x)) == x);
  }
}

TEST_CASE("valuation of small products") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  DualStructure ds(g);
  Algebra a(g);
  PolyptychLattice m(g);
  SemiElement one = a.valuation(a.constant(1));
  CHECK(equal_exact(ds, star(m, one, one), one).equal);
  CHECK(a.valuation(Poly{}).infinity);

  const int q11 = g.coord_of("q11");
  SemiElement lhs = a.valuation(a.mul(a.x(q11), a.y(q11)));
  SemiElement rhs = star(m, a.valuation(a.x(q11)), a.valuation(a.y(q11)));
  CHECK(equal_exact(ds, lhs, rhs).equal);
}

TEST_CASE("valuation properties on seeded pairs") {
  for (auto [f, lambda] : {std::pair{Family::GtC, ints({2, 4})}, std::pair{Family::GtA, ints({0, 2, 4})}}) {
    auto g = oracle::graded(f, 2, lambda);
    DualStructure ds(g);
    Algebra a(g);
    Rng rng(0, 3);
    ValuationOptions vo;
    vo.samples = 30;
    CHECK(verify_valuation(a, &ds, vo, rng).pass);
    CHECK(verify_tail_identities(a, &ds).pass);
  }
}

TEST_CASE("leading terms are pairwise coprime") {
  auto g_a = oracle::graded(Family::GtC, 3);
  Algebra a(g_a);
  std::vector<Monomial> leads;
  for (int c = 0; c < a.dim(); ++c) leads.push_back(a.leading(c));
  CHECK(leading_coprime_check(leads));
  leads.push_back(leads.front());
  CHECK_FALSE(leading_coprime_check(leads));
}

TEST_CASE("unit groups") {
  for (auto f : {Family::GtC, Family::GtA}) {
    auto g_a = oracle::graded(f, 2);
    Algebra a(g_a);
    Report r = unit_and_dimension_report(a);
    CHECK(r.pass);
    for (const auto& c : r.checks)
      if (c["name"] == "unit_products_equal_one") CHECK(c["detail"]["units"].size() == 2);
  }
}

TEST_CASE("products of nonzero elements are nonzero") {
  auto g_a = oracle::graded(Family::GtC, 2);
  Algebra a(g_a);
  Rng rng(0, 4);
  CHECK(zero_divisor_scan(a, 100, rng).pass);
}

TEST_CASE("jacobian has full rank on the variety") {
  auto g_a = oracle::graded(Family::GtC, 2);
  Algebra a(g_a);
  Rng rng(0, 5);
  Report r = jacobian_rank_at_samples(a, 50, rng);
  CHECK(r.pass);
  bool degenerate_seen = false;
  for (const auto& c : r.checks) degenerate_seen = degenerate_seen || c["name"] == "rank_at_degenerate_point";
  CHECK(degenerate_seen);
}

TEST_CASE("adapted basis") {
  auto g_a = oracle::graded(Family::GtC, 2, ints({2, 4}));
  Algebra a(g_a);
  CHECK(verify_adapted_basis(a, 3, 2).pass);
}
