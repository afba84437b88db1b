#include <set>

#include "doctest.h"
#include "mcop/marked_poset.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::ints;

namespace {

MarkedPoset chain(const Int& a, const Int& b) {
  MarkedPoset p;
  p.add("a", true, a);
  p.add("p");
  p.add("b", true, b);
  p.add_cover("a", "p");
  p.add_cover("p", "b");
  return p;
}

std::set<std::string> unmarked_names(const MarkedPoset& p) {
  std::set<std::string> s;
  for (int e = 0; e < p.size(); ++e)
    if (!p.marked(e)) s.insert(p.name(e));
  return s;
}

std::set<std::pair<std::string, std::string>> cover_names(const MarkedPoset& p) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& [a, b] : p.covers()) s.insert({p.name(a), p.name(b)});
  return s;
}

}  // namespace

TEST_CASE("gelfand-tsetlin type A n=2 validates with the expected ranks") {
  MarkedPoset p = gt_type_A(2, ints({0, 2, 4}));
  Validation v = validate(p);
  REQUIRE(v.ok);
  CHECK(v.rank[p.find("q12")] == 1);
  CHECK(v.rank[p.find("q21")] == 2);
  CHECK(v.rank[p.find("q31")] == 3);
}

TEST_CASE("smallest chain validates") { CHECK(validate(chain(0, 1)).ok); }

TEST_CASE("diamond with unequal maximal chains is not graded") {
  MarkedPoset p;
  p.add("bot", true, 0);
  p.add("a");
  p.add("b");
  p.add("c");
  p.add("top", true, 3);
  p.add_cover("bot", "a");
  p.add_cover("a", "top");
  p.add_cover("bot", "b");
  p.add_cover("b", "c");
  p.add_cover("c", "top");
  Validation v = validate(p);
  CHECK_FALSE(v.ok);
  REQUIRE(v.error);
  CHECK(*v.error == Errc::NotGraded);
  CHECK_THROWS_AS(GradedPoset{p}, Error);
}

TEST_CASE("decreasing marking along a chain is rejected") {
  Validation v = validate(chain(3, 1));
  CHECK_FALSE(v.ok);
  REQUIRE(v.error);
  CHECK(*v.error == Errc::NotMonotone);
}

TEST_CASE("unmarked extreme element is rejected") {
  MarkedPoset p;
  p.add("a", true, 0);
  p.add("p");
  p.add_cover("a", "p");
  Validation v = validate(p);
  CHECK_FALSE(v.ok);
  REQUIRE(v.error);
  CHECK(*v.error == Errc::UnmarkedExtreme);
}

TEST_CASE("builder element sets") {
  CHECK(unmarked_names(gt_type_A(2, ints({0, 2, 4}))) == std::set<std::string>{"q12", "q21", "q31"});
  CHECK(unmarked_names(gt_type_A(1, ints({0, 3}))) == std::set<std::string>{"q11"});
  CHECK(unmarked_names(gt_type_A(3, ints({0, 2, 4, 6}))).size() == 6);
  CHECK(unmarked_names(gt_type_C(2, ints({2, 4}))) == std::set<std::string>{"q11", "q12", "q21", "q31"});
  CHECK(unmarked_names(gt_type_C(1, ints({2}))) == std::set<std::string>{"q11"});
  CHECK(unmarked_names(gt_type_C(3, ints({2, 4, 6}))).size() == 9);
  CHECK(unmarked_names(basic_pi1(3)).size() == 7);
  CHECK(unmarked_names(basic_pi1(1)) == std::set<std::string>{"p1", "p2", "q1"});
}

TEST_CASE("gelfand-tsetlin type A n=2 covers") {
  std::set<std::pair<std::string, std::string>> expected = {
      {"q*1", "q12"}, {"q12", "q21"}, {"q12", "q*2"}, {"q21", "q31"}, {"q*2", "q31"}, {"q31", "q*3"}};
  CHECK(cover_names(gt_type_A(2, ints({0, 2, 4}))) == expected);
}

TEST_CASE("pi2 marks the last lower element") {
  MarkedPoset p = basic_pi2(1, 5);
  REQUIRE(p.find("p2") >= 0);
  CHECK(p.marked(p.find("p2")));
  CHECK(p.lambda(p.find("p2")) == 5);
  CHECK_FALSE(p.marked(p.find("p1")));
  CHECK(validate(p).ok);
}

TEST_CASE("breve levels") {
  auto c = oracle::graded(Family::GtC, 2, ints({2, 4}));
  BreveLevel b = breve_level(c, 1);
  std::set<std::string> upper;
  for (int e : b.upper) upper.insert(c.poset().name(e));
  CHECK(upper == std::set<std::string>{"q21"});

  auto a = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  BreveLevel b2 = breve_level(a, 2);
  std::set<std::string> upper2;
  for (int e : b2.upper) upper2.insert(a.poset().name(e));
  CHECK(upper2 == std::set<std::string>{"q31"});

  BreveLevel top = breve_level(a, a.max_rank());
  CHECK(top.upper.empty());
  CHECK(top.edges.empty());
}

TEST_CASE("spade classification of the builder families") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(classify_spade(oracle::graded(Family::GtA, n)).ok);
    CHECK(classify_spade(oracle::graded(Family::GtC, n)).ok);
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(classify_spade(oracle::graded(Family::Pi1, n)).ok);
    CHECK(classify_spade(oracle::graded(Family::Pi2, n)).ok);
  }
}

TEST_CASE("an element covering three unmarked elements violates the zigzag shape") {
  MarkedPoset p;
  p.add("bot", true, 0);
  for (const char* e : {"a", "b", "c", "p"}) p.add(e);
  p.add("top", true, 2);
  for (const char* e : {"a", "b", "c"}) {
    p.add_cover("bot", e);
    p.add_cover(e, "p");
  }
  p.add_cover("p", "top");
  GradedPoset g(p);
  SpadeResult s = classify_spade(g);
  CHECK_FALSE(s.ok);
  CHECK(s.violation.has_value());
  try {
    require_spade(g);
    FAIL("expected a violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpadeViolation);
  }
}

TEST_CASE("shift vector choice") {
  auto a = oracle::graded(Family::GtA, 2, ints({0, 2, 4}));
  auto u = choose_u(a, true);
  CHECK(u[a.poset().find("q12")] == 1);
  CHECK(u[a.poset().find("q21")] == 2);
  CHECK(u[a.poset().find("q31")] == 3);

  auto c = oracle::graded(Family::GtC, 1, ints({2}));
  CHECK(choose_u(c, true)[c.poset().find("q11")] == 1);

  GradedPoset tight(chain(0, 1));
  try {
    choose_u(tight, true);
    FAIL("expected NO_INTERIOR_U");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoInteriorU);
  }
}

TEST_CASE("json round trip keeps the family recognisable") {
  MarkedPoset p = gt_type_C(2, ints({2, 4}));
  MarkedPoset q = MarkedPoset::from_json(p.to_json());
  FamilyTag t = recognize_family(q);
  CHECK(t.family == Family::GtC);
  CHECK(t.n == 2);
  CHECK(t.lambda == ints({2, 4}));
  CHECK(recognize_family(chain(0, 2)).family == Family::None);
}

TEST_CASE("malformed poset json") {
  CHECK_THROWS_AS(MarkedPoset::from_json(nlohmann::json::array()), Error);
  CHECK_THROWS_AS(MarkedPoset::from_json({{"elements", {"a"}}, {"covers", nlohmann::json::array()}}), Error);
  nlohmann::json bad = {{"elements", {"a", "b"}}, {"covers", {{"a", "c"}}}, {"marked", {{"a", 0}, {"b", 1}}}};
  CHECK_THROWS(MarkedPoset::from_json(bad));
}
