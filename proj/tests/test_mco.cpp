#include "doctest.h"
#include "mcop/mco.hpp"
#include "oracles.hpp"

using namespace mcop;
using oracle::ints;

namespace {

RatVec v3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

GradedPoset gtA2() { return oracle::graded(Family::GtA, 2, ints({0, 2, 4})); }

}  // namespace

TEST_CASE("coordinates are ordered by rank then name") {
  auto g = gtA2();
  REQUIRE(g.dim() == 3);
  CHECK(g.coord_name(0) == "q12");
  CHECK(g.coord_name(1) == "q21");
  CHECK(g.coord_name(2) == "q31");
}

TEST_CASE("empty chart is the marked order polytope") {
  auto g = gtA2();
  HPolyhedron h = build_mco(g, 0);
  for (long a = -1; a <= 5; ++a)
    for (long b = -1; b <= 5; ++b)
      for (long c = -1; c <= 5; ++c) {
        bool expect = 0 <= a && a <= b && a <= 2 && b <= c && 2 <= c && c <= 4;
        CHECK(h.contains(v3(a, b, c)) == expect);
      }
}

TEST_CASE("full chart on a single chain") {
  auto g = oracle::graded(Family::GtA, 1, ints({0, 3}));
  auto pts = lattice_points(build_mco(g, 1));
  REQUIRE(pts.size() == 4);
  CHECK(pts.front()[0] == 0);
  CHECK(pts.back()[0] == 3);
}

TEST_CASE("chart through the top element carries the chain bounds") {
  auto g = gtA2();
  Chart c = parse_chart(g, "q31");
  HPolyhedron h = build_mco(g, c);
  for (const auto& p : lattice_points(h)) {
    long b = p[1].convert_to<long>(), x = p[2].convert_to<long>();
    CHECK(x >= 0);
    CHECK(x <= 4 - b);
    CHECK(x <= 2);
  }
}

TEST_CASE("chart parsing") {
  auto g = gtA2();
  CHECK(parse_chart(g, "") == 0);
  Chart c = parse_chart(g, "q31,q12");
  CHECK(chart_str(g, c) == "q12,q31");
  CHECK(chart_count(g) == 8);
  CHECK_THROWS_AS(parse_chart(g, "q*1"), Error);
  CHECK_THROWS_AS(parse_chart(g, "nope"), Error);
}

TEST_CASE("transfer map example and its inverse") {
  auto g = gtA2();
  Chart c = parse_chart(g, "q31");
  CHECK(transfer(g, c, v3(0, 2, 3)) == v3(0, 2, 1));
  CHECK(transfer_inverse(g, c, v3(0, 2, 1)) == v3(0, 2, 3));
  CHECK(transfer(g, 0, v3(1, 2, 3)) == v3(1, 2, 3));
}

TEST_CASE("linearised transfer example") {
  auto g = gtA2();
  Chart c = parse_chart(g, "q31");
  CHECK(mu(g, c, v3(0, 1, 0)) == v3(0, 1, -1));
  CHECK(mu(g, 0, v3(4, -2, 7)) == v3(4, -2, 7));
  RatVec u = v3(1, 2, 3);
  RatVec via_transfer = vec_sub(transfer(g, c, vec_add(v3(0, 1, 0), u)), transfer(g, c, u));
  CHECK(via_transfer == v3(0, 1, -1));
  CHECK(mu_inverse(g, c, v3(0, 1, -1)) == v3(0, 1, 0));
}

TEST_CASE("translated polytope") {
  auto g = gtA2();
  auto u = choose_u(g, true);
  CHECK(u_coords(g, u) == v3(1, 2, 3));
  Chart c = parse_chart(g, "q31");
  HPolyhedron expect = build_mco(g, c).translate(v3(-1, -2, -1));
  CHECK(polyhedron_equal(hat_delta(g, u, c), expect));
  CHECK(polyhedron_equal(hat_delta(g, u, 0), build_mco(g, 0).translate(v3(-1, -2, -3))));
}

TEST_CASE("chart counts agree with the order polytope and the gl3 dimension") {
  auto g = gtA2();
  auto u = choose_u(g, true);
  for (int k = 1; k <= 3; ++k) {
    const auto brute = oracle::order_polytope_count(g.poset(), k);
    CHECK(Rat(brute) == oracle::weyl_gl({4L * k, 2L * k, 0}));
    BijectionResult b = verify_transfer_bijection(g, u, k);
    CHECK(b.pass);
    CHECK(b.charts.size() == 8);
    for (const auto& cc : b.charts) {
      CHECK(cc.direct == brute);
      CHECK(cc.image == brute);
    }
  }
}

TEST_CASE("type C chart counts agree with the sp4 dimension") {
  auto g = oracle::graded(Family::GtC, 2, ints({2, 4}));
  auto u = choose_u(g, true);
  for (int k = 1; k <= 2; ++k) {
    const auto brute = oracle::order_polytope_count(g.poset(), k);
    CHECK(Rat(brute) == oracle::weyl_sp({4L * k, 2L * k}));
    BijectionResult b = verify_transfer_bijection(g, u, k);
    CHECK(b.pass);
    CHECK(b.charts.size() == 16);
    for (const auto& cc : b.charts) CHECK(cc.direct == brute);
  }
}

TEST_CASE("small chart counts") {
  auto c1 = oracle::graded(Family::GtC, 1, ints({2}));
  for (const auto& cc : verify_transfer_bijection(c1, choose_u(c1, true), 1).charts) CHECK(cc.direct == 3);
  auto a1 = oracle::graded(Family::GtA, 1, ints({0, 3}));
  for (const auto& cc : verify_transfer_bijection(a1, choose_u(a1, true), 2).charts) CHECK(cc.direct == 7);
}

TEST_CASE("linearised transfer matches translated transfer on samples") {
  for (auto [f, lambda] : {std::pair{Family::GtA, ints({0, 2, 4})}, std::pair{Family::GtC, ints({2, 4})}}) {
    auto g = oracle::graded(f, 2, lambda);
    Rng rng(0, 1);
    CHECK(verify_mu_transfer_compat(g, choose_u(g, true), 100, rng).pass);
  }
}
