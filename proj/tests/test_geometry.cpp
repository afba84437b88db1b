#include "doctest.h"
#include "mcop/geometry.hpp"

using namespace mcop;

namespace {

HPolyhedron box(int d, long lo, long hi) {
  HPolyhedron h(d);
  for (int i = 0; i < d; ++i) {
    RatVec e(d, Rat(0));
    e[i] = 1;
    h.add(e, Rat(lo));
    h.add(vec_scale(Rat(-1), e), Rat(-hi));
  }
  return h;
}

}  // namespace

TEST_CASE("interval lattice points") {
  HPolyhedron h = box(1, 0, 3);
  auto pts = lattice_points(h);
  REQUIRE(pts.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(pts[i][0] == i);
  CHECK(count_lattice_points(h) == 4);
}

TEST_CASE("infeasible system has no lattice points") {
  HPolyhedron h(1);
  h.add({Rat(1)}, Rat(1));
  h.add({Rat(-1)}, Rat(0));
  CHECK(lattice_points(h).empty());
}

TEST_CASE("lattice points agree with box enumeration on seeded polytopes") {
  Rng rng(11, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    HPolyhedron h = box(d, -3, 3);
    for (int k = 0; k < 3; ++k) {
      RatVec a(d);
      for (auto& x : a) x = Rat(rng.uniform(-3, 3), rng.uniform(1, 2));
      h.add(a, Rat(rng.uniform(-4, 1)));
    }
    std::vector<std::vector<Int>> brute;
    std::vector<long> x(d, -3);
    while (true) {
      RatVec xr(x.begin(), x.end());
      if (h.contains(xr)) brute.emplace_back(x.begin(), x.end());
      int c = d - 1;
      while (c >= 0 && x[c] == 3) x[c--] = -3;
      if (c < 0) break;
      ++x[c];
    }
    CHECK(lattice_points(h) == brute);
  }
}

TEST_CASE("dilation and translation") {
  HPolyhedron h = box(2, 0, 1);
  CHECK(count_lattice_points(h.dilate(Rat(3))) == 16);
  HPolyhedron t = h.translate({Rat(5), Rat(-2)});
  CHECK(t.contains({Rat(6), Rat(-1)}));
  CHECK_FALSE(t.contains({Rat(0), Rat(0)}));
}

TEST_CASE("polyhedron equality") {
  HPolyhedron sq = box(2, 0, 1);
  CHECK(polyhedron_equal(sq, box(2, 0, 1)));
  CHECK_FALSE(polyhedron_equal(sq, sq.translate({Rat(1), Rat(0)})));

  VPolyhedron a;
  a.dim = 2;
  a.points = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
  a.rays = {{Rat(0), Rat(1)}};
  VPolyhedron b;
  b.dim = 2;
  b.points = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  CHECK_FALSE(polyhedron_equal(a, b));
  CHECK(polyhedron_equal(a, a));
}

TEST_CASE("vertex and facet descriptions round trip") {
  HPolyhedron cube = box(3, -1, 2);
  VPolyhedron v = to_vrep(cube);
  CHECK(v.points.size() == 8);
  CHECK(v.rays.empty());
  CHECK(polyhedron_equal(to_hrep(v), cube));
  CHECK(contains(cube, v));
}

TEST_CASE("cone from inequalities") {
  ConeVRep q = cone_from_hrep({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  CHECK(q.generators.size() == 2);
  CHECK(q.lineality.empty());
  ConeVRep half = cone_from_hrep({{Rat(1), Rat(0)}}, 2);
  CHECK(half.generators.size() == 1);
  CHECK(half.lineality.size() == 1);
}

TEST_CASE("minkowski sum with a dual cone") {
  ConeVRep all;
  all.generators = {{Rat(1)}};
  all.lineality = {{Rat(1)}};
  VPolyhedron zero = minkowski_sum_hull({{Rat(0)}}, all, 1);
  CHECK(zero.points.size() == 1);
  CHECK(zero.rays.empty());
  CHECK(zero.lineality.empty());

  ConeVRep pos;
  pos.generators = {{Rat(1), Rat(0)}};
  VPolyhedron half = minkowski_sum_hull({{Rat(0), Rat(0)}}, pos, 2);
  HPolyhedron expect(2);
  expect.add({Rat(1), Rat(0)}, Rat(0));
  CHECK(polyhedron_equal(to_hrep(half), expect));

  ConeVRep ray;
  ray.generators = {{Rat(1)}};
  VPolyhedron seg = minkowski_sum_hull({{Rat(0)}, {Rat(-1)}}, ray, 1);
  HPolyhedron line(1);
  line.add({Rat(1)}, Rat(-1));
  CHECK(polyhedron_equal(to_hrep(seg), line));
}

TEST_CASE("basis expansion") {
  RatMat basis = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
  RatVec c = expand_in_basis(basis[0], basis);
  CHECK(c == RatVec{Rat(1), Rat(0), Rat(0)});
  Rng rng(3, 0);
  for (int t = 0; t < 20; ++t) {
    RatVec x = {Rat(rng.uniform(-5, 5)), Rat(rng.uniform(-5, 5)), Rat(rng.uniform(-5, 5))};
    RatVec k = expand_in_basis(x, basis);
    RatVec back(3, Rat(0));
    for (int i = 0; i < 3; ++i) back = vec_add(back, vec_scale(k[i], basis[i]));
    CHECK(back == x);
  }
  try {
    expand_in_basis({Rat(1), Rat(0)}, {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
    FAIL("expected SINGULAR");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Singular);
  }
}

TEST_CASE("determinant and unimodularity") {
  CHECK(is_unimodular({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}));
  CHECK_FALSE(is_unimodular({{Rat(1), Rat(0)}, {Rat(0), Rat(2)}}));
  CHECK(determinant({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}) == 1);
  CHECK(matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(primitive({Rat(2), Rat(-4), Rat(6)}) == RatVec{Rat(1), Rat(-2), Rat(3)});
}
