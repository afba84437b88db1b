#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "mcop/types.hpp"

namespace mcop {

nlohmann::json rat_json(const Rat& r);
nlohmann::json ratvec_json(const RatVec& v);

// {x | a_i·x >= b_i}.
struct HPolyhedron {
  int dim = 0;
  RatMat a;
  RatVec b;

  HPolyhedron() = default;
  explicit HPolyhedron(int d) : dim(d) {}
  void add(RatVec row, Rat rhs);
  bool contains(const RatVec& x) const;
  bool contains_strictly(const RatVec& x) const;
  HPolyhedron dilate(const Rat& k) const;
  // {x + t | x in P}.
  HPolyhedron translate(const RatVec& t) const;
  nlohmann::json to_json() const;
};

struct ConeVRep {
  RatMat generators;
  RatMat lineality;
};

// conv(points) + cone(rays) + span(lineality).
struct VPolyhedron {
  int dim = 0;
  RatMat points, rays, lineality;
  bool empty() const { return points.empty(); }
};

struct GeometryLimits {
  int dim_cap = 9;
  std::uint64_t node_budget = 20'000'000;
  std::size_t fm_row_cap = 4000;
};

// Integer points of P (bounded), lexicographically sorted.
std::vector<std::vector<Int>> lattice_points(const HPolyhedron& p, const GeometryLimits& lim = {});
std::uint64_t count_lattice_points(const HPolyhedron& p, const GeometryLimits& lim = {});

// Scale to a primitive integer vector (positive multiple).
RatVec primitive(const RatVec& v);

// Cone {x | A x >= 0} as extreme rays and a lineality basis.
ConeVRep cone_from_hrep(const RatMat& rows, int dim);
VPolyhedron to_vrep(const HPolyhedron& p, const GeometryLimits& lim = {});
HPolyhedron to_hrep(const VPolyhedron& v, const GeometryLimits& lim = {});
bool contains(const HPolyhedron& h, const VPolyhedron& v);
bool polyhedron_equal(const VPolyhedron& p, const VPolyhedron& q, const GeometryLimits& lim = {});
bool polyhedron_equal(const HPolyhedron& p, const HPolyhedron& q, const GeometryLimits& lim = {});
// conv(S) + K* with K* = {x | w·x >= 0 for generators w, w·x = 0 for lineality w}.
VPolyhedron minkowski_sum_hull(const RatMat& s, const ConeVRep& k, int dim, const GeometryLimits& lim = {});

// Coefficients c with sum c_i basis_i = x; SINGULAR when basis is not a basis.
RatVec expand_in_basis(const RatVec& x, const RatMat& basis);
Rat determinant(const RatMat& m);
bool is_unimodular(const RatMat& m);
int matrix_rank(RatMat m);

}  // namespace mcop
