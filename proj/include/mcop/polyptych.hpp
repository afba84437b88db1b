#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcop/geometry.hpp"
#include "mcop/marked_poset.hpp"
#include "mcop/mco.hpp"
#include "mcop/report.hpp"

namespace mcop {

// Elements of the polyptych lattice are stored by their ∅-chart coordinate.
class PolyptychLattice {
 public:
  explicit PolyptychLattice(const GradedPoset& p) : p_(&p) {}
  explicit PolyptychLattice(GradedPoset&&) = delete;
  const GradedPoset& poset() const { return *p_; }
  int rank() const { return p_->dim(); }
  std::uint64_t charts() const { return chart_count(*p_); }
  RatVec to_chart(Chart c, const RatVec& m) const { return mu(*p_, c, m); }
  RatVec from_chart(Chart c, const RatVec& mc) const { return mu_inverse(*p_, c, mc); }
  RatVec add_in_chart(const RatVec& a, const RatVec& b, Chart c) const;
  // Υ(a, b), sorted and deduplicated.
  std::vector<RatVec> upsilon(const RatVec& a, const RatVec& b) const;

 private:
  const GradedPoset* p_;
};

// Identity, inverse and cocycle of the mutations on seeded rational vectors and chart triples.
Report verify_mutation_axioms(const GradedPoset& p, int vectors, int chart_triples, Rng& rng,
                              std::int64_t radius = 6);

struct StructuralPoint {
  enum Kind { Inner, Corner } kind = Inner;
  int p = -1;       // element
  int lower = -1;   // element p' for Corner
  std::string label(const GradedPoset& g) const;
  Rat eval(const GradedPoset& g, const RatVec& m) const;
};

// INNER points in coordinate order, then CORNER points sorted by (marked name, lower name).
std::vector<StructuralPoint> structural_points(const GradedPoset& p);

using PointFn = std::function<Rat(const RatVec&)>;

RatVec random_element(Rng& rng, int d, std::int64_t radius);

struct NamedPoint {
  std::string name;
  PointFn fn;
};

// Min-additivity over all charts and positive homogeneity, on seeded pairs shared by all functionals.
Report verify_point_axiom(const PolyptychLattice& m, const std::vector<NamedPoint>& fns, int samples, Rng& rng,
                          std::int64_t radius = 4);

struct PLHalfSpace {
  StructuralPoint point;
  Int a;
};

std::vector<PLHalfSpace> pl_hat_delta(const GradedPoset& p, const std::vector<Int>& u);
// ∅-chart H-rep obtained by expanding the min in each structural point.
HPolyhedron pl_hat_delta_hrep(const GradedPoset& p, const std::vector<PLHalfSpace>& hs);
bool pl_contains(const GradedPoset& p, const std::vector<PLHalfSpace>& hs, const RatVec& m);
Report verify_pl_hat_delta(const GradedPoset& p, const std::vector<Int>& u, const GeometryLimits& lim = {});

struct DualElement {
  RatVec y, yp;
  bool operator==(const DualElement& o) const { return y == o.y && yp == o.yp; }
};

// Dual lattice, PL cones and pairing built from the (♠) zigzag data.
class DualStructure {
 public:
  explicit DualStructure(const GradedPoset& p);
  explicit DualStructure(GradedPoset&&) = delete;

  const GradedPoset& poset() const { return *p_; }
  const ZigzagData& zigzag() const { return zz_; }
  const std::vector<int>& interior() const { return interior_; }
  int dim() const { return p_->dim(); }

  RatVec hat_e(int c) const;
  RatVec z_coords(const RatVec& x) const;
  RatVec from_z(const RatVec& z) const;

  DualElement complete(const RatVec& y) const;
  // Index of the first violated equation.
  std::optional<int> violation(const DualElement& n) const;
  Rat tail_value(const DualElement& n, int c) const;

  // Sign vectors are indexed like interior().
  std::vector<int> m_signs(const RatVec& x) const;
  std::vector<int> n_signs(const DualElement& n) const;
  std::vector<int> chart_signs(Chart c0) const;

  // σ_ε: generators ε_p ĥe_p (p interior), lineality ĥe_p (p not interior).
  ConeVRep sigma(const std::vector<int>& signs) const;

  DualElement dual_eps(int q) const;
  DualElement dual_eps_prime(int q) const;
  // σ'_ε generators followed by lineality generators (d vectors in total).
  std::vector<DualElement> sigma_prime_basis(const std::vector<int>& signs, int* n_rays = nullptr) const;

  Rat w(const DualElement& n, const RatVec& x) const;
  Rat v(const RatVec& x, const DualElement& n) const;
  Rat phi(int q, const RatVec& x) const;

  // Covectors of the points linear on chart c0, acting on chart-c0 coordinates.
  ConeVRep chart_covectors(Chart c0) const;

 private:
  const GradedPoset* p_;
  SpadeResult spade_;
  ZigzagData zz_;
  std::vector<int> interior_, image_of_;  // image_of_[q] = p with tail_y[p] = q
};

Report verify_strict_dual(const DualStructure& ds, int samples, Rng& rng, std::int64_t radius = 4);

}  // namespace mcop
