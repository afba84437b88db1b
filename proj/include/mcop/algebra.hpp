#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcop/marked_poset.hpp"
#include "mcop/polyptych.hpp"
#include "mcop/report.hpp"
#include "mcop/semialgebra.hpp"

namespace mcop {

// Exponents (a_0, b_0, a_1, b_1, ...) of X_c^{a_c} Y_c^{b_c} over coordinates c.
using Monomial = std::vector<int>;

struct Poly {
  std::map<Monomial, Rat> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

// k[X_p, Y_p] / (g_p) with g_p = X_p Y_p - 1 - tail_p.
class Algebra {
 public:
  explicit Algebra(const GradedPoset& p);
  explicit Algebra(GradedPoset&&) = delete;

  const GradedPoset& poset() const { return *p_; }
  const ZigzagData& zigzag() const { return zz_; }
  const SpadeResult& spade() const { return spade_; }
  int dim() const { return p_->dim(); }

  Monomial unit_monomial() const { return Monomial(2 * dim(), 0); }
  Poly constant(const Rat& c) const;
  Poly x(int c) const;
  Poly y(int c) const;
  Monomial tail(int c) const;  // empty when g_c has no tail
  Poly relation(int c) const;
  std::string relation_str(int c) const;
  Monomial leading(int c) const;

  Poly add(const Poly& f, const Poly& g) const;
  Poly scale(const Rat& c, const Poly& f) const;
  // Formal product followed by the normal form.
  Poly mul(const Poly& f, const Poly& g) const;
  Poly normal_form(const Poly& f) const;
  // Rewrites one randomly chosen reducible X_pY_p at a time.
  Poly normal_form_random(const Poly& f, Rng& rng) const;
  bool is_standard(const Monomial& m) const;

  RatVec z_coords(const RatVec& x) const;
  RatVec monomial_to_m(const Monomial& m) const;
  Monomial m_to_monomial(const RatVec& x) const;
  SemiElement valuation(const Poly& f) const;

  std::string mono_str(const Monomial& m) const;
  nlohmann::json to_json(const Poly& f) const;
  Poly random_standard(Rng& rng, int terms, std::int64_t radius) const;

 private:
  const GradedPoset* p_;
  SpadeResult spade_;
  ZigzagData zz_;
};

struct ValuationOptions {
  int samples = 100;
  int max_terms = 3;
  std::int64_t radius = 2;
  std::int64_t sampled_radius = 3;
};

// ν(fg) ≡ ν(f)⋆ν(g), ν(f+g) >= ν(f)⊕ν(g) and ν(cf) = ν(f) on seeded pairs; EXACT when ds is given.
Report verify_valuation(const Algebra& a, const DualStructure* ds, const ValuationOptions& opt, Rng& rng,
                        const GeometryLimits& lim = {});
// ε_p ⋆ ε'_p ≡ ν(1 + tail_p) for every coordinate p.
Report verify_tail_identities(const Algebra& a, const DualStructure* ds, const GeometryLimits& lim = {});

// Idempotence and confluence of the normal form under random rewrite orders.
Report verify_normal_form(const Algebra& a, int samples, Rng& rng);
// Products of random nonzero sparse pairs are nonzero.
Report zero_divisor_scan(const Algebra& a, int samples, Rng& rng);

bool leading_coprime_check(const std::vector<Monomial>& leads);
Report unit_and_dimension_report(const Algebra& a);
Report jacobian_rank_at_samples(const Algebra& a, int count, Rng& rng);
// Injectivity on the exponent box of the given radius, surjectivity onto the coordinate box.
Report verify_adapted_basis(const Algebra& a, int inj_radius, int surj_radius);

}  // namespace mcop
