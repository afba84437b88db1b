#pragma once

#include <vector>

#include "mcop/algebra.hpp"
#include "mcop/mco.hpp"
#include "mcop/polyptych.hpp"
#include "mcop/report.hpp"

namespace mcop {

struct GradedPiece {
  int k = 0;
  std::vector<Monomial> basis;  // sorted
  nlohmann::json to_json(const Algebra& a) const;
};

// Standard monomials b with π_∅(m_b) in kΔ̂_∅.
GradedPiece gamma(const Algebra& a, const std::vector<Int>& u, int k, const GeometryLimits& lim = {});

struct HilbertOptions {
  int kmax = 3;
  int generation_kmax = 2;  // degree-1 generation shadow, checked at degree 2 only
  int semigroup_kmax = 3;   // Γ(k1)Γ(k2) ⊆ Γ(k1+k2) for k1+k2 up to this degree
};

Report hilbert_vs_ehrhart(const Algebra& a, const std::vector<Int>& u, const HilbertOptions& opt,
                          const GeometryLimits& lim = {});

struct ChartValuationSpec {
  Chart chart = 0;
  RatMat rho;  // rows act on chart coordinates
  std::string source;
  nlohmann::json to_json(const GradedPoset& p) const;
};

// ρ̃ from the chart covectors when they form a unimodular basis, otherwise greedily completed.
ChartValuationSpec default_chart_valuation(const GradedPoset& p, const DualStructure* ds, Chart c);

struct ChartValue {
  std::vector<Rat> value;  // INFINITY is an empty vector
  int k = 0;
  bool operator==(const ChartValue& o) const { return value == o.value && k == o.k; }
};

ChartValue chart_valuation(const Algebra& a, const ChartValuationSpec& spec, const Poly& f, int k);
Report verify_chart_valuation(const Algebra& a, const ChartValuationSpec& spec, int samples, Rng& rng);
// {𝔳(b) : b in Γ(k)} against ρ̃(kΔ̂_C ∩ Z^d) for k <= kmax.
Report no_body_sample(const Algebra& a, const std::vector<Int>& u, const ChartValuationSpec& spec, int kmax,
                      const GeometryLimits& lim = {});
// ord(fg) = ord(f) + ord(g) for ord = φ ∘ ν over every structural point.
Report ord_divisor_check(const Algebra& a, int samples, Rng& rng);

}  // namespace mcop
