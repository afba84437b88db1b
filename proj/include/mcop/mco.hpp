#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcop/geometry.hpp"
#include "mcop/marked_poset.hpp"
#include "mcop/report.hpp"

namespace mcop {

// Subset C of the coordinates, bit c set when coordinate c is in C.
using Chart = std::uint64_t;

constexpr int kMaxChartDim = 62;

// Comma-separated unmarked element names; the empty string is the empty chart.
Chart parse_chart(const GradedPoset& p, std::string_view text);
std::string chart_str(const GradedPoset& p, Chart c);
inline bool in_chart(Chart c, int coord) { return (c >> coord) & 1U; }
std::uint64_t chart_count(const GradedPoset& p);

// Marked chain-order polytope Δ_{C,O} over the unmarked coordinates.
HPolyhedron build_mco(const GradedPoset& p, Chart c);

RatVec transfer(const GradedPoset& p, Chart c, const RatVec& x);
RatVec transfer_inverse(const GradedPoset& p, Chart c, const RatVec& xp);
RatVec mu(const GradedPoset& p, Chart c, const RatVec& x);
RatVec mu_inverse(const GradedPoset& p, Chart c, const RatVec& xp);
// μ_{C1,C2} = μ_{C2} ∘ μ_{C1}^{-1}.
RatVec mu_between(const GradedPoset& p, Chart c1, Chart c2, const RatVec& x);

// Δ_C − φ_C(u), with u indexed by element.
HPolyhedron hat_delta(const GradedPoset& p, const std::vector<Int>& u, Chart c);

struct ChartCount {
  Chart chart = 0;
  std::uint64_t direct = 0;
  std::uint64_t image = 0;
  bool image_inside = true;
};

struct BijectionResult {
  std::vector<ChartCount> charts;
  bool pass = true;
};

// For every chart: |kΔ̂_C ∩ Z^d| by direct enumeration and as the μ_C-image of kΔ̂_∅ ∩ Z^d.
BijectionResult verify_transfer_bijection(const GradedPoset& p, const std::vector<Int>& u, int k,
                                          const GeometryLimits& lim = {});

// μ_C(a) = transfer_C(a + u) - transfer_C(u) on seeded integer vectors a, for every chart.
Report verify_mu_transfer_compat(const GradedPoset& p, const std::vector<Int>& u, int samples, Rng& rng,
                                 std::int64_t radius = 6);

}  // namespace mcop
