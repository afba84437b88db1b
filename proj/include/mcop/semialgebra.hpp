#pragma once

#include <optional>
#include <vector>

#include "mcop/geometry.hpp"
#include "mcop/polyptych.hpp"

namespace mcop {

// INFINITY or a finite generating set of lattice elements (sorted, deduplicated).
struct SemiElement {
  bool infinity = false;
  std::vector<RatVec> gens;

  static SemiElement inf() { return {true, {}}; }
  static SemiElement of(std::vector<RatVec> g);
  nlohmann::json to_json() const;
};

SemiElement oplus(const SemiElement& a, const SemiElement& b);
SemiElement star(const PolyptychLattice& m, const SemiElement& a, const SemiElement& b);

enum class EqualMode { Exact, Sampled };

struct EqualResult {
  bool equal = false;
  bool conclusive = true;
  nlohmann::json witness;
};

// Point-convex-hull equality, per chart through conv(π_C S) + K_C*.
EqualResult equal_exact(const DualStructure& ds, const SemiElement& a, const SemiElement& b,
                        const GeometryLimits& lim = {});
// Minimum agreement over dual elements with |y| <= radius (when ds is given) and all structural points.
EqualResult equal_sampled(const GradedPoset& p, const DualStructure* ds, const SemiElement& a, const SemiElement& b,
                          std::int64_t radius);
// a <= b iff a ⊕ b ≡ a.
bool less_equal_exact(const DualStructure& ds, const SemiElement& a, const SemiElement& b,
                      const GeometryLimits& lim = {});
// Drops generators lying in the hull of the others.
SemiElement minimal_form(const DualStructure& ds, const SemiElement& a, const GeometryLimits& lim = {});

}  // namespace mcop
