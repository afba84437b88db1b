#include "mcop/semialgebra.hpp"

#include <algorithm>
#include <map>

namespace mcop {

SemiElement SemiElement::of(std::vector<RatVec> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return {false, std::move(g)};
}

nlohmann::json SemiElement::to_json() const {
  if (infinity) return "inf";
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : gens) j.push_back(ratvec_json(g));
  return j;
}

SemiElement oplus(const SemiElement& a, const SemiElement& b) {
  if (a.infinity) return b;
  if (b.infinity) return a;
  std::vector<RatVec> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return SemiElement::of(std::move(g));
}

SemiElement star(const PolyptychLattice& m, const SemiElement& a, const SemiElement& b) {
  if (a.infinity || b.infinity) return SemiElement::inf();
  std::vector<RatVec> g;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) {
      auto u = m.upsilon(x, y);
      g.insert(g.end(), u.begin(), u.end());
    }
  return SemiElement::of(std::move(g));
}

namespace {

// One chart per cone σ'_ε: the chart made of the tail elements with sign +1.
std::vector<Chart> representative_charts(const DualStructure& ds) {
  const auto& in = ds.interior();
  std::vector<Chart> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << in.size()); ++mask) {
    Chart c = 0;
    for (std::size_t k = 0; k < in.size(); ++k)
      if (!((mask >> k) & 1)) c |= Chart(1) << ds.zigzag().tail_y[in[k]];
    out.push_back(c);
  }
  return out;
}

VPolyhedron chart_hull(const DualStructure& ds, Chart c, const ConeVRep& k, const SemiElement& s,
                       const GeometryLimits& lim) {
  RatMat pts;
  for (const auto& g : s.gens) pts.push_back(mu(ds.poset(), c, g));
  return minkowski_sum_hull(pts, k, ds.dim(), lim);
}

}  // namespace

EqualResult equal_exact(const DualStructure& ds, const SemiElement& a, const SemiElement& b,
                        const GeometryLimits& lim) {
  EqualResult r;
  if (a.infinity || b.infinity) {
    r.equal = a.infinity == b.infinity;
    return r;
  }
  if (a.gens == b.gens) {
    r.equal = true;
    return r;
  }
  for (Chart c : representative_charts(ds)) {
    ConeVRep k = ds.chart_covectors(c);
    VPolyhedron pa = chart_hull(ds, c, k, a, lim), pb = chart_hull(ds, c, k, b, lim);
    if (!polyhedron_equal(pa, pb, lim)) {
      r.equal = false;
      r.witness = {{"chart", chart_str(ds.poset(), c)}};
      return r;
    }
  }
  r.equal = true;
  return r;
}

EqualResult equal_sampled(const GradedPoset& p, const DualStructure* ds, const SemiElement& a, const SemiElement& b,
                          std::int64_t radius) {
  EqualResult r;
  if (a.infinity || b.infinity) {
    r.equal = a.infinity == b.infinity;
    return r;
  }
  auto min_over = [](const SemiElement& s, const PointFn& f) {
    Rat best = f(s.gens.front());
    for (const auto& g : s.gens) best = std::min(best, f(g));
    return best;
  };
  for (const auto& sp : structural_points(p)) {
    PointFn f = [&](const RatVec& m) { return sp.eval(p, m); };
    if (min_over(a, f) != min_over(b, f)) {
      r.witness = {{"point", sp.label(p)}};
      return r;
    }
  }
  if (ds) {
    const int d = ds->dim();
    double total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<double>(2 * radius + 1);
    if (total > 2e6) throw Error(Errc::BoxTooLarge, "sampled equality box has too many dual elements");
    RatVec y(d, Rat(-radius));
    while (true) {
      DualElement n = ds->complete(y);
      PointFn f = [&](const RatVec& m) { return ds->w(n, m); };
      if (min_over(a, f) != min_over(b, f)) {
        r.witness = {{"dual_y", ratvec_json(y)}};
        return r;
      }
      int i = 0;
      while (i < d && y[i] == radius) y[i++] = -radius;
      if (i == d) break;
      y[i] += 1;
    }
  }
  r.equal = true;
  r.conclusive = false;
  r.witness = {{"status", "INCONCLUSIVE"}, {"radius", radius}};
  return r;
}

bool less_equal_exact(const DualStructure& ds, const SemiElement& a, const SemiElement& b, const GeometryLimits& lim) {
  return equal_exact(ds, oplus(a, b), a, lim).equal;
}

SemiElement minimal_form(const DualStructure& ds, const SemiElement& a, const GeometryLimits& lim) {
  if (a.infinity) return a;
  SemiElement cur = a;
  for (std::size_t i = 0; i < cur.gens.size() && cur.gens.size() > 1;) {
    SemiElement rest = cur;
    rest.gens.erase(rest.gens.begin() + static_cast<std::ptrdiff_t>(i));
    if (equal_exact(ds, rest, cur, lim).equal) cur = rest;
    else ++i;
  }
  return cur;
}

}  // namespace mcop
