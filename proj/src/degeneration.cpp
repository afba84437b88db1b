#include "mcop/degeneration.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mcop {

nlohmann::json GradedPiece::to_json(const Algebra& a) const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& m : basis) b.push_back(a.mono_str(m));
  return {{"k", k}, {"dimension", basis.size()}, {"basis", b}};
}

GradedPiece gamma(const Algebra& a, const std::vector<Int>& u, int k, const GeometryLimits& lim) {
  GradedPiece g;
  g.k = k;
  HPolyhedron h = hat_delta(a.poset(), u, 0).dilate(Rat(k));
  for (const auto& pt : lattice_points(h, lim)) {
    RatVec x(pt.begin(), pt.end());
    g.basis.push_back(a.m_to_monomial(x));
  }
  std::sort(g.basis.begin(), g.basis.end());
  return g;
}

namespace {

std::vector<PLHalfSpace> dilate(std::vector<PLHalfSpace> hs, int k) {
  for (auto& s : hs) s.a *= k;
  return hs;
}

}  // namespace

Report hilbert_vs_ehrhart(const Algebra& a, const std::vector<Int>& u, const HilbertOptions& opt,
                          const GeometryLimits& lim) {
  Report r;
  const auto& p = a.poset();
  const std::uint64_t charts = chart_count(p);
  std::vector<GradedPiece> pieces;
  nlohmann::json table = nlohmann::json::array();
  bool agree = true, pl_ok = true;
  auto hs = pl_hat_delta(p, u);
  for (int k = 0; k <= opt.kmax; ++k) {
    pieces.push_back(gamma(a, u, k, lim));
    const auto& g = pieces.back();
    for (const auto& b : g.basis)
      if (!pl_contains(p, dilate(hs, k), a.monomial_to_m(b))) pl_ok = false;
    nlohmann::json counts = nlohmann::json::object();
    for (Chart c = 0; c < charts; ++c) {
      std::uint64_t n = count_lattice_points(hat_delta(p, u, c).dilate(Rat(k)), lim);
      counts[chart_str(p, c)] = n;
      if (n != g.basis.size()) agree = false;
    }
    table.push_back({{"k", k}, {"dimension", g.basis.size()}, {"charts", counts}});
  }
  r.check("dimension_equals_chart_counts", agree, {{"table", table}});
  r.check("basis_in_pl_polytope", pl_ok);

  std::vector<std::set<Monomial>> sets;
  for (const auto& g : pieces) sets.emplace_back(g.basis.begin(), g.basis.end());

  const int gen_max = std::min({opt.generation_kmax, opt.kmax, 2});
  nlohmann::json gaps = nlohmann::json::array();
  if (gen_max >= 2) {
    const auto& deg1 = pieces[1].basis;
    std::set<Monomial> reach;
    for (std::size_t i = 0; i < deg1.size(); ++i)
      for (std::size_t j = i; j < deg1.size(); ++j)
        for (const auto& [m, c] : a.mul(Poly{{{deg1[i], Rat(1)}}}, Poly{{{deg1[j], Rat(1)}}}).terms) reach.insert(m);
    std::size_t missing = 0;
    for (const auto& b : sets[2])
      if (!reach.count(b)) ++missing;
    gaps.push_back({{"k", 2}, {"missing", missing}});
  }
  bool no_gap = true;
  for (const auto& g : gaps) no_gap = no_gap && g["missing"] == 0;
  r.check("generated_in_degree_one", no_gap, {{"degrees", gaps}});

  const int sg_max = std::min(opt.semigroup_kmax, opt.kmax);
  bool closed = true;
  std::size_t products = 0;
  nlohmann::json witness;
  for (int k1 = 1; k1 <= sg_max && closed; ++k1)
    for (int k2 = k1; k1 + k2 <= sg_max && closed; ++k2)
      for (const auto& b1 : pieces[k1].basis) {
        if (!closed) break;
        for (const auto& b2 : pieces[k2].basis) {
          ++products;
          Poly h = a.mul(Poly{{{b1, Rat(1)}}}, Poly{{{b2, Rat(1)}}});
          for (const auto& [m, c] : h.terms)
            if (!sets[k1 + k2].count(m)) {
              closed = false;
              witness = {{"k1", k1}, {"k2", k2}, {"b1", a.mono_str(b1)}, {"b2", a.mono_str(b2)}, {"term", a.mono_str(m)}};
              break;
            }
          if (!closed) break;
        }
      }
  nlohmann::json det = {{"products", products}, {"max_degree", sg_max}};
  if (!witness.is_null()) det["witness"] = witness;
  r.check("supports_form_semigroup", closed, det);
  return r;
}

nlohmann::json ChartValuationSpec::to_json(const GradedPoset& p) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : rho) rows.push_back(ratvec_json(v));
  return {{"chart", chart_str(p, chart)}, {"rho", rows}, {"source", source}};
}

namespace {

// Gcd of the maximal minors is 1 iff the rows extend to a Z-basis.
bool saturated(const RatMat& rows, int d) {
  const int r = static_cast<int>(rows.size());
  Int g = 0;
  std::vector<int> cols;
  std::function<void(int)> rec = [&](int start) {
    if (g == 1) return;
    if (static_cast<int>(cols.size()) == r) {
      RatMat m(r, RatVec(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[i][j] = rows[i][cols[j]];
      Rat det = determinant(m);
      g = gcd(g, Int(abs(numerator(det))));
      return;
    }
    for (int c = start; c < d; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return g == 1;
}

RatMat greedy_basis(const RatMat& candidates, int d) {
  RatMat out;
  auto try_add = [&](const RatVec& v) {
    if (static_cast<int>(out.size()) == d) return;
    RatMat t = out;
    t.push_back(v);
    if (matrix_rank(t) == static_cast<int>(t.size()) && saturated(t, d)) out = std::move(t);
  };
  for (const auto& v : candidates) try_add(primitive(v));
  for (int k = 0; k < d; ++k) {
    RatVec e(d);
    e[k] = 1;
    try_add(e);
  }
  return out;
}

}  // namespace

ChartValuationSpec default_chart_valuation(const GradedPoset& p, const DualStructure* ds, Chart c) {
  ChartValuationSpec s;
  s.chart = c;
  const int d = p.dim();
  if (!ds) {
    for (int k = 0; k < d; ++k) {
      RatVec e(d);
      e[k] = 1;
      s.rho.push_back(e);
    }
    s.source = "standard_basis";
    return s;
  }
  ConeVRep k = ds->chart_covectors(c);
  RatMat cand = k.generators;
  cand.insert(cand.end(), k.lineality.begin(), k.lineality.end());
  if (static_cast<int>(cand.size()) == d && is_unimodular(cand)) {
    s.rho = cand;
    s.source = "chart_covectors";
  } else {
    s.rho = greedy_basis(cand, d);
    s.source = "chart_covectors_greedy";
  }
  return s;
}

ChartValue chart_valuation(const Algebra& a, const ChartValuationSpec& spec, const Poly& f, int k) {
  ChartValue out;
  out.k = k;
  if (f.is_zero()) return out;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    RatVec x = mu(a.poset(), spec.chart, a.monomial_to_m(m));
    std::vector<Rat> v;
    for (const auto& row : spec.rho) v.push_back(dot(row, x));
    if (first || v < out.value) out.value = v;
    first = false;
  }
  return out;
}

Report verify_chart_valuation(const Algebra& a, const ChartValuationSpec& spec, int samples, Rng& rng) {
  Report r;
  int one_term = 0, one_term_fail = 0, multi = 0, multi_additive = 0;
  for (int s = 0; s < samples; ++s) {
    Poly f = a.random_standard(rng, 3, 2), g = a.random_standard(rng, 3, 2);
    ChartValue vf = chart_valuation(a, spec, f, 1), vg = chart_valuation(a, spec, g, 1);
    ChartValue vfg = chart_valuation(a, spec, a.mul(f, g), 2);
    RatVec sum = vec_add(vf.value, vg.value);
    bool additive = vfg.value == sum;
    if (f.terms.size() == 1 && g.terms.size() == 1) {
      ++one_term;
      if (!additive) ++one_term_fail;
    } else {
      ++multi;
      if (additive) ++multi_additive;
    }
  }
  r.check("unimodular_rho", is_unimodular(spec.rho), spec.to_json(a.poset()));
  r.check("unit_value", chart_valuation(a, spec, a.constant(1), 0).value == std::vector<Rat>(a.dim(), Rat(0)));
  r.check("additive_on_monomials", one_term_fail == 0,
          {{"pairs", one_term}, {"failures", one_term_fail}, {"multi_term_pairs", multi},
           {"multi_term_additive", multi_additive}});
  return r;
}

Report no_body_sample(const Algebra& a, const std::vector<Int>& u, const ChartValuationSpec& spec, int kmax,
                      const GeometryLimits& lim) {
  Report r;
  nlohmann::json per_k = nlohmann::json::array();
  bool all = true;
  for (int k = 0; k <= kmax; ++k) {
    std::set<std::vector<Rat>> values, expected;
    for (const auto& b : gamma(a, u, k, lim).basis)
      values.insert(chart_valuation(a, spec, Poly{{{b, Rat(1)}}}, k).value);
    for (const auto& pt : lattice_points(hat_delta(a.poset(), u, spec.chart).dilate(Rat(k)), lim)) {
      RatVec x(pt.begin(), pt.end());
      std::vector<Rat> v;
      for (const auto& row : spec.rho) v.push_back(dot(row, x));
      expected.insert(v);
    }
    bool ok = values == expected;
    all = all && ok;
    per_k.push_back({{"k", k}, {"values", values.size()}, {"lattice_points", expected.size()}, {"match", ok}});
  }
  r.check("value_sets_match_lattice_points", all, {{"spec", spec.to_json(a.poset())}, {"degrees", per_k}});
  return r;
}

Report ord_divisor_check(const Algebra& a, int samples, Rng& rng) {
  Report r;
  const auto& p = a.poset();
  auto pts = structural_points(p);
  auto ord = [&](const StructuralPoint& sp, const Poly& f) {
    SemiElement v = a.valuation(f);
    Rat best = sp.eval(p, v.gens.front());
    for (const auto& g : v.gens) best = std::min(best, sp.eval(p, g));
    return best;
  };
  bool unit_zero = true;
  for (const auto& sp : pts) unit_zero = unit_zero && ord(sp, a.constant(1)) == 0;
  r.check("unit_order_zero", unit_zero);
  int fail = 0;
  nlohmann::json witness;
  for (int s = 0; s < samples; ++s) {
    Poly f = a.random_standard(rng, 3, 2), g = a.random_standard(rng, 3, 2);
    Poly fg = a.mul(f, g);
    for (const auto& sp : pts)
      if (ord(sp, fg) != ord(sp, f) + ord(sp, g)) {
        if (fail++ == 0) witness = {{"sample", s}, {"point", sp.label(p)}, {"f", a.to_json(f)}, {"g", a.to_json(g)}};
      }
  }
  nlohmann::json det = {{"samples", samples}, {"points", pts.size()}, {"failures", fail}};
  if (!witness.is_null()) det["witness"] = witness;
  r.check("order_additive", fail == 0, det);
  return r;
}

}  // namespace mcop
