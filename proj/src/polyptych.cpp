#include "mcop/polyptych.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcop {

RatVec PolyptychLattice::add_in_chart(const RatVec& a, const RatVec& b, Chart c) const {
  if (c == 0) return vec_add(a, b);
  return mu_inverse(*p_, c, vec_add(mu(*p_, c, a), mu(*p_, c, b)));
}

std::vector<RatVec> PolyptychLattice::upsilon(const RatVec& a, const RatVec& b) const {
  std::set<RatVec> out;
  const std::uint64_t n = charts();
  for (Chart c = 0; c < n; ++c) out.insert(add_in_chart(a, b, c));
  return {out.begin(), out.end()};
}

Report verify_mutation_axioms(const GradedPoset& p, int vectors, int chart_triples, Rng& rng, std::int64_t radius) {
  Report r;
  const int d = p.dim();
  const auto charts = static_cast<std::int64_t>(chart_count(p));
  std::vector<RatVec> xs;
  for (int s = 0; s < vectors; ++s) {
    RatVec x(d);
    for (auto& v : x) v = Rat(rng.uniform(-radius * 4, radius * 4), rng.uniform(1, 4));
    xs.push_back(std::move(x));
  }
  std::uint64_t id_fail = 0, inv_fail = 0, cocycle_fail = 0;
  nlohmann::json witness;
  for (int t = 0; t < chart_triples; ++t) {
    auto a = static_cast<Chart>(rng.uniform(0, charts - 1));
    auto b = static_cast<Chart>(rng.uniform(0, charts - 1));
    auto c = static_cast<Chart>(rng.uniform(0, charts - 1));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const RatVec& x = xs[i];
      RatVec ab = mu_between(p, a, b, x);
      bool id = mu_between(p, a, a, x) == x;
      bool inv = mu_between(p, b, a, ab) == x;
      bool co = mu_between(p, b, c, ab) == mu_between(p, a, c, x);
      if (!id) ++id_fail;
      if (!inv) ++inv_fail;
      if (!co) ++cocycle_fail;
      if ((!id || !inv || !co) && witness.is_null())
        witness = {{"triple", t}, {"vector", i}, {"charts", {chart_str(p, a), chart_str(p, b), chart_str(p, c)}},
                   {"x", ratvec_json(x)}};
    }
  }
  nlohmann::json det = {{"vectors", vectors}, {"chart_triples", chart_triples}};
  r.check("identity", id_fail == 0, {{"failures", id_fail}});
  r.check("inverse", inv_fail == 0, {{"failures", inv_fail}});
  if (!witness.is_null()) det["witness"] = witness;
  det["failures"] = cocycle_fail;
  r.check("cocycle", cocycle_fail == 0, det);
  return r;
}

std::string StructuralPoint::label(const GradedPoset& g) const {
  const auto& P = g.poset();
  if (kind == Inner) return "phi[" + P.name(p) + "]";
  return "phi[" + P.name(p) + "," + P.name(lower) + "]";
}

Rat StructuralPoint::eval(const GradedPoset& g, const RatVec& m) const {
  if (kind == Corner) return -m[g.coord(lower)];
  int c = g.coord(p);
  bool first = true;
  Rat best;
  for (int q : g.lower_free(c))
    if (first || -m[q] < best) best = -m[q], first = false;
  if (!g.lower_marked(c).empty() && (first || best > 0)) best = 0, first = false;
  return m[c] + best;
}

std::vector<StructuralPoint> structural_points(const GradedPoset& p) {
  std::vector<StructuralPoint> out;
  for (int c = 0; c < p.dim(); ++c) out.push_back({StructuralPoint::Inner, p.elem(c), -1});
  std::vector<StructuralPoint> corners;
  const auto& P = p.poset();
  for (int e = 0; e < P.size(); ++e) {
    if (!P.marked(e)) continue;
    for (int l : P.lower(e))
      if (!P.marked(l)) corners.push_back({StructuralPoint::Corner, e, l});
  }
  std::sort(corners.begin(), corners.end(), [&](const StructuralPoint& a, const StructuralPoint& b) {
    return std::make_pair(P.name(a.p), P.name(a.lower)) < std::make_pair(P.name(b.p), P.name(b.lower));
  });
  out.insert(out.end(), corners.begin(), corners.end());
  return out;
}

RatVec random_element(Rng& rng, int d, std::int64_t radius) {
  RatVec v(d);
  for (auto& x : v) x = Rat(rng.uniform(-radius, radius));
  return v;
}

Report verify_point_axiom(const PolyptychLattice& m, const std::vector<NamedPoint>& fns, int samples, Rng& rng,
                          std::int64_t radius) {
  const int d = m.rank();
  struct Pair {
    RatVec a, b;
    std::vector<RatVec> ups;
  };
  std::vector<Pair> pairs;
  for (int s = 0; s < samples; ++s) {
    Pair pr;
    pr.a = random_element(rng, d, radius);
    pr.b = random_element(rng, d, radius);
    pr.ups = m.upsilon(pr.a, pr.b);
    pairs.push_back(std::move(pr));
  }
  Report r;
  int failed = 0;
  for (const auto& f : fns) {
    nlohmann::json witness;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Pair& pr = pairs[i];
      Rat lhs = f.fn(pr.a) + f.fn(pr.b);
      Rat best;
      bool first = true;
      for (const auto& s : pr.ups) {
        Rat v = f.fn(s);
        if (first || v < best) best = v, first = false;
      }
      if (lhs != best) {
        witness = {{"axiom", "min_additive"}, {"sample", i}, {"m1", ratvec_json(pr.a)}, {"m2", ratvec_json(pr.b)},
                   {"sum", rat_json(lhs)}, {"min", rat_json(best)}};
        break;
      }
      for (int lam : {0, 2, 3}) {
        if (f.fn(vec_scale(lam, pr.a)) != Rat(lam) * f.fn(pr.a)) {
          witness = {{"axiom", "homogeneous"}, {"sample", i}, {"m", ratvec_json(pr.a)}, {"lambda", lam}};
          break;
        }
      }
      if (!witness.is_null()) break;
    }
    if (!witness.is_null()) {
      ++failed;
      r.check("point_axiom." + f.name, false, witness);
    }
  }
  r.check("point_axiom", failed == 0,
          {{"functionals", fns.size()}, {"pairs", samples}, {"failed", failed}, {"status", failed ? "AXIOM_FAIL" : "OK"}});
  return r;
}

std::vector<PLHalfSpace> pl_hat_delta(const GradedPoset& p, const std::vector<Int>& u) {
  std::vector<PLHalfSpace> out;
  const auto& P = p.poset();
  for (const auto& sp : structural_points(p)) {
    if (sp.kind == StructuralPoint::Inner) {
      int q = P.lower(sp.p).front();
      out.push_back({sp, u[q] - u[sp.p]});
    } else {
      out.push_back({sp, u[sp.lower] - P.lambda(sp.p)});
    }
  }
  return out;
}

HPolyhedron pl_hat_delta_hrep(const GradedPoset& p, const std::vector<PLHalfSpace>& hs) {
  const int d = p.dim();
  HPolyhedron h(d);
  for (const auto& s : hs) {
    if (s.point.kind == StructuralPoint::Corner) {
      RatVec a(d);
      a[p.coord(s.point.lower)] = -1;
      h.add(a, Rat(s.a));
      continue;
    }
    int c = p.coord(s.point.p);
    for (int q : p.lower_free(c)) {
      RatVec a(d);
      a[c] = 1;
      a[q] = -1;
      h.add(a, Rat(s.a));
    }
    if (!p.lower_marked(c).empty()) {
      RatVec a(d);
      a[c] = 1;
      h.add(a, Rat(s.a));
    }
  }
  return h;
}

bool pl_contains(const GradedPoset& p, const std::vector<PLHalfSpace>& hs, const RatVec& m) {
  for (const auto& s : hs)
    if (s.point.eval(p, m) < Rat(s.a)) return false;
  return true;
}

Report verify_pl_hat_delta(const GradedPoset& p, const std::vector<Int>& u, const GeometryLimits& lim) {
  Report r;
  auto hs = pl_hat_delta(p, u);
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& s : hs) constants[s.point.label(p)] = s.a.str();
  HPolyhedron pl = pl_hat_delta_hrep(p, hs);
  HPolyhedron o = hat_delta(p, u, 0);
  if (p.dim() <= lim.dim_cap) r.check("empty_chart_hrep_equal", polyhedron_equal(pl, o, lim), constants);
  else r.check("empty_chart_hrep_equal", false, {{"status", "DIM_CAP_EXCEEDED"}});
  auto base = lattice_points(o, lim);
  const std::uint64_t n = chart_count(p);
  bool all = true;
  nlohmann::json bad;
  for (Chart c = 0; c < n && all; ++c) {
    auto pts = lattice_points(hat_delta(p, u, c), lim);
    if (pts.size() != base.size()) {
      all = false;
      bad = {{"chart", chart_str(p, c)}, {"points", pts.size()}, {"expected", base.size()}};
      break;
    }
    for (const auto& x : pts) {
      RatVec xr(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
      if (!pl_contains(p, hs, mu_inverse(p, c, xr))) {
        all = false;
        bad = {{"chart", chart_str(p, c)}, {"point", ratvec_json(xr)}};
        break;
      }
    }
  }
  r.check("chart_images_match", all, bad);
  return r;
}

DualStructure::DualStructure(const GradedPoset& p) : p_(&p) {
  if (p.tag().family == Family::None)
    throw Error(Errc::Unsupported, "dual lattice is constructed only for the GT-A, GT-C, pi1 and pi2 families");
  spade_ = require_spade(p);
  zz_ = zigzag_data(p, spade_);
  const int d = p.dim();
  image_of_.assign(d, -1);
  for (int c = 0; c < d; ++c)
    if (zz_.interior(c)) {
      interior_.push_back(c);
      image_of_[zz_.tail_y[c]] = c;
    }
}

RatVec DualStructure::hat_e(int c) const {
  RatVec v(dim());
  for (int k : zz_.hat_e[c]) v[k] = 1;
  return v;
}

RatVec DualStructure::z_coords(const RatVec& x) const {
  RatVec z(dim());
  for (int c = 0; c < dim(); ++c) z[c] = zz_.next[c] >= 0 ? Rat(x[c] - x[zz_.next[c]]) : x[c];
  return z;
}

RatVec DualStructure::from_z(const RatVec& z) const {
  RatVec x(dim());
  for (int c = 0; c < dim(); ++c)
    if (z[c] != 0)
      for (int k : zz_.hat_e[c]) x[k] += z[c];
  return x;
}

Rat DualStructure::tail_value(const DualElement& n, int c) const {
  int q = zz_.tail_y[c];
  if (q < 0) return 0;
  int px = zz_.tail_x[c];
  return px >= 0 ? Rat(n.y[px] - n.yp[q]) : Rat(-n.yp[q]);
}

DualElement DualStructure::complete(const RatVec& y) const {
  DualElement n{y, RatVec(dim())};
  for (int c = dim() - 1; c >= 0; --c) {
    if (!zz_.interior(c)) {
      n.yp[c] = y[c];
      continue;
    }
    Rat t = tail_value(n, c);
    n.yp[c] = y[c] - (t < 0 ? t : Rat(0));
  }
  return n;
}

std::optional<int> DualStructure::violation(const DualElement& n) const {
  for (int c = 0; c < dim(); ++c) {
    Rat want = 0;
    if (zz_.interior(c)) {
      Rat t = tail_value(n, c);
      want = t < 0 ? t : Rat(0);
    }
    if (n.y[c] - n.yp[c] != want) return c;
  }
  return std::nullopt;
}

std::vector<int> DualStructure::m_signs(const RatVec& x) const {
  RatVec z = z_coords(x);
  std::vector<int> s;
  for (int c : interior_) s.push_back(z[c] >= 0 ? 1 : -1);
  return s;
}

std::vector<int> DualStructure::n_signs(const DualElement& n) const {
  std::vector<int> s;
  for (int c : interior_) s.push_back(tail_value(n, c) <= 0 ? 1 : -1);
  return s;
}

std::vector<int> DualStructure::chart_signs(Chart c0) const {
  std::vector<int> s;
  for (int c : interior_) s.push_back(in_chart(c0, zz_.tail_y[c]) ? 1 : -1);
  return s;
}

ConeVRep DualStructure::sigma(const std::vector<int>& signs) const {
  ConeVRep k;
  std::size_t idx = 0;
  for (int c = 0; c < dim(); ++c) {
    if (zz_.interior(c)) k.generators.push_back(vec_scale(signs[idx++], hat_e(c)));
    else k.lineality.push_back(hat_e(c));
  }
  return k;
}

Rat DualStructure::phi(int q, const RatVec& x) const {
  return StructuralPoint{StructuralPoint::Inner, p_->elem(q), -1}.eval(*p_, x);
}

DualElement DualStructure::dual_eps(int q) const {
  DualElement n{RatVec(dim()), RatVec(dim())};
  for (int r = 0; r < dim(); ++r) {
    RatVec h = hat_e(r);
    n.y[r] = phi(q, h);
    n.yp[r] = -phi(q, vec_scale(-1, h));
  }
  return n;
}

DualElement DualStructure::dual_eps_prime(int q) const {
  DualElement n{RatVec(dim()), RatVec(dim())};
  for (int r = 0; r < dim(); ++r) {
    bool in = std::find(zz_.hat_e[r].begin(), zz_.hat_e[r].end(), q) != zz_.hat_e[r].end();
    n.y[r] = n.yp[r] = in ? -1 : 0;
  }
  return n;
}

std::vector<DualElement> DualStructure::sigma_prime_basis(const std::vector<int>& signs, int* n_rays) const {
  std::vector<DualElement> out;
  for (std::size_t k = 0; k < interior_.size(); ++k) {
    int q = zz_.tail_y[interior_[k]];
    out.push_back(signs[k] > 0 ? dual_eps(q) : dual_eps_prime(q));
  }
  if (n_rays) *n_rays = static_cast<int>(out.size());
  for (int r = 0; r < dim(); ++r)
    if (image_of_[r] < 0) out.push_back(dual_eps(r));
  return out;
}

Rat DualStructure::w(const DualElement& n, const RatVec& x) const {
  RatVec z = z_coords(x);
  Rat s = 0;
  for (int c = 0; c < dim(); ++c) {
    if (z[c] == 0) continue;
    s += z[c] * (z[c] > 0 ? n.y[c] : n.yp[c]);
  }
  return s;
}

Rat DualStructure::v(const RatVec& x, const DualElement& n) const {
  auto signs = n_signs(n);
  int rays = 0;
  auto basis = sigma_prime_basis(signs, &rays);
  RatMat b;
  for (const auto& g : basis) b.push_back(g.y);
  RatVec coef = expand_in_basis(n.y, b);
  Rat s = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coef[k] == 0) continue;
    Rat val;
    if (static_cast<int>(k) < rays) {
      int q = zz_.tail_y[interior_[k]];
      val = signs[k] > 0 ? phi(q, x) : -x[q];
    } else {
      int idx = static_cast<int>(k) - rays, r = -1;
      for (int t = 0; t < dim(); ++t)
        if (image_of_[t] < 0 && idx-- == 0) {
          r = t;
          break;
        }
      val = phi(r, x);
    }
    s += coef[k] * val;
  }
  return s;
}

ConeVRep DualStructure::chart_covectors(Chart c0) const {
  int rays = 0;
  auto basis = sigma_prime_basis(chart_signs(c0), &rays);
  std::vector<RatVec> pre;
  for (int k = 0; k < dim(); ++k) {
    RatVec e(dim());
    e[k] = 1;
    pre.push_back(mu_inverse(*p_, c0, e));
  }
  ConeVRep out;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    RatVec l(dim());
    for (int k = 0; k < dim(); ++k) l[k] = w(basis[g], pre[k]);
    if (static_cast<int>(g) < rays) out.generators.push_back(l);
    else out.lineality.push_back(l);
  }
  return out;
}

namespace {

nlohmann::json dual_json(const DualElement& n) { return {{"y", ratvec_json(n.y)}, {"yp", ratvec_json(n.yp)}}; }

DualElement random_dual(const DualStructure& ds, Rng& rng, std::int64_t radius) {
  return ds.complete(random_element(rng, ds.dim(), radius));
}

}  // namespace

Report verify_strict_dual(const DualStructure& ds, int samples, Rng& rng, std::int64_t radius) {
  Report r;
  const auto& P = ds.poset();
  const int d = ds.dim();
  PolyptychLattice lat(P);

  // Generators are dual elements and the cone bases are unimodular.
  {
    bool ok = true;
    nlohmann::json bad;
    for (int q = 0; q < d && ok; ++q)
      for (const auto& n : {ds.dual_eps(q), ds.dual_eps_prime(q)})
        if (ds.violation(n)) {
          ok = false;
          bad = {{"generator", P.coord_name(q)}, {"element", dual_json(n)}};
          break;
        }
    r.check("generators_satisfy_equations", ok, bad);
  }
  const std::size_t ncones = std::size_t(1) << ds.interior().size();
  {
    bool uni = true, member = true;
    nlohmann::json bad;
    for (std::size_t mask = 0; mask < ncones; ++mask) {
      std::vector<int> signs(ds.interior().size());
      for (std::size_t k = 0; k < signs.size(); ++k) signs[k] = (mask >> k) & 1 ? -1 : 1;
      int rays = 0;
      auto basis = ds.sigma_prime_basis(signs, &rays);
      RatMat b;
      for (const auto& g : basis) b.push_back(g.y);
      if (!is_unimodular(b)) uni = false, bad = {{"signs", signs}};
      for (int g = 0; g < rays; ++g) {
        auto s = ds.n_signs(basis[g]);
        for (std::size_t k = 0; k < s.size(); ++k) {
          Rat t = ds.tail_value(basis[g], ds.interior()[k]);
          if (signs[k] * (-t) < 0) member = false, bad = {{"signs", signs}, {"generator", g}};
        }
      }
      for (std::size_t g = rays; g < basis.size(); ++g)
        for (int k : ds.interior())
          if (ds.tail_value(basis[g], k) != 0) member = false, bad = {{"signs", signs}, {"lineality", g}};
      // σ_ε: generators in the cone and unimodular.
      ConeVRep sg = ds.sigma(signs);
      RatMat sb = sg.generators;
      sb.insert(sb.end(), sg.lineality.begin(), sg.lineality.end());
      if (!is_unimodular(sb)) uni = false, bad = {{"sigma_signs", signs}};
    }
    r.check("cone_bases_unimodular", uni, bad);
    r.check("cone_generators_in_cone", member, bad);
  }

  // (ii) symmetry.
  {
    bool ok = true;
    nlohmann::json bad;
    for (int s = 0; s < samples; ++s) {
      RatVec m = random_element(rng, d, radius);
      DualElement n = random_dual(ds, rng, radius);
      Rat a = ds.v(m, n), b = ds.w(n, m);
      if (a != b) {
        ok = false;
        bad = {{"m", ratvec_json(m)}, {"n", dual_json(n)}, {"v", rat_json(a)}, {"w", rat_json(b)}};
        break;
      }
    }
    r.check("pairing_symmetric", ok, bad);
  }

  // (iii) injectivity on samples, both sides.
  {
    std::vector<DualElement> gens;
    for (int q = 0; q < d; ++q) gens.push_back(ds.dual_eps(q));
    for (int q = 0; q < d; ++q) gens.push_back(ds.dual_eps_prime(q));
    std::map<std::vector<Rat>, RatVec> seen_m;
    bool ok = true;
    nlohmann::json bad;
    for (int s = 0; s < samples && ok; ++s) {
      RatVec m = random_element(rng, d, radius);
      std::vector<Rat> key;
      for (const auto& g : gens) key.push_back(ds.v(m, g));
      auto [it, fresh] = seen_m.emplace(key, m);
      if (!fresh && it->second != m) ok = false, bad = {{"m1", ratvec_json(it->second)}, {"m2", ratvec_json(m)}};
    }
    std::vector<RatVec> mgens;
    for (int c = 0; c < d; ++c) {
      mgens.push_back(ds.hat_e(c));
      mgens.push_back(vec_scale(-1, ds.hat_e(c)));
    }
    std::map<std::vector<Rat>, RatVec> seen_n;
    for (int s = 0; s < samples && ok; ++s) {
      DualElement n = random_dual(ds, rng, radius);
      std::vector<Rat> key;
      for (const auto& g : mgens) key.push_back(ds.w(n, g));
      auto [it, fresh] = seen_n.emplace(key, n.y);
      if (!fresh && it->second != n.y) ok = false, bad = {{"n1", ratvec_json(it->second)}, {"n2", ratvec_json(n.y)}};
    }
    r.check("pairing_injective", ok, bad);
  }

  // (iv) chart C0 <-> cone σ'_{ε(C0)}.
  {
    bool inside_ok = true, outside_ok = true, distinct = true;
    nlohmann::json bad_in, bad_out;
    std::set<std::vector<int>> sign_set;
    const std::uint64_t nch = lat.charts();
    const int per_chart = std::max(2, samples / static_cast<int>(std::min<std::uint64_t>(nch, 64)));
    for (Chart c0 = 0; c0 < nch; ++c0) {
      auto signs = ds.chart_signs(c0);
      sign_set.insert(signs);
      int rays = 0;
      auto basis = ds.sigma_prime_basis(signs, &rays);
      auto combine = [&](const std::vector<Int>& coef) {
        RatVec y(d);
        for (std::size_t g = 0; g < basis.size(); ++g) y = vec_add(y, vec_scale(Rat(coef[g]), basis[g].y));
        return ds.complete(y);
      };
      for (int s = 0; s < per_chart && inside_ok; ++s) {
        std::vector<Int> coef(basis.size());
        for (std::size_t g = 0; g < basis.size(); ++g)
          coef[g] = static_cast<int>(g) < rays ? rng.uniform(0, radius) : rng.uniform(-radius, radius);
        DualElement n = combine(coef);
        for (int t = 0; t < 4; ++t) {
          RatVec m1 = random_element(rng, d, radius), m2 = random_element(rng, d, radius);
          if (ds.w(n, lat.add_in_chart(m1, m2, c0)) != ds.w(n, m1) + ds.w(n, m2)) {
            inside_ok = false;
            bad_in = {{"chart", chart_str(P, c0)}, {"n", dual_json(n)}, {"m1", ratvec_json(m1)}, {"m2", ratvec_json(m2)}};
            break;
          }
        }
      }
      // An element strictly inside a neighbouring cone is not linear on chart c0.
      for (std::size_t k = 0; k < signs.size() && outside_ok; ++k) {
        auto other = signs;
        other[k] = -other[k];
        auto ob = ds.sigma_prime_basis(other, &rays);
        RatVec y(d);
        for (int g = 0; g < rays; ++g) y = vec_add(y, ob[g].y);
        DualElement n = ds.complete(y);
        bool found = false;
        for (int c = 0; c < d && !found; ++c) {
          RatVec h = ds.hat_e(c), nh = vec_scale(-1, h);
          if (ds.w(n, lat.add_in_chart(h, nh, c0)) != ds.w(n, h) + ds.w(n, nh)) found = true;
        }
        for (int t = 0; t < 8 && !found; ++t) {
          RatVec m1 = random_element(rng, d, radius), m2 = random_element(rng, d, radius);
          if (ds.w(n, lat.add_in_chart(m1, m2, c0)) != ds.w(n, m1) + ds.w(n, m2)) found = true;
        }
        if (!found) {
          outside_ok = false;
          bad_out = {{"chart", chart_str(P, c0)}, {"n", dual_json(n)}};
        }
      }
    }
    distinct = sign_set.size() == ncones;
    r.check("chart_cone_linear_inside", inside_ok, bad_in);
    r.check("chart_cone_nonlinear_outside", outside_ok, bad_out);
    r.check("chart_cone_surjective", distinct, {{"cones", ncones}, {"cones_hit", sign_set.size()}});
    // Charts sharing a cone differ by a linear mutation.
    std::map<std::vector<int>, Chart> rep;
    bool linear = true;
    nlohmann::json bad_lin;
    for (Chart c0 = 0; c0 < nch && linear; ++c0) {
      auto [it, fresh] = rep.emplace(ds.chart_signs(c0), c0);
      if (fresh) continue;
      for (int t = 0; t < 4; ++t) {
        RatVec m1 = random_element(rng, d, radius), m2 = random_element(rng, d, radius);
        RatVec lhs = mu_between(P, it->second, c0, vec_add(m1, m2));
        RatVec rhs = vec_add(mu_between(P, it->second, c0, m1), mu_between(P, it->second, c0, m2));
        if (lhs != rhs) {
          linear = false;
          bad_lin = {{"chart1", chart_str(P, it->second)}, {"chart2", chart_str(P, c0)}};
          break;
        }
      }
    }
    r.check("charts_in_same_cone_linearly_related", linear, bad_lin);
  }
  return r;
}

}  // namespace mcop
