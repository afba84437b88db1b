#include "mcop/mco.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mcop {

Chart parse_chart(const GradedPoset& p, std::string_view text) {
  if (p.dim() > kMaxChartDim) throw Error(Errc::DimCapExceeded, "too many unmarked elements for chart labels");
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return 0;
  Chart c = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = std::min(s.find(',', start), s.size());
    std::string name = s.substr(start, comma - start);
    auto b = name.find_first_not_of(" \t");
    auto e = name.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::ParseError, "empty element name in chart '" + s + "'");
    name = name.substr(b, e - b + 1);
    int el = p.poset().find(name);
    if (el < 0) throw Error(Errc::ParseError, "chart names unknown element '" + name + "'");
    if (p.poset().marked(el)) throw Error(Errc::ParseError, "chart element '" + name + "' is marked");
    c |= Chart(1) << p.coord(el);
    start = comma + 1;
  }
  return c;
}

std::string chart_str(const GradedPoset& p, Chart c) {
  std::string s;
  for (int i = 0; i < p.dim(); ++i)
    if (in_chart(c, i)) {
      if (!s.empty()) s += ",";
      s += p.coord_name(i);
    }
  return s;
}

std::uint64_t chart_count(const GradedPoset& p) {
  if (p.dim() > kMaxChartDim) throw Error(Errc::DimCapExceeded, "too many unmarked elements for chart labels");
  return std::uint64_t(1) << p.dim();
}

HPolyhedron build_mco(const GradedPoset& p, Chart c) {
  const auto& P = p.poset();
  const int d = p.dim();
  HPolyhedron h(d);
  std::set<std::pair<RatVec, Rat>> seen;
  auto push = [&](RatVec a, Rat b) {
    if (is_zero(a)) return;
    if (seen.insert({a, b}).second) h.add(std::move(a), std::move(b));
  };
  for (int i = 0; i < d; ++i)
    if (in_chart(c, i)) {
      RatVec a(d);
      a[i] = 1;
      push(a, 0);
    }
  auto in_c = [&](int e) { return !P.marked(e) && in_chart(c, p.coord(e)); };
  std::vector<int> chain;
  for (int a = 0; a < P.size(); ++a) {
    if (in_c(a)) continue;
    std::function<void(int)> walk = [&](int cur) {
      for (int v : P.upper(cur)) {
        if (in_c(v)) {
          chain.push_back(v);
          walk(v);
          chain.pop_back();
          continue;
        }
        RatVec row(d);
        Rat rhs = 0;
        if (P.marked(v)) rhs -= Rat(P.lambda(v));
        else row[p.coord(v)] += 1;
        if (P.marked(a)) rhs += Rat(P.lambda(a));
        else row[p.coord(a)] -= 1;
        for (int e : chain) row[p.coord(e)] -= 1;
        push(row, rhs);
      }
    };
    walk(a);
  }
  return h;
}

namespace {

// x'_p = x_p + min over lower covers q of (-x_q for unmarked q, marked_value(q) for marked q), p in C.
template <class MarkedValue>
RatVec apply_min_map(const GradedPoset& p, Chart c, const RatVec& x, MarkedValue mv) {
  RatVec out = x;
  for (int i = 0; i < p.dim(); ++i) {
    if (!in_chart(c, i)) continue;
    bool first = true;
    Rat m;
    for (int q : p.lower_free(i)) {
      Rat v = -x[q];
      if (first || v < m) m = v, first = false;
    }
    for (int q : p.lower_marked(i)) {
      Rat v = mv(q);
      if (first || v < m) m = v, first = false;
    }
    out[i] = x[i] + m;
  }
  return out;
}

template <class MarkedValue>
RatVec invert_min_map(const GradedPoset& p, Chart c, const RatVec& xp, MarkedValue mv) {
  // Coordinates are sorted by rank, so lower covers are recovered first.
  RatVec x = xp;
  for (int i = 0; i < p.dim(); ++i) {
    if (!in_chart(c, i)) continue;
    bool first = true;
    Rat m;
    for (int q : p.lower_free(i)) {
      Rat v = -x[q];
      if (first || v < m) m = v, first = false;
    }
    for (int q : p.lower_marked(i)) {
      Rat v = mv(q);
      if (first || v < m) m = v, first = false;
    }
    x[i] = xp[i] - m;
  }
  return x;
}

}  // namespace

RatVec transfer(const GradedPoset& p, Chart c, const RatVec& x) {
  return apply_min_map(p, c, x, [&](int q) { return Rat(-p.poset().lambda(q)); });
}

RatVec transfer_inverse(const GradedPoset& p, Chart c, const RatVec& xp) {
  return invert_min_map(p, c, xp, [&](int q) { return Rat(-p.poset().lambda(q)); });
}

RatVec mu(const GradedPoset& p, Chart c, const RatVec& x) {
  return apply_min_map(p, c, x, [](int) { return Rat(0); });
}

RatVec mu_inverse(const GradedPoset& p, Chart c, const RatVec& xp) {
  return invert_min_map(p, c, xp, [](int) { return Rat(0); });
}

RatVec mu_between(const GradedPoset& p, Chart c1, Chart c2, const RatVec& x) {
  if (c1 == c2) return x;
  return mu(p, c2, mu_inverse(p, c1, x));
}

HPolyhedron hat_delta(const GradedPoset& p, const std::vector<Int>& u, Chart c) {
  RatVec shift = transfer(p, c, u_coords(p, u));
  return build_mco(p, c).translate(vec_scale(-1, shift));
}

BijectionResult verify_transfer_bijection(const GradedPoset& p, const std::vector<Int>& u, int k,
                                          const GeometryLimits& lim) {
  BijectionResult res;
  const std::uint64_t n = chart_count(p);
  auto base = lattice_points(hat_delta(p, u, 0).dilate(k), lim);
  std::vector<RatVec> base_r;
  base_r.reserve(base.size());
  for (const auto& x : base) {
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rat(x[i]);
    base_r.push_back(std::move(r));
  }
  for (Chart c = 0; c < n; ++c) {
    ChartCount cc;
    cc.chart = c;
    HPolyhedron h = hat_delta(p, u, c).dilate(k);
    cc.direct = count_lattice_points(h, lim);
    std::set<RatVec> images;
    for (const auto& x : base_r) {
      RatVec y = mu(p, c, x);
      if (!h.contains(y)) cc.image_inside = false;
      images.insert(std::move(y));
    }
    cc.image = images.size();
    if (cc.image != cc.direct || !cc.image_inside || cc.direct != base.size()) res.pass = false;
    res.charts.push_back(cc);
  }
  return res;
}

}  // namespace mcop

namespace mcop {

Report verify_mu_transfer_compat(const GradedPoset& p, const std::vector<Int>& u, int samples, Rng& rng,
                                 std::int64_t radius) {
  Report r;
  const int d = p.dim();
  RatVec uc = u_coords(p, u);
  std::vector<RatVec> pts;
  for (int s = 0; s < samples; ++s) {
    RatVec a(d);
    for (auto& v : a) v = rng.uniform(-radius, radius);
    pts.push_back(std::move(a));
  }
  std::uint64_t failures = 0, checked = 0;
  nlohmann::json witness;
  for (Chart c = 0; c < chart_count(p); ++c) {
    RatVec tu = transfer(p, c, uc);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const RatVec& a = pts[i];
      ++checked;
      RatVec lhs = mu(p, c, a), rhs = vec_sub(transfer(p, c, vec_add(a, uc)), tu);
      if (lhs != rhs && failures++ == 0)
        witness = {{"chart", chart_str(p, c)}, {"sample", i}, {"a", ratvec_json(a)}, {"mu", ratvec_json(lhs)},
                   {"transfer_difference", ratvec_json(rhs)}};
    }
  }
  nlohmann::json det = {{"charts", chart_count(p)}, {"vectors", samples}, {"checked", checked}, {"failures", failures}};
  if (!witness.is_null()) det["witness"] = witness;
  r.check("mu_equals_translated_transfer", failures == 0, det);
  return r;
}

}  // namespace mcop
