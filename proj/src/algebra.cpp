#include "mcop/algebra.hpp"

#include <algorithm>
#include <set>

namespace mcop {

namespace {

void add_term(std::map<Monomial, Rat>& t, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Rat binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rat(r);
}

}  // namespace

Algebra::Algebra(const GradedPoset& p) : p_(&p), spade_(require_spade(p)), zz_(zigzag_data(p, spade_)) {}

Poly Algebra::constant(const Rat& c) const {
  Poly f;
  add_term(f.terms, unit_monomial(), c);
  return f;
}

Poly Algebra::x(int c) const {
  Poly f;
  Monomial m = unit_monomial();
  m[2 * c] = 1;
  f.terms[m] = 1;
  return f;
}

Poly Algebra::y(int c) const {
  Poly f;
  Monomial m = unit_monomial();
  m[2 * c + 1] = 1;
  f.terms[m] = 1;
  return f;
}

Monomial Algebra::tail(int c) const {
  if (!zz_.interior(c)) return {};
  Monomial m = unit_monomial();
  m[2 * zz_.tail_y[c] + 1] = 1;
  if (zz_.tail_x[c] >= 0) m[2 * zz_.tail_x[c]] = 1;
  return m;
}

Monomial Algebra::leading(int c) const {
  Monomial m = unit_monomial();
  m[2 * c] = m[2 * c + 1] = 1;
  return m;
}

Poly Algebra::relation(int c) const {
  Poly f;
  add_term(f.terms, leading(c), 1);
  add_term(f.terms, unit_monomial(), -1);
  Monomial t = tail(c);
  if (!t.empty()) add_term(f.terms, t, -1);
  return f;
}

std::string Algebra::relation_str(int c) const {
  std::string s = mono_str(leading(c)) + " - 1";
  Monomial t = tail(c);
  if (!t.empty()) s += " - " + mono_str(t);
  return s;
}

std::string Algebra::mono_str(const Monomial& m) const {
  std::string s;
  for (int c = 0; c < dim(); ++c)
    for (int k = 0; k < 2; ++k) {
      int e = m[2 * c + k];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += std::string(k == 0 ? "X[" : "Y[") + p_->coord_name(c) + "]";
      if (e > 1) s += "^" + std::to_string(e);
    }
  return s.empty() ? "1" : s;
}

Poly Algebra::add(const Poly& f, const Poly& g) const {
  Poly r = f;
  for (const auto& [m, c] : g.terms) add_term(r.terms, m, c);
  return r;
}

Poly Algebra::scale(const Rat& c, const Poly& f) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, v] : f.terms) r.terms[m] = v * c;
  return r;
}

Poly Algebra::mul(const Poly& f, const Poly& g) const {
  Poly r;
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : g.terms) add_term(r.terms, mono_mul(a, b), ca * cb);
  return normal_form(r);
}

bool Algebra::is_standard(const Monomial& m) const {
  for (int c = 0; c < dim(); ++c)
    if (m[2 * c] > 0 && m[2 * c + 1] > 0) return false;
  return true;
}

Poly Algebra::normal_form(const Poly& f) const {
  // Tails only involve coordinates of larger index, so one ascending sweep suffices.
  std::map<Monomial, Rat> cur = f.terms;
  for (int c = 0; c < dim(); ++c) {
    std::map<Monomial, Rat> next;
    Monomial t = tail(c);
    for (const auto& [m, coef] : cur) {
      int k = std::min(m[2 * c], m[2 * c + 1]);
      if (k == 0) {
        add_term(next, m, coef);
        continue;
      }
      Monomial base = m;
      base[2 * c] -= k;
      base[2 * c + 1] -= k;
      if (t.empty()) {
        add_term(next, base, coef);
        continue;
      }
      Monomial tj = base;
      for (int j = 0; j <= k; ++j) {
        add_term(next, tj, coef * binomial(k, j));
        tj = mono_mul(tj, t);
      }
    }
    cur = std::move(next);
  }
  return Poly{std::move(cur)};
}

Poly Algebra::normal_form_random(const Poly& f, Rng& rng) const {
  std::map<Monomial, Rat> cur = f.terms;
  while (true) {
    std::vector<std::pair<Monomial, int>> redex;
    for (const auto& [m, coef] : cur)
      for (int c = 0; c < dim(); ++c)
        if (m[2 * c] > 0 && m[2 * c + 1] > 0) redex.emplace_back(m, c);
    if (redex.empty()) break;
    auto [m, c] = redex[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(redex.size()) - 1))];
    Rat coef = cur[m];
    cur.erase(m);
    Monomial base = m;
    --base[2 * c];
    --base[2 * c + 1];
    add_term(cur, base, coef);
    Monomial t = tail(c);
    if (!t.empty()) add_term(cur, mono_mul(base, t), coef);
  }
  return Poly{std::move(cur)};
}

RatVec Algebra::z_coords(const RatVec& x) const {
  RatVec z(dim());
  for (int c = 0; c < dim(); ++c) z[c] = zz_.next[c] >= 0 ? Rat(x[c] - x[zz_.next[c]]) : x[c];
  return z;
}

RatVec Algebra::monomial_to_m(const Monomial& m) const {
  RatVec x(dim());
  for (int c = 0; c < dim(); ++c) {
    int s = m[2 * c] - m[2 * c + 1];
    if (s == 0) continue;
    for (int k : zz_.hat_e[c]) x[k] += s;
  }
  return x;
}

Monomial Algebra::m_to_monomial(const RatVec& x) const {
  RatVec z = z_coords(x);
  Monomial m = unit_monomial();
  for (int c = 0; c < dim(); ++c) {
    if (!is_integer(z[c])) throw Error(Errc::ParseError, "element is not integral");
    int v = numerator(z[c]).convert_to<int>();
    if (v > 0) m[2 * c] = v;
    else m[2 * c + 1] = -v;
  }
  return m;
}

SemiElement Algebra::valuation(const Poly& f) const {
  if (f.is_zero()) return SemiElement::inf();
  std::vector<RatVec> g;
  for (const auto& [m, c] : f.terms) g.push_back(monomial_to_m(m));
  return SemiElement::of(std::move(g));
}

nlohmann::json Algebra::to_json(const Poly& f) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : f.terms) {
    nlohmann::json mono = nlohmann::json::object();
    for (int k = 0; k < dim(); ++k)
      if (m[2 * k] || m[2 * k + 1]) mono[p_->coord_name(k)] = {m[2 * k], m[2 * k + 1]};
    out.push_back({{"mono", mono}, {"coef", rat_str(c)}});
  }
  return out;
}

Poly Algebra::random_standard(Rng& rng, int terms, std::int64_t radius) const {
  Poly f;
  int count = static_cast<int>(rng.uniform(1, terms));
  for (int t = 0; t < count; ++t) {
    Monomial m = unit_monomial();
    for (int c = 0; c < dim(); ++c) {
      auto v = static_cast<int>(rng.uniform(-radius, radius));
      if (v > 0) m[2 * c] = v;
      else m[2 * c + 1] = -v;
    }
    std::int64_t coef = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
    add_term(f.terms, m, Rat(coef));
  }
  if (f.is_zero()) f = constant(1);
  return f;
}

namespace {

struct Comparator {
  const Algebra& a;
  const DualStructure* ds;
  std::int64_t radius;
  GeometryLimits lim;

  EqualResult operator()(const SemiElement& x, const SemiElement& y) const {
    if (ds) return equal_exact(*ds, x, y, lim);
    return equal_sampled(a.poset(), nullptr, x, y, radius);
  }
};

}  // namespace

Report verify_valuation(const Algebra& a, const DualStructure* ds, const ValuationOptions& opt, Rng& rng,
                        const GeometryLimits& lim) {
  Report r;
  PolyptychLattice m(a.poset());
  Comparator eq{a, ds, opt.sampled_radius, lim};
  int mult_fail = 0, sum_fail = 0, scale_fail = 0, inconclusive = 0, hull = 0;
  nlohmann::json witness;
  for (int s = 0; s < opt.samples; ++s) {
    Poly f = a.random_standard(rng, opt.max_terms, opt.radius);
    Poly g = a.random_standard(rng, opt.max_terms, opt.radius);
    SemiElement vf = a.valuation(f), vg = a.valuation(g);
    SemiElement lhs = a.valuation(a.mul(f, g)), rhs = star(m, vf, vg);
    if (lhs.gens != rhs.gens) ++hull;
    EqualResult e = eq(lhs, rhs);
    if (!e.conclusive) ++inconclusive;
    if (!e.equal) {
      if (mult_fail++ == 0)
        witness = {{"sample", s}, {"f", a.to_json(f)}, {"g", a.to_json(g)}, {"where", e.witness}};
    }
    SemiElement lo = oplus(vf, vg);
    if (!eq(oplus(lo, a.valuation(a.add(f, g))), lo).equal) ++sum_fail;
    if (!eq(a.valuation(a.scale(Rat(-7, 3), f)), vf).equal) ++scale_fail;
  }
  nlohmann::json detail = {{"samples", opt.samples}, {"mode", ds ? "EXACT" : "SAMPLED"}, {"failures", mult_fail},
                          {"hull_comparisons", hull}};
  if (!ds) detail["inconclusive"] = inconclusive;
  if (!witness.is_null()) detail["witness"] = witness;
  r.check("multiplicative", mult_fail == 0, detail);
  r.check("sum_dominates_oplus", sum_fail == 0, {{"failures", sum_fail}});
  r.check("scalar_invariant", scale_fail == 0, {{"failures", scale_fail}});
  r.check("zero_is_infinity", a.valuation(Poly{}).infinity);
  return r;
}

Report verify_tail_identities(const Algebra& a, const DualStructure* ds, const GeometryLimits& lim) {
  Report r;
  PolyptychLattice m(a.poset());
  Comparator eq{a, ds, 3, lim};
  for (int c = 0; c < a.dim(); ++c) {
    SemiElement eps = a.valuation(a.x(c)), epsp = a.valuation(a.y(c));
    Poly rhs = a.constant(1);
    Monomial t = a.tail(c);
    if (!t.empty()) rhs.terms[t] = 1;
    EqualResult e = eq(star(m, eps, epsp), a.valuation(rhs));
    nlohmann::json d = {{"rhs", a.to_json(rhs)}};
    if (!e.conclusive) d["status"] = "INCONCLUSIVE";
    if (!e.equal) d["witness"] = e.witness;
    r.check("eps_star_epsprime." + a.poset().coord_name(c), e.equal, d);
  }
  return r;
}

Report verify_normal_form(const Algebra& a, int samples, Rng& rng) {
  Report r;
  int fail = 0, idem = 0, standard = 0;
  for (int s = 0; s < samples; ++s) {
    Poly f;
    int terms = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < terms; ++t) {
      Monomial m = a.unit_monomial();
      for (auto& e : m) e = static_cast<int>(rng.uniform(0, 2));
      add_term(f.terms, m, Rat(rng.uniform(1, 5)));
    }
    Poly n = a.normal_form(f);
    for (const auto& [m, c] : n.terms)
      if (!a.is_standard(m)) ++standard;
    if (!(a.normal_form(n) == n)) ++idem;
    if (!(a.normal_form_random(f, rng) == n)) ++fail;
  }
  r.check("standard_output", standard == 0, {{"failures", standard}});
  r.check("idempotent", idem == 0, {{"failures", idem}});
  r.check("confluent", fail == 0, {{"samples", samples}, {"failures", fail}});
  return r;
}

Report zero_divisor_scan(const Algebra& a, int samples, Rng& rng) {
  Report r;
  int zero = 0;
  for (int s = 0; s < samples; ++s) {
    Poly f = a.random_standard(rng, 3, 2), g = a.random_standard(rng, 3, 2);
    if (a.mul(f, g).is_zero()) ++zero;
  }
  r.check("products_nonzero", zero == 0, {{"samples", samples}, {"zero_products", zero}});
  return r;
}

bool leading_coprime_check(const std::vector<Monomial>& leads) {
  for (std::size_t i = 0; i < leads.size(); ++i)
    for (std::size_t j = i + 1; j < leads.size(); ++j)
      for (std::size_t k = 0; k < leads[i].size(); ++k)
        if (leads[i][k] > 0 && leads[j][k] > 0) return false;
  return true;
}

namespace {

// Laurent polynomials in the X variables.
using Laurent = std::map<std::vector<int>, Rat>;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

Laurent laurent_add(Laurent a, const Laurent& b, const Rat& s = 1) {
  for (const auto& [m, c] : b) add_term(a, m, c * s);
  return a;
}

}  // namespace

Report unit_and_dimension_report(const Algebra& a) {
  Report r;
  const int d = a.dim();
  const auto& zz = a.zigzag();
  nlohmann::json units = nlohmann::json::array();
  bool products_one = true;
  for (int c = 0; c < d; ++c) {
    if (zz.interior(c)) continue;
    units.push_back(a.poset().coord_name(c));
    products_one = products_one && a.mul(a.x(c), a.y(c)) == a.constant(1);
  }
  int u = 0;
  for (int v : zz.units_per_level) u += v;
  r.check("unit_products_equal_one", products_one, {{"units", units}});
  r.check("unit_rank_matches_components", static_cast<int>(units.size()) == u,
          {{"rank", units.size()}, {"U", u}});

  std::vector<Laurent> X(d), Y(d);
  for (int c = 0; c < d; ++c) {
    std::vector<int> e(d, 0);
    e[c] = 1;
    X[c][e] = 1;
  }
  auto one = [&] { return Laurent{{std::vector<int>(d, 0), Rat(1)}}; };
  auto tail_of = [&](int c) {
    Laurent t;
    if (!zz.interior(c)) return t;
    t = Y[zz.tail_y[c]];
    if (zz.tail_x[c] >= 0) t = laurent_mul(X[zz.tail_x[c]], t);
    return t;
  };
  for (int c = d - 1; c >= 0; --c) {
    std::vector<int> inv(d, 0);
    inv[c] = -1;
    Y[c] = laurent_mul(Laurent{{inv, Rat(1)}}, laurent_add(one(), tail_of(c)));
  }
  bool vanish = true;
  for (int c = 0; c < d; ++c) {
    Laurent g = laurent_add(laurent_mul(X[c], Y[c]), laurent_add(one(), tail_of(c)), -1);
    vanish = vanish && g.empty();
  }
  r.check("laurent_localization", vanish, {{"krull_dimension", d}});
  return r;
}

namespace {

struct VarietyPoint {
  RatVec X, Y;
};

RatMat jacobian(const Algebra& a, const VarietyPoint& pt) {
  const int d = a.dim();
  const auto& zz = a.zigzag();
  RatMat J(d, RatVec(2 * d));
  for (int c = 0; c < d; ++c) {
    J[c][2 * c] += pt.Y[c];
    J[c][2 * c + 1] += pt.X[c];
    if (!zz.interior(c)) continue;
    int q = zz.tail_y[c], px = zz.tail_x[c];
    if (px >= 0) {
      J[c][2 * px] -= pt.Y[q];
      J[c][2 * q + 1] -= pt.X[px];
    } else {
      J[c][2 * q + 1] -= 1;
    }
  }
  return J;
}

Rat tail_at(const Algebra& a, const VarietyPoint& pt, int c) {
  const auto& zz = a.zigzag();
  if (!zz.interior(c)) return 0;
  Rat t = pt.Y[zz.tail_y[c]];
  if (zz.tail_x[c] >= 0) t *= pt.X[zz.tail_x[c]];
  return t;
}

bool on_variety(const Algebra& a, const VarietyPoint& pt) {
  for (int c = 0; c < a.dim(); ++c)
    if (pt.X[c] * pt.Y[c] - 1 - tail_at(a, pt, c) != 0) return false;
  return true;
}

Rat random_nonzero(Rng& rng) {
  std::int64_t num = rng.uniform(1, 9) * (rng.uniform(0, 1) ? 1 : -1);
  return Rat(num, rng.uniform(1, 4));
}

// X_p = Y_p = 0 with the tail forced to -1; nullopt when the construction hits a zero divisor.
std::optional<VarietyPoint> degenerate_point(const Algebra& a, int p, Rng& rng) {
  const int d = a.dim();
  const auto& zz = a.zigzag();
  int q = zz.tail_y[p], px = zz.tail_x[p];
  VarietyPoint pt{RatVec(d), RatVec(d)};
  for (int c = d - 1; c >= 0; --c) {
    Rat t = tail_at(a, pt, c);
    if (c == p) continue;
    if (c == q) {
      pt.Y[c] = -1;
      pt.X[c] = -(1 + t);
      if (pt.X[c] == 0) return std::nullopt;
    } else if (c == px) {
      pt.X[c] = 1;
      pt.Y[c] = 1 + t;
    } else {
      pt.X[c] = random_nonzero(rng);
      pt.Y[c] = (1 + t) / pt.X[c];
    }
  }
  if (!on_variety(a, pt)) return std::nullopt;
  return pt;
}

nlohmann::json point_json(const Algebra& a, const VarietyPoint& pt) {
  nlohmann::json j = nlohmann::json::object();
  for (int c = 0; c < a.dim(); ++c) j[a.poset().coord_name(c)] = {rat_str(pt.X[c]), rat_str(pt.Y[c])};
  return j;
}

}  // namespace

Report jacobian_rank_at_samples(const Algebra& a, int count, Rng& rng) {
  Report r;
  const int d = a.dim();
  int bad = 0;
  nlohmann::json witness;
  for (int s = 0; s < count; ++s) {
    VarietyPoint pt{RatVec(d), RatVec(d)};
    bool ok = true;
    for (int c = d - 1; c >= 0; --c) {
      pt.X[c] = random_nonzero(rng);
      pt.Y[c] = (1 + tail_at(a, pt, c)) / pt.X[c];
    }
    ok = on_variety(a, pt) && matrix_rank(jacobian(a, pt)) == d;
    if (!ok && bad++ == 0) witness = point_json(a, pt);
  }
  nlohmann::json det = {{"points", count}, {"rank_expected", d}, {"failures", bad}};
  if (!witness.is_null()) det["witness"] = witness;
  r.check("rank_at_torus_points", bad == 0, det);

  const auto& zz = a.zigzag();
  std::optional<VarietyPoint> deg;
  int where = -1;
  for (int c = 0; c < d && !deg; ++c) {
    if (!zz.interior(c)) continue;
    for (int attempt = 0; attempt < 8 && !deg; ++attempt) deg = degenerate_point(a, c, rng);
    if (deg) where = c;
  }
  if (deg) {
    int rank = matrix_rank(jacobian(a, *deg));
    r.check("rank_at_degenerate_point", rank == d,
            {{"coordinate", a.poset().coord_name(where)}, {"rank", rank}, {"point", point_json(a, *deg)}});
  } else {
    r.check("rank_at_degenerate_point", true, {{"status", "no interior coordinate"}});
  }
  return r;
}

Report verify_adapted_basis(const Algebra& a, int inj_radius, int surj_radius) {
  Report r;
  const int d = a.dim();
  std::set<RatVec> seen;
  std::size_t total = 0;
  bool injective = true;
  std::vector<int> z(d, -inj_radius);
  while (true) {
    Monomial m = a.unit_monomial();
    for (int c = 0; c < d; ++c) (z[c] > 0 ? m[2 * c] : m[2 * c + 1]) = std::abs(z[c]);
    ++total;
    if (!seen.insert(a.monomial_to_m(m)).second) injective = false;
    int i = 0;
    while (i < d && z[i] == inj_radius) z[i++] = -inj_radius;
    if (i == d) break;
    ++z[i];
  }
  r.check("injective", injective, {{"radius", inj_radius}, {"monomials", total}, {"images", seen.size()}});

  bool surjective = true;
  std::size_t hit = 0;
  RatVec x(d, Rat(-surj_radius));
  while (true) {
    Monomial m = a.m_to_monomial(x);
    if (a.is_standard(m) && a.monomial_to_m(m) == x) ++hit;
    else surjective = false;
    int i = 0;
    while (i < d && x[i] == surj_radius) x[i++] = -surj_radius;
    if (i == d) break;
    x[i] += 1;
  }
  r.check("surjective", surjective, {{"radius", surj_radius}, {"points_hit", hit}});
  return r;
}

}  // namespace mcop
