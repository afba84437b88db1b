#include "mcop/cox.hpp"

#include <map>
#include <optional>
#include <set>

namespace mcop {

nlohmann::json CoxCounts::to_json() const {
  return {{"U", U}, {"L", L}, {"variables", variables}, {"per_level", per_level}};
}

std::vector<StructuralPoint> divisor_points(const GradedPoset& p) { return structural_points(p); }

CoxCounts cox_counts(const GradedPoset& p) {
  SpadeResult s = require_spade(p);
  ZigzagData zz = zigzag_data(p, s);
  CoxCounts c;
  c.per_level = zz.units_per_level;
  for (int v : c.per_level) c.U += v;
  c.L = static_cast<int>(divisor_points(p).size());
  c.variables = p.dim() - c.U + c.L;
  return c;
}

namespace {

std::string t_name(const GradedPoset& p, const StructuralPoint& sp) {
  const auto& P = p.poset();
  if (sp.kind == StructuralPoint::Inner) return "t[" + P.name(sp.p) + "]";
  return "t[" + P.name(sp.p) + "," + P.name(sp.lower) + "]";
}

RatVec phi_all(const GradedPoset& p, const std::vector<StructuralPoint>& pts, const RatVec& x) {
  RatVec r;
  for (const auto& sp : pts) r.push_back(sp.eval(p, x));
  return r;
}

RatVec concat(const RatVec& a, const RatVec& b) {
  RatVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Corner point whose lower element is coordinate c, when unique.
std::optional<int> unit_corner(const GradedPoset& p, const std::vector<StructuralPoint>& pts, int c) {
  std::optional<int> found;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (pts[k].kind == StructuralPoint::Corner && pts[k].lower == p.elem(c)) {
      if (found) return std::nullopt;
      found = static_cast<int>(k);
    }
  return found;
}

}  // namespace

nlohmann::json SemigroupGenerators::to_json(const GradedPoset& p) const {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& x : gens) g.push_back({{"name", x.name}, {"x", ratvec_json(x.x)}, {"r", ratvec_json(x.r)}});
  nlohmann::json layout = nlohmann::json::array();
  for (const auto& sp : divisor_points(p)) layout.push_back(t_name(p, sp));
  return {{"signs", signs}, {"r_layout", layout}, {"generators", g}};
}

SemigroupGenerators semigroup_generators(const DualStructure& ds, const std::vector<int>& signs) {
  const auto& p = ds.poset();
  const int d = ds.dim();
  const auto pts = divisor_points(p);
  const int L = static_cast<int>(pts.size());
  const auto& in = ds.interior();
  SemigroupGenerators sg;
  sg.signs = signs;
  const auto& P = p.poset();
  for (int k = 0; k < L; ++k) {
    RatVec r(L);
    r[k] = 1;
    sg.gens.push_back({"e_r:" + t_name(p, pts[k]), RatVec(d), r});
  }
  std::vector<int> sign_of(d, 0);
  for (std::size_t k = 0; k < in.size(); ++k) sign_of[in[k]] = signs[k];
  for (int c = 0; c < d; ++c) {
    if (ds.zigzag().interior(c)) continue;
    for (int s : {1, -1}) {
      RatVec x = vec_scale(Rat(s), ds.hat_e(c));
      sg.gens.push_back({std::string(s > 0 ? "+v:" : "-v:") + P.name(p.elem(c)), x,
                         vec_scale(Rat(-1), phi_all(p, pts, x))});
    }
  }
  for (int c : in) {
    RatVec x = vec_scale(Rat(sign_of[c]), ds.hat_e(c));
    sg.gens.push_back({"f:" + P.name(p.elem(c)) + (sign_of[c] > 0 ? ",+1" : ",-1"), x,
                       vec_scale(Rat(-1), phi_all(p, pts, x))});
  }

  // Basis of σ_ε: ε_c ĥe_c for interior c and ĥe_c otherwise; φ is linear on it.
  RatMat basis;
  for (int c = 0; c < d; ++c) basis.push_back(vec_scale(Rat(sign_of[c] ? sign_of[c] : 1), ds.hat_e(c)));
  RatMat coef_of_unit;
  for (int j = 0; j < d; ++j) {
    RatVec e(d);
    e[j] = 1;
    coef_of_unit.push_back(expand_in_basis(e, basis));
  }
  RatMat val(d);  // val[c][k] = φ_k(basis_c)
  for (int c = 0; c < d; ++c) val[c] = phi_all(p, pts, basis[c]);
  auto z_row = [&](int c, int s) {
    RatVec row(d + L);
    row[c] = s;
    if (ds.zigzag().next[c] >= 0) row[ds.zigzag().next[c]] = -s;
    return row;
  };
  for (int c : in) sg.transform.push_back(z_row(c, sign_of[c]));
  for (int c = 0; c < d; ++c)
    if (!ds.zigzag().interior(c)) sg.transform.push_back(z_row(c, 1));
  for (int k = 0; k < L; ++k) {
    RatVec row(d + L);
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c) row[j] += coef_of_unit[j][c] * val[c][k];
    row[d + k] = 1;
    sg.transform.push_back(row);
  }
  return sg;
}

Report verify_semigroup_generators(const DualStructure& ds, const SemigroupGenerators& sg, Rng& rng, int samples,
                                   std::int64_t radius) {
  Report r;
  const auto& p = ds.poset();
  const int d = ds.dim();
  const auto pts = divisor_points(p);
  const int L = static_cast<int>(pts.size());
  const auto& in = ds.interior();
  std::vector<int> sign_of(d, 0);
  for (std::size_t k = 0; k < in.size(); ++k) sign_of[in[k]] = sg.signs[k];

  auto in_cone = [&](const RatVec& x) {
    RatVec z = ds.z_coords(x);
    for (int c : in)
      if (sign_of[c] * z[c] < 0) return false;
    return true;
  };
  auto member = [&](const RatVec& x, const RatVec& rr) {
    if (!in_cone(x)) return false;
    RatVec f = phi_all(p, pts, x);
    for (int k = 0; k < L; ++k)
      if (f[k] + rr[k] < 0) return false;
    return true;
  };

  r.check("transform_unimodular", is_unimodular(sg.transform), {{"size", sg.transform.size()}});

  // Each generator other than the negated units maps to a distinct unit vector.
  std::set<int> slots;
  bool units_ok = true;
  for (const auto& g : sg.gens) {
    if (g.name.rfind("-v:", 0) == 0) continue;
    RatVec xr = concat(g.x, g.r), img(d + L);
    for (int i = 0; i < d + L; ++i) img[i] = dot(sg.transform[i], xr);
    int one = -1, nonzero = 0;
    for (int i = 0; i < d + L; ++i)
      if (img[i] != 0) {
        ++nonzero;
        if (img[i] == 1) one = i;
      }
    if (nonzero != 1 || one < 0 || !slots.insert(one).second) units_ok = false;
  }
  r.check("generators_map_to_unit_vectors", units_ok && static_cast<int>(slots.size()) == d + L,
          {{"slots", slots.size()}, {"expected", d + L}});

  bool members = true;
  for (const auto& g : sg.gens) members = members && member(g.x, g.r);
  r.check("generators_are_members", members);

  bool v_zero = true;
  for (const auto& g : sg.gens) {
    if (g.name.rfind("+v:", 0) != 0 && g.name.rfind("-v:", 0) != 0) continue;
    RatVec f = phi_all(p, pts, g.x);
    for (int k = 0; k < L; ++k) v_zero = v_zero && f[k] + g.r[k] == 0;
  }
  r.check("units_have_value_zero", v_zero);

  bool pairs = true;
  nlohmann::json pair_detail = nlohmann::json::array();
  for (int c : in) {
    RatVec plus = ds.hat_e(c), minus = vec_scale(Rat(-1), ds.hat_e(c));
    RatVec sum = vec_add(vec_scale(Rat(-1), phi_all(p, pts, plus)), vec_scale(Rat(-1), phi_all(p, pts, minus)));
    RatVec expect(L);
    expect[ds.zigzag().tail_y[c]] = 1;
    bool ok = sum == expect;
    pairs = pairs && ok;
    pair_detail.push_back({{"q", p.coord_name(c)}, {"e_r", t_name(p, pts[ds.zigzag().tail_y[c]])}, {"ok", ok}});
  }
  r.check("f_pair_sums", pairs, pair_detail);

  // Membership by inequalities agrees with nonnegativity of the transformed coordinates.
  std::set<int> free_slots;
  {
    int slot = static_cast<int>(in.size());
    for (int c = 0; c < d; ++c)
      if (!ds.zigzag().interior(c)) free_slots.insert(slot++);
  }
  int mismatch = 0;
  for (int s = 0; s < samples; ++s) {
    RatVec x = random_element(rng, d, radius), rr = random_element(rng, L, radius);
    RatVec xr = concat(x, rr);
    bool by_t = true;
    for (int i = 0; i < d + L; ++i)
      if (!free_slots.count(i) && dot(sg.transform[i], xr) < 0) by_t = false;
    if (by_t != member(x, rr)) ++mismatch;
  }
  r.check("membership_matches_transform", mismatch == 0, {{"samples", samples}, {"mismatches", mismatch}});
  return r;
}

nlohmann::json CoxPresentation::to_json() const {
  nlohmann::json el = nlohmann::json::array(), id = nlohmann::json::array();
  for (const auto& [a, b] : eliminations) el.push_back({{"variable", a}, {"equals", b}});
  for (const auto& [a, b] : identifications) id.push_back({{"variable", a}, {"equals", b}});
  return {{"variables", variables},   {"relations", relations},           {"eliminations", el},
          {"identifications", id},    {"free_variables", free_variables}, {"free_count", free_variables.size()}};
}

CoxPresentation cox_presentation(const GradedPoset& p) {
  Family fam = p.tag().family;
  if (fam == Family::None) throw Error(Errc::Unsupported, "Cox presentation is available for the builder families only");
  SpadeResult s = require_spade(p);
  ZigzagData zz = zigzag_data(p, s);
  const auto& P = p.poset();
  const int d = p.dim();
  const auto pts = divisor_points(p);
  auto name = [&](int c) { return P.name(p.elem(c)); };
  auto W = [&](int c) { return "W[" + name(c) + "]"; };
  auto Z = [&](int c) { return "Z[" + name(c) + "]"; };

  CoxPresentation cp;
  for (int c = 0; c < d; ++c)
    if (zz.interior(c)) cp.variables.push_back(W(c));
  for (int c = 0; c < d; ++c) cp.variables.push_back(Z(c));
  for (const auto& sp : pts) cp.variables.push_back(t_name(p, sp));

  std::set<std::string> gone;
  for (int c = 0; c < d; ++c) {
    if (zz.interior(c)) continue;
    auto k = unit_corner(p, pts, c);
    if (!k)
      throw Error(Errc::Unsupported, "unit " + name(c) + " does not have a unique marked upper cover");
    cp.identifications.emplace_back(t_name(p, pts[*k]), Z(c));
    gone.insert(t_name(p, pts[*k]));
  }
  for (int c = 0; c < d; ++c) {
    if (!zz.interior(c)) continue;
    int q = zz.tail_y[c], px = zz.tail_x[c];
    std::string t = t_name(p, pts[q]);
    std::string rest = (px >= 0 ? W(px) + "*" : std::string()) + Z(q);
    cp.relations.push_back(W(c) + "*" + Z(c) + " - " + t + " - " + rest);
    cp.eliminations.emplace_back(t, W(c) + "*" + Z(c) + " - " + rest);
    gone.insert(t);
  }
  for (const auto& v : cp.variables)
    if (!gone.count(v)) cp.free_variables.push_back(v);
  return cp;
}

Report verify_cox_presentation(const GradedPoset& p, const CoxPresentation& cp) {
  Report r;
  CoxCounts counts = cox_counts(p);
  std::set<std::string> declared(cp.variables.begin(), cp.variables.end());
  bool well_formed = true;
  for (const auto& rel : cp.relations) {
    std::size_t pos = 0;
    while ((pos = rel.find_first_of("WZt", pos)) != std::string::npos) {
      std::size_t end = rel.find(']', pos);
      if (end == std::string::npos || rel[pos + 1] != '[') {
        ++pos;
        continue;
      }
      if (!declared.count(rel.substr(pos, end - pos + 1))) well_formed = false;
      pos = end + 1;
    }
  }
  r.check("relations_use_declared_variables", well_formed);
  std::set<std::string> elim;
  for (const auto& e : cp.eliminations) elim.insert(e.first);
  r.check("eliminated_variables_distinct", elim.size() == cp.eliminations.size());
  r.check("free_count_matches_counts", static_cast<int>(cp.free_variables.size()) == counts.variables,
          {{"free", cp.free_variables.size()}, {"variables", counts.variables}});
  return r;
}

Report eta_unit_check(const GradedPoset& p) {
  Report r;
  const Family fam = p.tag().family;
  if (fam != Family::GtA && fam != Family::GtC)
    throw Error(Errc::Unsupported, "the unit exponent pattern is defined for Gelfand-Tsetlin posets");
  const int n = p.tag().n;
  SpadeResult s = require_spade(p);
  ZigzagData zz = zigzag_data(p, s);
  const auto& P = p.poset();
  const auto pts = divisor_points(p);
  const int L = static_cast<int>(pts.size());
  const int d = p.dim();
  for (int c = 0; c < d; ++c) {
    if (zz.interior(c)) continue;
    RatVec he(d);
    for (int k : zz.hat_e[c]) he[k] = 1;
    RatVec ord = phi_all(p, pts, he);

    int ui = -1, uj = -1;
    for (int i = 0; i <= 2 * n + 1 && ui < 0; ++i)
      for (int j = 0; j <= n + 1; ++j)
        if (gt_name(i, j) == P.name(p.elem(c))) ui = i, uj = j;
    RatVec expect(L);
    bool resolvable = ui >= 0;
    for (int t = 1; t <= uj; ++t) {
      int q = p.coord_of(gt_name(ui, t));
      if (q >= 0) expect[q] += 1;
    }
    for (int t = 1; t < uj; ++t) {
      int q = p.coord_of(gt_name(ui + 1, t));
      if (q >= 0) expect[q] -= 1;
    }
    auto corner = unit_corner(p, pts, c);
    if (corner) expect[*corner] -= 1;
    else resolvable = false;

    nlohmann::json exps = nlohmann::json::object();
    for (int k = 0; k < L; ++k)
      if (ord[k] != 0) exps[t_name(p, pts[k])] = numerator(ord[k]).convert_to<long long>();
    r.check("eta_pattern." + P.name(p.elem(c)), resolvable && ord == expect, {{"exponents", exps}});
  }
  return r;
}

}  // namespace mcop
