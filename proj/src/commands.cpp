#include "mcop/commands.hpp"

#include <algorithm>
#include <memory>

#include "mcop/acceptance.hpp"
#include "mcop/algebra.hpp"
#include "mcop/cox.hpp"
#include "mcop/degeneration.hpp"
#include "mcop/mco.hpp"
#include "mcop/polyptych.hpp"

namespace mcop {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string get(const Options& o, const std::string& key, const std::string& def = "") {
  auto it = o.find(key);
  return it == o.end() ? def : it->second;
}

std::int64_t get_int(const Options& o, const std::string& key, std::int64_t def, std::int64_t lo = 0) {
  auto it = o.find(key);
  if (it == o.end()) return def;
  std::int64_t v = 0;
  try {
    std::size_t used = 0;
    v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw Error(Errc::Usage, "--" + key + " expects an integer, got '" + it->second + "'");
  }
  if (v < lo) throw Error(Errc::Usage, "--" + key + " must be at least " + std::to_string(lo));
  return v;
}

std::uint64_t get_seed(const Options& o) {
  auto it = o.find("seed");
  if (it == o.end()) return 0;
  try {
    std::size_t used = 0;
    auto v = std::stoull(it->second, &used);
    if (used != it->second.size() || it->second.front() == '-') throw std::invalid_argument("seed");
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::Usage, "--seed expects a non-negative integer, got '" + it->second + "'");
  }
}

GeometryLimits limits(const Options& o) {
  GeometryLimits lim;
  lim.node_budget = static_cast<std::uint64_t>(get_int(o, "budget", static_cast<std::int64_t>(lim.node_budget), 1));
  lim.dim_cap = static_cast<int>(get_int(o, "dim-cap", lim.dim_cap, 1));
  return lim;
}

std::vector<Int> parse_lambda(const std::string& s) {
  std::vector<Int> out;
  for (const auto& part : split_commas(s)) {
    Rat r = parse_rat(part);
    if (!is_integer(r)) throw Error(Errc::Usage, "--lambda expects integers, got '" + part + "'");
    out.push_back(numerator(r));
  }
  return out;
}

RatVec parse_vec(const std::string& s, int d) {
  RatVec v;
  for (const auto& part : split_commas(s)) v.push_back(parse_rat(part));
  if (static_cast<int>(v.size()) != d)
    throw Error(Errc::Usage, "--vec needs " + std::to_string(d) + " entries, got " + std::to_string(v.size()));
  return v;
}

// Marked values assigned in (rank, name) order of the marked elements.
void override_lambda(MarkedPoset& p, const std::vector<Int>& lambda) {
  Validation v = validate(p);
  if (!v.ok) throw Error(*v.error, v.message);
  std::vector<int> marked;
  for (int e = 0; e < p.size(); ++e)
    if (p.marked(e)) marked.push_back(e);
  std::sort(marked.begin(), marked.end(), [&](int a, int b) {
    return std::make_pair(v.rank[a], p.name(a)) < std::make_pair(v.rank[b], p.name(b));
  });
  if (marked.size() != lambda.size())
    throw Error(Errc::Usage, "--lambda needs " + std::to_string(marked.size()) + " values for this poset");
  for (std::size_t k = 0; k < marked.size(); ++k) p.set_lambda(marked[k], lambda[k]);
}

MarkedPoset resolve_poset(const std::optional<MarkedPoset>& given, const Options& o) {
  MarkedPoset p;
  if (given) {
    p = *given;
    if (o.count("lambda")) override_lambda(p, parse_lambda(get(o, "lambda")));
  } else if (o.count("family")) {
    Family f = parse_family(get(o, "family"));
    if (!o.count("n")) throw Error(Errc::Usage, "--family requires --n");
    int n = static_cast<int>(get_int(o, "n", 1, 1));
    std::vector<Int> lambda = o.count("lambda") ? parse_lambda(get(o, "lambda")) : default_lambda(f, n);
    p = build_family(f, n, lambda);
  } else {
    throw Error(Errc::Usage, "a poset is required (--poset FILE or --family NAME --n N)");
  }
  p.tag = recognize_family(p);
  return p;
}

nlohmann::json poset_summary(const MarkedPoset& p) {
  nlohmann::json j = {{"family", family_name(p.tag.family)}, {"elements", p.size()}};
  if (p.tag.family != Family::None) {
    j["n"] = p.tag.n;
    nlohmann::json l = nlohmann::json::array();
    for (const auto& v : p.tag.lambda) l.push_back(v.str());
    j["lambda"] = l;
  }
  return j;
}

nlohmann::json envelope(const Options& o) {
  std::string cmd = get(o, "command");
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : o)
    if (k != "command") cfg[k] = v;
  return {{"tool", "mcop"}, {"version", kVersion}, {"command", cmd}, {"config", cfg}};
}

struct Context {
  MarkedPoset source;
  std::unique_ptr<GradedPoset> graded;
  std::unique_ptr<DualStructure> dual;

  const GradedPoset& g() const { return *graded; }
  const DualStructure* ds() const { return dual.get(); }
};

Context make_context(const std::optional<MarkedPoset>& given, const Options& o, bool need_dual) {
  Context c;
  c.source = resolve_poset(given, o);
  c.graded = std::make_unique<GradedPoset>(c.source);
  if (c.graded->dim() > kMaxChartDim) throw Error(Errc::DimCapExceeded, "too many unmarked elements for chart masks");
  if (need_dual && c.source.tag.family != Family::None) c.dual = std::make_unique<DualStructure>(*c.graded);
  return c;
}

nlohmann::json names_of(const GradedPoset& g, const std::vector<int>& elems) {
  nlohmann::json j = nlohmann::json::array();
  for (int e : elems) j.push_back(g.poset().name(e));
  return j;
}

nlohmann::json u_json(const GradedPoset& g, const std::vector<Int>& u) {
  nlohmann::json j = nlohmann::json::object();
  for (int e = 0; e < g.poset().size(); ++e) j[g.poset().name(e)] = u[e].str();
  return j;
}

CommandOutput finish(nlohmann::json env, nlohmann::json result, const Report& r, const Options& o) {
  env["result"] = std::move(result);
  env["checks"] = r.checks;
  env["pass"] = r.pass;
  env["repro"] = repro_command(o);
  return {std::move(env), r.pass};
}

CommandOutput cmd_validate(const std::optional<MarkedPoset>& given, const Options& o) {
  MarkedPoset p;
  if (given) {
    p = *given;
    if (o.count("lambda")) override_lambda(p, parse_lambda(get(o, "lambda")));
  } else {
    p = resolve_poset(given, o);
  }
  p.tag = recognize_family(p);
  Validation v = validate(p);
  Report r;
  for (const auto& c : v.checks) r.check(c.name, c.pass, c.detail.empty() ? nlohmann::json() : nlohmann::json(c.detail));
  if (!v.ok && r.pass) r.check("valid", false, v.message);
  nlohmann::json res = {{"valid", v.ok}, {"poset", poset_summary(p)}};
  if (!v.ok) {
    res["error"] = {{"code", errc_name(*v.error)}, {"message", v.message}};
  } else {
    GradedPoset g(p);
    nlohmann::json ranks = nlohmann::json::object();
    for (int e = 0; e < p.size(); ++e) ranks[p.name(e)] = g.rank(e);
    nlohmann::json coords = nlohmann::json::array();
    for (int c = 0; c < g.dim(); ++c) coords.push_back(g.coord_name(c));
    res["rank"] = ranks;
    res["max_rank"] = g.max_rank();
    res["coordinates"] = coords;
  }
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_classify(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, false);
  const auto& g = c.g();
  SpadeResult s = classify_spade(g);
  Report r;
  auto comp_json = [&](const LevelComponent& lc) {
    return nlohmann::json{{"level", lc.level}, {"shape", shape_name(lc.shape)},
                          {"lower", names_of(g, lc.lower)}, {"upper", names_of(g, lc.upper)}};
  };
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& lc : s.components) comps.push_back(comp_json(lc));
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"components", comps}};
  if (s.ok) {
    Algebra a(g);
    nlohmann::json rel = nlohmann::json::array();
    for (int k = 0; k < a.dim(); ++k) rel.push_back(a.relation_str(k));
    res["relations"] = rel;
    res["units_per_level"] = a.zigzag().units_per_level;
    r.check("spade", true);
  } else {
    nlohmann::json d = {{"reason", s.reason}};
    if (s.violation) d["component"] = comp_json(*s.violation);
    r.check("spade", false, d);
  }
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_polytope(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, false);
  const auto& g = c.g();
  Chart ch = parse_chart(g, get(o, "chart"));
  auto k = get_int(o, "dilate", 1, 0);
  std::string emit = get(o, "emit", "count");
  HPolyhedron h = build_mco(g, ch).dilate(Rat(k));
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"chart", chart_str(g, ch)}, {"dilate", k}};
  nlohmann::json coords = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i) coords.push_back(g.coord_name(i));
  res["coordinates"] = coords;
  if (emit == "hrep") {
    res["hrep"] = h.to_json();
  } else if (emit == "points") {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : lattice_points(h, limits(o))) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : p) row.push_back(v.str());
      pts.push_back(row);
    }
    res["count"] = pts.size();
    res["points"] = pts;
  } else if (emit == "count") {
    res["count"] = count_lattice_points(h, limits(o));
  } else {
    throw Error(Errc::Usage, "--emit for polytope is one of hrep, points, count");
  }
  return finish(envelope(o), res, Report{}, o);
}

CommandOutput cmd_transfer(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, false);
  const auto& g = c.g();
  Report r;
  nlohmann::json res = {{"poset", poset_summary(c.source)}};
  if (o.count("vec")) {
    Chart ch = parse_chart(g, get(o, "chart"));
    RatVec x = parse_vec(get(o, "vec"), g.dim());
    RatVec y = transfer(g, ch, x);
    RatVec back = transfer_inverse(g, ch, y);
    res["chart"] = chart_str(g, ch);
    res["x"] = ratvec_json(x);
    res["transfer"] = ratvec_json(y);
    res["mu"] = ratvec_json(mu(g, ch, x));
    r.check("round_trip", back == x, {{"inverse", ratvec_json(back)}});
    if (build_mco(g, 0).contains(x)) r.check("image_in_polytope", build_mco(g, ch).contains(y));
  } else {
    auto k = static_cast<int>(get_int(o, "dilate", 1, 0));
    auto u = resolve_u(g, true);
    BijectionResult b = verify_transfer_bijection(g, u, k, limits(o));
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cc : b.charts)
      rows.push_back({{"chart", chart_str(g, cc.chart)}, {"direct", cc.direct}, {"image", cc.image},
                      {"image_inside", cc.image_inside}});
    res["u"] = u_json(g, u);
    res["dilate"] = k;
    res["charts"] = rows;
    r.check("bijection", b.pass);
    Rng rng(get_seed(o), 4);
    r.merge(verify_mu_transfer_compat(g, u, static_cast<int>(get_int(o, "samples", 1000, 1)), rng), "compat");
  }
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_mutate(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, false);
  const auto& g = c.g();
  Report r;
  nlohmann::json res = {{"poset", poset_summary(c.source)}};
  if (o.count("vec")) {
    Chart a = parse_chart(g, get(o, "from")), b = parse_chart(g, get(o, "to"));
    RatVec x = parse_vec(get(o, "vec"), g.dim());
    RatVec y = mu_between(g, a, b, x);
    res["from"] = chart_str(g, a);
    res["to"] = chart_str(g, b);
    res["x"] = ratvec_json(x);
    res["image"] = ratvec_json(y);
    r.check("inverse", mu_between(g, b, a, y) == x);
  } else {
    Rng rng(get_seed(o), 3);
    int samples = static_cast<int>(get_int(o, "samples", 1000, 1));
    r.merge(verify_mutation_axioms(g, samples, 200, rng), "axioms");
  }
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_hilbert(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, false);
  const auto& g = c.g();
  HilbertOptions ho;
  ho.kmax = static_cast<int>(get_int(o, "kmax", 3, 0));
  std::string emit = get(o, "emit", "table");
  if (emit != "table" && emit != "basis") throw Error(Errc::Usage, "--emit for hilbert is one of table, basis");
  auto u = resolve_u(g, true);
  Algebra a(g);
  Report r = hilbert_vs_ehrhart(a, u, ho, limits(o));
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"u", u_json(g, u)}};
  for (auto& chk : r.checks)
    if (chk["name"] == "dimension_equals_chart_counts") {
      res["table"] = chk["detail"]["table"];
      chk.erase("detail");
    }
  if (emit == "basis") {
    nlohmann::json pieces = nlohmann::json::array();
    for (int k = 0; k <= ho.kmax; ++k) pieces.push_back(gamma(a, u, k, limits(o)).to_json(a));
    res["pieces"] = pieces;
  }
  return finish(envelope(o), res, r, o);
}

std::vector<NamedPoint> point_functionals(const GradedPoset& g, const DualStructure* ds, int duals, Rng& rng) {
  std::vector<NamedPoint> fns;
  for (const auto& sp : structural_points(g))
    fns.push_back({sp.label(g), [&g, sp](const RatVec& m) { return sp.eval(g, m); }});
  if (ds)
    for (int i = 0; i < duals; ++i) {
      DualElement n = ds->complete(random_element(rng, g.dim(), 4));
      fns.push_back({"dual[" + std::to_string(i) + "]", [ds, n](const RatVec& m) { return ds->w(n, m); }});
    }
  return fns;
}

CommandOutput cmd_dualcheck(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, true);
  const auto& g = c.g();
  if (!c.ds()) throw Error(Errc::Unsupported, "the dual lattice is built for the builder families only");
  int samples = static_cast<int>(get_int(o, "samples", 200, 1));
  Report r;
  Rng rng(get_seed(o), 1);
  r.merge(verify_strict_dual(*c.ds(), samples, rng), "strict_dual");
  Rng rng2(get_seed(o), 2);
  PolyptychLattice lat(g);
  auto fns = point_functionals(g, c.ds(), samples, rng2);
  r.merge(verify_point_axiom(lat, fns, samples, rng2), "points");
  auto u = resolve_u(g, true);
  r.merge(verify_pl_hat_delta(g, u, limits(o)), "pl_polytope");
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"interior", names_of(g, [&] {
                          std::vector<int> e;
                          for (int q : c.ds()->interior()) e.push_back(g.elem(q));
                          return e;
                        }())}};
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_valcheck(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, true);
  const auto& g = c.g();
  Algebra a(g);
  int samples = static_cast<int>(get_int(o, "samples", 100, 1));
  Report r;
  std::vector<Monomial> leads;
  nlohmann::json rel = nlohmann::json::array();
  for (int k = 0; k < a.dim(); ++k) {
    leads.push_back(a.leading(k));
    rel.push_back(a.relation_str(k));
  }
  r.check("leading_terms_coprime", leading_coprime_check(leads));
  Rng rng(get_seed(o), 5);
  ValuationOptions vo;
  vo.samples = samples;
  r.merge(verify_valuation(a, c.ds(), vo, rng, limits(o)), "valuation");
  r.merge(verify_tail_identities(a, c.ds(), limits(o)), "tails");
  Rng rng2(get_seed(o), 6);
  r.merge(verify_normal_form(a, 1000, rng2), "normal_form");
  r.merge(zero_divisor_scan(a, 200, rng2), "domain");
  r.merge(verify_adapted_basis(a, 3, 2), "adapted_basis");
  r.merge(unit_and_dimension_report(a), "units");
  Rng rng3(get_seed(o), 7);
  r.merge(jacobian_rank_at_samples(a, 50, rng3), "jacobian");
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"relations", rel},
                        {"equality_mode", c.ds() ? "EXACT" : "SAMPLED"}};
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_nobody(const std::optional<MarkedPoset>& given, const Options& o) {
  Context c = make_context(given, o, true);
  const auto& g = c.g();
  Algebra a(g);
  Chart ch = parse_chart(g, get(o, "chart"));
  int kmax = static_cast<int>(get_int(o, "kmax", 2, 0));
  int samples = static_cast<int>(get_int(o, "samples", 100, 1));
  auto u = resolve_u(g, true);
  ChartValuationSpec spec = default_chart_valuation(g, c.ds(), ch);
  Report r;
  r.merge(no_body_sample(a, u, spec, kmax, limits(o)), "body");
  Rng rng(get_seed(o), 8);
  r.merge(verify_chart_valuation(a, spec, samples, rng), "valuation");
  r.merge(ord_divisor_check(a, samples, rng), "divisors");
  nlohmann::json res = {{"poset", poset_summary(c.source)}, {"spec", spec.to_json(g)}, {"kmax", kmax}};
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_cox(const std::optional<MarkedPoset>& given, const Options& o) {
  std::string emit = get(o, "emit", "counts");
  Context c = make_context(given, o, emit == "generators");
  const auto& g = c.g();
  Report r;
  nlohmann::json res = {{"poset", poset_summary(c.source)}};
  CoxCounts counts = cox_counts(g);
  res["counts"] = counts.to_json();
  if (emit == "counts") {
  } else if (emit == "generators") {
    if (!c.ds()) throw Error(Errc::Unsupported, "semigroup generators are built for the builder families only");
    const auto m = c.ds()->interior().size();
    nlohmann::json all = nlohmann::json::array();
    Rng rng(get_seed(o), 9);
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      std::vector<int> signs;
      for (std::size_t k = 0; k < m; ++k) signs.push_back((mask >> k) & 1 ? -1 : 1);
      auto sg = semigroup_generators(*c.ds(), signs);
      r.merge(verify_semigroup_generators(*c.ds(), sg, rng), "signs" + std::to_string(mask));
      all.push_back(sg.to_json(g));
    }
    res["cones"] = all;
  } else if (emit == "presentation") {
    auto cp = cox_presentation(g);
    res["presentation"] = cp.to_json();
    r.merge(verify_cox_presentation(g, cp), "presentation");
    if (c.source.tag.family == Family::GtA || c.source.tag.family == Family::GtC) r.merge(eta_unit_check(g), "units");
  } else {
    throw Error(Errc::Usage, "--emit for cox is one of counts, generators, presentation");
  }
  return finish(envelope(o), res, r, o);
}

CommandOutput cmd_acceptance(const Options& o) {
  AcceptanceOptions ao;
  ao.profile = get(o, "profile", "quick");
  if (ao.profile != "quick" && ao.profile != "full") throw Error(Errc::Usage, "--profile is one of quick, full");
  ao.seed = get_seed(o);
  nlohmann::json acc = run_acceptance(ao);
  Report r;
  for (const auto& c : acc["criteria"]) r.check("criterion" + std::to_string(c["id"].get<int>()), c["pass"].get<bool>());
  return finish(envelope(o), acc, r, o);
}

}  // namespace

CommandOutput run_command(const std::optional<MarkedPoset>& poset, const Options& opt) {
  std::string cmd = get(opt, "command");
  if (cmd == "validate") return cmd_validate(poset, opt);
  if (cmd == "classify") return cmd_classify(poset, opt);
  if (cmd == "polytope") return cmd_polytope(poset, opt);
  if (cmd == "transfer") return cmd_transfer(poset, opt);
  if (cmd == "mutate") return cmd_mutate(poset, opt);
  if (cmd == "hilbert") return cmd_hilbert(poset, opt);
  if (cmd == "dualcheck") return cmd_dualcheck(poset, opt);
  if (cmd == "valcheck") return cmd_valcheck(poset, opt);
  if (cmd == "nobody") return cmd_nobody(poset, opt);
  if (cmd == "cox") return cmd_cox(poset, opt);
  if (cmd == "acceptance") return cmd_acceptance(opt);
  throw Error(Errc::Usage, "unknown command '" + cmd + "'");
}

nlohmann::json error_report(const Options& opt, Errc code, const std::string& message) {
  nlohmann::json env = envelope(opt);
  env["error"] = {{"code", errc_name(code)}, {"message", message}};
  env["pass"] = false;
  env["repro"] = repro_command(opt);
  return env;
}

std::string repro_command(const Options& opt) {
  std::string s = "mcop " + get(opt, "command");
  for (const auto& [k, v] : opt) {
    if (k == "command") continue;
    bool plain = !v.empty() && v.find_first_of(" \t'\"\\$`") == std::string::npos;
    s += " --" + k + " " + (plain ? v : "'" + v + "'");
  }
  return s;
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace mcop
