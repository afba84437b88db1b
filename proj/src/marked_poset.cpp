#include "mcop/marked_poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace mcop {

const char* family_name(Family f) {
  switch (f) {
    case Family::GtA: return "gtA";
    case Family::GtC: return "gtC";
    case Family::Pi1: return "pi1";
    case Family::Pi2: return "pi2";
    case Family::None: break;
  }
  return "none";
}

Family parse_family(std::string_view s) {
  if (s == "gtA") return Family::GtA;
  if (s == "gtC") return Family::GtC;
  if (s == "pi1") return Family::Pi1;
  if (s == "pi2") return Family::Pi2;
  throw Error(Errc::Usage, "unknown family '" + std::string(s) + "' (expected gtA, gtC, pi1, pi2)");
}

int MarkedPoset::add(const std::string& name, bool marked, const Int& lambda) {
  if (index_.count(name)) throw Error(Errc::ParseError, "duplicate element '" + name + "'");
  int id = size();
  names_.push_back(name);
  marked_.push_back(marked);
  lambda_.push_back(marked ? lambda : Int(0));
  lower_.emplace_back();
  upper_.emplace_back();
  index_[name] = id;
  return id;
}

void MarkedPoset::add_cover(int lower, int upper) {
  covers_.emplace_back(lower, upper);
  lower_[upper].push_back(lower);
  upper_[lower].push_back(upper);
}

void MarkedPoset::add_cover(std::string_view lower, std::string_view upper) {
  int a = find(lower), b = find(upper);
  if (a < 0) throw Error(Errc::ParseError, "unknown element '" + std::string(lower) + "' in cover");
  if (b < 0) throw Error(Errc::ParseError, "unknown element '" + std::string(upper) + "' in cover");
  add_cover(a, b);
}

int MarkedPoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

namespace {

Int json_int(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    return Int(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    Rat r = parse_rat(v.get<std::string>());
    if (!is_integer(r)) throw Error(Errc::ParseError, what + " must be an integer");
    return numerator(r);
  }
  throw Error(Errc::ParseError, what + " must be an integer or a decimal string");
}

nlohmann::json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return nlohmann::json(v.convert_to<std::int64_t>());
  return nlohmann::json(v.str());
}

}  // namespace

MarkedPoset MarkedPoset::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "poset JSON must be an object");
  for (const char* key : {"elements", "covers", "marked"})
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("poset JSON lacks '") + key + "'");
  const auto& marked = j.at("marked");
  if (!marked.is_object()) throw Error(Errc::ParseError, "'marked' must be an object");
  MarkedPoset p;
  if (!j.at("elements").is_array()) throw Error(Errc::ParseError, "'elements' must be an array");
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw Error(Errc::ParseError, "element names must be strings");
    std::string name = e.get<std::string>();
    bool m = marked.contains(name);
    p.add(name, m, m ? json_int(marked.at(name), "marking of " + name) : Int(0));
  }
  for (auto it = marked.begin(); it != marked.end(); ++it)
    if (p.find(it.key()) < 0) throw Error(Errc::ParseError, "marked element '" + it.key() + "' is not listed");
  if (!j.at("covers").is_array()) throw Error(Errc::ParseError, "'covers' must be an array");
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw Error(Errc::ParseError, "each cover must be a pair of names [q, p]");
    p.add_cover(c[0].get<std::string>(), c[1].get<std::string>());
  }
  if (j.contains("u")) {
    const auto& u = j.at("u");
    if (!u.is_object()) throw Error(Errc::ParseError, "'u' must be an object");
    std::vector<Int> vals(p.size(), Int(0));
    std::vector<bool> seen(p.size(), false);
    for (auto it = u.begin(); it != u.end(); ++it) {
      int e = p.find(it.key());
      if (e < 0) throw Error(Errc::ParseError, "'u' names unknown element '" + it.key() + "'");
      vals[e] = json_int(it.value(), "u of " + it.key());
      seen[e] = true;
    }
    for (int e = 0; e < p.size(); ++e) {
      if (p.marked(e)) vals[e] = p.lambda(e);
      else if (!seen[e]) throw Error(Errc::ParseError, "'u' lacks unmarked element '" + p.name(e) + "'");
    }
    p.u_given = vals;
  }
  p.tag = recognize_family(p);
  return p;
}

nlohmann::json MarkedPoset::to_json() const {
  nlohmann::json j;
  j["elements"] = names_;
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : covers_) covers.push_back({names_[a], names_[b]});
  j["covers"] = covers;
  nlohmann::json marked = nlohmann::json::object();
  for (int e = 0; e < size(); ++e)
    if (marked_[e]) marked[names_[e]] = int_json(lambda_[e]);
  j["marked"] = marked;
  if (u_given) {
    nlohmann::json u = nlohmann::json::object();
    for (int e = 0; e < size(); ++e)
      if (!marked_[e]) u[names_[e]] = int_json((*u_given)[e]);
    j["u"] = u;
  }
  return j;
}

Validation validate(const MarkedPoset& p) {
  Validation v;
  const int N = p.size();
  auto fail = [&](Errc code, const std::string& check, const std::string& msg) {
    v.checks.push_back({check, false, msg});
    if (!v.error) {
      v.error = code;
      v.message = msg;
    }
  };

  // Acyclicity via Kahn's algorithm.
  std::vector<int> indeg(N, 0), topo;
  bool self_loop = false;
  std::set<std::pair<int, int>> seen_cover;
  bool duplicate = false;
  for (auto [a, b] : p.covers()) {
    if (a == b) self_loop = true;
    if (!seen_cover.insert({a, b}).second) duplicate = true;
    ++indeg[b];
  }
  {
    std::vector<int> stack;
    for (int e = 0; e < N; ++e)
      if (indeg[e] == 0) stack.push_back(e);
    std::vector<int> deg = indeg;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      topo.push_back(e);
      for (int u : p.upper(e))
        if (--deg[u] == 0) stack.push_back(u);
    }
  }
  if (self_loop || static_cast<int>(topo.size()) != N) {
    fail(Errc::Cyclic, "acyclic", "cover relation contains a cycle");
    v.ok = false;
    return v;
  }
  v.checks.push_back({"acyclic", true, ""});

  // No cover may be implied by a longer path.
  std::string redundant;
  if (duplicate) redundant = "a cover pair is listed twice";
  for (auto [a, b] : p.covers()) {
    if (!redundant.empty()) break;
    std::vector<char> vis(N, 0);
    std::vector<int> stack;
    for (int u : p.upper(a))
      if (u != b) stack.push_back(u);
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      if (vis[e]) continue;
      vis[e] = 1;
      if (e == b) {
        redundant = "cover " + p.name(a) + " < " + p.name(b) + " is implied by a longer chain";
        break;
      }
      for (int u : p.upper(e)) stack.push_back(u);
    }
  }
  if (!redundant.empty()) fail(Errc::BadHasse, "hasse", redundant);
  else v.checks.push_back({"hasse", true, ""});

  // Gradedness.
  std::vector<int> rank(N, 0);
  for (int e : topo)
    for (int l : p.lower(e)) rank[e] = std::max(rank[e], rank[l] + 1);
  std::string graded_msg;
  for (auto [a, b] : p.covers())
    if (rank[b] != rank[a] + 1) {
      graded_msg = "maximal chains through " + p.name(a) + " < " + p.name(b) + " have different lengths";
      break;
    }
  if (graded_msg.empty()) {
    int top = -1;
    for (int e = 0; e < N; ++e)
      if (p.upper(e).empty()) {
        if (top < 0) top = rank[e];
        else if (rank[e] != top) {
          graded_msg = "maximal elements at different ranks";
          break;
        }
      }
  }
  if (!graded_msg.empty()) fail(Errc::NotGraded, "graded", graded_msg);
  else {
    v.checks.push_back({"graded", true, ""});
    v.rank = rank;
  }

  // Extremes are marked.
  std::string extreme;
  for (int e = 0; e < N && extreme.empty(); ++e)
    if ((p.lower(e).empty() || p.upper(e).empty()) && !p.marked(e))
      extreme = "extreme element " + p.name(e) + " is not marked";
  if (!extreme.empty()) fail(Errc::UnmarkedExtreme, "extremes_marked", extreme);
  else v.checks.push_back({"extremes_marked", true, ""});

  // Monotone marking along the order.
  std::string mono;
  for (int a = 0; a < N && mono.empty(); ++a) {
    if (!p.marked(a)) continue;
    std::vector<char> vis(N, 0);
    std::vector<int> stack(p.upper(a).begin(), p.upper(a).end());
    while (!stack.empty() && mono.empty()) {
      int e = stack.back();
      stack.pop_back();
      if (vis[e]) continue;
      vis[e] = 1;
      if (p.marked(e) && p.lambda(e) < p.lambda(a))
        mono = "marking decreases from " + p.name(a) + " to " + p.name(e);
      for (int u : p.upper(e)) stack.push_back(u);
    }
  }
  if (!mono.empty()) fail(Errc::NotMonotone, "monotone_marking", mono);
  else v.checks.push_back({"monotone_marking", true, ""});

  v.ok = !v.error.has_value();
  return v;
}

GradedPoset::GradedPoset(MarkedPoset p) : p_(std::move(p)) {
  Validation v = validate(p_);
  if (!v.ok) throw Error(*v.error, v.message);
  rank_ = v.rank;
  int top = 0;
  for (int r : rank_) top = std::max(top, r);
  levels_.assign(top + 1, {});
  for (int e = 0; e < p_.size(); ++e) levels_[rank_[e]].push_back(e);
  for (auto& lv : levels_)
    std::sort(lv.begin(), lv.end(), [&](int a, int b) { return p_.name(a) < p_.name(b); });
  for (const auto& lv : levels_)
    for (int e : lv)
      if (!p_.marked(e)) free_.push_back(e);
  coord_.assign(p_.size(), -1);
  for (int c = 0; c < dim(); ++c) coord_[free_[c]] = c;
  lower_free_.assign(dim(), {});
  lower_marked_.assign(dim(), {});
  for (int c = 0; c < dim(); ++c) {
    std::vector<int> lows = p_.lower(free_[c]);
    std::sort(lows.begin(), lows.end(), [&](int a, int b) { return p_.name(a) < p_.name(b); });
    for (int l : lows) {
      if (p_.marked(l)) lower_marked_[c].push_back(l);
      else lower_free_[c].push_back(coord_[l]);
    }
  }
}

int GradedPoset::coord_of(std::string_view name) const {
  int e = p_.find(name);
  return e < 0 ? -1 : coord_[e];
}

BreveLevel breve_level(const GradedPoset& p, int i) {
  BreveLevel b;
  b.level = i;
  if (i < 0 || i > p.max_rank()) return b;
  b.lower = p.level(i);
  if (i + 1 > p.max_rank()) return b;
  for (int e : p.level(i + 1)) {
    if (p.poset().marked(e)) continue;
    if (p.poset().lower(e).size() <= 1) continue;
    b.upper.push_back(e);
  }
  for (int e : b.upper) {
    std::vector<int> lows = p.poset().lower(e);
    std::sort(lows.begin(), lows.end(), [&](int a, int c) { return p.poset().name(a) < p.poset().name(c); });
    for (int l : lows) b.edges.emplace_back(l, e);
  }
  return b;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Trivial: return "TRIVIAL";
    case Shape::ZigzagUnmarked: return "ZIGZAG_UNMARKED";
    case Shape::ZigzagMarkedTop: return "ZIGZAG_MARKED_TOP";
  }
  return "?";
}

SpadeResult classify_spade(const GradedPoset& p) {
  SpadeResult res;
  const auto& P = p.poset();
  auto by_name = [&](int a, int b) { return P.name(a) < P.name(b); };
  for (int i = 0; i <= p.max_rank(); ++i) {
    BreveLevel b = breve_level(p, i);
    std::vector<int> nodes = b.lower;
    nodes.insert(nodes.end(), b.upper.begin(), b.upper.end());
    std::map<int, int> idx;
    for (std::size_t k = 0; k < nodes.size(); ++k) idx[nodes[k]] = static_cast<int>(k);
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::map<int, std::vector<int>> adj;
    for (auto [l, u] : b.edges) {
      parent[root(idx[l])] = root(idx[u]);
      adj[l].push_back(u);
      adj[u].push_back(l);
    }
    std::map<int, LevelComponent> groups;
    for (int e : nodes) {
      auto& g = groups[root(idx[e])];
      g.level = i;
      if (P.marked(e) || p.rank(e) == i) {
        if (p.rank(e) == i) g.lower.push_back(e);
        else g.upper.push_back(e);
      } else {
        g.upper.push_back(e);
      }
    }
    std::vector<LevelComponent> comps;
    for (auto& [r, g] : groups) {
      std::sort(g.lower.begin(), g.lower.end(), by_name);
      std::sort(g.upper.begin(), g.upper.end(), by_name);
      comps.push_back(g);
    }
    std::sort(comps.begin(), comps.end(),
              [&](const LevelComponent& a, const LevelComponent& c) { return by_name(a.lower[0], c.lower[0]); });
    for (auto& g : comps) {
      auto violate = [&](const std::string& why) {
        res.violation = g;
        res.reason = "level " + std::to_string(i) + ": " + why;
      };
      if (g.upper.empty()) {
        g.shape = Shape::Trivial;
        res.components.push_back(g);
        continue;
      }
      for (int u : g.upper)
        if (adj[u].size() != 2) {
          violate(P.name(u) + " covers " + std::to_string(adj[u].size()) + " elements of the lower level");
          break;
        }
      if (res.violation) return res;
      std::vector<int> ends;
      for (int l : g.lower) {
        if (adj[l].size() > 2) {
          violate(P.name(l) + " is covered by " + std::to_string(adj[l].size()) + " kept elements");
          return res;
        }
        if (adj[l].size() <= 1) ends.push_back(l);
      }
      if (g.lower.size() != g.upper.size() + 1 || ends.size() != 2) {
        violate("component is not a zigzag path");
        return res;
      }
      std::vector<int> marked;
      for (int l : g.lower)
        if (P.marked(l)) marked.push_back(l);
      int start;
      if (marked.empty()) {
        g.shape = Shape::ZigzagUnmarked;
        start = by_name(ends[0], ends[1]) ? ends[0] : ends[1];
      } else if (marked.size() == 1 && (marked[0] == ends[0] || marked[0] == ends[1])) {
        g.shape = Shape::ZigzagMarkedTop;
        start = marked[0] == ends[0] ? ends[1] : ends[0];
      } else {
        violate(marked.size() == 1 ? "marked element " + P.name(marked[0]) + " is inside the zigzag"
                                   : "zigzag contains " + std::to_string(marked.size()) + " marked elements");
        return res;
      }
      std::vector<int> lower{start}, upper;
      int prev = -1, cur = start;
      while (true) {
        int next_up = -1;
        for (int u : adj[cur])
          if (u != prev) next_up = u;
        if (next_up < 0) break;
        upper.push_back(next_up);
        int next_low = adj[next_up][0] == cur ? adj[next_up][1] : adj[next_up][0];
        lower.push_back(next_low);
        prev = next_up;
        cur = next_low;
      }
      g.lower = lower;
      g.upper = upper;
      res.components.push_back(g);
    }
  }
  res.ok = true;
  return res;
}

SpadeResult require_spade(const GradedPoset& p) {
  SpadeResult s = classify_spade(p);
  if (!s.ok) throw Error(Errc::SpadeViolation, "condition (♠) fails: " + s.reason);
  return s;
}

ZigzagData zigzag_data(const GradedPoset& p, const SpadeResult& s) {
  const int d = p.dim();
  const auto& P = p.poset();
  ZigzagData z;
  z.hat_e.assign(d, {});
  z.next.assign(d, -1);
  z.tail_x.assign(d, -1);
  z.tail_y.assign(d, -1);
  z.units_per_level.assign(p.max_rank() + 1, 0);
  // Component and position of each element as a lower element.
  std::vector<std::pair<int, int>> where(P.size(), {-1, -1});
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    const auto& g = s.components[ci];
    for (std::size_t k = 0; k < g.lower.size(); ++k) where[g.lower[k]] = {static_cast<int>(ci), static_cast<int>(k)};
  }
  for (const auto& g : s.components) {
    if (g.shape == Shape::ZigzagUnmarked || (g.shape == Shape::Trivial && !P.marked(g.lower[0])))
      ++z.units_per_level[g.level];
    for (std::size_t k = 0; k < g.lower.size(); ++k) {
      int e = g.lower[k];
      if (P.marked(e)) continue;
      int c = p.coord(e);
      for (std::size_t t = 0; t <= k; ++t) z.hat_e[c].push_back(p.coord(g.lower[t]));
      if (k + 1 < g.lower.size() && !P.marked(g.lower[k + 1])) z.next[c] = p.coord(g.lower[k + 1]);
      if (k < g.upper.size()) {
        int q = g.upper[k];
        auto [ci2, k2] = where[q];
        const auto& g2 = s.components[ci2];
        z.tail_y[c] = p.coord(q);
        if (k2 >= 1) z.tail_x[c] = p.coord(g2.lower[k2 - 1]);
      }
    }
  }
  return z;
}

std::vector<Int> choose_u(const GradedPoset& p, bool strict) {
  const auto& P = p.poset();
  const int R = p.max_rank();
  std::vector<std::optional<Int>> rank_val(R + 1);
  for (int e = 0; e < P.size(); ++e) {
    if (!P.marked(e)) continue;
    auto& rv = rank_val[p.rank(e)];
    if (rv && *rv != P.lambda(e))
      throw Error(Errc::NotRankConstant, "marking is not constant on rank " + std::to_string(p.rank(e)));
    rv = P.lambda(e);
  }
  std::vector<Int> val(R + 1);
  int prev = 0;
  val[0] = *rank_val[0];
  for (int r = 1; r <= R; ++r) {
    if (!rank_val[r]) continue;
    const Int a = *rank_val[prev], b = *rank_val[r];
    const int m = r - prev - 1;
    if (b < a || (strict && b - a < m + 1))
      throw Error(Errc::NoInteriorU, "no " + std::string(strict ? "strictly " : "") + "increasing integer u between rank " +
                                         std::to_string(prev) + " (" + a.str() + ") and rank " + std::to_string(r) +
                                         " (" + b.str() + ")");
    for (int t = 1; t <= m; ++t) {
      Int num = Int(t) * (b - a);
      val[prev + t] = a + num / (m + 1);
    }
    val[r] = b;
    prev = r;
  }
  std::vector<Int> u(P.size());
  for (int e = 0; e < P.size(); ++e) u[e] = P.marked(e) ? P.lambda(e) : val[p.rank(e)];
  return u;
}

bool u_satisfies_assumption(const GradedPoset& p, const std::vector<Int>& u, bool strict, std::string* why) {
  const auto& P = p.poset();
  std::vector<std::optional<Int>> rank_val(p.max_rank() + 1);
  for (int e = 0; e < P.size(); ++e) {
    auto& rv = rank_val[p.rank(e)];
    if (rv && *rv != u[e]) {
      if (why) *why = "u is not constant on rank " + std::to_string(p.rank(e));
      return false;
    }
    rv = u[e];
    if (P.marked(e) && u[e] != P.lambda(e)) {
      if (why) *why = "u differs from the marking at " + P.name(e);
      return false;
    }
  }
  for (auto [a, b] : P.covers())
    if (u[a] > u[b] || (strict && u[a] == u[b])) {
      if (why) *why = "u is not " + std::string(strict ? "strictly " : "") + "increasing along " + P.name(a) + " < " + P.name(b);
      return false;
    }
  return true;
}

std::vector<Int> resolve_u(const GradedPoset& p, bool strict) {
  if (p.poset().u_given) {
    std::string why;
    if (!u_satisfies_assumption(p, *p.poset().u_given, strict, &why)) throw Error(Errc::NoInteriorU, why);
    return *p.poset().u_given;
  }
  return choose_u(p, strict);
}

RatVec u_coords(const GradedPoset& p, const std::vector<Int>& u) {
  RatVec r(p.dim());
  for (int c = 0; c < p.dim(); ++c) r[c] = Rat(u[p.elem(c)]);
  return r;
}

std::string gt_name(int i, int j) {
  if (i < 10 && j < 10) return "q" + std::to_string(i) + std::to_string(j);
  return "q" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

// Elements placed at grid positions (i, j); q_{i,j} covers q_{i-1,j} and q_{i-1,j+1} when present.
struct Grid {
  MarkedPoset p;
  std::map<std::pair<int, int>, int> at;
  void place(int i, int j, const std::string& name, bool marked, const Int& lambda) {
    at[{i, j}] = p.add(name, marked, lambda);
  }
  int get(int i, int j) const {
    auto it = at.find({i, j});
    return it == at.end() ? -1 : it->second;
  }
};

}  // namespace

MarkedPoset gt_type_A(int n, const std::vector<Int>& lambda) {
  if (n < 1) throw Error(Errc::Usage, "gt_type_A requires n >= 1");
  if (static_cast<int>(lambda.size()) != n + 1)
    throw Error(Errc::Usage, "gt_type_A requires n+1 = " + std::to_string(n + 1) + " marking values");
  for (int k = 1; k < n + 1; ++k)
    if (lambda[k] < lambda[k - 1]) throw Error(Errc::Usage, "gt_type_A requires a weakly increasing marking");
  Grid g;
  std::map<std::pair<int, int>, int> star;  // position -> k
  for (int k = 1; k <= n + 1; ++k) star[{2 * k - 2, n + 2 - k}] = k;
  for (int i = 0; i <= 2 * n; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      auto s = star.find({i, j});
      if (s != star.end()) g.place(i, j, "q*" + std::to_string(s->second), true, lambda[s->second - 1]);
      else if (j <= n && n + 1 - j <= i && i <= 2 * n + 1 - 2 * j) g.place(i, j, gt_name(i, j), false, 0);
    }
  for (auto [pos, e] : g.at) {
    auto [i, j] = pos;
    if (i == 0) continue;
    for (int dj : {0, 1}) {
      int l = g.get(i - 1, j + dj);
      if (l >= 0) g.p.add_cover(l, e);
    }
  }
  g.p.tag = {Family::GtA, n, lambda};
  return g.p;
}

MarkedPoset gt_type_C(int n, const std::vector<Int>& lambda) {
  if (n < 1) throw Error(Errc::Usage, "gt_type_C requires n >= 1");
  if (static_cast<int>(lambda.size()) != n)
    throw Error(Errc::Usage, "gt_type_C requires n = " + std::to_string(n) + " marking values");
  if (lambda[0] < 0) throw Error(Errc::Usage, "gt_type_C requires 0 <= λ_1");
  for (int k = 1; k < n; ++k)
    if (lambda[k] < lambda[k - 1]) throw Error(Errc::Usage, "gt_type_C requires a weakly increasing marking");
  Grid g;
  std::map<std::pair<int, int>, int> star;
  for (int t = 1; t <= n; ++t) star[{2 * t, n + 1 - t}] = t;
  for (int j = 1; j <= n; ++j) g.place(0, j, "z" + std::to_string(j), true, 0);
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto s = star.find({i, j});
      if (s != star.end()) g.place(i, j, "q*" + std::to_string(s->second), true, lambda[s->second - 1]);
      else if (i <= 2 * n + 1 - 2 * j) g.place(i, j, gt_name(i, j), false, 0);
    }
  for (auto [pos, e] : g.at) {
    auto [i, j] = pos;
    if (i == 0) continue;
    if (i == 1) {
      g.p.add_cover(g.get(0, j), e);
      continue;
    }
    for (int dj : {0, 1}) {
      int l = g.get(i - 1, j + dj);
      if (l >= 0) g.p.add_cover(l, e);
    }
  }
  g.p.tag = {Family::GtC, n, lambda};
  return g.p;
}

MarkedPoset basic_pi1(int n, const Int& bottom, const Int& top) {
  if (n < 1) throw Error(Errc::Usage, "basic_pi1 requires n >= 1");
  MarkedPoset p;
  int bot = p.add("bot", true, bottom);
  std::vector<int> ps, qs;
  for (int k = 1; k <= n + 1; ++k) ps.push_back(p.add("p" + std::to_string(k)));
  for (int k = 1; k <= n; ++k) qs.push_back(p.add("q" + std::to_string(k)));
  int tp = p.add("top", true, top);
  for (int x : ps) p.add_cover(bot, x);
  for (int k = 0; k < n; ++k) {
    p.add_cover(ps[k], qs[k]);
    p.add_cover(ps[k + 1], qs[k]);
    p.add_cover(qs[k], tp);
  }
  p.tag = {Family::Pi1, n, {bottom, top}};
  return p;
}

MarkedPoset basic_pi2(int n, const Int& lambda_last) {
  if (n < 1) throw Error(Errc::Usage, "basic_pi2 requires n >= 1");
  MarkedPoset p;
  int bot = p.add("bot", true, lambda_last - 1);
  std::vector<int> ps, qs;
  for (int k = 1; k <= n + 1; ++k) ps.push_back(p.add("p" + std::to_string(k), k == n + 1, lambda_last));
  for (int k = 1; k <= n; ++k) qs.push_back(p.add("q" + std::to_string(k)));
  int tp = p.add("top", true, lambda_last + 2);
  for (int x : ps) p.add_cover(bot, x);
  for (int k = 0; k < n; ++k) {
    p.add_cover(ps[k], qs[k]);
    p.add_cover(ps[k + 1], qs[k]);
    p.add_cover(qs[k], tp);
  }
  p.tag = {Family::Pi2, n, {lambda_last}};
  return p;
}

std::vector<Int> default_lambda(Family f, int n) {
  std::vector<Int> l;
  switch (f) {
    case Family::GtA:
      for (int k = 0; k <= n; ++k) l.push_back(2 * k);
      break;
    case Family::GtC:
      for (int k = 1; k <= n; ++k) l.push_back(2 * k);
      break;
    case Family::Pi1: l = {0, 3}; break;
    case Family::Pi2: l = {1}; break;
    case Family::None: break;
  }
  return l;
}

MarkedPoset build_family(Family f, int n, const std::vector<Int>& lambda) {
  std::vector<Int> l = lambda.empty() ? default_lambda(f, n) : lambda;
  switch (f) {
    case Family::GtA: return gt_type_A(n, l);
    case Family::GtC: return gt_type_C(n, l);
    case Family::Pi1:
      if (l.size() != 2) throw Error(Errc::Usage, "pi1 takes two marking values (bottom, top)");
      return basic_pi1(n, l[0], l[1]);
    case Family::Pi2:
      if (l.size() != 1) throw Error(Errc::Usage, "pi2 takes one marking value (λ of p_{n+1})");
      return basic_pi2(n, l[0]);
    case Family::None: break;
  }
  throw Error(Errc::Usage, "no builder for family 'none'");
}

FamilyTag recognize_family(const MarkedPoset& p) {
  auto signature = [](const MarkedPoset& q) {
    std::set<std::string> marked;
    std::set<std::pair<std::string, std::string>> covers;
    for (int e = 0; e < q.size(); ++e)
      if (q.marked(e)) marked.insert(q.name(e));
    for (auto [a, b] : q.covers()) covers.insert({q.name(a), q.name(b)});
    std::set<std::string> names;
    for (int e = 0; e < q.size(); ++e) names.insert(q.name(e));
    return std::make_tuple(names, marked, covers);
  };
  int d = 0;
  for (int e = 0; e < p.size(); ++e)
    if (!p.marked(e)) ++d;
  auto lam = [&](const std::string& name) -> Int {
    int e = p.find(name);
    return e >= 0 ? p.lambda(e) : Int(0);
  };
  auto sig = signature(p);
  for (int n = 1; n <= 64; ++n) {
    if (n * (n + 1) / 2 == d) {
      std::vector<Int> l;
      for (int k = 1; k <= n + 1; ++k) l.push_back(lam("q*" + std::to_string(k)));
      bool mono = std::is_sorted(l.begin(), l.end());
      if (mono && signature(gt_type_A(n, l)) == sig) return {Family::GtA, n, l};
    }
    if (n * n == d) {
      std::vector<Int> l;
      for (int k = 1; k <= n; ++k) l.push_back(lam("q*" + std::to_string(k)));
      bool zeros = true;
      for (int j = 1; j <= n; ++j) zeros = zeros && p.find("z" + std::to_string(j)) >= 0 && lam("z" + std::to_string(j)) == 0;
      bool mono = std::is_sorted(l.begin(), l.end()) && l[0] >= 0;
      if (zeros && mono && signature(gt_type_C(n, l)) == sig) return {Family::GtC, n, l};
    }
    if (2 * n + 1 == d && signature(basic_pi1(n)) == sig) return {Family::Pi1, n, {lam("bot"), lam("top")}};
    if (2 * n == d && signature(basic_pi2(n, 0)) == sig) return {Family::Pi2, n, {lam("p" + std::to_string(n + 1))}};
  }
  return {};
}

}  // namespace mcop
