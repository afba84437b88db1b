#include "mcop/geometry.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace mcop {

nlohmann::json rat_json(const Rat& r) {
  if (is_integer(r)) {
    const Int& n = numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return rat_str(r);
}

nlohmann::json ratvec_json(const RatVec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(rat_json(x));
  return j;
}

void HPolyhedron::add(RatVec row, Rat rhs) {
  if (static_cast<int>(row.size()) != dim) throw Error(Errc::Usage, "inequality has wrong dimension");
  a.push_back(std::move(row));
  b.push_back(std::move(rhs));
}

bool HPolyhedron::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dot(a[i], x) < b[i]) return false;
  return true;
}

bool HPolyhedron::contains_strictly(const RatVec& x) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    if (dot(a[i], x) <= b[i]) return false;
  }
  return true;
}

HPolyhedron HPolyhedron::dilate(const Rat& k) const {
  HPolyhedron r = *this;
  for (auto& x : r.b) x *= k;
  return r;
}

HPolyhedron HPolyhedron::translate(const RatVec& t) const {
  HPolyhedron r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.b[i] += dot(a[i], t);
  return r;
}

nlohmann::json HPolyhedron::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = ratvec_json(a[i]);
    row.push_back(rat_json(b[i]));
    rows.push_back(row);
  }
  return {{"dim", dim}, {"ineqs", rows}};
}

namespace {

Int lcm_int(const Int& x, const Int& y) { return x / boost::multiprecision::gcd(x, y) * y; }

// Integer row (a, b) with gcd(a) = 1, meaning a·x >= b; b rounded up since x is integral.
struct IntRow {
  std::vector<Int> a;
  Int b;
  bool operator<(const IntRow& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  bool operator==(const IntRow& o) const { return a == o.a && b == o.b; }
};

// Returns false for a row 0 >= b with b > 0 (infeasible); rows 0 >= b with b <= 0 are dropped.
bool normalize(const RatVec& a, const Rat& b, std::vector<IntRow>& out, bool& infeasible) {
  Int den = 1;
  for (const auto& x : a) den = lcm_int(den, denominator(x));
  std::vector<Int> ia(a.size());
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ia[i] = numerator(a[i]) * (den / denominator(a[i]));
    g = boost::multiprecision::gcd(g, ia[i]);
  }
  if (g == 0) {
    if (b > 0) infeasible = true;
    return false;
  }
  for (auto& x : ia) x /= g;
  Rat rb = b * Rat(den) / Rat(g);
  out.push_back({ia, ceil_rat(rb)});
  return true;
}

void dedupe(std::vector<IntRow>& rows) {
  // Keep the tightest right-hand side per direction.
  std::sort(rows.begin(), rows.end(), [](const IntRow& x, const IntRow& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b > y.b;
  });
  std::vector<IntRow> out;
  for (auto& r : rows)
    if (out.empty() || out.back().a != r.a) out.push_back(std::move(r));
  rows = std::move(out);
}

}  // namespace

namespace {

struct Enumerator {
  int d = 0;
  // proj[k]: rows over coordinates 0..k (entries beyond k are zero).
  std::vector<std::vector<IntRow>> proj;
  bool infeasible = false;
  std::uint64_t budget = 0, nodes = 0;

  Enumerator(const HPolyhedron& p, const GeometryLimits& lim) : d(p.dim), budget(lim.node_budget) {
    std::vector<IntRow> rows;
    for (std::size_t i = 0; i < p.a.size(); ++i) normalize(p.a[i], p.b[i], rows, infeasible);
    dedupe(rows);
    proj.assign(d, {});
    if (d == 0) return;
    proj[d - 1] = rows;
    for (int k = d - 1; k >= 1; --k) {
      const auto& cur = proj[k];
      std::vector<IntRow> pos, neg, next;
      for (const auto& r : cur) {
        if (r.a[k] > 0) pos.push_back(r);
        else if (r.a[k] < 0) neg.push_back(r);
        else next.push_back(r);
      }
      bool capped = pos.size() * neg.size() > lim.fm_row_cap;
      if (!capped) {
        for (const auto& pr : pos)
          for (const auto& nr : neg) {
            Int cp = -nr.a[k], cn = pr.a[k];
            RatVec a(d);
            for (int i = 0; i < d; ++i) a[i] = Rat(cp * pr.a[i] + cn * nr.a[i]);
            Rat b = Rat(cp * pr.b + cn * nr.b);
            normalize(a, b, next, infeasible);
          }
      }
      dedupe(next);
      proj[k - 1] = std::move(next);
    }
  }

  template <class F>
  void run(F&& emit) {
    if (infeasible || d == 0) {
      if (!infeasible && d == 0) emit(std::vector<Int>{});
      return;
    }
    std::vector<Int> x(d);
    std::function<void(int)> rec = [&](int k) {
      if (++nodes > budget) throw Error(Errc::BoxTooLarge, "lattice-point enumeration exceeded the node budget");
      bool has_lo = false, has_hi = false;
      Int lo, hi;
      for (const auto& r : proj[k]) {
        Int s = r.b;
        for (int i = 0; i < k; ++i)
          if (r.a[i] != 0) s -= r.a[i] * x[i];
        const Int& c = r.a[k];
        if (c == 0) {
          if (s > 0) return;
          continue;
        }
        if (c > 0) {
          Int q = ceil_rat(Rat(s, c));
          if (!has_lo || q > lo) lo = q, has_lo = true;
        } else {
          Int q = floor_rat(Rat(s, c));
          if (!has_hi || q < hi) hi = q, has_hi = true;
        }
      }
      if (!has_lo || !has_hi) throw Error(Errc::BoxTooLarge, "polyhedron is unbounded in coordinate " + std::to_string(k));
      for (Int v = lo; v <= hi; ++v) {
        x[k] = v;
        if (k + 1 == d) emit(x);
        else rec(k + 1);
      }
    };
    rec(0);
  }
};

}  // namespace

std::vector<std::vector<Int>> lattice_points(const HPolyhedron& p, const GeometryLimits& lim) {
  Enumerator e(p, lim);
  std::vector<std::vector<Int>> out;
  RatVec xr(p.dim);
  e.run([&](const std::vector<Int>& x) {
    for (int i = 0; i < p.dim; ++i) xr[i] = Rat(x[i]);
    if (p.contains(xr)) out.push_back(x);
  });
  return out;
}

std::uint64_t count_lattice_points(const HPolyhedron& p, const GeometryLimits& lim) {
  Enumerator e(p, lim);
  std::uint64_t n = 0;
  RatVec xr(p.dim);
  e.run([&](const std::vector<Int>& x) {
    for (int i = 0; i < p.dim; ++i) xr[i] = Rat(x[i]);
    if (p.contains(xr)) ++n;
  });
  return n;
}

RatVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm_int(den, denominator(x));
  Int g = 0;
  std::vector<Int> iv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    iv[i] = numerator(v[i]) * (den / denominator(v[i]));
    g = boost::multiprecision::gcd(g, iv[i]);
  }
  RatVec r(v.size());
  if (g == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(iv[i] / g);
  return r;
}

ConeVRep cone_from_hrep(const RatMat& rows, int dim) {
  RatMat lin;
  for (int i = 0; i < dim; ++i) {
    RatVec e(dim);
    e[i] = 1;
    lin.push_back(e);
  }
  struct Ray {
    RatVec v;
    std::vector<bool> tight;  // over processed rows
  };
  std::vector<Ray> rays;
  std::size_t processed = 0;
  for (const auto& a : rows) {
    if (is_zero(a)) continue;
    // Lineality step.
    int pivot = -1;
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot >= 0) {
      RatVec l0 = lin[pivot];
      Rat a0 = dot(a, l0);
      if (a0 < 0) {
        l0 = vec_scale(-1, l0);
        a0 = -a0;
      }
      RatMat nl;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        Rat c = dot(a, lin[i]) / a0;
        nl.push_back(c == 0 ? lin[i] : vec_sub(lin[i], vec_scale(c, l0)));
      }
      lin = std::move(nl);
      for (auto& r : rays) {
        Rat c = dot(a, r.v) / a0;
        if (c != 0) r.v = primitive(vec_sub(r.v, vec_scale(c, l0)));
        r.tight.push_back(true);
      }
      std::vector<bool> t(processed, true);
      t.push_back(false);
      rays.push_back({primitive(l0), t});
      ++processed;
      continue;
    }
    std::vector<Ray> pos, zer, neg;
    std::vector<Rat> val;
    for (auto& r : rays) {
      Rat s = dot(a, r.v);
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
      else zer.push_back(r);
    }
    std::vector<Ray> next;
    for (auto& r : pos) {
      r.tight.push_back(false);
      next.push_back(r);
    }
    for (auto& r : zer) {
      r.tight.push_back(true);
      next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // Combinatorial adjacency: no third ray is tight on every row where both are tight.
        std::vector<std::size_t> common;
        for (std::size_t i = 0; i < processed; ++i)
          if (p.tight[i] && n.tight[i]) common.push_back(i);
        bool adjacent = true;
        for (const auto& r : rays) {
          if (&r == &p || &r == &n) continue;
          if (r.v == p.v || r.v == n.v) continue;
          bool all = true;
          for (auto i : common)
            if (!r.tight[i]) {
              all = false;
              break;
            }
          if (all) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Rat sp = dot(a, p.v), sn = dot(a, n.v);
        RatVec v = vec_sub(vec_scale(sp, n.v), vec_scale(sn, p.v));
        std::vector<bool> t(processed);
        for (std::size_t i = 0; i < processed; ++i) t[i] = p.tight[i] && n.tight[i];
        t.push_back(true);
        next.push_back({primitive(v), t});
      }
    rays = std::move(next);
    ++processed;
  }
  ConeVRep out;
  for (auto& r : rays) out.generators.push_back(r.v);
  out.lineality = lin;
  return out;
}

VPolyhedron to_vrep(const HPolyhedron& p, const GeometryLimits& lim) {
  if (p.dim > lim.dim_cap)
    throw Error(Errc::DimCapExceeded, "dimension " + std::to_string(p.dim) + " exceeds cap " + std::to_string(lim.dim_cap));
  const int d = p.dim;
  RatMat rows;
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    RatVec r = p.a[i];
    r.push_back(-p.b[i]);
    rows.push_back(r);
  }
  RatVec t(d + 1);
  t[d] = 1;
  rows.push_back(t);
  ConeVRep c = cone_from_hrep(rows, d + 1);
  VPolyhedron v;
  v.dim = d;
  for (const auto& g : c.generators) {
    RatVec x(g.begin(), g.begin() + d);
    if (g[d] > 0) v.points.push_back(vec_scale(1 / g[d], x));
    else v.rays.push_back(x);
  }
  for (const auto& l : c.lineality) v.lineality.push_back(RatVec(l.begin(), l.begin() + d));
  if (v.points.empty()) {
    v.rays.clear();
    v.lineality.clear();
  }
  return v;
}

HPolyhedron to_hrep(const VPolyhedron& v, const GeometryLimits& lim) {
  if (v.dim > lim.dim_cap)
    throw Error(Errc::DimCapExceeded, "dimension " + std::to_string(v.dim) + " exceeds cap " + std::to_string(lim.dim_cap));
  const int d = v.dim;
  HPolyhedron h(d);
  if (v.points.empty()) {
    // Empty set: 0 >= 1.
    h.add(RatVec(d), 1);
    return h;
  }
  RatMat rows;
  for (const auto& p : v.points) {
    RatVec r = p;
    r.push_back(1);
    rows.push_back(r);
  }
  for (const auto& x : v.rays) {
    RatVec r = x;
    r.push_back(0);
    rows.push_back(r);
  }
  for (const auto& l : v.lineality) {
    RatVec r = l;
    r.push_back(0);
    rows.push_back(r);
    rows.push_back(vec_scale(-1, r));
  }
  ConeVRep dual = cone_from_hrep(rows, d + 1);
  auto emit = [&](const RatVec& g) {
    RatVec a(g.begin(), g.begin() + d);
    h.add(a, -g[d]);
  };
  for (const auto& g : dual.generators) emit(g);
  for (const auto& l : dual.lineality) {
    emit(l);
    emit(vec_scale(-1, l));
  }
  return h;
}

bool contains(const HPolyhedron& h, const VPolyhedron& v) {
  for (const auto& p : v.points)
    if (!h.contains(p)) return false;
  for (std::size_t i = 0; i < h.a.size(); ++i) {
    for (const auto& r : v.rays)
      if (dot(h.a[i], r) < 0) return false;
    for (const auto& l : v.lineality)
      if (dot(h.a[i], l) != 0) return false;
  }
  return true;
}

bool polyhedron_equal(const VPolyhedron& p, const VPolyhedron& q, const GeometryLimits& lim) {
  if (p.dim != q.dim) return false;
  if (p.empty() || q.empty()) return p.empty() == q.empty();
  return contains(to_hrep(q, lim), p) && contains(to_hrep(p, lim), q);
}

bool polyhedron_equal(const HPolyhedron& p, const HPolyhedron& q, const GeometryLimits& lim) {
  if (p.dim != q.dim) return false;
  VPolyhedron vp = to_vrep(p, lim), vq = to_vrep(q, lim);
  if (vp.empty() || vq.empty()) return vp.empty() == vq.empty();
  return contains(q, vp) && contains(p, vq);
}

VPolyhedron minkowski_sum_hull(const RatMat& s, const ConeVRep& k, int dim, const GeometryLimits& lim) {
  if (dim > lim.dim_cap)
    throw Error(Errc::DimCapExceeded, "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(lim.dim_cap));
  RatMat rows = k.generators;
  for (const auto& l : k.lineality) {
    rows.push_back(l);
    rows.push_back(vec_scale(-1, l));
  }
  ConeVRep dual = cone_from_hrep(rows, dim);
  VPolyhedron v;
  v.dim = dim;
  v.points = s;
  std::sort(v.points.begin(), v.points.end());
  v.points.erase(std::unique(v.points.begin(), v.points.end()), v.points.end());
  v.rays = dual.generators;
  v.lineality = dual.lineality;
  return v;
}

namespace {

// Row-reduces m in place; returns rank and the pivot columns.
int row_reduce(RatMat& m, std::vector<int>* pivots = nullptr) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

RatVec expand_in_basis(const RatVec& x, const RatMat& basis) {
  const int d = static_cast<int>(x.size());
  if (static_cast<int>(basis.size()) != d) throw Error(Errc::Singular, "basis size differs from the dimension");
  // Augmented matrix with basis vectors as columns.
  RatMat m(d, RatVec(d + 1));
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(basis[i].size()) != d) throw Error(Errc::Singular, "basis vector has wrong dimension");
    for (int j = 0; j < d; ++j) m[j][i] = basis[i][j];
    m[i][d] = x[i];
  }
  std::vector<int> piv;
  int r = row_reduce(m, &piv);
  if (r < d || piv.back() >= d) throw Error(Errc::Singular, "vectors do not form a basis");
  RatVec c(d);
  for (int i = 0; i < d; ++i) c[i] = m[i][d];
  return c;
}

Rat determinant(const RatMat& m0) {
  const int n = static_cast<int>(m0.size());
  for (const auto& row : m0)
    if (static_cast<int>(row.size()) != n) throw Error(Errc::NotSquare, "matrix is not square");
  RatMat m = m0;
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

bool is_unimodular(const RatMat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  Rat d = determinant(m);
  return d == 1 || d == -1;
}

int matrix_rank(RatMat m) { return row_reduce(m); }

}  // namespace mcop
