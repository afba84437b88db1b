#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcop/marked_poset.hpp"

namespace oracle {

using mcop::Int;
using mcop::Rat;

inline std::vector<Int> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

inline mcop::GradedPoset graded(mcop::Family f, int n, const std::vector<Int>& lambda = {}) {
  mcop::MarkedPoset p = mcop::build_family(f, n, lambda);
  p.tag = mcop::recognize_family(p);
  return mcop::GradedPoset(std::move(p));
}

inline mcop::GradedPoset graded(const mcop::MarkedPoset& src) {
  mcop::MarkedPoset p = src;
  p.tag = mcop::recognize_family(p);
  return mcop::GradedPoset(std::move(p));
}

// Weyl dimension for gl_n with a weakly decreasing highest weight.
inline Rat weyl_gl(const std::vector<long>& lambda) {
  Rat num = 1, den = 1;
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

// Weyl dimension for sp_{2n} with a dominant highest weight (λ_1 >= ... >= λ_n >= 0).
inline Rat weyl_sp(const std::vector<long>& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<long> rho(n), l(n);
  for (int i = 0; i < n; ++i) {
    rho[i] = n - i;
    l[i] = lambda[i] + rho[i];
  }
  Rat r = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      r *= Rat((l[i] - l[j]) * (l[i] + l[j])) / Rat((rho[i] - rho[j]) * (rho[i] + rho[j]));
    r *= Rat(l[i]) / Rat(rho[i]);
  }
  return r;
}

// Integer points of the k-dilated marked order polytope: assignments to the unmarked
// elements inside the marking range that are monotone along every cover.
inline std::uint64_t order_polytope_count(const mcop::MarkedPoset& p, long k) {
  long lo = 0, hi = 0;
  bool first = true;
  std::vector<int> free;
  std::vector<long> val(p.size(), 0);
  for (int e = 0; e < p.size(); ++e) {
    if (!p.marked(e)) {
      free.push_back(e);
      continue;
    }
    long v = p.lambda(e).convert_to<long>() * k;
    val[e] = v;
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }
  std::uint64_t count = 0;
  std::vector<long> x(free.size(), lo);
  while (true) {
    for (std::size_t c = 0; c < free.size(); ++c) val[free[c]] = x[c];
    bool ok = true;
    for (const auto& [a, b] : p.covers()) ok = ok && val[a] <= val[b];
    if (ok) ++count;
    std::size_t c = 0;
    while (c < x.size() && x[c] == hi) x[c++] = lo;
    if (c == x.size()) break;
    ++x[c];
  }
  return count;
}

// Vector over the coordinates of g given by coordinate name.
inline mcop::RatVec by_name(const mcop::GradedPoset& g, const std::map<std::string, Rat>& v) {
  mcop::RatVec out(g.dim(), Rat(0));
  for (const auto& [name, value] : v) out[g.coord_of(name)] = value;
  return out;
}

}  // namespace oracle
