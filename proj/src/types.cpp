#include "mcop/types.hpp"

#include <sstream>

namespace mcop {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::Usage: return "USAGE";
    case Errc::NotGraded: return "NOT_GRADED";
    case Errc::NotMonotone: return "NOT_MONOTONE";
    case Errc::BadHasse: return "BAD_HASSE";
    case Errc::Cyclic: return "CYCLIC";
    case Errc::UnmarkedExtreme: return "UNMARKED_EXTREME";
    case Errc::NotRankConstant: return "NOT_RANK_CONSTANT";
    case Errc::SpadeViolation: return "SPADE_VIOLATION";
    case Errc::NoInteriorU: return "NO_INTERIOR_U";
    case Errc::BoxTooLarge: return "BOX_TOO_LARGE";
    case Errc::DimCapExceeded: return "DIM_CAP_EXCEEDED";
    case Errc::Singular: return "SINGULAR";
    case Errc::NotSquare: return "NOT_SQUARE";
    case Errc::EquationFail: return "EQUATION_FAIL";
    case Errc::Unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return Error(Errc::ParseError, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  std::string num = s.substr(0, slash);
  check_int(num);
  if (num[0] == '+') num = num.substr(1);
  if (slash == std::string::npos) return Rat(Int(num));
  std::string den = s.substr(slash + 1);
  check_int(den);
  if (den[0] == '+') den = den.substr(1);
  Int d(den);
  if (d == 0) throw bad();
  return Rat(Int(num), d);
}

Int floor_rat(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Int ceil_rat(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  ++draws_;
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(engine_);
}

}  // namespace mcop
