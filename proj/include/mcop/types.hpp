#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mcop {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

enum class Errc {
  ParseError,
  Usage,
  NotGraded,
  NotMonotone,
  BadHasse,
  Cyclic,
  UnmarkedExtreme,
  NotRankConstant,
  SpadeViolation,
  NoInteriorU,
  BoxTooLarge,
  DimCapExceeded,
  Singular,
  NotSquare,
  EquationFail,
  Unsupported,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);
Rat parse_rat(std::string_view text);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
bool is_integer(const Rat& r);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& a);
std::string vec_str(const RatVec& v);

// Seeded generator; every stream is a pure function of (seed, stream id).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace mcop
