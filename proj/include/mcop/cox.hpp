#pragma once

#include <string>
#include <vector>

#include "mcop/marked_poset.hpp"
#include "mcop/polyptych.hpp"
#include "mcop/report.hpp"

namespace mcop {

struct CoxCounts {
  int U = 0;
  int L = 0;
  int variables = 0;
  std::vector<int> per_level;
  nlohmann::json to_json() const;
};

CoxCounts cox_counts(const GradedPoset& p);

// Divisor functionals in r-coordinate order: INNER points, then CORNER points.
std::vector<StructuralPoint> divisor_points(const GradedPoset& p);

struct CoxGenerator {
  std::string name;
  RatVec x, r;
};

struct SemigroupGenerators {
  std::vector<int> signs;  // indexed like DualStructure::interior()
  std::vector<CoxGenerator> gens;
  RatMat transform;  // rows act on (x, r)
  nlohmann::json to_json(const GradedPoset& p) const;
};

SemigroupGenerators semigroup_generators(const DualStructure& ds, const std::vector<int>& signs);
// Unimodularity, unit-vector correspondence, membership and the ±v / f-pair identities.
Report verify_semigroup_generators(const DualStructure& ds, const SemigroupGenerators& sg, Rng& rng,
                                   int samples = 200, std::int64_t radius = 3);

struct CoxPresentation {
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::string>> eliminations;  // t = expression
  std::vector<std::pair<std::string, std::string>> identifications;  // unit Z = corner t
  std::vector<std::string> free_variables;
  nlohmann::json to_json() const;
};

// UNSUPPORTED outside the builder families or when a unit lacks a unique marked upper cover.
CoxPresentation cox_presentation(const GradedPoset& p);
Report verify_cox_presentation(const GradedPoset& p, const CoxPresentation& cp);

// ord_D(X_u) = φ_D(ν(X_u)) for each unit u against the GT exponent pattern.
Report eta_unit_check(const GradedPoset& p);

}  // namespace mcop
