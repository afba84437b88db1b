#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace mcop {

struct AcceptanceOptions {
  std::string profile = "quick";  // quick | full
  std::uint64_t seed = 0;
};

// Criteria 1-13 in order; each entry has id, name, pass and the computed values.
nlohmann::json run_acceptance_criteria(const AcceptanceOptions& opt);
// Criteria 1-13 followed by the determinism criterion (two runs compared byte for byte).
nlohmann::json run_acceptance(const AcceptanceOptions& opt);

}  // namespace mcop
