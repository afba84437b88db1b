#pragma once

#include <string>

#include "json.hpp"

namespace mcop {

// Ordered list of named pass/fail checks with optional details.
struct Report {
  nlohmann::json checks = nlohmann::json::array();
  bool pass = true;

  bool check(const std::string& name, bool ok, nlohmann::json detail = nullptr) {
    nlohmann::json c = {{"name", name}, {"pass", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    pass = pass && ok;
    return ok;
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (auto c : other.checks) {
      if (!prefix.empty()) c["name"] = prefix + "." + c["name"].get<std::string>();
      checks.push_back(std::move(c));
    }
    pass = pass && other.pass;
  }
};

}  // namespace mcop
