#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "mcop/acceptance.hpp"
#include "oracles.hpp"

namespace {

using mcop::Rat;

const nlohmann::json* criterion(const nlohmann::json& report, int id) {
  for (const auto& c : report["criteria"])
    if (c["id"] == id) return &c;
  return nullptr;
}

// Expected values recomputed from closed formulas, independent of the library.
std::string oracle_mismatch(int id, const nlohmann::json& values) {
  auto count = [&](const char* key, int k) -> std::uint64_t {
    return values.at(key).at("counts").at(std::to_string(k)).get<std::uint64_t>();
  };
  switch (id) {
    case 1:
      for (int k = 1; k <= 3; ++k)
        if (Rat(count("gtA n=2", k)) != oracle::weyl_gl({4L * k, 2L * k, 0}))
          return "gtA n=2 count differs from the gl3 dimension at k=" + std::to_string(k);
      return "";
    case 2:
      for (int k = 1; k <= 2; ++k)
        if (Rat(count("gtC n=2", k)) != oracle::weyl_sp({4L * k, 2L * k}))
          return "gtC n=2 count differs from the sp4 dimension at k=" + std::to_string(k);
      if (values.contains("gtC n=3") && Rat(count("gtC n=3", 1)) != oracle::weyl_sp({6, 4, 2}))
        return "gtC n=3 count differs from the sp6 dimension";
      return "";
    case 9:
      for (const auto& row : values.at("gtA n=2"))
        if (Rat(row["dimension"].get<std::uint64_t>()) !=
            oracle::weyl_gl({4L * row["k"].get<int>(), 2L * row["k"].get<int>(), 0}))
          return "gtA n=2 graded dimension differs from the gl3 dimension";
      for (const auto& row : values.at("gtC n=2"))
        if (Rat(row["dimension"].get<std::uint64_t>()) !=
            oracle::weyl_sp({4L * row["k"].get<int>(), 2L * row["k"].get<int>()}))
          return "gtC n=2 graded dimension differs from the sp4 dimension";
      return "";
    case 11:
      for (int n = 1; n <= 4; ++n) {
        if (values.at("counts").at("gtC n=" + std::to_string(n)) != 2 * n * n) return "gtC count differs from 2n^2";
        if (values.at("counts").at("gtA n=" + std::to_string(n)) != n * (n + 1)) return "gtA count differs from n(n+1)";
      }
      if (values.at("sign_vectors_certified") != 4) return "not every sign vector is certified";
      if (values.at("free_variables") != 8) return "gtC n=2 presentation does not leave 8 free variables";
      return "";
    default:
      return "";
  }
}

}  // namespace

int main(int argc, char** argv) {
  mcop::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--profile") == 0 && i + 1 < argc) opt.profile = argv[++i];
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--profile quick|full] [--seed N]\n", argv[0]);
      return 2;
    }
  }
  auto start = std::chrono::steady_clock::now();
  nlohmann::json report = mcop::run_acceptance(opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  for (int id = 1; id <= 14; ++id) {
    const nlohmann::json* c = criterion(report, id);
    if (!c) {
      std::printf("FAIL criterion %d: missing from the report\n", id);
      all = false;
      continue;
    }
    std::string why;
    if (!(*c)["pass"].get<bool>()) {
      for (const auto& chk : (*c)["checks"])
        if (!chk["pass"].get<bool>()) {
          why = chk["name"].get<std::string>();
          break;
        }
      if (why.empty() && c->contains("within_budget")) why = "time budget exceeded";
    } else {
      why = oracle_mismatch(id, (*c)["values"]);
    }
    const bool ok = why.empty();
    all = all && ok;
    std::printf("%s criterion %d %s%s%s\n", ok ? "PASS" : "FAIL", id, (*c)["name"].get<std::string>().c_str(),
                ok ? "" : ": ", why.c_str());
  }
  std::printf("profile %s, seed %llu, %.1f s for two runs\n", opt.profile.c_str(),
              static_cast<unsigned long long>(opt.seed), secs);
  return all ? 0 : 1;
}
