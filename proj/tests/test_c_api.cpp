#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mcop/mcop.h"

namespace {

struct Run {
  mcop_status status;
  int pass;
  nlohmann::json report;
};

Run run(const mcop_poset* poset, std::initializer_list<std::pair<const char*, const char*>> opts) {
  mcop_options* o = mcop_options_new();
  for (const auto& [k, v] : opts) REQUIRE(mcop_options_set_string(o, k, v) == MCOP_OK);
  char* out = nullptr;
  int pass = -1;
  mcop_status st = mcop_run(poset, o, &out, &pass);
  Run r{st, pass, out ? nlohmann::json::parse(out) : nlohmann::json()};
  mcop_string_free(out);
  mcop_options_free(o);
  return r;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(mcop_version()) == "1.0.0");
  CHECK(std::string(mcop_status_name(MCOP_OK)) == "OK");
  CHECK(std::string(mcop_status_name(MCOP_ERR_SPADE_VIOLATION)) == "SPADE_VIOLATION");
  CHECK(std::string(mcop_status_name(MCOP_ERR_UNSUPPORTED)) == "UNSUPPORTED");
  CHECK(std::string(mcop_status_name(MCOP_ERR_INTERNAL)) == "INTERNAL");
}

TEST_CASE("validate a builder family") {
  Run r = run(nullptr, {{"command", "validate"}, {"family", "gtA"}, {"n", "2"}, {"lambda", "0,2,4"}});
  REQUIRE(r.status == MCOP_OK);
  CHECK(r.pass == 1);
  CHECK(r.report["tool"] == "mcop");
  CHECK(r.report["config"]["family"] == "gtA");
  CHECK(r.report["result"]["rank"]["q31"] == 3);
  CHECK(r.report["repro"] == "mcop validate --family gtA --lambda 0,2,4 --n 2");
}

TEST_CASE("hilbert table through the C interface") {
  Run r = run(nullptr, {{"command", "hilbert"}, {"family", "gtA"}, {"n", "2"}, {"lambda", "0,2,4"}, {"kmax", "1"}});
  REQUIRE(r.status == MCOP_OK);
  CHECK(r.pass == 1);
  const auto& row = r.report["result"]["table"][1];
  CHECK(row["dimension"] == 27);
  CHECK(row["charts"].size() == 8);
  for (const auto& [chart, count] : row["charts"].items()) CHECK(count == 27);
}

TEST_CASE("cox counts through the C interface") {
  Run r = run(nullptr, {{"command", "cox"}, {"family", "gtC"}, {"n", "3"}, {"emit", "counts"}});
  REQUIRE(r.status == MCOP_OK);
  CHECK(r.report["result"]["counts"]["variables"] == 18);
}

TEST_CASE("posets from json and families") {
  mcop_poset* p = nullptr;
  REQUIRE(mcop_poset_from_family("gtC", 2, "2,4", &p) == MCOP_OK);
  char* text = nullptr;
  REQUIRE(mcop_poset_to_json(p, &text) == MCOP_OK);
  mcop_poset* q = nullptr;
  REQUIRE(mcop_poset_from_json(text, &q) == MCOP_OK);
  mcop_string_free(text);
  Run r = run(q, {{"command", "polytope"}, {"chart", "q11,q21"}, {"emit", "count"}});
  REQUIRE(r.status == MCOP_OK);
  CHECK(r.report["result"]["count"] == 81);
  CHECK(r.report["result"]["poset"]["family"] == "gtC");
  mcop_poset_free(p);
  mcop_poset_free(q);
}

TEST_CASE("errors carry codes and messages") {
  mcop_poset* p = nullptr;
  CHECK(mcop_poset_from_json("{not json", &p) == MCOP_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(mcop_last_error()).size() > 0);
  CHECK(mcop_poset_from_family("gtZ", 2, nullptr, &p) != MCOP_OK);

  Run usage = run(nullptr, {{"command", "polytope"}});
  CHECK(usage.status == MCOP_ERR_USAGE);
  CHECK(usage.report["error"]["code"] == "USAGE");

  const char* fan = R"({"elements":["bot","a","b","c","p","top"],"marked":{"bot":0,"top":2},
    "covers":[["bot","a"],["bot","b"],["bot","c"],["a","p"],["b","p"],["c","p"],["p","top"]]})";
  REQUIRE(mcop_poset_from_json(fan, &p) == MCOP_OK);
  Run cls = run(p, {{"command", "classify"}});
  REQUIRE(cls.status == MCOP_OK);
  CHECK(cls.pass == 0);
  Run val = run(p, {{"command", "valcheck"}});
  CHECK(val.status == MCOP_ERR_SPADE_VIOLATION);
  CHECK(val.report["pass"] == false);
  CHECK(val.report["repro"] == "mcop valcheck");
  mcop_poset_free(p);
}

TEST_CASE("lambda override on a supplied poset") {
  mcop_poset* p = nullptr;
  REQUIRE(mcop_poset_from_family("gtA", 2, "0,2,4", &p) == MCOP_OK);
  Run r = run(p, {{"command", "polytope"}, {"lambda", "0,1,2"}, {"emit", "count"}});
  REQUIRE(r.status == MCOP_OK);
  CHECK(r.report["result"]["count"] == 8);
  mcop_poset_free(p);
}

TEST_CASE("null arguments are rejected") {
  CHECK(mcop_options_set_string(nullptr, "a", "b") == MCOP_ERR_USAGE);
  CHECK(mcop_poset_from_json(nullptr, nullptr) == MCOP_ERR_USAGE);
  mcop_poset_free(nullptr);
  mcop_options_free(nullptr);
  mcop_string_free(nullptr);
}
