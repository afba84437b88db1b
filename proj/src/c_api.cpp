#include "mcop/mcop.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mcop/commands.hpp"

struct mcop_poset {
  mcop::MarkedPoset poset;
};

struct mcop_options {
  mcop::Options values;
};

namespace {

thread_local std::string last_error;

mcop_status status_of(mcop::Errc code) { return static_cast<mcop_status>(static_cast<int>(code) + 1); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
mcop_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const mcop::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return MCOP_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MCOP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MCOP_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mcop_version(void) { return mcop::kVersion; }

const char* mcop_status_name(mcop_status status) {
  if (status == MCOP_OK) return "OK";
  if (status == MCOP_ERR_INTERNAL) return "INTERNAL";
  if (status > MCOP_OK && status < MCOP_ERR_INTERNAL) return mcop::errc_name(static_cast<mcop::Errc>(status - 1));
  return "UNKNOWN";
}

const char* mcop_last_error(void) { return last_error.c_str(); }

mcop_status mcop_poset_from_json(const char* json, mcop_poset** out) {
  return guarded([&] {
    if (!json || !out) throw mcop::Error(mcop::Errc::Usage, "null argument");
    auto j = nlohmann::json::parse(json);
    auto* p = new mcop_poset{mcop::MarkedPoset::from_json(j)};
    p->poset.tag = mcop::recognize_family(p->poset);
    *out = p;
    return MCOP_OK;
  });
}

mcop_status mcop_poset_from_family(const char* family, int n, const char* lambda_csv, mcop_poset** out) {
  return guarded([&] {
    if (!family || !out) throw mcop::Error(mcop::Errc::Usage, "null argument");
    std::vector<mcop::Int> lambda;
    std::string csv = lambda_csv ? lambda_csv : "";
    std::size_t start = 0;
    while (!csv.empty() && start <= csv.size()) {
      std::size_t pos = csv.find(',', start);
      std::string part = csv.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
      mcop::Rat r = mcop::parse_rat(part);
      if (!mcop::is_integer(r)) throw mcop::Error(mcop::Errc::Usage, "marking values must be integers");
      lambda.push_back(numerator(r));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    auto* p = new mcop_poset{mcop::build_family(mcop::parse_family(family), n, lambda)};
    p->poset.tag = mcop::recognize_family(p->poset);
    *out = p;
    return MCOP_OK;
  });
}

mcop_status mcop_poset_to_json(const mcop_poset* poset, char** out) {
  return guarded([&] {
    if (!poset || !out) throw mcop::Error(mcop::Errc::Usage, "null argument");
    *out = dup_string(poset->poset.to_json().dump(2));
    if (!*out) throw std::bad_alloc();
    return MCOP_OK;
  });
}

void mcop_poset_free(mcop_poset* poset) { delete poset; }

mcop_options* mcop_options_new(void) { return new (std::nothrow) mcop_options; }

mcop_status mcop_options_set_string(mcop_options* opts, const char* key, const char* value) {
  return guarded([&] {
    if (!opts || !key || !value) throw mcop::Error(mcop::Errc::Usage, "null argument");
    opts->values[key] = value;
    return MCOP_OK;
  });
}

mcop_status mcop_options_set_int(mcop_options* opts, const char* key, long long value) {
  return guarded([&] {
    if (!opts || !key) throw mcop::Error(mcop::Errc::Usage, "null argument");
    opts->values[key] = std::to_string(value);
    return MCOP_OK;
  });
}

void mcop_options_free(mcop_options* opts) { delete opts; }

mcop_status mcop_run(const mcop_poset* poset, const mcop_options* opts, char** report_json, int* pass) {
  if (report_json) *report_json = nullptr;
  if (pass) *pass = 0;
  const mcop::Options empty;
  const mcop::Options& o = opts ? opts->values : empty;
  nlohmann::json report;
  mcop_status st = guarded([&] {
    if (!opts || !report_json || !pass) throw mcop::Error(mcop::Errc::Usage, "null argument");
    std::optional<mcop::MarkedPoset> given;
    if (poset) given = poset->poset;
    mcop::CommandOutput out = mcop::run_command(given, o);
    report = std::move(out.report);
    *pass = out.pass ? 1 : 0;
    return MCOP_OK;
  });
  if (st != MCOP_OK) {
    std::string msg = last_error;
    try {
      mcop::Errc code = st == MCOP_ERR_INTERNAL ? mcop::Errc::EquationFail : static_cast<mcop::Errc>(st - 1);
      report = mcop::error_report(o, code, msg);
      if (st == MCOP_ERR_INTERNAL) report["error"]["code"] = "INTERNAL";
    } catch (...) {
      return st;
    }
    last_error = msg;
  }
  if (report_json) {
    *report_json = dup_string(mcop::dump_report(report));
    if (!*report_json) {
      last_error = "out of memory";
      return MCOP_ERR_INTERNAL;
    }
  }
  return st;
}

void mcop_string_free(char* s) { std::free(s); }

}  // extern "C"
