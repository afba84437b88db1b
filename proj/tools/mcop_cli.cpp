#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcop/mcop.h"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

const std::vector<Flag> kFlags = {
    {"family", "builder family: gtA, gtC, pi1, pi2"},
    {"n", "builder size"},
    {"lambda", "comma-separated integer marking"},
    {"poset", "path to a poset JSON file"},
    {"chart", "comma-separated unmarked element names; empty for the empty chart"},
    {"from", "source chart for mutate"},
    {"to", "target chart for mutate"},
    {"vec", "comma-separated rational vector"},
    {"dilate", "dilation factor k"},
    {"emit", "payload selector"},
    {"seed", "random seed (default 0)"},
    {"samples", "sample count"},
    {"kmax", "largest degree"},
    {"profile", "acceptance profile: quick or full"},
    {"budget", "lattice-point enumeration node budget"},
    {"dim-cap", "largest dimension for vertex and facet conversions"},
};

const std::vector<std::pair<const char*, const char*>> kCommands = {
    {"validate", "check the marked poset axioms"},
    {"classify", "level components and the zigzag relations"},
    {"polytope", "marked chain-order polytope of a chart"},
    {"transfer", "transfer map and the chart bijection table"},
    {"mutate", "mutation between charts and the lattice axioms"},
    {"hilbert", "graded dimensions against chart lattice-point counts"},
    {"dualcheck", "dual lattice, point axioms and the PL polytope"},
    {"valcheck", "valuation, normal form and algebra checks"},
    {"nobody", "chart valuations against dilated polytopes"},
    {"cox", "Cox counts, semigroup generators and presentation"},
    {"acceptance", "run the acceptance suite"},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read poset file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_usage(mcop_status st) { return st == MCOP_ERR_USAGE || st == MCOP_ERR_PARSE; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marked chain-order polytopes and their polyptych lattices"};
  app.set_version_flag("--version", std::string(mcop_version()));
  app.require_subcommand(1);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  for (const auto& [cmd, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd, help);
    for (const auto& f : kFlags) opts[cmd][f.name] = sub->add_option(std::string("--") + f.name, values[cmd][f.name], f.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  mcop_options* options = mcop_options_new();
  mcop_poset* poset = nullptr;
  mcop_options_set_string(options, "command", cmd.c_str());
  for (const auto& f : kFlags)
    if (opts[cmd][f.name]->count() > 0) mcop_options_set_string(options, f.name, values[cmd][f.name].c_str());

  int exit_code = 0;
  if (opts[cmd]["poset"]->count() > 0) {
    std::string text;
    try {
      text = read_file(values[cmd]["poset"]);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      mcop_options_free(options);
      return 2;
    }
    mcop_status st = mcop_poset_from_json(text.c_str(), &poset);
    if (st != MCOP_OK) {
      std::cerr << "error: " << mcop_status_name(st) << ": " << mcop_last_error() << "\n";
      mcop_options_free(options);
      return 2;
    }
  }

  char* report = nullptr;
  int pass = 0;
  mcop_status st = mcop_run(poset, options, &report, &pass);
  if (st == MCOP_OK) {
    std::fputs(report, stdout);
    exit_code = pass ? 0 : 1;
  } else if (is_usage(st)) {
    std::cerr << "error: " << mcop_status_name(st) << ": " << mcop_last_error() << "\n";
    exit_code = 2;
  } else {
    if (report) std::fputs(report, stdout);
    std::cerr << "error: " << mcop_status_name(st) << ": " << mcop_last_error() << "\n";
    exit_code = 1;
  }
  mcop_string_free(report);
  mcop_poset_free(poset);
  mcop_options_free(options);
  return exit_code;
}
