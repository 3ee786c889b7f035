// kcrystal: one command per process, JSON (or DOT) on stdout.
//
//   kcrystal reduce --string -+
//   kcrystal fock-op remove --params '{"ell":1,"kappa":{"num":1,"den":2},"charges":[0]}' \
//       --mp '[[2]]' --class '{"residue":1}'
//   kcrystal verify axioms --n 14

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "kcrystal/cli.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"params", "parameters: inline JSON or path to a JSON file"},
    {"mp", "multipartition JSON, e.g. [[3,1],[]] or {\"components\":[[3,1],[]]}"},
    {"class", "class JSON: {\"residue\":r} or {\"content\":c}"},
    {"string", "sign string over '+' and '-'"},
    {"other", "second sign string (string-op compare)"},
    {"k", "suffix index (string-op suffix-h-minus)"},
    {"z", "graph classes: all, a class JSON, or a list of them"},
    {"max-boxes", "maximum number of boxes"},
    {"format", "graph output: json or dot"},
    {"seed", "random seed"},
    {"ceiling", "resource ceiling (nodes / strings)"},
    {"workers", "worker threads"},
    {"n", "word length or GL rank"},
    {"trials", "random orders per word (verify confluence)"},
    {"lambda", "dominant weight JSON, e.g. [5,4,2]"},
    {"residue", "residue i (gl-op)"},
    {"p", "characteristic: 0 or a prime"},
    {"entry-bound", "entry bound (verify gl_realization)"},
    {"sigma-range", "charge shifts in [-r, r] (verify charge_shift)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal combinatorics of multipartitions and sign strings"};
  app.require_subcommand(1);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> ops;

  for (const auto& name : kcrystal::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    auto& v = values[name];
    sub->add_option("op", ops[name], "sub-operation (fock-op add|remove, verify <suite>, ...)");
    for (const auto& f : kFlags) sub->add_option(std::string("--") + f.name, v[f.name], f.help);
    // Values such as "-+" must not be taken for flags.
    sub->allow_extras(false);
  }
  app.allow_extras(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kcrystal::cli::kUsage;
  }

  for (const auto& name : kcrystal::cli::commands()) {
    if (!app.got_subcommand(name)) continue;
    kcrystal::cli::Request req;
    req.command = name;
    auto* sub = app.get_subcommand(name);
    if (!ops[name].empty()) req.payload["op"] = ops[name];
    for (const auto& f : kFlags) {
      if (sub->count(std::string("--") + f.name) > 0) req.payload[f.name] = values[name][f.name];
    }
    const auto resp = kcrystal::cli::run(req);
    std::cout << resp.output;
    std::cout.flush();
    return resp.exit_code;
  }
  return kcrystal::cli::kUsage;
}
