#pragma once

// One request in, one document out. The kcrystal executable is a thin flag
// parser around run().

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kcrystal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kInvariant = 3,
  kResource = 4,
};

// Commands: reduce, string-op, boundary, fock-op, kgroup, class-member,
// gl-op, depth, support, graph, verify, params.
//
// payload holds the command's arguments keyed by flag name without dashes
// ("params", "mp", "class", "string", "z", "max-boxes", "format", "seed",
// "ceiling", ...) plus "op" for the positional sub-operation. JSON-valued
// flags may be given as JSON text; "params" may also be a file path.
struct Request {
  std::string command;
  nlohmann::json payload = nlohmann::json::object();
};

struct Response {
  int exit_code = kOk;
  std::string output;  // one JSON document (or DOT), newline-terminated
};

const std::vector<std::string>& commands();

Response run(const Request& request);

}  // namespace kcrystal::cli
