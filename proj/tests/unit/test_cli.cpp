#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include <nlohmann/json.hpp>

#include "kcrystal/cli.hpp"
#include "kcrystal/serialization.hpp"

using nlohmann::json;
using namespace kcrystal;

namespace {

const json kHalf = {{"ell", 1}, {"kappa", {{"num", 1}, {"den", 2}}}, {"charges", {0}}};

cli::Response call(const std::string& command, json payload) {
  return cli::run({command, std::move(payload)});
}

json body(const cli::Response& r) { return json::parse(r.output); }

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST_CASE("reduce") {
  const auto r = call("reduce", {{"string", "-+"}});
  CHECK(r.exit_code == cli::kOk);
  CHECK(body(r) == json{{"reduced", "00"}, {"h_plus", 0}, {"h_minus", 0}, {"weight", 0}});
  CHECK(r.output.back() == '\n');
}

TEST_CASE("fock-op remove") {
  const auto r = call("fock-op", {{"op", "remove"}, {"params", kHalf.dump()}, {"mp", "[[2]]"},
                                  {"class", R"({"residue":1})"}});
  CHECK(r.exit_code == cli::kOk);
  CHECK(body(r) == json{{"result", {{1}}}, {"box", {{"c", 0}, {"row", 1}, {"col", 2}}}});
}

TEST_CASE("fock-op add absent") {
  const auto r = call("fock-op", {{"op", "add"}, {"params", kHalf}, {"mp", {{1, 1}}}, {"class", {{"residue", 1}}}});
  CHECK(r.exit_code == cli::kOk);
  CHECK(body(r)["result"].is_null());
}

TEST_CASE("verify axioms") {
  const auto r = call("verify", {{"op", "axioms"}, {"n", 14}});
  CHECK(r.exit_code == cli::kOk);
  CHECK(body(r)["pass"] == true);
}

TEST_CASE("boundary output shape") {
  const auto r = call("boundary", {{"params", kHalf}, {"mp", {{2}}}, {"class", {{"residue", 1}}}});
  REQUIRE(r.exit_code == cli::kOk);
  const auto b = body(r);
  CHECK(b["sign"] == "+-");
  CHECK(b["class"] == json{{"residue", 1}});
  REQUIRE(b["entries"].size() == 2);
  CHECK(b["entries"][0]["kind"] == "addable");
  CHECK(b["entries"][0]["sign"] == "+");
  CHECK(b["entries"][1]["kind"] == "removable");
}

TEST_CASE("string-op") {
  CHECK(body(call("string-op", {{"op", "e"}, {"string", "-++"}})) == json{{"result", "-+-"}, {"index", 3}});
  CHECK(body(call("string-op", {{"op", "f"}, {"string", "++"}}))["result"].is_null());
  CHECK(body(call("string-op", {{"op", "compare"}, {"string", "-+"}, {"other", "++"}}))["order"] == "greater");
  CHECK(body(call("string-op", {{"op", "suffix-h-minus"}, {"string", "-+-"}, {"k", 2}}))["h_minus"] == 1);
}

TEST_CASE("depth and support") {
  const json irr = {{"ell", 2}, {"kappa", "irrational"}, {"charges", {0, 1}}};
  CHECK(body(call("depth", {{"params", irr}, {"mp", {{1}, json::array()}}}))["depth"] == 1);
  const auto s = body(call("support", {{"params", kHalf}, {"mp", {{1, 1}}}}));
  CHECK(s["j"] == "UNDETERMINED");
  CHECK(s["j_range"] == json{0, 1});
}

TEST_CASE("graph formats") {
  const auto j = call("graph", {{"params", kHalf}, {"max-boxes", 2}});
  REQUIRE(j.exit_code == cli::kOk);
  CHECK(body(j)["edges"].size() == 2);
  const auto d = call("graph", {{"params", kHalf}, {"max-boxes", 2}, {"format", "dot"}});
  REQUIRE(d.exit_code == cli::kOk);
  CHECK(d.output.rfind("digraph", 0) == 0);
  CHECK(d.output.find("z=1, box=(0,1,2)") != std::string::npos);
}

TEST_CASE("validation errors exit 2 with a location") {
  auto r = call("fock-op", {{"op", "add"}, {"params", kHalf}, {"mp", "[[1,2]]"}, {"class", {{"residue", 0}}}});
  CHECK(r.exit_code == cli::kValidation);
  CHECK(body(r)["error"]["code"] == "VALIDATION");
  CHECK(body(r)["error"]["location"].get<std::string>().rfind("mp", 0) == 0);

  const json integral = {{"ell", 1}, {"kappa", {{"num", 2}, {"den", 1}}}, {"charges", {0}}};
  r = call("depth", {{"params", integral}, {"mp", {{1}}}});
  CHECK(r.exit_code == cli::kValidation);

  CHECK(call("reduce", {{"string", "+a"}}).exit_code == cli::kValidation);
  CHECK(call("nope", json::object()).exit_code == cli::kValidation);
  CHECK(call("fock-op", {{"op", "twist"}, {"params", kHalf}}).exit_code == cli::kValidation);
  CHECK(call("boundary", {{"params", kHalf}, {"mp", {{1}}}, {"class", {{"residue", 5}}}}).exit_code ==
        cli::kValidation);
  CHECK(call("gl-op", {{"op", "sign"}, {"lambda", {1, 0}}, {"residue", 0}, {"p", 4}}).exit_code ==
        cli::kValidation);
}

TEST_CASE("degenerate GL class exits 3") {
  const auto r = call("gl-op", {{"op", "member"}, {"lambda", {1, 0}}, {"residue", 0}, {"p", 3}, {"string", "++"}});
  CHECK(r.exit_code == cli::kInvariant);
  CHECK(body(r)["error"]["code"] == "DEGENERATE_CLASS");
}

TEST_CASE("resource ceiling exits 4") {
  const auto r = call("graph", {{"params", kHalf}, {"max-boxes", 10}, {"ceiling", 100}});
  CHECK(r.exit_code == cli::kResource);
  CHECK(body(r)["error"]["code"] == "RESOURCE_LIMIT");
  CHECK(call("verify", {{"op", "axioms"}, {"n", 20}}).exit_code == cli::kResource);
}

TEST_CASE("serialization round trips") {
  for (std::size_t ell = 1; ell <= 3; ++ell)
    for (const auto& m : multipartitions_up_to(ell, 5)) {
      REQUIRE(io::multipartition_from_json(io::to_json(m)) == m);
      REQUIRE(io::multipartition_from_json(io::rows_json(m)) == m);
      for (const auto& x : addable_boxes(m)) REQUIRE(io::box_from_json(io::to_json(x)) == x);
    }
  const std::vector<Params> ps = {Params::rational(1, 2, {0}), Params::rational(-5, 7, {3, -1, 0}),
                                  Params::irrational({0, 4}), Params::irrational({1}, 0.25)};
  for (const auto& p : ps) CHECK(io::params_from_json(io::to_json(p)) == p);
  for (const auto& z : {ZClass::residue(0), ZClass::residue(6), ZClass::content(-3)})
    CHECK(io::class_from_json(io::to_json(z)) == z);
}

TEST_CASE("no floats outside the params command; params marks them") {
  const std::vector<std::pair<std::string, json>> requests = {
      {"reduce", {{"string", "+-+--"}}},
      {"boundary", {{"params", kHalf}, {"mp", {{3, 1}}}, {"class", {{"residue", 0}}}}},
      {"kgroup", {{"params", kHalf}, {"mp", {{3, 1}}}, {"class", {{"residue", 0}}}}},
      {"class-member", {{"params", kHalf}, {"mp", {{2}}}, {"class", {{"residue", 1}}}, {"string", "--"}}},
      {"support", {{"params", kHalf}, {"mp", {{2, 1}}}}},
      {"graph", {{"params", kHalf}, {"max-boxes", 4}}},
      {"verify", {{"op", "conversions"}, {"params", kHalf}}},
      {"gl-op", {{"op", "remove"}, {"lambda", {5, 4, 2}}, {"residue", 1}, {"p", 3}}},
  };
  for (const auto& [cmd, payload] : requests) {
    const auto r = call(cmd, payload);
    INFO(cmd << " -> " << r.output);
    REQUIRE(r.exit_code == cli::kOk);
    CHECK_FALSE(has_float(body(r)));
  }
  const auto p = body(call("params", {{"params", kHalf}}));
  CHECK(p["approx"] == true);
  CHECK(p["c0_exact"] == json{{"num", -1}, {"den", 2}});
  CHECK(p["e"] == 2);
}

TEST_CASE("identical requests give identical output") {
  const json payload = {{"op", "confluence"}, {"n", 6}, {"trials", 5}, {"seed", 42}};
  CHECK(call("verify", payload).output == call("verify", payload).output);
  const json g = {{"params", kHalf}, {"max-boxes", 6}, {"workers", 4}};
  const json g1 = {{"params", kHalf}, {"max-boxes", 6}, {"workers", 1}};
  CHECK(call("graph", g).output == call("graph", g1).output);
}
