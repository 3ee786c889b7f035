#pragma once

// JSON and DOT encodings of the library's values.
//
//   Multipartition  {"components": [[3,1],[]]}   (a bare [[3,1],[]] is also accepted)
//   BoxRef          {"c":0, "row":2, "col":1}
//   Params          {"ell":2, "kappa":{"num":1,"den":3}, "charges":[0,1]}
//                   {"ell":1, "kappa":"irrational", "charges":[0], "kappa_approx":0.414}
//   ZClass          {"residue": r} | {"content": c}
//
// Every parser throws ValidationError naming the offending location.

#include <string>

#include <nlohmann/json.hpp>

#include "kcrystal/charged_params.hpp"
#include "kcrystal/crystal_engine.hpp"
#include "kcrystal/realizations.hpp"
#include "kcrystal/verify.hpp"
#include "kcrystal/young.hpp"

namespace kcrystal::io {

using nlohmann::json;

json to_json(const Multipartition& m);
// Bare list-of-lists form, used inside larger outputs.
json rows_json(const Multipartition& m);
Multipartition multipartition_from_json(const json& j);

json to_json(const BoxRef& x);
BoxRef box_from_json(const json& j);

json to_json(const Params& p);
Params params_from_json(const json& j);

json to_json(const ZClass& z);
ZClass class_from_json(const json& j);

json to_json(const Rational& r);

json to_json(const ZBoundary& b);
json to_json(const SupportDescriptor& s);
json to_json(const verify::Report& r);

json graph_json(const CrystalGraph& g);
std::string graph_dot(const CrystalGraph& g);

}  // namespace kcrystal::io
