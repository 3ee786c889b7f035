#include "kcrystal/serialization.hpp"

#include <limits>
#include <sstream>

#include "kcrystal/error.hpp"

namespace kcrystal::io {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& where) {
  throw ValidationError(what, where);
}

long get_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad("expected an integer", where);
  return j.get<long>();
}

int get_int(const json& j, const std::string& where) {
  const long v = get_integer(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    bad("integer out of range", where);
  return static_cast<int>(v);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"", where);
  return *it;
}

}  // namespace

json rows_json(const Multipartition& m) { return m.rows(); }

json to_json(const Multipartition& m) { return {{"components", rows_json(m)}}; }

Multipartition multipartition_from_json(const json& j) {
  const json& comps = j.is_object() ? field(j, "components", "multipartition") : j;
  if (!comps.is_array() || comps.empty())
    bad("expected a non-empty list of components", "multipartition");
  std::vector<Partition> parts;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "multipartition.components[" + std::to_string(i) + "]";
    if (!comps[i].is_array()) bad("expected a list of row lengths", where);
    std::vector<int> rows;
    for (std::size_t k = 0; k < comps[i].size(); ++k)
      rows.push_back(get_int(comps[i][k], where + "[" + std::to_string(k) + "]"));
    try {
      parts.emplace_back(std::move(rows));
    } catch (const ValidationError& err) {
      bad(err.what(), where);
    }
  }
  return Multipartition(std::move(parts));
}

json to_json(const BoxRef& x) { return {{"c", x.component}, {"row", x.row}, {"col", x.col}}; }

BoxRef box_from_json(const json& j) {
  BoxRef x{get_int(field(j, "c", "box"), "box.c"), get_int(field(j, "row", "box"), "box.row"),
           get_int(field(j, "col", "box"), "box.col")};
  if (x.component < 0 || x.row < 1 || x.col < 1) bad("box needs c >= 0, row >= 1, col >= 1", "box");
  return x;
}

json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json to_json(const Params& p) {
  json out = {{"ell", p.ell()}, {"charges", p.charges()}};
  if (p.kappa())
    out["kappa"] = to_json(*p.kappa());
  else
    out["kappa"] = "irrational";
  if (p.kappa_approx()) out["kappa_approx"] = *p.kappa_approx();
  return out;
}

Params params_from_json(const json& j) {
  if (!j.is_object()) bad("expected an object", "params");
  const json& cj = field(j, "charges", "params");
  if (!cj.is_array()) bad("expected a list of integers", "params.charges");
  std::vector<int> charges;
  for (std::size_t i = 0; i < cj.size(); ++i)
    charges.push_back(get_int(cj[i], "params.charges[" + std::to_string(i) + "]"));
  if (auto it = j.find("ell"); it != j.end()) {
    const long ell = get_integer(*it, "params.ell");
    if (ell < 1) bad("ell must be at least 1", "params.ell");
    if (static_cast<std::size_t>(ell) != charges.size())
      bad("ell does not match the number of charges", "params.ell");
  }
  const json& kj = field(j, "kappa", "params");
  if (kj.is_string()) {
    if (kj.get<std::string>() != "irrational")
      bad("kappa must be {\"num\",\"den\"} or \"irrational\"", "params.kappa");
    std::optional<double> approx;
    if (auto it = j.find("kappa_approx"); it != j.end()) {
      if (!it->is_number()) bad("expected a number", "params.kappa_approx");
      approx = it->get<double>();
    }
    return Params::irrational(std::move(charges), approx);
  }
  const long num = get_integer(field(kj, "num", "params.kappa"), "params.kappa.num");
  const long den = get_integer(field(kj, "den", "params.kappa"), "params.kappa.den");
  try {
    return Params::rational(num, den, std::move(charges));
  } catch (const ValidationError& err) {
    bad(err.what(), "params.kappa");
  }
}

json to_json(const ZClass& z) {
  return z.kind == ZClass::Kind::Residue ? json{{"residue", z.value}} : json{{"content", z.value}};
}

ZClass class_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) bad("expected {\"residue\": r} or {\"content\": c}", "class");
  if (auto it = j.find("residue"); it != j.end())
    return ZClass::residue(get_integer(*it, "class.residue"));
  if (auto it = j.find("content"); it != j.end())
    return ZClass::content(get_integer(*it, "class.content"));
  bad("expected {\"residue\": r} or {\"content\": c}", "class");
}

json to_json(const ZBoundary& b) {
  json entries = json::array();
  for (const auto& e : b.entries) {
    entries.push_back({{"box", to_json(e.box)},
                       {"kind", e.kind == BoxKind::Addable ? "addable" : "removable"},
                       {"sign", std::string(1, static_cast<char>(e.sign()))},
                       {"d", {{"kappa_coeff", e.d.kappa_coeff}, {"const", e.d.constant}}}});
  }
  return {{"class", to_json(b.cls)}, {"entries", entries}, {"sign", b.sign().str()}};
}

json to_json(const SupportDescriptor& s) {
  json out = {{"n", s.n}, {"depth_i", s.depth_i}};
  out["e"] = s.e ? json(*s.e) : json("infinity");
  if (s.j) {
    out["j"] = *s.j;
    out["determined"] = true;
  } else {
    out["j"] = "UNDETERMINED";
    out["determined"] = false;
    out["j_range"] = {0, s.j_max};
  }
  out["finite_dimensional"] = s.finite_dimensional();
  return out;
}

json to_json(const verify::Report& r) {
  json out = {{"suite", r.suite}, {"bounds", r.bounds}, {"pass", r.pass}, {"checked", r.checked}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

json graph_json(const CrystalGraph& g) {
  json nodes = json::array();
  for (const auto& m : g.nodes) nodes.push_back(rows_json(m));
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"class", to_json(e.cls)},
                     {"box", to_json(e.box)}});
  return {{"nodes", nodes}, {"edges", edges}};
}

std::string graph_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << rows_json(g.nodes[i]).dump() << "\"];\n";
  for (const auto& e : g.edges) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"z=" << e.cls.value
       << ", box=(" << e.box.component << "," << e.box.row << "," << e.box.col << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kcrystal::io
