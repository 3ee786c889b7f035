#include "kcrystal/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "kcrystal/crystal_engine.hpp"
#include "kcrystal/error.hpp"
#include "kcrystal/realizations.hpp"
#include "kcrystal/serialization.hpp"
#include "kcrystal/sign_crystal.hpp"
#include "kcrystal/verify.hpp"

namespace kcrystal::cli {

using nlohmann::json;

namespace {

class Args {
 public:
  explicit Args(const json& payload) : payload_(payload) {
    if (!payload_.is_object()) throw ValidationError("request payload must be an object", "payload");
  }

  bool has(const std::string& key) const { return payload_.contains(key) && !payload_[key].is_null(); }

  // Value of a JSON-typed flag; string values are parsed as JSON text.
  json value(const std::string& key) const {
    if (!has(key)) throw ValidationError("missing --" + key, key);
    const json& v = payload_[key];
    if (!v.is_string()) return v;
    try {
      return json::parse(v.get<std::string>());
    } catch (const json::parse_error&) {
      throw ValidationError("--" + key + " is not valid JSON", key);
    }
  }

  std::string text(const std::string& key) const {
    if (!has(key)) throw ValidationError("missing --" + key, key);
    const json& v = payload_[key];
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }

  long integer(const std::string& key) const {
    const json v = value(key);
    if (!v.is_number_integer()) throw ValidationError("--" + key + " must be an integer", key);
    return v.get<long>();
  }

  long integer_or(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  long nonnegative(const std::string& key) const {
    const long v = integer(key);
    if (v < 0) throw ValidationError("--" + key + " must be nonnegative", key);
    return v;
  }

  long nonnegative_or(const std::string& key, long fallback) const {
    return has(key) ? nonnegative(key) : fallback;
  }

  Params params() const {
    if (!has("params")) throw ValidationError("missing --params", "params");
    const json& v = payload_["params"];
    if (!v.is_string()) return io::params_from_json(v);
    const std::string s = v.get<std::string>();
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && s[first] == '{') return io::params_from_json(value("params"));
    std::ifstream in(s);
    if (!in) throw ValidationError("cannot read params file '" + s + "'", "params");
    json parsed;
    try {
      parsed = json::parse(in);
    } catch (const json::parse_error&) {
      throw ValidationError("params file '" + s + "' is not valid JSON", "params");
    }
    return io::params_from_json(parsed);
  }

  // Runs a parser on the flag's value, reporting errors at that flag.
  template <class Parse>
  auto parsed(const std::string& key, Parse parse) const {
    const json v = value(key);
    try {
      return parse(v);
    } catch (const ValidationError& err) {
      const auto& loc = err.location();
      const auto cut = loc.find_first_of(".[");
      throw ValidationError(err.what(), cut == std::string::npos ? key : key + loc.substr(cut));
    }
  }

  Multipartition mp(const Params& p) const {
    auto m = parsed("mp", io::multipartition_from_json);
    if (m.level() != p.ell())
      throw ValidationError("multipartition has " + std::to_string(m.level()) +
                                " components but ell = " + std::to_string(p.ell()),
                            "mp");
    return m;
  }

  ZClass cls(const Params& p) const {
    const auto z = parsed("class", io::class_from_json);
    check_class(p, z);
    return z;
  }

  SignString sign(const std::string& key = "string") const {
    if (!has(key)) throw ValidationError("missing --" + key, key);
    const json& v = payload_[key];
    if (!v.is_string()) throw ValidationError("--" + key + " must be a word over '+' and '-'", key);
    return SignString::parse(v.get<std::string>());
  }

  std::string op() const { return text_or("op", ""); }

 private:
  const json& payload_;
};

std::string require_op(const Args& a, std::initializer_list<const char*> allowed) {
  const std::string op = a.op();
  std::string list;
  for (const char* s : allowed) {
    if (op == s) return op;
    list += list.empty() ? s : std::string("|") + s;
  }
  throw ValidationError("operation must be one of " + list, "op");
}

json move_json(const std::optional<BoxMove>& m) {
  if (!m) return {{"result", nullptr}};
  return {{"result", io::rows_json(m->result)}, {"box", io::to_json(m->box)}};
}

json flip_json(const std::optional<Flip>& f) {
  if (!f) return {{"result", nullptr}};
  return {{"result", f->result.str()}, {"index", f->index}};
}

json flips_json(const std::vector<Flip>& flips) {
  json out = json::array();
  for (const auto& f : flips) out.push_back({{"index", f.index}, {"result", f.result.str()}});
  return out;
}

json cmd_reduce(const Args& a) {
  const auto t = a.sign();
  return {{"reduced", reduce(t).str()},
          {"h_plus", h_plus(t)},
          {"h_minus", h_minus(t)},
          {"weight", weight(t)}};
}

json cmd_string_op(const Args& a) {
  const auto op =
      require_op(a, {"e", "f", "plus-flips", "minus-flips", "suffix-h-minus", "compare"});
  const auto t = a.sign();
  if (op == "e") return flip_json(e_tilde(t));
  if (op == "f") return flip_json(f_tilde(t));
  if (op == "plus-flips") return {{"flips", flips_json(plus_flips(t))}};
  if (op == "minus-flips") return {{"flips", flips_json(minus_flips(t))}};
  if (op == "suffix-h-minus") {
    const long k = a.integer("k");
    if (k < 1) throw ValidationError("--k must satisfy 1 <= k <= n+1", "k");
    return {{"k", k}, {"h_minus", suffix_h_minus(t, static_cast<std::size_t>(k))}};
  }
  const auto other = a.sign("other");
  const auto c = succ_compare(t, other);
  const char* rel = c == std::strong_ordering::greater ? "greater"
                    : c == std::strong_ordering::less  ? "less"
                                                       : "equal";
  return {{"order", rel}};
}

json cmd_boundary(const Args& a) {
  const auto p = a.params();
  const auto m = a.mp(p);
  const auto z = a.cls(p);
  return io::to_json(boundary(p, m, z));
}

json cmd_fock_op(const Args& a) {
  const auto op = require_op(a, {"add", "remove"});
  const auto p = a.params();
  const auto m = a.mp(p);
  const auto z = a.cls(p);
  return move_json(op == "add" ? crystal_add(p, m, z) : crystal_remove(p, m, z));
}

json cmd_kgroup(const Args& a) {
  const auto p = a.params();
  const auto m = a.mp(p);
  const auto z = a.cls(p);
  json ind = json::array(), res = json::array();
  for (const auto& x : kgroup_induction(p, m, z)) ind.push_back(io::rows_json(x));
  for (const auto& x : kgroup_restriction(p, m, z)) res.push_back(io::rows_json(x));
  return {{"induction", ind}, {"restriction", res}};
}

json cmd_class_member(const Args& a) {
  const auto p = a.params();
  const auto m = a.mp(p);
  const auto z = a.cls(p);
  const auto t = a.sign();
  return {{"result", io::rows_json(class_member(p, m, z, t))},
          {"representative", io::rows_json(class_representative(p, m, z))}};
}

json cmd_gl_op(const Args& a) {
  const auto op = require_op(a, {"add", "remove", "sign", "member"});
  const json lj = a.value("lambda");
  if (!lj.is_array()) throw ValidationError("--lambda must be a list of integers", "lambda");
  std::vector<long> entries;
  for (const auto& v : lj) {
    if (!v.is_number_integer()) throw ValidationError("--lambda must be a list of integers", "lambda");
    entries.push_back(v.get<long>());
  }
  const long p_raw = a.nonnegative_or("p", 0);
  const Characteristic ch(static_cast<int>(p_raw));
  const long i = a.integer("residue");
  if (!ch.is_zero() && (i < 0 || i >= ch.value()))
    throw ValidationError("--residue must lie in [0, p)", "residue");
  const DominantWeight lambda(entries);
  const auto s = gl_sign_string(lambda, i, ch);
  json out = {{"positions", gl_positions(lambda, i, ch)},
              {"sign", s.str()},
              {"reduced", reduce(s).str()}};
  if (op == "sign") return out;
  if (op == "member") {
    out["result"] = gl_class_member(lambda, i, ch, a.sign()).entries();
    return out;
  }
  const auto move = op == "add" ? gl_crystal_add(lambda, i, ch) : gl_crystal_remove(lambda, i, ch);
  if (!move) {
    out["result"] = nullptr;
  } else {
    out["result"] = move->result.entries();
    out["position"] = move->position;
  }
  return out;
}

json cmd_depth(const Args& a) {
  const auto p = a.params();
  const auto m = a.mp(p);
  return {{"depth", depth(p, m)}};
}

json cmd_support(const Args& a) {
  const auto p = a.params();
  const auto m = a.mp(p);
  return io::to_json(support(p, m));
}

json cmd_params(const Args& a) {
  const auto p = a.params();
  json out = io::to_json(p);
  out["e"] = p.e() ? json(*p.e()) : json("infinity");
  if (auto c0 = cyclotomic_c0(p)) out["c0_exact"] = io::to_json(*c0);
  if (p.kappa_value()) {
    auto cplx = [](std::complex<double> z) { return json::array({z.real(), z.imag()}); };
    const auto h = hecke_params(p);
    json Q = json::array();
    for (auto z : h.Q) Q.push_back(cplx(z));
    out["hecke"] = {{"q", cplx(h.q)}, {"Q", Q}};
    json c = json::array();
    for (auto z : cyclotomic_c(p)) c.push_back(cplx(z));
    out["c"] = c;
    out["approx"] = true;
  }
  return out;
}

std::optional<std::vector<ZClass>> graph_classes(const Args& a, const Params& p) {
  const std::string zs = a.text_or("z", "all");
  if (zs == "all") return std::nullopt;
  const json zj = a.value("z");
  std::vector<ZClass> classes;
  if (zj.is_array()) {
    for (const auto& item : zj) classes.push_back(io::class_from_json(item));
  } else {
    classes.push_back(io::class_from_json(zj));
  }
  for (const auto& z : classes) check_class(p, z);
  return classes;
}

unsigned workers_of(const Args& a) {
  const long w = a.nonnegative_or("workers", 1);
  if (w < 1 || w > 256) throw ValidationError("--workers must be in [1, 256]", "workers");
  return static_cast<unsigned>(w);
}

std::string cmd_graph(const Args& a) {
  const auto p = a.params();
  GraphOptions opt;
  opt.max_boxes = static_cast<int>(a.nonnegative("max-boxes"));
  opt.classes = graph_classes(a, p);
  opt.ceiling = static_cast<std::size_t>(a.nonnegative_or("ceiling", static_cast<long>(kDefaultNodeCeiling)));
  opt.workers = workers_of(a);
  const std::string format = a.text_or("format", "json");
  if (format != "json" && format != "dot")
    throw ValidationError("--format must be json or dot", "format");
  const auto g = build_graph(p, opt);
  return format == "dot" ? io::graph_dot(g) : io::graph_json(g).dump() + "\n";
}

json cmd_verify(const Args& a) {
  const auto suite = require_op(a, {"axioms", "confluence", "comb_lemma", "boundary_invariance",
                                    "d_separation", "realization_consistency", "inverse_pairing",
                                    "charge_shift", "depth_irrational", "gl_realization",
                                    "graph_paths", "conversions"});
  verify::Limits lim;
  if (a.has("ceiling")) {
    lim.string_ceiling = static_cast<std::size_t>(a.nonnegative("ceiling"));
    lim.node_ceiling = lim.string_ceiling;
  }
  auto n = [&] { return static_cast<std::size_t>(a.nonnegative("n")); };
  auto max_boxes = [&] { return static_cast<int>(a.nonnegative("max-boxes")); };
  verify::Report r;
  if (suite == "axioms") {
    r = verify::axioms(n(), lim);
  } else if (suite == "confluence") {
    r = verify::confluence(n(), static_cast<std::size_t>(a.nonnegative_or("trials", 100)),
                           static_cast<std::uint64_t>(a.nonnegative_or("seed", 1)), lim);
  } else if (suite == "comb_lemma") {
    r = verify::comb_lemma(n(), lim);
  } else if (suite == "depth_irrational") {
    r = verify::depth_irrational(max_boxes(), lim);
  } else if (suite == "gl_realization") {
    r = verify::gl_realization(n(), static_cast<int>(a.nonnegative_or("p", 0)),
                               static_cast<int>(a.nonnegative("entry-bound")), lim);
  } else {
    const auto p = a.params();
    if (suite == "conversions") {
      r = verify::conversions(p);
    } else if (suite == "boundary_invariance") {
      r = verify::boundary_invariance(p, max_boxes(), lim);
    } else if (suite == "d_separation") {
      r = verify::d_separation(p, max_boxes(), lim);
    } else if (suite == "realization_consistency") {
      r = verify::realization_consistency(p, max_boxes(), lim);
    } else if (suite == "inverse_pairing") {
      r = verify::inverse_pairing(p, max_boxes(), lim);
    } else if (suite == "charge_shift") {
      r = verify::charge_shift(p, max_boxes(), static_cast<int>(a.nonnegative_or("sigma-range", 2)), lim);
    } else {
      r = verify::graph_paths(p, max_boxes(), workers_of(a), lim);
    }
  }
  return io::to_json(r);
}

json error_json(const std::string& code, const std::string& message, const std::string& location) {
  return {{"error", {{"code", code}, {"message", message}, {"location", location}}}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "reduce", "string-op", "boundary", "fock-op", "kgroup", "class-member",
      "gl-op",  "depth",     "support",  "graph",   "verify", "params"};
  return names;
}

Response run(const Request& request) {
  using Handler = std::function<json(const Args&)>;
  static const std::map<std::string, Handler> handlers = {
      {"reduce", cmd_reduce},         {"string-op", cmd_string_op},
      {"boundary", cmd_boundary},     {"fock-op", cmd_fock_op},
      {"kgroup", cmd_kgroup},         {"class-member", cmd_class_member},
      {"gl-op", cmd_gl_op},           {"depth", cmd_depth},
      {"support", cmd_support},       {"verify", cmd_verify},
      {"params", cmd_params},
  };
  try {
    const Args args(request.payload);
    if (request.command == "graph") return {kOk, cmd_graph(args)};
    auto it = handlers.find(request.command);
    if (it == handlers.end())
      throw ValidationError("unknown command '" + request.command + "'", "command");
    json out = it->second(args);
    int code = kOk;
    // A failing verification suite is an invariant violation.
    if (request.command == "verify" && !out.value("pass", true)) code = kInvariant;
    return {code, out.dump() + "\n"};
  } catch (const ValidationError& err) {
    return {kValidation, error_json("VALIDATION", err.what(), err.location()).dump() + "\n"};
  } catch (const DegenerateClass& err) {
    return {kInvariant, error_json("DEGENERATE_CLASS", err.what(), "").dump() + "\n"};
  } catch (const InvariantViolation& err) {
    return {kInvariant, error_json("INVARIANT_VIOLATION", err.what(), "").dump() + "\n"};
  } catch (const ResourceLimitExceeded& err) {
    return {kResource, error_json("RESOURCE_LIMIT", err.what(), "").dump() + "\n"};
  } catch (const json::exception& err) {
    return {kValidation, error_json("VALIDATION", err.what(), "").dump() + "\n"};
  }
}

}  // namespace kcrystal::cli
