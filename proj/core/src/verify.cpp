#include "kcrystal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "kcrystal/error.hpp"
#include "kcrystal/realizations.hpp"
#include "kcrystal/sign_crystal.hpp"
#include "kcrystal_oracle/naive.hpp"

namespace kcrystal::verify {

namespace {

void guard_strings(std::size_t n, const Limits& lim) {
  if (n >= 63 || (std::size_t{1} << n) > lim.string_ceiling)
    throw ResourceLimitExceeded("2^" + std::to_string(n) + " sign strings exceed the ceiling of " +
                                std::to_string(lim.string_ceiling));
}

std::vector<Multipartition> sweep(const Params& p, int max_boxes, const Limits& lim) {
  if (max_boxes < 0) throw ValidationError("max_boxes must be nonnegative", "max-boxes");
  if (count_multipartitions_up_to(p.ell(), max_boxes) > lim.node_ceiling)
    throw ResourceLimitExceeded("multipartition sweep exceeds the node ceiling");
  return multipartitions_up_to(p.ell(), max_boxes);
}

Report make(std::string suite, nlohmann::json bounds) {
  Report r;
  r.suite = std::move(suite);
  r.bounds = std::move(bounds);
  return r;
}

Report& fail(Report& r, const std::string& what) {
  r.pass = false;
  r.counterexample = what;
  return r;
}

nlohmann::json params_json(const Params& p) {
  nlohmann::json k;
  if (p.kappa())
    k = {{"num", p.kappa()->numerator()}, {"den", p.kappa()->denominator()}};
  else
    k = "irrational";
  return {{"ell", p.ell()}, {"kappa", k}, {"charges", p.charges()}};
}

std::string box_str(const BoxRef& x) {
  std::ostringstream os;
  os << "(" << x.component << "," << x.row << "," << x.col << ")";
  return os.str();
}

std::string at(const Params& p, const Multipartition& m, const ZClass& z) {
  return p.str() + ", m=" + m.str() + ", " + z.str();
}

kcrystal_oracle::Params oracle_params(const Params& p) {
  kcrystal_oracle::Params o;
  o.irrational = p.is_irrational();
  if (p.kappa()) {
    o.num = p.kappa()->numerator();
    o.den = p.kappa()->denominator();
  }
  o.charges = p.charges();
  return o;
}

}  // namespace

Report axioms(std::size_t n, const Limits& lim) {
  guard_strings(n, lim);
  Report r = make("axioms", {{"n", n}});
  for (const auto& t : all_sign_strings(n)) {
    const auto hp = static_cast<long>(h_plus(t));
    const auto hm = static_cast<long>(h_minus(t));
    const long minus = static_cast<long>(std::count(t.symbols().begin(), t.symbols().end(), Sign::Minus));
    const long plus = static_cast<long>(t.size()) - minus;
    ++r.checked;
    if (weight(t) != hm - hp || weight(t) != minus - plus)
      return fail(r, "(i) weight mismatch at " + t.str());
    const auto e = e_tilde(t);
    const auto f = f_tilde(t);
    if (e.has_value() != (hp > 0)) return fail(r, "(ii) e_tilde domain at " + t.str());
    if (f.has_value() != (hm > 0)) return fail(r, "(ii) f_tilde domain at " + t.str());
    if (e) {
      const auto back = f_tilde(e->result);
      if (!back || back->result != t) return fail(r, "(iii) f(e(t)) != t at " + t.str());
      if (static_cast<long>(h_plus(e->result)) != hp - 1 ||
          static_cast<long>(h_minus(e->result)) != hm + 1)
        return fail(r, "(iv) e_tilde statistics at " + t.str());
      if (weight(e->result) != weight(t) + 2) return fail(r, "weight shift at " + t.str());
      if (t.at(e->index) != Sign::Plus) return fail(r, "e_tilde flipped a '-' at " + t.str());
    }
    if (f) {
      const auto back = e_tilde(f->result);
      if (!back || back->result != t) return fail(r, "(iii) e(f(t)) != t at " + t.str());
      if (static_cast<long>(h_plus(f->result)) != hp + 1 ||
          static_cast<long>(h_minus(f->result)) != hm - 1)
        return fail(r, "(iv) f_tilde statistics at " + t.str());
    }
  }
  return r;
}

Report confluence(std::size_t n, std::size_t trials, std::uint64_t seed, const Limits& lim) {
  guard_strings(n, lim);
  Report r = make("confluence", {{"n", n}, {"trials", trials}, {"seed", seed}});
  std::mt19937_64 rng(seed);
  for (std::size_t len = 0; len <= n; ++len) {
    for (const auto& t : all_sign_strings(len)) {
      const std::string expected = reduce(t).str();
      for (std::size_t k = 0; k < trials; ++k) {
        ++r.checked;
        const auto got = kcrystal_oracle::reduce_randomly(t.str(), rng);
        if (got != expected)
          return fail(r, "t=" + t.str() + ": stack " + expected + ", rewriting " + got);
      }
    }
  }
  return r;
}

Report comb_lemma(std::size_t n, const Limits& lim) {
  guard_strings(n, lim);
  Report r = make("comb_lemma", {{"n", n}});
  for (const auto& t : all_sign_strings(n)) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (suffix_h_minus(t, l) <= suffix_h_minus(t, l + 1)) continue;
      ++r.checked;
      SignString bar = t;
      bar.set(l, Sign::Plus);
      const auto flips = plus_flips(bar);
      for (std::size_t k = 1; k < flips.size(); ++k)
        if (succ_compare(flips[k].result, flips[k - 1].result) != std::strong_ordering::greater)
          return fail(r, "flips of " + bar.str() + " not succ-ascending");
      std::size_t j = flips.size();
      for (std::size_t k = 0; k < flips.size(); ++k)
        if (flips[k].result == t) j = k;
      if (j == flips.size()) return fail(r, "t=" + t.str() + " missing from flips of " + bar.str());
      const auto& tj = flips[j].result;
      const std::size_t hl = suffix_h_minus(tj, l);
      const std::size_t hl1 = suffix_h_minus(tj, l + 1);
      const std::string where = "t=" + t.str() + ", l=" + std::to_string(l);
      if (hl1 + 1 != hl) return fail(r, "claim (1) at " + where);
      for (std::size_t i = 0; i < j; ++i)
        if (suffix_h_minus(flips[i].result, l + 1) != hl1)
          return fail(r, "claim (2) at " + where + ", i=" + std::to_string(i + 1));
      for (std::size_t i = j + 1; i < flips.size(); ++i)
        if (suffix_h_minus(flips[i].result, l + 1) < hl + 1)
          return fail(r, "claim (3) at " + where + ", i=" + std::to_string(i + 1));
    }
  }
  return r;
}

Report boundary_invariance(const Params& p, int max_boxes, const Limits& lim) {
  Report r = make("boundary_invariance", {{"params", params_json(p)}, {"max_boxes", max_boxes}});
  try {
    for (const auto& m : sweep(p, max_boxes, lim)) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto b = boundary(p, m, z);
        const ZClass up = class_of_content(p, z.value + 1);
        const ZClass down = class_of_content(p, z.value - 1);
        for (std::size_t k = 0; k < b.size(); ++k) {
          if (b.entries[k].kind != BoxKind::Addable) continue;
          ++r.checked;
          const BoxRef x = b.entries[k].box;
          const auto grown = add_box(m, x);
          const auto b2 = boundary(p, grown, z);
          if (b2.boxes() != b.boxes())
            return fail(r, "B_z changed after adding " + box_str(x) + " at " + at(p, m, z));
          for (std::size_t q = 0; q < b.size(); ++q) {
            const bool want_flip = q == k;
            const bool flipped_kind = b2.entries[q].kind != b.entries[q].kind;
            if (want_flip != flipped_kind)
              return fail(r, "kind mismatch after adding " + box_str(x) + " at " + at(p, m, z));
          }
          std::set<ZClass> others;
          for (const auto& c : classes_meeting(p, m)) others.insert(c);
          for (const auto& c : classes_meeting(p, grown)) others.insert(c);
          for (const auto& c : others) {
            if (c == z || c == up || c == down) continue;
            if (boundary(p, m, c).entries != boundary(p, grown, c).entries)
              return fail(r, "class " + c.str() + " changed after adding " + box_str(x) + " at " +
                                 at(p, m, z));
          }
        }
      }
    }
  } catch (const InvariantViolation& err) {
    return fail(r, err.what());
  }
  return r;
}

Report d_separation(const Params& p, int max_boxes, const Limits& lim) {
  Report r = make("d_separation", {{"params", params_json(p)}, {"max_boxes", max_boxes}});
  try {
    for (const auto& m : sweep(p, max_boxes, lim)) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto b = boundary(p, m, z);
        for (std::size_t i = 0; i < b.size(); ++i) {
          for (std::size_t j = i + 1; j < b.size(); ++j) {
            ++r.checked;
            const long d = d_diff(p, b.entries[j].box, b.entries[i].box);
            if (d <= 0) return fail(r, "non-increasing d at " + at(p, m, z));
            const CValue diff = b.entries[j].d - b.entries[i].d;
            if (p.is_irrational()) {
              if (diff.kappa_coeff != 0 || diff.constant != d)
                return fail(r, "inconsistent formal d difference at " + at(p, m, z));
            } else {
              const auto v = diff.evaluate(p);
              if (!v || v->denominator() != 1 || v->numerator() != d)
                return fail(r, "d difference not the integer d_diff at " + at(p, m, z));
            }
          }
        }
      }
    }
  } catch (const InvariantViolation& err) {
    return fail(r, std::string("d-tie: ") + err.what());
  }
  return r;
}

Report realization_consistency(const Params& p, int max_boxes, const Limits& lim) {
  Report r = make("realization_consistency", {{"params", params_json(p)}, {"max_boxes", max_boxes}});
  const auto op = oracle_params(p);
  auto same = [](const std::optional<BoxMove>& mine, const std::optional<kcrystal_oracle::Move>& ref) {
    if (mine.has_value() != ref.has_value()) return false;
    if (!mine) return true;
    const BoxRef rb{ref->box.component, ref->box.row, ref->box.col};
    return mine->box == rb && mine->result.rows() == ref->result;
  };
  try {
    for (const auto& m : sweep(p, max_boxes, lim)) {
      const auto rows = m.rows();
      auto classes = classes_meeting(p, m);
      // One class not touching m, to check that both sides report absence.
      classes.push_back(class_of_content(p, p.charge(0) + max_boxes + 3));
      for (const auto& z : classes) {
        r.checked += 2;
        if (!same(crystal_add(p, m, z), kcrystal_oracle::naive_add(op, rows, z.value)))
          return fail(r, "crystal_add disagrees with the naive rule at " + at(p, m, z));
        if (!same(crystal_remove(p, m, z), kcrystal_oracle::naive_remove(op, rows, z.value)))
          return fail(r, "crystal_remove disagrees with the naive rule at " + at(p, m, z));
      }
    }
  } catch (const InvariantViolation& err) {
    return fail(r, err.what());
  }
  return r;
}

Report inverse_pairing(const Params& p, int max_boxes, const Limits& lim) {
  Report r = make("inverse_pairing", {{"params", params_json(p)}, {"max_boxes", max_boxes}});
  constexpr std::size_t kMaxEnumeratedBoundary = 10;
  try {
    for (const auto& m : sweep(p, max_boxes, lim)) {
      for (const auto& z : classes_meeting(p, m)) {
        ++r.checked;
        if (auto a = crystal_add(p, m, z)) {
          auto back = crystal_remove(p, a->result, z);
          if (!back || back->result != m || back->box != a->box)
            return fail(r, "remove(add(m)) != m at " + at(p, m, z));
        }
        if (auto d = crystal_remove(p, m, z)) {
          auto back = crystal_add(p, d->result, z);
          if (!back || back->result != m || back->box != d->box)
            return fail(r, "add(remove(m)) != m at " + at(p, m, z));
        }
        const auto b = boundary(p, m, z);
        if (class_member(p, m, z, b.sign()) != m)
          return fail(r, "class_member(own sign) != m at " + at(p, m, z));
        const auto rep = class_representative(p, m, z);
        if (class_representative(p, rep, z) != rep)
          return fail(r, "class_representative not idempotent at " + at(p, m, z));
        if (b.size() > kMaxEnumeratedBoundary) continue;
        std::set<Multipartition> members;
        for (const auto& t : all_sign_strings(b.size())) {
          const auto member = class_member(p, m, z, t);
          const auto mb = boundary(p, member, z);
          if (mb.boxes() != b.boxes() || mb.sign() != t ||
              class_representative(p, member, z) != rep)
            return fail(r, "class_member(" + t.str() + ") inconsistent at " + at(p, m, z));
          members.insert(member);
        }
        if (members.size() != (std::size_t{1} << b.size()))
          return fail(r, "class_member not injective at " + at(p, m, z));
      }
    }
  } catch (const InvariantViolation& err) {
    return fail(r, err.what());
  }
  return r;
}

Report charge_shift(const Params& p, int max_boxes, int sigma_range, const Limits& lim) {
  Report r = make("charge_shift", {{"params", params_json(p)},
                                   {"max_boxes", max_boxes},
                                   {"sigma_range", sigma_range}});
  const auto nodes = sweep(p, max_boxes, lim);
  DepthCalculator base(p);
  try {
    for (int sigma = -sigma_range; sigma <= sigma_range; ++sigma) {
      const Params q = p.shifted(sigma);
      DepthCalculator shifted(q);
      for (const auto& m : nodes) {
        std::set<ZClass> mapped;
        for (const auto& z : classes_meeting(p, m)) mapped.insert(shift_class(p, z, sigma));
        const auto target = classes_meeting(q, m);
        if (mapped != std::set<ZClass>(target.begin(), target.end()))
          return fail(r, "classes do not relabel bijectively at sigma=" + std::to_string(sigma) +
                             ", m=" + m.str());
        for (const auto& z : classes_meeting(p, m)) {
          ++r.checked;
          const ZClass zq = shift_class(p, z, sigma);
          if (crystal_add(p, m, z) != crystal_add(q, m, zq) ||
              crystal_remove(p, m, z) != crystal_remove(q, m, zq))
            return fail(r, "operator changed under sigma=" + std::to_string(sigma) + " at " +
                               at(p, m, z));
        }
        if (c_function(p, m) != c_function(q, m))
          return fail(r, "c_function changed under sigma=" + std::to_string(sigma) + ", m=" + m.str());
        if (base.depth(m) != shifted.depth(m))
          return fail(r, "depth changed under sigma=" + std::to_string(sigma) + ", m=" + m.str());
      }
    }
  } catch (const InvariantViolation& err) {
    return fail(r, err.what());
  }
  return r;
}

Report depth_irrational(int max_boxes, const Limits& lim) {
  Report r = make("depth_irrational", {{"ell", 1}, {"max_boxes", max_boxes}});
  const Params p = Params::irrational({0});
  DepthCalculator calc(p);
  for (const auto& m : sweep(p, max_boxes, lim)) {
    ++r.checked;
    const int d = calc.depth(m);
    if (d != m.size())
      return fail(r, "depth " + std::to_string(d) + " != |m| for m=" + m.str());
  }
  return r;
}

Report gl_realization(std::size_t n, int p, int entry_bound, const Limits& lim) {
  Report r = make("gl_realization", {{"n", n}, {"p", p}, {"entry_bound", entry_bound}});
  const Characteristic ch(p);
  if (entry_bound < 0) throw ValidationError("entry_bound must be nonnegative", "entry-bound");
  const long span = 2L * entry_bound + 1;
  if (static_cast<long>(n) > span) return r;  // no strictly decreasing tuples
  // Guard on C(span, n).
  double tuples = 1;
  for (std::size_t k = 0; k < n; ++k) tuples = tuples * static_cast<double>(span - static_cast<long>(k)) / static_cast<double>(k + 1);
  if (tuples > static_cast<double>(lim.node_ceiling))
    throw ResourceLimitExceeded("GL sweep exceeds the node ceiling");

  std::vector<long> residues;
  if (p > 0) {
    for (long i = 0; i < p; ++i) residues.push_back(i);
  } else {
    for (long i = -entry_bound - 1; i <= entry_bound; ++i) residues.push_back(i);
  }

  std::vector<long> current;
  std::optional<std::string> problem;
  auto check = [&](const std::vector<long>& entries) {
    const DominantWeight lambda(entries);
    for (long i : residues) {
      r.checked += 1;
      const std::string where = "i=" + std::to_string(i) + ", lambda=" + nlohmann::json(entries).dump();
      try {
        const auto add = gl_crystal_add(lambda, i, ch);
        const auto ref_add = kcrystal_oracle::naive_gl_add(entries, i, p);
        if (add.has_value() != ref_add.has_value() || (add && add->result.entries() != *ref_add))
          return "gl_crystal_add disagrees with the naive rule at " + where;
        const auto rem = gl_crystal_remove(lambda, i, ch);
        const auto ref_rem = kcrystal_oracle::naive_gl_remove(entries, i, p);
        if (rem.has_value() != ref_rem.has_value() || (rem && rem->result.entries() != *ref_rem))
          return "gl_crystal_remove disagrees with the naive rule at " + where;
        if (add) {
          const auto back = gl_crystal_remove(add->result, i, ch);
          if (!back || back->result != lambda) return "remove(add) != id at " + where;
        }
        if (rem) {
          const auto back = gl_crystal_add(rem->result, i, ch);
          if (!back || back->result != lambda) return "add(remove) != id at " + where;
        }
        const auto s = gl_sign_string(lambda, i, ch);
        if (gl_class_member(lambda, i, ch, s) != lambda) return "class_member(own sign) at " + where;
      } catch (const DegenerateClass& err) {
        return std::string("DEGENERATE_CLASS from an operator at ") + where + ": " + err.what();
      }
    }
    return std::string();
  };
  // Strictly decreasing tuples from [-b, b].
  std::function<void(long)> rec = [&](long below) {
    if (problem) return;
    if (current.size() == n) {
      if (auto msg = check(current); !msg.empty()) problem = msg;
      return;
    }
    for (long v = below - 1; v >= -entry_bound; --v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
      if (problem) return;
    }
  };
  rec(entry_bound + 1);
  if (problem) return fail(r, *problem);
  return r;
}

Report graph_paths(const Params& p, int max_boxes, unsigned workers, const Limits& lim) {
  Report r = make("graph_paths", {{"params", params_json(p)},
                                  {"max_boxes", max_boxes},
                                  {"workers", workers}});
  GraphOptions opt;
  opt.max_boxes = max_boxes;
  opt.ceiling = lim.node_ceiling;
  try {
    const auto g = build_graph(p, opt);
    const auto again = build_graph(p, opt);
    opt.workers = workers;
    const auto parallel = build_graph(p, opt);
    r.bounds["nodes"] = g.nodes.size();
    r.bounds["edges"] = g.edges.size();
    if (again.nodes != g.nodes || again.edges != g.edges)
      return fail(r, "two single-worker runs differ");
    if (parallel.nodes != g.nodes || parallel.edges != g.edges)
      return fail(r, "run with " + std::to_string(workers) + " workers differs");

    std::set<ZClass> classes;
    for (const auto& e : g.edges) {
      ++r.checked;
      classes.insert(e.cls);
      const auto& src = g.nodes[e.source];
      const auto& dst = g.nodes[e.target];
      if (add_box(src, e.box) != dst) return fail(r, "edge target is not source + box at " + src.str());
      const auto back = crystal_remove(p, dst, e.cls);
      if (!back || back->result != src || back->box != e.box)
        return fail(r, "crystal_remove does not invert edge at " + src.str());
    }
    for (const auto& z : classes) {
      const auto chains = string_decomposition(g, z);
      std::size_t total = 0;
      for (const auto& chain : chains) {
        total += chain.size();
        const auto& low = g.nodes[chain.front()];
        const auto s = boundary(p, low, z).sign();
        if (h_minus(s) != 0) return fail(r, "chain bottom has h_minus > 0 at " + at(p, low, z));
        for (std::size_t k = 0; k < chain.size(); ++k) {
          const auto sk = boundary(p, g.nodes[chain[k]], z).sign();
          if (h_minus(sk) != k) return fail(r, "h_minus not the chain position at " + at(p, low, z));
          if (weight(sk) != weight(s) + 2 * static_cast<long>(k))
            return fail(r, "weights along chain not step 2 at " + at(p, low, z));
        }
        if (g.nodes[chain.back()].size() < max_boxes && chain.size() != h_plus(s) + h_minus(s) + 1)
          return fail(r, "complete chain has wrong length at " + at(p, low, z));
      }
      if (total != g.nodes.size()) return fail(r, "chains do not cover the nodes for " + z.str());
    }
  } catch (const InvariantViolation& err) {
    return fail(r, err.what());
  }
  return r;
}

Report conversions(const Params& p, double tol) {
  Report r = make("conversions", {{"params", params_json(p)}, {"tol", (std::ostringstream() << tol).str()}});
  const auto h = hecke_params(p);
  ++r.checked;
  if (std::abs(std::abs(h.q) - 1.0) > tol) return fail(r, "|q| != 1");
  for (std::size_t i = 0; i < h.Q.size(); ++i) {
    ++r.checked;
    if (std::abs(std::abs(h.Q[i]) - 1.0) > tol) return fail(r, "|Q_" + std::to_string(i) + "| != 1");
  }
  if (p.kappa()) {
    ++r.checked;
    const auto c0 = cyclotomic_c0(p);
    if (!c0 || *c0 != -*p.kappa()) return fail(r, "c_0 != -kappa");
  }
  const auto c = cyclotomic_c(p);
  for (int sigma = -2; sigma <= 2; ++sigma) {
    const auto cs = cyclotomic_c(p.shifted(sigma));
    for (std::size_t i = 1; i < c.size(); ++i) {
      ++r.checked;
      if (std::abs(cs[i] - c[i]) > tol)
        return fail(r, "c_" + std::to_string(i) + " moved under sigma=" + std::to_string(sigma));
    }
  }
  return r;
}

}  // namespace kcrystal::verify
