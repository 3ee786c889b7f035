#include "kcrystal/realizations.hpp"

#include <algorithm>
#include <set>

#include "kcrystal/error.hpp"

namespace kcrystal {

namespace {

void check_level(const Params& p, const Multipartition& m) {
  if (m.level() != p.ell())
    throw ValidationError("multipartition has " + std::to_string(m.level()) +
                              " components but ell = " + std::to_string(p.ell()),
                          "multipartition");
}

std::string box_str(const BoxRef& x) {
  return "(" + std::to_string(x.component) + "," + std::to_string(x.row) + "," +
         std::to_string(x.col) + ")";
}

}  // namespace

SignString ZBoundary::sign() const {
  std::vector<Sign> s;
  s.reserve(entries.size());
  for (const auto& e : entries) s.push_back(e.sign());
  return SignString(std::move(s));
}

std::vector<BoxRef> ZBoundary::boxes() const {
  std::vector<BoxRef> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.box);
  return out;
}

ZBoundary boundary(const Params& p, const Multipartition& m, const ZClass& z) {
  check_level(p, m);
  check_class(p, z);
  ZBoundary out{z, {}};
  for (const auto& x : addable_boxes(m))
    if (z_class(p, x) == z) out.entries.push_back({x, BoxKind::Addable, d_value(p, x)});
  for (const auto& x : removable_boxes(m))
    if (z_class(p, x) == z) out.entries.push_back({x, BoxKind::Removable, d_value(p, x)});

  std::sort(out.entries.begin(), out.entries.end(),
            [&p](const BoundaryEntry& a, const BoundaryEntry& b) {
              return d_diff(p, a.box, b.box) < 0;
            });
  for (std::size_t k = 1; k < out.entries.size(); ++k) {
    if (d_diff(p, out.entries[k].box, out.entries[k - 1].box) <= 0)
      throw InvariantViolation("d-tie between boundary boxes " + box_str(out.entries[k - 1].box) +
                               " and " + box_str(out.entries[k].box) + " for " + p.str());
  }
  return out;
}

std::vector<ZClass> classes_meeting(const Params& p, const Multipartition& m) {
  check_level(p, m);
  std::set<ZClass> seen;
  for (const auto& x : addable_boxes(m)) seen.insert(z_class(p, x));
  for (const auto& x : removable_boxes(m)) seen.insert(z_class(p, x));
  return {seen.begin(), seen.end()};
}

std::vector<ZClass> removable_classes(const Params& p, const Multipartition& m) {
  check_level(p, m);
  std::set<ZClass> seen;
  for (const auto& x : removable_boxes(m)) seen.insert(z_class(p, x));
  return {seen.begin(), seen.end()};
}

namespace {

// Rewrites the rows of m so that each boundary box is present iff wanted.
// Boundary boxes of one class sit on distinct rows of their component, so
// the edits do not interact.
Multipartition apply_presence(const Multipartition& m, const ZBoundary& b,
                              const std::vector<bool>& present) {
  auto rows = m.rows();
  for (std::size_t k = 0; k < b.entries.size(); ++k) {
    const BoxRef& x = b.entries[k].box;
    auto& r = rows[static_cast<std::size_t>(x.component)];
    const auto j = static_cast<std::size_t>(x.row);
    if (r.size() < j) r.resize(j, 0);
    r[j - 1] = present[k] ? x.col : x.col - 1;
  }
  try {
    return Multipartition::from_rows(rows);
  } catch (const ValidationError& err) {
    throw InvariantViolation(std::string("class member is not a multipartition: ") + err.what());
  }
}

}  // namespace

Multipartition class_representative(const Params& p, const Multipartition& m, const ZClass& z) {
  const auto b = boundary(p, m, z);
  return apply_presence(m, b, std::vector<bool>(b.size(), false));
}

Multipartition class_member(const Params& p, const Multipartition& m, const ZClass& z,
                            const SignString& t) {
  const auto b = boundary(p, m, z);
  if (t.size() != b.size())
    throw ValidationError("sign string has length " + std::to_string(t.size()) +
                              " but the boundary has " + std::to_string(b.size()) + " boxes",
                          "string");
  std::vector<bool> present(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) present[k] = t.at(k + 1) == Sign::Minus;
  return apply_presence(m, b, present);
}

std::optional<BoxMove> crystal_add(const Params& p, const Multipartition& m, const ZClass& z) {
  const auto b = boundary(p, m, z);
  const auto flip = e_tilde(b.sign());
  if (!flip) return std::nullopt;
  const BoxRef x = b.entries[flip->index - 1].box;
  return BoxMove{add_box(m, x), x};
}

std::optional<BoxMove> crystal_remove(const Params& p, const Multipartition& m, const ZClass& z) {
  const auto b = boundary(p, m, z);
  const auto flip = f_tilde(b.sign());
  if (!flip) return std::nullopt;
  const BoxRef x = b.entries[flip->index - 1].box;
  return BoxMove{remove_box(m, x), x};
}

std::vector<Multipartition> kgroup_induction(const Params& p, const Multipartition& m,
                                             const ZClass& z) {
  std::vector<Multipartition> out;
  for (const auto& e : boundary(p, m, z).entries)
    if (e.kind == BoxKind::Addable) out.push_back(add_box(m, e.box));
  return out;
}

std::vector<Multipartition> kgroup_restriction(const Params& p, const Multipartition& m,
                                               const ZClass& z) {
  std::vector<Multipartition> out;
  for (const auto& e : boundary(p, m, z).entries)
    if (e.kind == BoxKind::Removable) out.push_back(remove_box(m, e.box));
  return out;
}

// ---- GL_n ----

DominantWeight::DominantWeight(std::vector<long> entries) : entries_(std::move(entries)) {
  for (std::size_t j = 1; j < entries_.size(); ++j)
    if (entries_[j] >= entries_[j - 1])
      throw ValidationError("dominant weight entries must be strictly decreasing",
                            "entry " + std::to_string(j + 1));
}

Characteristic::Characteristic(int p) : p_(p) {
  if (p < 0 || p == 1) throw ValidationError("characteristic must be 0 or a prime", "p");
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) throw ValidationError("characteristic must be 0 or a prime", "p");
}

bool Characteristic::equal(long a, long b) const noexcept {
  if (p_ == 0) return a == b;
  return (a - b) % p_ == 0;
}

std::vector<std::size_t> gl_positions(const DominantWeight& lambda, long i, Characteristic p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= lambda.size(); ++j)
    if (p.equal(lambda.at(j), i) || p.equal(lambda.at(j), i + 1)) out.push_back(j);
  return out;
}

SignString gl_sign_string(const DominantWeight& lambda, long i, Characteristic p) {
  std::vector<Sign> s;
  for (std::size_t j : gl_positions(lambda, i, p))
    s.push_back(p.equal(lambda.at(j), i) ? Sign::Plus : Sign::Minus);
  return SignString(std::move(s));
}

namespace {

DominantWeight checked_weight(std::vector<long> entries) {
  for (std::size_t j = 1; j < entries.size(); ++j)
    if (entries[j] >= entries[j - 1])
      throw DegenerateClass("class member is not strictly dominant at entry " +
                            std::to_string(j + 1));
  return DominantWeight(std::move(entries));
}

}  // namespace

DominantWeight gl_class_member(const DominantWeight& lambda, long i, Characteristic p,
                               const SignString& t) {
  const auto pos = gl_positions(lambda, i, p);
  if (t.size() != pos.size())
    throw ValidationError("sign string length does not match the class size", "string");
  const auto current = gl_sign_string(lambda, i, p);
  auto entries = lambda.entries();
  for (std::size_t l = 1; l <= pos.size(); ++l) {
    if (current.at(l) == t.at(l)) continue;
    entries[pos[l - 1] - 1] += t.at(l) == Sign::Minus ? 1 : -1;
  }
  return checked_weight(std::move(entries));
}

std::optional<WeightMove> gl_crystal_add(const DominantWeight& lambda, long i, Characteristic p) {
  const auto pos = gl_positions(lambda, i, p);
  const auto flip = e_tilde(gl_sign_string(lambda, i, p));
  if (!flip) return std::nullopt;
  const std::size_t j = pos[flip->index - 1];
  auto entries = lambda.entries();
  entries[j - 1] += 1;
  return WeightMove{checked_weight(std::move(entries)), j};
}

std::optional<WeightMove> gl_crystal_remove(const DominantWeight& lambda, long i,
                                            Characteristic p) {
  const auto pos = gl_positions(lambda, i, p);
  const auto flip = f_tilde(gl_sign_string(lambda, i, p));
  if (!flip) return std::nullopt;
  const std::size_t j = pos[flip->index - 1];
  auto entries = lambda.entries();
  entries[j - 1] -= 1;
  return WeightMove{checked_weight(std::move(entries)), j};
}

}  // namespace kcrystal
