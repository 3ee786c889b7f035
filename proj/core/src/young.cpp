#include "kcrystal/young.hpp"

#include <algorithm>
#include <numeric>

#include "kcrystal/error.hpp"

namespace kcrystal {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      throw ValidationError("partition rows must be positive (after trimming trailing zeros)",
                            "row " + std::to_string(i + 1));
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw ValidationError("partition rows must be weakly decreasing",
                            "row " + std::to_string(i + 1));
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows_[i]);
  }
  return out + ")";
}

std::vector<Cell> removable_boxes(const Partition& p) {
  std::vector<Cell> out;
  for (std::size_t j = 1; j <= p.length(); ++j)
    if (p.row(j + 1) < p.row(j)) out.push_back({static_cast<int>(j), p.row(j)});
  return out;
}

std::vector<Cell> addable_boxes(const Partition& p) {
  std::vector<Cell> out;
  for (std::size_t j = 1; j <= p.length(); ++j)
    if (j == 1 || p.row(j) < p.row(j - 1)) out.push_back({static_cast<int>(j), p.row(j) + 1});
  out.push_back({static_cast<int>(p.length()) + 1, 1});
  return out;
}

bool is_addable(const Partition& p, Cell x) {
  if (x.row < 1 || x.col < 1) return false;
  const auto j = static_cast<std::size_t>(x.row);
  return p.row(j) + 1 == x.col && (j == 1 || p.row(j - 1) >= x.col);
}

bool is_removable(const Partition& p, Cell x) {
  if (x.row < 1 || x.col < 1) return false;
  const auto j = static_cast<std::size_t>(x.row);
  return p.row(j) == x.col && p.row(j + 1) < x.col;
}

Multipartition Multipartition::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<Partition> comps;
  comps.reserve(rows.size());
  for (const auto& r : rows) comps.emplace_back(r);
  return Multipartition(std::move(comps));
}

int Multipartition::size() const noexcept {
  int n = 0;
  for (const auto& p : components_) n += p.size();
  return n;
}

bool Multipartition::contains(const BoxRef& x) const noexcept {
  if (x.component < 0 || static_cast<std::size_t>(x.component) >= components_.size()) return false;
  return components_[static_cast<std::size_t>(x.component)].contains(x.cell());
}

std::vector<std::vector<int>> Multipartition::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(components_.size());
  for (const auto& p : components_) out.push_back(p.rows());
  return out;
}

std::string Multipartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += components_[i].empty() ? std::string("()") : components_[i].str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.components_ <=> b.components_;
}

namespace {

void check_component(const Multipartition& m, const BoxRef& x) {
  if (x.component < 0 || static_cast<std::size_t>(x.component) >= m.level())
    throw ValidationError("box component out of range",
                          "component " + std::to_string(x.component));
}

Multipartition with_row(const Multipartition& m, const BoxRef& x, int new_len) {
  auto rows = m.rows();
  auto& r = rows[static_cast<std::size_t>(x.component)];
  const auto j = static_cast<std::size_t>(x.row);
  if (r.size() < j) r.resize(j, 0);
  r[j - 1] = new_len;
  return Multipartition::from_rows(rows);
}

}  // namespace

Multipartition add_box(const Multipartition& m, const BoxRef& x) {
  check_component(m, x);
  if (!is_addable(m.component(static_cast<std::size_t>(x.component)), x.cell()))
    throw ValidationError("box is not addable",
                          "(" + std::to_string(x.component) + "," + std::to_string(x.row) + "," +
                              std::to_string(x.col) + ")");
  return with_row(m, x, x.col);
}

Multipartition remove_box(const Multipartition& m, const BoxRef& x) {
  check_component(m, x);
  if (!is_removable(m.component(static_cast<std::size_t>(x.component)), x.cell()))
    throw ValidationError("box is not removable",
                          "(" + std::to_string(x.component) + "," + std::to_string(x.row) + "," +
                              std::to_string(x.col) + ")");
  return with_row(m, x, x.col - 1);
}

std::vector<BoxRef> addable_boxes(const Multipartition& m) {
  std::vector<BoxRef> out;
  for (std::size_t i = 0; i < m.level(); ++i)
    for (Cell c : addable_boxes(m.component(i))) out.push_back({static_cast<int>(i), c.row, c.col});
  return out;
}

std::vector<BoxRef> removable_boxes(const Multipartition& m) {
  std::vector<BoxRef> out;
  for (std::size_t i = 0; i < m.level(); ++i)
    for (Cell c : removable_boxes(m.component(i))) out.push_back({static_cast<int>(i), c.row, c.col});
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void multipartitions_rec(std::size_t level, int remaining, std::vector<Partition>& current,
                         const std::vector<std::vector<Partition>>& by_size,
                         std::vector<Multipartition>& out) {
  if (current.size() + 1 == level) {
    for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
      current.push_back(p);
      out.emplace_back(current);
      current.pop_back();
    }
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
      current.push_back(p);
      multipartitions_rec(level, remaining - k, current, by_size, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Multipartition> multipartitions_of(std::size_t level, int n) {
  if (level == 0) throw ValidationError("level must be at least 1");
  if (n < 0) throw ValidationError("multipartition size must be nonnegative");
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    std::sort(ps.begin(), ps.end());
    by_size.push_back(std::move(ps));
  }
  std::vector<Multipartition> out;
  std::vector<Partition> current;
  multipartitions_rec(level, n, current, by_size, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitions_up_to(std::size_t level, int max_boxes) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= max_boxes; ++n) {
    auto layer = multipartitions_of(level, n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace kcrystal

std::size_t std::hash<kcrystal::Multipartition>::operator()(
    const kcrystal::Multipartition& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& p : m.components()) {
    mix(0xffff);
    for (int r : p.rows()) mix(static_cast<std::size_t>(r));
  }
  return h;
}
