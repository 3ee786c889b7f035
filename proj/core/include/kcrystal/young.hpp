#pragma once

// Partitions, multipartitions and the addable/removable box calculus.
// Components are 0-based; rows and columns are 1-based.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace kcrystal {

// A cell (row, col) of a single Young diagram.
struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A cell of a multipartition: component index plus (row, col).
struct BoxRef {
  int component = 0;
  int row = 1;
  int col = 1;

  Cell cell() const noexcept { return {row, col}; }

  friend bool operator==(const BoxRef&, const BoxRef&) = default;
  friend auto operator<=>(const BoxRef&, const BoxRef&) = default;
};

// col - row.
constexpr int content(const BoxRef& x) noexcept { return x.col - x.row; }
constexpr int content(const Cell& x) noexcept { return x.col - x.row; }

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are trimmed; anything else that is not weakly decreasing
  // and nonnegative throws ValidationError.
  explicit Partition(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  std::size_t length() const noexcept { return rows_.size(); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return rows_.empty(); }

  // Length of row j (1-based); 0 beyond the last row.
  int row(std::size_t j) const noexcept {
    return j >= 1 && j <= rows_.size() ? rows_[j - 1] : 0;
  }
  bool contains(Cell x) const noexcept {
    return x.row >= 1 && x.col >= 1 && x.col <= row(static_cast<std::size_t>(x.row));
  }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

// Boxes (j, p_j) with p_{j+1} < p_j, by row.
std::vector<Cell> removable_boxes(const Partition& p);
// Boxes (j, p_j + 1) with j = 1 or p_j < p_{j-1}, plus (len+1, 1); by row.
std::vector<Cell> addable_boxes(const Partition& p);

bool is_addable(const Partition& p, Cell x);
bool is_removable(const Partition& p, Cell x);

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components)
      : components_(std::move(components)) {}
  // The empty multipartition of the given level.
  static Multipartition empty(std::size_t level) {
    return Multipartition(std::vector<Partition>(level));
  }
  // From raw row lists, e.g. {{3,1},{}}.
  static Multipartition from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t level() const noexcept { return components_.size(); }
  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& component(std::size_t i) const { return components_.at(i); }
  int size() const noexcept;

  bool contains(const BoxRef& x) const noexcept;

  std::vector<std::vector<int>> rows() const;
  std::string str() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  // Total size first, then lexicographic on the components.
  friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b);

 private:
  std::vector<Partition> components_;
};

// Throws ValidationError when x is not addable (resp. removable).
Multipartition add_box(const Multipartition& m, const BoxRef& x);
Multipartition remove_box(const Multipartition& m, const BoxRef& x);

std::vector<BoxRef> addable_boxes(const Multipartition& m);
std::vector<BoxRef> removable_boxes(const Multipartition& m);

// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
// All level-`level` multipartitions of total size n, lexicographic order.
std::vector<Multipartition> multipartitions_of(std::size_t level, int n);
// All multipartitions with at most max_boxes boxes, by size then lexicographic.
std::vector<Multipartition> multipartitions_up_to(std::size_t level, int max_boxes);

}  // namespace kcrystal

template <>
struct std::hash<kcrystal::Multipartition> {
  std::size_t operator()(const kcrystal::Multipartition& m) const noexcept;
};
