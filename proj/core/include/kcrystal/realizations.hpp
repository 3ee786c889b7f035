#pragma once

// Realizations of the sign crystal.
//
// Fock (cyclotomic Cherednik) side: for a class z, the addable and removable
// z-boxes of a multipartition, ordered by increasing d-value, read as a sign
// string with '+' on addable and '-' on removable boxes. The multipartitions
// sharing that boundary are in bijection with {+,-}^n.
//
// The abstract e_tilde ('+' -> '-') therefore adds a box, and f_tilde removes
// one. The public names crystal_add / crystal_remove keep that explicit.
//
// GL_n side: dominant weights with the entries congruent to i or i+1.

#include <cstddef>
#include <optional>
#include <vector>

#include "kcrystal/charged_params.hpp"
#include "kcrystal/sign_crystal.hpp"
#include "kcrystal/young.hpp"

namespace kcrystal {

enum class BoxKind { Addable, Removable };

struct BoundaryEntry {
  BoxRef box;
  BoxKind kind;
  CValue d;

  Sign sign() const noexcept { return kind == BoxKind::Addable ? Sign::Plus : Sign::Minus; }
  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

struct ZBoundary {
  ZClass cls;
  std::vector<BoundaryEntry> entries;  // strictly increasing d

  std::size_t size() const noexcept { return entries.size(); }
  SignString sign() const;
  std::vector<BoxRef> boxes() const;
};

// Throws InvariantViolation if two entries tie on d (unreachable for valid
// Params).
ZBoundary boundary(const Params& p, const Multipartition& m, const ZClass& z);

// Classes containing at least one addable or removable box of m, sorted.
std::vector<ZClass> classes_meeting(const Params& p, const Multipartition& m);
// Classes containing at least one removable box of m, sorted.
std::vector<ZClass> removable_classes(const Params& p, const Multipartition& m);

// m with every removable z-box deleted.
Multipartition class_representative(const Params& p, const Multipartition& m, const ZClass& z);

// The member of m's class whose boundary sign string is t. Throws
// ValidationError when t.size() differs from the boundary size.
Multipartition class_member(const Params& p, const Multipartition& m, const ZClass& z,
                            const SignString& t);

struct BoxMove {
  Multipartition result;
  BoxRef box;

  friend bool operator==(const BoxMove&, const BoxMove&) = default;
};

// Adds the box at the e_tilde flip position of the boundary sign string.
std::optional<BoxMove> crystal_add(const Params& p, const Multipartition& m, const ZClass& z);
// Removes the box at the f_tilde flip position.
std::optional<BoxMove> crystal_remove(const Params& p, const Multipartition& m, const ZClass& z);

// m + x over addable z-boxes x (resp. m - x over removable ones), d-ascending.
std::vector<Multipartition> kgroup_induction(const Params& p, const Multipartition& m,
                                             const ZClass& z);
std::vector<Multipartition> kgroup_restriction(const Params& p, const Multipartition& m,
                                               const ZClass& z);

// ---- GL_n ----

class DominantWeight {
 public:
  DominantWeight() = default;
  // Throws ValidationError unless strictly decreasing.
  explicit DominantWeight(std::vector<long> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<long>& entries() const noexcept { return entries_; }
  long at(std::size_t j) const { return entries_.at(j - 1); }  // 1-based

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<long> entries_;
};

// Characteristic of the ground field: 0, or a prime.
class Characteristic {
 public:
  // Throws ValidationError unless p == 0 or p is prime.
  explicit Characteristic(int p);
  int value() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_ == 0; }
  // a == b in the ground field.
  bool equal(long a, long b) const noexcept;

 private:
  int p_ = 0;
};

// Positions j (1-based, ascending) with lambda_j = i or i + 1 in the field.
std::vector<std::size_t> gl_positions(const DominantWeight& lambda, long i, Characteristic p);
// '+' where lambda_j = i, '-' where lambda_j = i + 1.
SignString gl_sign_string(const DominantWeight& lambda, long i, Characteristic p);

// Member of lambda's class with sign string t. Throws DegenerateClass when
// the result is not strictly dominant.
DominantWeight gl_class_member(const DominantWeight& lambda, long i, Characteristic p,
                               const SignString& t);

struct WeightMove {
  DominantWeight result;
  std::size_t position;  // 1-based index into lambda

  friend bool operator==(const WeightMove&, const WeightMove&) = default;
};

// e_tilde on the sign string, then +1 at the flipped position. Throws
// DegenerateClass if the result is not strictly dominant.
std::optional<WeightMove> gl_crystal_add(const DominantWeight& lambda, long i, Characteristic p);
// f_tilde, then -1.
std::optional<WeightMove> gl_crystal_remove(const DominantWeight& lambda, long i,
                                            Characteristic p);

}  // namespace kcrystal
