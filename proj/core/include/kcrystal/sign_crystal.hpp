#pragma once

// The elementary sl2-crystal on words over {+,-}.
//
// Positions are 1-based everywhere in this header: index k refers to the
// k-th symbol of a word.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kcrystal {

enum class Sign : char { Plus = '+', Minus = '-' };

constexpr Sign flipped(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

class SignString {
 public:
  SignString() = default;
  explicit SignString(std::vector<Sign> symbols) : symbols_(std::move(symbols)) {}

  // Parses an ASCII word over '+' and '-'. Throws ValidationError otherwise.
  static SignString parse(std::string_view word);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  // 1-based access.
  Sign at(std::size_t k) const { return symbols_.at(k - 1); }
  void set(std::size_t k, Sign s) { symbols_.at(k - 1) = s; }

  const std::vector<Sign>& symbols() const noexcept { return symbols_; }

  // Suffix (t_k, ..., t_n); k = n + 1 gives the empty word.
  SignString suffix(std::size_t k) const;

  std::string str() const;

  friend bool operator==(const SignString&, const SignString&) = default;
  friend auto operator<=>(const SignString&, const SignString&) = default;

 private:
  std::vector<Sign> symbols_;
};

// All words of length n, in the order of their binary encoding with
// '+' = 0 at the most significant (first) position.
std::vector<SignString> all_sign_strings(std::size_t n);

// Word of length n whose k-th symbol is '-' iff bit (k-1) of mask is set.
SignString sign_string_from_mask(std::size_t n, unsigned long long mask);

enum class ReducedSymbol : char { Plus = '+', Minus = '-', Zero = '0' };

class ReducedString {
 public:
  ReducedString() = default;
  explicit ReducedString(std::vector<ReducedSymbol> symbols)
      : symbols_(std::move(symbols)) {}

  // Parses an ASCII word over '+', '-', '0'.
  static ReducedString parse(std::string_view word);

  std::size_t size() const noexcept { return symbols_.size(); }
  ReducedSymbol at(std::size_t k) const { return symbols_.at(k - 1); }
  const std::vector<ReducedSymbol>& symbols() const noexcept { return symbols_; }

  std::size_t count(ReducedSymbol s) const noexcept;
  std::string str() const;

  friend bool operator==(const ReducedString&, const ReducedString&) = default;

 private:
  std::vector<ReducedSymbol> symbols_;
};

// Cancels every "-...+" pair whose interior is already cancelled, until no
// '+' survives to the right of a '-'. Single left-to-right pass: each '+' is
// paired with the nearest unpaired '-' on its left.
ReducedString reduce(const SignString& t);

std::size_t h_plus(const SignString& t);
std::size_t h_minus(const SignString& t);

// h_minus - h_plus; also equals (#'-') - (#'+').
long weight(const SignString& t);

struct Flip {
  SignString result;
  std::size_t index;  // 1-based flipped position

  friend bool operator==(const Flip&, const Flip&) = default;
};

// Flips the rightmost surviving '+' of the reduced form to '-'.
std::optional<Flip> e_tilde(const SignString& t);
// Flips the leftmost surviving '-' of the reduced form to '+'.
std::optional<Flip> f_tilde(const SignString& t);

// h_minus of (t_k, ..., t_n), 1 <= k <= n + 1. Throws ValidationError when k
// is out of range.
std::size_t suffix_h_minus(const SignString& t, std::size_t k);

// Linear order on words of equal length: a > b iff at the largest index
// where they differ, a has '-' and b has '+'. Throws ValidationError on a
// length mismatch.
std::strong_ordering succ_compare(const SignString& a, const SignString& b);

// Every single flip '+' -> '-' (resp. '-' -> '+'), by ascending position.
// For plus_flips this is ascending succ_compare order; for minus_flips it is
// descending.
std::vector<Flip> plus_flips(const SignString& t);
std::vector<Flip> minus_flips(const SignString& t);

}  // namespace kcrystal
