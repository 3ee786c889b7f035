#include "kcrystal/sign_crystal.hpp"

#include <algorithm>

#include "kcrystal/error.hpp"

namespace kcrystal {

SignString SignString::parse(std::string_view word) {
  std::vector<Sign> symbols;
  symbols.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '+': symbols.push_back(Sign::Plus); break;
      case '-': symbols.push_back(Sign::Minus); break;
      default:
        throw ValidationError("sign string may only contain '+' and '-'",
                              "position " + std::to_string(i + 1));
    }
  }
  return SignString(std::move(symbols));
}

SignString SignString::suffix(std::size_t k) const {
  if (k < 1 || k > symbols_.size() + 1)
    throw ValidationError("suffix index out of range");
  return SignString(std::vector<Sign>(symbols_.begin() + static_cast<long>(k - 1), symbols_.end()));
}

std::string SignString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Sign s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

SignString sign_string_from_mask(std::size_t n, unsigned long long mask) {
  std::vector<Sign> symbols(n, Sign::Plus);
  for (std::size_t k = 0; k < n; ++k)
    if ((mask >> k) & 1ULL) symbols[k] = Sign::Minus;
  return SignString(std::move(symbols));
}

std::vector<SignString> all_sign_strings(std::size_t n) {
  if (n >= 63) throw ResourceLimitExceeded("word length too large to enumerate");
  std::vector<SignString> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask)
    out.push_back(sign_string_from_mask(n, mask));
  return out;
}

ReducedString ReducedString::parse(std::string_view word) {
  std::vector<ReducedSymbol> symbols;
  symbols.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '+': symbols.push_back(ReducedSymbol::Plus); break;
      case '-': symbols.push_back(ReducedSymbol::Minus); break;
      case '0': symbols.push_back(ReducedSymbol::Zero); break;
      default:
        throw ValidationError("reduced string may only contain '+', '-' and '0'",
                              "position " + std::to_string(i + 1));
    }
  }
  return ReducedString(std::move(symbols));
}

std::size_t ReducedString::count(ReducedSymbol s) const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::string ReducedString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (ReducedSymbol s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

ReducedString reduce(const SignString& t) {
  const auto& in = t.symbols();
  std::vector<ReducedSymbol> out(in.size());
  std::vector<std::size_t> open_minus;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == Sign::Minus) {
      out[i] = ReducedSymbol::Minus;
      open_minus.push_back(i);
    } else if (!open_minus.empty()) {
      out[open_minus.back()] = ReducedSymbol::Zero;
      out[i] = ReducedSymbol::Zero;
      open_minus.pop_back();
    } else {
      out[i] = ReducedSymbol::Plus;
    }
  }
  return ReducedString(std::move(out));
}

std::size_t h_plus(const SignString& t) { return reduce(t).count(ReducedSymbol::Plus); }

std::size_t h_minus(const SignString& t) { return reduce(t).count(ReducedSymbol::Minus); }

long weight(const SignString& t) {
  const auto r = reduce(t);
  return static_cast<long>(r.count(ReducedSymbol::Minus)) -
         static_cast<long>(r.count(ReducedSymbol::Plus));
}

std::optional<Flip> e_tilde(const SignString& t) {
  const auto r = reduce(t);
  for (std::size_t k = t.size(); k >= 1; --k) {
    if (r.at(k) == ReducedSymbol::Plus) {
      SignString out = t;
      out.set(k, Sign::Minus);
      return Flip{std::move(out), k};
    }
  }
  return std::nullopt;
}

std::optional<Flip> f_tilde(const SignString& t) {
  const auto r = reduce(t);
  for (std::size_t k = 1; k <= t.size(); ++k) {
    if (r.at(k) == ReducedSymbol::Minus) {
      SignString out = t;
      out.set(k, Sign::Plus);
      return Flip{std::move(out), k};
    }
  }
  return std::nullopt;
}

std::size_t suffix_h_minus(const SignString& t, std::size_t k) {
  if (k < 1 || k > t.size() + 1)
    throw ValidationError("suffix index must satisfy 1 <= k <= n+1",
                          "k=" + std::to_string(k));
  return h_minus(t.suffix(k));
}

std::strong_ordering succ_compare(const SignString& a, const SignString& b) {
  if (a.size() != b.size())
    throw ValidationError("succ_compare requires words of equal length");
  for (std::size_t k = a.size(); k >= 1; --k) {
    if (a.at(k) != b.at(k))
      return a.at(k) == Sign::Minus ? std::strong_ordering::greater
                                    : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {

std::vector<Flip> flips_of(const SignString& t, Sign from) {
  std::vector<Flip> out;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    if (t.at(k) != from) continue;
    SignString s = t;
    s.set(k, flipped(from));
    out.push_back({std::move(s), k});
  }
  return out;
}

}  // namespace

std::vector<Flip> plus_flips(const SignString& t) { return flips_of(t, Sign::Plus); }

std::vector<Flip> minus_flips(const SignString& t) { return flips_of(t, Sign::Minus); }

}  // namespace kcrystal
