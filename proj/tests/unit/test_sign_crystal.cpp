#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "kcrystal/error.hpp"
#include "kcrystal/sign_crystal.hpp"
#include "kcrystal_oracle/naive.hpp"

using namespace kcrystal;

namespace {

SignString S(const char* w) { return SignString::parse(w); }

// Position n is the most significant bit and '-' counts as 1; the succ order
// is then the order of the integers.
unsigned long long succ_key(const SignString& t) {
  unsigned long long key = 0;
  for (std::size_t k = 1; k <= t.size(); ++k)
    if (t.at(k) == Sign::Minus) key |= 1ULL << (k - 1);
  return key;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce(S("++-")).str() == "++-");
  CHECK(reduce(S("-+")).str() == "00");
  CHECK(reduce(S("-+--++")).str() == "000000");
  CHECK(reduce(S("")).str().empty());
}

TEST_CASE("reduce agrees with every rewriting order on the worked example") {
  const auto forms = kcrystal_oracle::all_terminal_forms("-+--++");
  REQUIRE(forms.size() == 1);
  CHECK(*forms.begin() == "000000");
}

TEST_CASE("statistics examples") {
  CHECK(h_plus(S("++-")) == 2);
  CHECK(h_minus(S("++-")) == 1);
  CHECK(h_plus(S("")) == 0);
  CHECK(h_minus(S("")) == 0);
  CHECK(h_plus(S("-+--++")) == 0);
  CHECK(h_minus(S("-+--++")) == 0);
  CHECK(weight(S("++-")) == -1);
  CHECK(weight(S("")) == 0);
  CHECK(weight(S("--")) == 2);
}

TEST_CASE("e_tilde and f_tilde examples") {
  auto e = e_tilde(S("+"));
  REQUIRE(e);
  CHECK(e->result == S("-"));
  CHECK(e->index == 1);

  e = e_tilde(S("-++"));
  REQUIRE(e);
  CHECK(e->result == S("-+-"));
  CHECK(e->index == 3);

  CHECK_FALSE(e_tilde(S("--")));

  auto f = f_tilde(S("-"));
  REQUIRE(f);
  CHECK(f->result == S("+"));
  CHECK(f->index == 1);

  f = f_tilde(S("+--"));
  REQUIRE(f);
  CHECK(f->result == S("++-"));
  CHECK(f->index == 2);

  CHECK_FALSE(f_tilde(S("++")));
}

TEST_CASE("suffix_h_minus") {
  CHECK(suffix_h_minus(S("-+-"), 2) == 1);
  CHECK(suffix_h_minus(S("-+-"), 1) == 1);
  CHECK(suffix_h_minus(S("-+-"), 4) == 0);
  CHECK(suffix_h_minus(S(""), 1) == 0);
  CHECK_THROWS_AS(suffix_h_minus(S("-+-"), 0), ValidationError);
  CHECK_THROWS_AS(suffix_h_minus(S("-+-"), 5), ValidationError);
}

TEST_CASE("suffix_h_minus is weakly decreasing in k") {
  for (std::size_t n = 0; n <= 10; ++n)
    for (const auto& t : all_sign_strings(n))
      for (std::size_t k = 1; k <= n; ++k)
        REQUIRE(suffix_h_minus(t, k) >= suffix_h_minus(t, k + 1));
}

TEST_CASE("succ_compare examples") {
  CHECK(succ_compare(S("-+"), S("++")) == std::strong_ordering::greater);
  CHECK(succ_compare(S("+-"), S("-+")) == std::strong_ordering::greater);
  CHECK(succ_compare(S("-+-"), S("-+-")) == std::strong_ordering::equal);
  CHECK(succ_compare(S("++"), S("-+")) == std::strong_ordering::less);
  CHECK_THROWS_AS(succ_compare(S("+"), S("++")), ValidationError);
}

TEST_CASE("succ_compare is the total order of the binary key") {
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto all = all_sign_strings(n);
    for (const auto& a : all)
      for (const auto& b : all)
        REQUIRE(succ_compare(a, b) == (succ_key(a) <=> succ_key(b)));
  }
}

TEST_CASE("flip lists") {
  const auto pf = plus_flips(S("+-+"));
  REQUIRE(pf.size() == 2);
  CHECK(pf[0] == Flip{S("--+"), 1});
  CHECK(pf[1] == Flip{S("+--"), 3});
  CHECK(minus_flips(S("++")).empty());

  const auto mf = minus_flips(S("-+-"));
  REQUIRE(mf.size() == 2);
  CHECK(mf[0] == Flip{S("++-"), 1});
  CHECK(mf[1] == Flip{S("-++"), 3});
}

TEST_CASE("plus flips ascend and minus flips descend in succ order") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& t : all_sign_strings(n)) {
      const auto pf = plus_flips(t);
      for (std::size_t k = 1; k < pf.size(); ++k)
        REQUIRE(succ_compare(pf[k].result, pf[k - 1].result) == std::strong_ordering::greater);
      const auto mf = minus_flips(t);
      for (std::size_t k = 1; k < mf.size(); ++k)
        REQUIRE(succ_compare(mf[k].result, mf[k - 1].result) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("reduced form invariants") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& t : all_sign_strings(n)) {
      const auto r = reduce(t);
      REQUIRE(r.size() == t.size());
      bool seen_minus = false;
      std::size_t zero_plus = 0, zero_minus = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        const auto s = r.at(k);
        if (s == ReducedSymbol::Zero) {
          (t.at(k) == Sign::Plus ? zero_plus : zero_minus)++;
          continue;
        }
        REQUIRE(static_cast<char>(s) == static_cast<char>(t.at(k)));
        if (s == ReducedSymbol::Minus) seen_minus = true;
        if (s == ReducedSymbol::Plus) REQUIRE_FALSE(seen_minus);
      }
      REQUIRE(zero_plus == zero_minus);
    }
  }
}

TEST_CASE("confluence: every rewriting order reaches reduce(t), n <= 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& t : all_sign_strings(n)) {
      const auto forms = kcrystal_oracle::all_terminal_forms(t.str());
      REQUIRE(forms.size() == 1);
      REQUIRE(*forms.begin() == reduce(t).str());
    }
  }
}

TEST_CASE("confluence beyond exhaustive range, random orders") {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 13 + static_cast<std::size_t>(trial % 28);
    std::vector<Sign> sym(n);
    for (auto& s : sym) s = coin(rng) ? Sign::Minus : Sign::Plus;
    const SignString t(sym);
    for (int k = 0; k < 10; ++k)
      REQUIRE(kcrystal_oracle::reduce_randomly(t.str(), rng) == reduce(t).str());
  }
}

TEST_CASE("crystal axioms, exhaustive n <= 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& t : all_sign_strings(n)) {
      const long plus = static_cast<long>(std::count(t.symbols().begin(), t.symbols().end(), Sign::Plus));
      const long minus = static_cast<long>(n) - plus;
      REQUIRE(weight(t) == static_cast<long>(h_minus(t)) - static_cast<long>(h_plus(t)));
      REQUIRE(weight(t) == minus - plus);
      const auto e = e_tilde(t);
      const auto f = f_tilde(t);
      REQUIRE(e.has_value() == (h_plus(t) > 0));
      REQUIRE(f.has_value() == (h_minus(t) > 0));
      if (e) {
        REQUIRE(f_tilde(e->result)->result == t);
        REQUIRE(h_plus(e->result) + 1 == h_plus(t));
        REQUIRE(h_minus(e->result) == h_minus(t) + 1);
        REQUIRE(weight(e->result) == weight(t) + 2);
      }
      if (f) REQUIRE(e_tilde(f->result)->result == t);
    }
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(SignString::parse("+x-"), ValidationError);
  CHECK_THROWS_AS(ReducedString::parse("+1"), ValidationError);
  CHECK(ReducedString::parse("0+-").str() == "0+-");
}
