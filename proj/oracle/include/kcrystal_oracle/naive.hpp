#pragma once

// Deliberately naive transcriptions of the crystal rules, written without
// the kcrystal library. Used only as an independent reference in the
// verification suites and tests.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace kcrystal_oracle {

// Words over '+', '-', '0'.
using Word = std::string;

// Applicable rewrites: pairs (a, b), 0-based, with w[a] == '-', w[b] == '+'
// and only '0' in between.
std::vector<std::pair<std::size_t, std::size_t>> applicable_rewrites(const Word& w);

// Rewrites until stuck, always taking the first applicable pair.
Word reduce_by_rewriting(Word w);
// Rewrites until stuck, choosing uniformly among applicable pairs.
Word reduce_randomly(Word w, std::mt19937_64& rng);
// Every terminal word reachable by some rewriting order.
std::set<Word> all_terminal_forms(const Word& w);

struct Params {
  std::int64_t num = 1;
  std::int64_t den = 2;
  bool irrational = false;
  std::vector<int> charges;
};

struct Box {
  int component;
  int row;
  int col;
};

using Rows = std::vector<std::vector<int>>;

struct Move {
  Rows result;
  Box box;
};

// Class label: residue of the shifted content mod the reduced denominator
// (rational), or the shifted content (irrational).
std::optional<Move> naive_add(const Params& p, const Rows& m, long label);
std::optional<Move> naive_remove(const Params& p, const Rows& m, long label);

// GL_n: lambda strictly decreasing, p = 0 or a prime.
std::optional<std::vector<long>> naive_gl_add(const std::vector<long>& lambda, long i, int p);
std::optional<std::vector<long>> naive_gl_remove(const std::vector<long>& lambda, long i, int p);

}  // namespace kcrystal_oracle
