#include "kcrystal_oracle/naive.hpp"

#include <algorithm>

namespace kcrystal_oracle {

std::vector<std::pair<std::size_t, std::size_t>> applicable_rewrites(const Word& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a] != '-') continue;
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[b] == '+') {
        out.emplace_back(a, b);
        break;
      }
      if (w[b] != '0') break;
    }
  }
  return out;
}

Word reduce_by_rewriting(Word w) {
  for (;;) {
    auto pairs = applicable_rewrites(w);
    if (pairs.empty()) return w;
    w[pairs.front().first] = '0';
    w[pairs.front().second] = '0';
  }
}

Word reduce_randomly(Word w, std::mt19937_64& rng) {
  for (;;) {
    auto pairs = applicable_rewrites(w);
    if (pairs.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const auto [a, b] = pairs[pick(rng)];
    w[a] = '0';
    w[b] = '0';
  }
}

namespace {

void terminal_rec(const Word& w, std::set<Word>& visited, std::set<Word>& out) {
  if (!visited.insert(w).second) return;
  auto pairs = applicable_rewrites(w);
  if (pairs.empty()) {
    out.insert(w);
    return;
  }
  for (auto [a, b] : pairs) {
    Word next = w;
    next[a] = '0';
    next[b] = '0';
    terminal_rec(next, visited, out);
  }
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool inside(const Rows& m, int c, int row, int col) {
  if (row < 1 || col < 1) return false;
  const auto& r = m[static_cast<std::size_t>(c)];
  if (static_cast<std::size_t>(row) > r.size()) return false;
  return col <= r[static_cast<std::size_t>(row) - 1];
}

struct Candidate {
  Box box;
  bool addable;
  std::int64_t scaled_d;  // d times the kappa denominator; -component if irrational
};

std::vector<Candidate> scan_boundary(const Params& p, const Rows& m, long label) {
  std::int64_t num = p.num, den = p.den;
  if (!p.irrational) {
    const auto g = gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  long charge_sum = 0;
  for (int s : p.charges) charge_sum += s;
  const long ell = static_cast<long>(p.charges.size());

  std::vector<Candidate> found;
  for (int c = 0; c < static_cast<int>(m.size()); ++c) {
    const auto& r = m[static_cast<std::size_t>(c)];
    const int rows = static_cast<int>(r.size());
    const int cols = rows ? r[0] : 0;
    for (int row = 1; row <= rows + 1; ++row) {
      for (int col = 1; col <= cols + 1; ++col) {
        const bool in = inside(m, c, row, col);
        const bool addable = !in && (col == 1 || inside(m, c, row, col - 1)) &&
                             (row == 1 || inside(m, c, row - 1, col));
        const bool removable = in && !inside(m, c, row, col + 1) && !inside(m, c, row + 1, col);
        if (!addable && !removable) continue;
        const long shifted = p.charges[static_cast<std::size_t>(c)] + col - row;
        bool member;
        if (p.irrational) {
          member = shifted == label;
        } else {
          long diff = (shifted - label) % den;
          member = diff == 0;
        }
        if (!member) continue;
        const std::int64_t scaled =
            p.irrational ? -c : num * (ell * shifted - charge_sum) - static_cast<std::int64_t>(c) * den;
        found.push_back({{c, row, col}, addable, scaled});
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.scaled_d < b.scaled_d; });
  return found;
}

Word word_of(const std::vector<Candidate>& b) {
  Word w;
  for (const auto& c : b) w.push_back(c.addable ? '+' : '-');
  return w;
}

}  // namespace

std::set<Word> all_terminal_forms(const Word& w) {
  std::set<Word> visited, out;
  terminal_rec(w, visited, out);
  return out;
}

std::optional<Move> naive_add(const Params& p, const Rows& m, long label) {
  const auto b = scan_boundary(p, m, label);
  const Word red = reduce_by_rewriting(word_of(b));
  for (std::size_t k = red.size(); k-- > 0;) {
    if (red[k] != '+') continue;
    Rows out = m;
    const Box x = b[k].box;
    auto& r = out[static_cast<std::size_t>(x.component)];
    if (static_cast<int>(r.size()) < x.row) r.resize(static_cast<std::size_t>(x.row), 0);
    r[static_cast<std::size_t>(x.row) - 1] += 1;
    return Move{out, x};
  }
  return std::nullopt;
}

std::optional<Move> naive_remove(const Params& p, const Rows& m, long label) {
  const auto b = scan_boundary(p, m, label);
  const Word red = reduce_by_rewriting(word_of(b));
  for (std::size_t k = 0; k < red.size(); ++k) {
    if (red[k] != '-') continue;
    Rows out = m;
    const Box x = b[k].box;
    auto& r = out[static_cast<std::size_t>(x.component)];
    r[static_cast<std::size_t>(x.row) - 1] -= 1;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return Move{out, x};
  }
  return std::nullopt;
}

namespace {

bool same(long a, long b, int p) { return p == 0 ? a == b : (a - b) % p == 0; }

std::optional<std::vector<long>> gl_step(const std::vector<long>& lambda, long i, int p,
                                         bool add) {
  std::vector<std::size_t> pos;
  Word w;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (same(lambda[j], i, p)) {
      pos.push_back(j);
      w.push_back('+');
    } else if (same(lambda[j], i + 1, p)) {
      pos.push_back(j);
      w.push_back('-');
    }
  }
  const Word red = reduce_by_rewriting(w);
  if (add) {
    for (std::size_t k = red.size(); k-- > 0;)
      if (red[k] == '+') {
        auto out = lambda;
        out[pos[k]] += 1;
        return out;
      }
  } else {
    for (std::size_t k = 0; k < red.size(); ++k)
      if (red[k] == '-') {
        auto out = lambda;
        out[pos[k]] -= 1;
        return out;
      }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<long>> naive_gl_add(const std::vector<long>& lambda, long i, int p) {
  return gl_step(lambda, i, p, true);
}

std::optional<std::vector<long>> naive_gl_remove(const std::vector<long>& lambda, long i, int p) {
  return gl_step(lambda, i, p, false);
}

}  // namespace kcrystal_oracle
