#include "kcrystal/crystal_engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <thread>

#include "kcrystal/error.hpp"

namespace kcrystal {

std::optional<int> DepthCalculator::lookup(const Multipartition& m) const {
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  return std::nullopt;
}

int DepthCalculator::store(const Multipartition& m, int d) {
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(m, d).first->second;
}

std::size_t DepthCalculator::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

int DepthCalculator::depth(const Multipartition& m) {
  if (auto hit = lookup(m)) return *hit;
  int best = -1;
  // Only classes with a removable box can have h_minus > 0.
  for (const auto& z : removable_classes(params_, m)) {
    if (auto move = crystal_remove(params_, m, z)) best = std::max(best, depth(move->result));
  }
  return store(m, best + 1);
}

int depth(const Params& p, const Multipartition& m) {
  DepthCalculator calc(p);
  return calc.depth(m);
}

SupportDescriptor support(const Params& p, const Multipartition& m) {
  SupportDescriptor out;
  out.n = m.size();
  out.e = p.e();
  out.depth_i = depth(p, m);
  if (!out.e) {
    out.j = 0;
    out.j_max = 0;
  } else {
    out.j_max = (out.n - out.depth_i) / *out.e;
  }
  return out;
}

std::optional<std::size_t> CrystalGraph::index_of(const Multipartition& m) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), m);
  if (it == nodes.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t count_multipartitions_up_to(std::size_t ell, int max_boxes) {
  if (max_boxes < 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::size_t>(max_boxes);
  // Coefficients of prod_k (1 - x^k)^(-ell), saturating.
  std::vector<std::size_t> coeff(n + 1, 0);
  coeff[0] = 1;
  for (std::size_t copy = 0; copy < ell; ++copy)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t m = k; m <= n; ++m)
        coeff[m] = coeff[m] > kMax - coeff[m - k] ? kMax : coeff[m] + coeff[m - k];
  std::size_t total = 0;
  for (auto c : coeff) total = total > kMax - c ? kMax : total + c;
  return total;
}

CrystalGraph build_graph(const Params& p, const GraphOptions& options) {
  if (options.max_boxes < 0) throw ValidationError("max_boxes must be nonnegative", "max-boxes");
  if (options.classes)
    for (const auto& z : *options.classes) check_class(p, z);
  const std::size_t expected = count_multipartitions_up_to(p.ell(), options.max_boxes);
  if (expected > options.ceiling)
    throw ResourceLimitExceeded("graph would have " + std::to_string(expected) +
                                " nodes, above the ceiling of " +
                                std::to_string(options.ceiling));

  CrystalGraph g;
  g.nodes = multipartitions_up_to(p.ell(), options.max_boxes);

  auto edges_from = [&](std::size_t source) {
    std::vector<GraphEdge> out;
    const auto& m = g.nodes[source];
    if (m.size() >= options.max_boxes) return out;
    const auto classes = options.classes ? *options.classes : classes_meeting(p, m);
    for (const auto& z : classes) {
      auto move = crystal_add(p, m, z);
      if (!move) continue;
      auto target = g.index_of(move->result);
      if (!target) throw InvariantViolation("crystal_add left the enumerated node set");
      out.push_back({source, *target, z, move->box});
    }
    std::sort(out.begin(), out.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.cls < b.cls; });
    return out;
  };

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<GraphEdge>> per_node(g.nodes.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) per_node[i] = edges_from(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < g.nodes.size(); i += workers) per_node[i] = edges_from(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& list : per_node)
    g.edges.insert(g.edges.end(), list.begin(), list.end());
  return g;
}

std::vector<std::vector<std::size_t>> string_decomposition(const CrystalGraph& g,
                                                           const ZClass& z) {
  std::vector<std::optional<std::size_t>> next(g.nodes.size());
  std::vector<bool> has_prev(g.nodes.size(), false);
  for (const auto& e : g.edges) {
    if (e.cls != z) continue;
    if (next[e.source] || has_prev[e.target])
      throw InvariantViolation("class " + z.str() + " is not a partial bijection on the graph");
    next[e.source] = e.target;
    has_prev[e.target] = true;
  }
  std::vector<std::vector<std::size_t>> chains;
  std::vector<bool> seen(g.nodes.size(), false);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (has_prev[i]) continue;
    std::vector<std::size_t> chain;
    for (std::optional<std::size_t> cur = i; cur; cur = next[*cur]) {
      if (seen[*cur]) throw InvariantViolation("cycle in class " + z.str());
      seen[*cur] = true;
      chain.push_back(*cur);
    }
    chains.push_back(std::move(chain));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvariantViolation("cycle in class " + z.str());
  return chains;
}

}  // namespace kcrystal
