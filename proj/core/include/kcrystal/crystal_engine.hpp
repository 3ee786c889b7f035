#pragma once

// Whole-crystal computations on multipartitions: depth, support strata,
// crystal graphs and their sl2-strings.

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kcrystal/charged_params.hpp"
#include "kcrystal/realizations.hpp"
#include "kcrystal/young.hpp"

namespace kcrystal {

inline constexpr std::size_t kDefaultNodeCeiling = 2'000'000;
inline constexpr std::size_t kDefaultStringCeiling = std::size_t{1} << 14;

// Depth D(m): 0 when no class admits crystal_remove, else
// 1 + max over classes z of D(crystal_remove(m, z)).
//
// Memoized per Params. The memo may be shared between threads; insertion is
// insert-if-absent under a lock, so concurrent callers agree on every value.
class DepthCalculator {
 public:
  explicit DepthCalculator(Params p) : params_(std::move(p)) {}

  const Params& params() const noexcept { return params_; }
  int depth(const Multipartition& m);
  std::size_t memo_size() const;

 private:
  std::optional<int> lookup(const Multipartition& m) const;
  int store(const Multipartition& m, int d);

  Params params_;
  mutable std::mutex mutex_;
  std::unordered_map<Multipartition, int> memo_;
};

int depth(const Params& p, const Multipartition& m);

// Support W.h_{i,j} of the simple module labelled by m. i is the depth. j is
// 0 when e is infinite; otherwise only its range 0 <= j <= (n - i) / e is
// known and j is left undetermined.
struct SupportDescriptor {
  int n = 0;
  std::optional<int> e;  // nullopt = infinity
  int depth_i = 0;
  std::optional<int> j;  // set iff determined
  int j_max = 0;

  bool determined() const noexcept { return j.has_value(); }
  // Support is {0}, i.e. the module is finite dimensional.
  bool finite_dimensional() const noexcept { return depth_i == 0 && j == 0; }
};

SupportDescriptor support(const Params& p, const Multipartition& m);

struct GraphEdge {
  std::size_t source;  // node index
  std::size_t target;
  ZClass cls;
  BoxRef box;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
  std::vector<Multipartition> nodes;  // by size, then lexicographic
  std::vector<GraphEdge> edges;       // by source, then class

  std::optional<std::size_t> index_of(const Multipartition& m) const;
};

struct GraphOptions {
  int max_boxes = 0;
  // Restrict to these classes; all classes when unset.
  std::optional<std::vector<ZClass>> classes;
  std::size_t ceiling = kDefaultNodeCeiling;
  unsigned workers = 1;
};

// Nodes: all multipartitions with <= max_boxes boxes. Edges: crystal_add
// wherever the target is a node. Output does not depend on `workers`.
// Throws ResourceLimitExceeded when the node count would exceed the ceiling.
CrystalGraph build_graph(const Params& p, const GraphOptions& options);

// Number of level-ell multipartitions with at most max_boxes boxes.
std::size_t count_multipartitions_up_to(std::size_t ell, int max_boxes);

// Maximal crystal_add chains in class z, each listed from its lowest node.
// Every node lies on exactly one chain.
std::vector<std::vector<std::size_t>> string_decomposition(const CrystalGraph& g, const ZClass& z);

}  // namespace kcrystal
