#pragma once

// Exhaustive verification suites. Each suite stops at the first
// counterexample and reports it.

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "kcrystal/charged_params.hpp"
#include "kcrystal/crystal_engine.hpp"

namespace kcrystal::verify {

struct Report {
  std::string suite;
  nlohmann::json bounds = nlohmann::json::object();
  bool pass = true;
  std::optional<std::string> counterexample;
  std::size_t checked = 0;  // number of elementary checks performed
};

struct Limits {
  std::size_t string_ceiling = kDefaultStringCeiling;
  std::size_t node_ceiling = kDefaultNodeCeiling;
};

// Crystal axioms on all 2^n words.
Report axioms(std::size_t n, const Limits& lim = {});
// Random rewriting orders against reduce(), for every word of length <= n.
Report confluence(std::size_t n, std::size_t trials, std::uint64_t seed, const Limits& lim = {});
// The three claims about h^l_- under the standard-filtration flips, for all
// words of length n.
Report comb_lemma(std::size_t n, const Limits& lim = {});

// The multipartition suites run over every multipartition of at most
// max_boxes boxes and every class meeting it.

// Adding a z-box keeps B_z (kind flipped at that box) and leaves every class
// other than z +- 1 untouched.
Report boundary_invariance(const Params& p, int max_boxes, const Limits& lim = {});
// d_diff of distinct same-class boundary boxes is a nonzero integer.
Report d_separation(const Params& p, int max_boxes, const Limits& lim = {});
// crystal_add / crystal_remove against the naive transcription.
Report realization_consistency(const Params& p, int max_boxes, const Limits& lim = {});
// crystal_remove after crystal_add is the identity and vice versa; class
// members realise every sign string.
Report inverse_pairing(const Params& p, int max_boxes, const Limits& lim = {});
// Shifting all charges by sigma in [-sigma_range, sigma_range] relabels the
// classes and preserves every operator result and depth.
Report charge_shift(const Params& p, int max_boxes, int sigma_range = 2, const Limits& lim = {});
// ell = 1, irrational kappa: depth(m) == |m|.
Report depth_irrational(int max_boxes, const Limits& lim = {});
// GL_n operators on all strictly decreasing n-tuples with entries in
// [-entry_bound, entry_bound], every residue i, against the naive rules.
Report gl_realization(std::size_t n, int p, int entry_bound, const Limits& lim = {});
// Graph edges per class form disjoint directed paths; counts agree across
// repeated runs and worker counts.
Report graph_paths(const Params& p, int max_boxes, unsigned workers = 4, const Limits& lim = {});
// Numeric conversions: unit modulus, exact c_0, charge-shift invariance.
Report conversions(const Params& p, double tol = 1e-12);

}  // namespace kcrystal::verify
