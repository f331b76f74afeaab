#pragma once

#include <cstddef>
#include <optional>

#include "toradd/rays.hpp"
#include "toradd/roots.hpp"

namespace toradd {

/// A maximal basis ray together with a different basis ray below it. Both
/// are input indices.
struct DominancePair {
  std::size_t maximal = 0;
  std::size_t dominated = 0;
};

struct UniquenessVerdict {
  /// R_i = {-p_i^*} for every basis ray.
  bool cond_roots = false;
  /// The positive system is exactly {-p_1^*, ..., -p_n^*}.
  bool cond_positive = false;
  /// The ray preorder is trivial.
  bool cond_preorder = false;
  bool unique = false;
  std::optional<DominancePair> evidence;
};

/// Evaluates the three conditions independently and requires them to agree
/// (InvariantViolation otherwise). On a negative verdict the evidence has a
/// maximal ray, ties broken by smallest index.
UniquenessVerdict uniqueness_verdict(const AdditiveStructure& s, const RootCatalog& catalog,
                                     const PreorderSummary& preorder);

/// Throws NoAdditiveAction when `s` is empty.
UniquenessVerdict uniqueness_verdict(const std::optional<AdditiveStructure>& s,
                                     const RootCatalog& catalog);

/// Smallest-index maximal ray that dominates another ray, with the smallest
/// such dominated ray. Empty iff the preorder is trivial.
std::optional<DominancePair> select_dominance_pair(const AdditiveStructure& s,
                                                   const PreorderSummary& preorder);

/// dim U == n
bool dimension_criterion(const RootCatalog& catalog, std::size_t n);

/// Surfaces only: some alpha row has alpha_1 > alpha_2 and another has
/// alpha_1 < alpha_2. Throws DimensionError unless n == 2.
bool surface_wideness(const AdditiveStructure& s);

/// Every projection onto a pair of basis coordinates is wide.
bool projection_wideness_all_pairs(const AdditiveStructure& s);

}  // namespace toradd
