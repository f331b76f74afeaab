#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toradd/lattice.hpp"

namespace toradd {

/// Primitive ray generators p_1..p_m of a fan, in input order. Construction
/// checks that every ray is primitive and nonzero and that rays are pairwise
/// distinct.
class RaySystem {
 public:
  explicit RaySystem(std::vector<LatticeVector> rays);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rays_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return rays_[i]; }
  const std::vector<LatticeVector>& rays() const { return rays_; }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
};

/// A choice of n rays forming a lattice basis such that every other ray lies
/// in the negative octant: p_j = -sum_i alpha[j][i] p_{basis[i]} with
/// alpha >= 0. All indices refer to input order.
struct AdditiveStructure {
  std::vector<std::size_t> basis_indices;  // ascending
  std::vector<std::size_t> extra_indices;  // ascending
  /// alpha[j][i]: row j is the extra ray extra_indices[j], column i is the
  /// basis ray basis_indices[i].
  std::vector<std::vector<Integer>> alpha;
  Basis basis;
  /// dual[i] = p_{basis_indices[i]}^* in M coordinates.
  Basis dual;

  std::size_t dim() const { return basis_indices.size(); }
  std::size_t num_rays() const { return basis_indices.size() + extra_indices.size(); }

  /// Canonical order: basis rays first, then the extra rays. Entry k is the
  /// input index of the ray at canonical position k.
  std::vector<std::size_t> canonical_order() const;

  /// Position of input ray `i` in basis_indices, if it is a basis ray.
  std::optional<std::size_t> basis_position(std::size_t i) const;
};

/// The structure for a given basis subset, or nothing if the subset is not a
/// unimodular basis with the remaining rays in its negative octant.
std::optional<AdditiveStructure> structure_for_basis(const RaySystem& rs,
                                                     std::vector<std::size_t> basis_indices);

/// Every qualifying basis subset, in lexicographic order of index sets.
std::vector<AdditiveStructure> all_additive_structures(const RaySystem& rs);

/// The lexicographically smallest qualifying basis, or nothing. Throws
/// InputError when m < n or the rays do not span Q^n.
std::optional<AdditiveStructure> detect_additive_structure(const RaySystem& rs);

/// Rebuilds every extra ray from alpha and the basis.
bool reconstructs_rays(const RaySystem& rs, const AdditiveStructure& s);

using DivisorClass = std::vector<Integer>;

/// The Cl(X) = Z^{m-n} grading of the Cox ring. deg(x_j) of the j-th extra
/// ray is the j-th unit vector; basis variables get the alpha columns.
struct DegreeMap {
  std::size_t rank = 0;
  std::vector<DivisorClass> degrees;  // indexed by input ray index

  DivisorClass degree_of(std::span<const unsigned> exponents) const;
  DivisorClass zero() const { return DivisorClass(rank, Integer(0)); }
};

DegreeMap degree_map(const AdditiveStructure& s);

/// sum_i <p_i, w> deg(x_i) == 0.
bool exact_on(const RaySystem& rs, const DegreeMap& dm, const LatticeVector& w);

/// Preorder on the basis rays, indexed by basis position:
/// leq[a][b] iff alpha[j][a] <= alpha[j][b] for every extra ray j.
struct PreorderSummary {
  std::vector<std::vector<bool>> leq;
  bool trivial = true;
  std::vector<std::size_t> maximal;  // basis positions, ascending

  bool is_preorder() const;
};

PreorderSummary ray_preorder(const AdditiveStructure& s);

/// True iff no nonzero w has <p_i, w> >= 0 for all rays (exact
/// Fourier-Motzkin feasibility, 2n runs).
bool positively_spanning(const RaySystem& rs);

/// Same question answered from alpha: every column has a positive entry.
bool positively_spanning(const AdditiveStructure& s);

}  // namespace toradd
