#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toradd/lattice.hpp"
#include "toradd/rays.hpp"

namespace toradd {

enum class RootKind { semisimple, unipotent };

/// A character e with <p_i, e> = -1 for its ray i and <p_j, e> >= 0 for all
/// other rays. The vector determines the ray, so roots compare by vector.
struct DemazureRoot {
  std::size_t ray = 0;
  LatticeVector vector;
  RootKind kind = RootKind::unipotent;
};

using RootSets = std::vector<std::vector<LatticeVector>>;

struct RootCatalog {
  /// per_ray[i] is the sorted root set of ray i (input order).
  RootSets per_ray;
  std::vector<DemazureRoot> semisimple;
  std::vector<DemazureRoot> unipotent;
  /// Regularizing vector and positive system; present when the rays carry an
  /// additive structure.
  std::optional<LatticeVector> u;
  std::vector<DemazureRoot> positive;

  std::size_t size() const { return semisimple.size() + unipotent.size(); }
  std::optional<std::size_t> ray_of(const LatticeVector& e) const;
  bool contains(const LatticeVector& e) const { return ray_of(e).has_value(); }
};

struct PositiveSystem {
  LatticeVector u;
  std::vector<DemazureRoot> roots;
};

/// The n roots -p_1^*, ..., -p_n^* of one admissible basis.
struct CompleteCollection {
  std::vector<std::size_t> basis_indices;
  std::vector<LatticeVector> roots;
};

/// Root sets from a depth-first search in dual-basis coordinates, using the
/// alpha bounds of the structure.
RootSets roots_in_basis(const RaySystem& rs, const AdditiveStructure& s);

/// Root sets from Fourier-Motzkin bounds on each root polytope. Works for any
/// positively spanning ray system; throws InputError on an unbounded polytope.
RootSets roots_by_elimination(const RaySystem& rs);

/// Scans the box of max-norm <= box_radius. Test oracle.
RootSets brute_force_roots(const RaySystem& rs, unsigned box_radius);

/// Full catalog. Throws InputError if the rays do not positively span.
RootCatalog enumerate_roots(const RaySystem& rs,
                            const std::optional<AdditiveStructure>& s = std::nullopt);

/// Splits the root sets into semisimple and unipotent roots.
RootCatalog classify_roots(RootSets per_ray);

/// u = -sum_l l * p_l over the basis, checked against the semisimple roots;
/// falls back to exhaustive search when the check fails.
PositiveSystem positive_system(const RootCatalog& catalog, const AdditiveStructure& s);

/// Any u of max-norm <= radius that regularizes the semisimple roots with its
/// positive half inside the basis root sets.
std::optional<LatticeVector> search_regularizing_vector(const RootCatalog& catalog,
                                                        const AdditiveStructure& s,
                                                        unsigned radius);

bool is_valid_regularizer(const RootCatalog& catalog, const AdditiveStructure& s,
                          const LatticeVector& u);

/// |U| + |S| / 2
std::size_t unipotent_dimension(const RootCatalog& catalog);

std::vector<CompleteCollection> complete_collections(const RaySystem& rs,
                                                     const RootCatalog& catalog);

/// Checks the structural facts about roots of a ray system with an additive
/// structure: shape of the basis root sets, shape of the extra root sets,
/// location of unipotent roots, the comparison criterion for -p_a^* + p_b^*,
/// and negation symmetry of the semisimple roots. Returns one message per
/// failure.
std::vector<std::string> root_invariant_violations(const RaySystem& rs,
                                                   const AdditiveStructure& s,
                                                   const RootCatalog& catalog);

}  // namespace toradd
