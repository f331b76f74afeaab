#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toradd/derivation.hpp"
#include "toradd/rays.hpp"
#include "toradd/roots.hpp"
#include "toradd/uniqueness.hpp"

namespace toradd {

enum class Check { unchecked, verified, refuted };

std::string to_string(Check c);

/// Ordered n-tuple of derivations. Slot k is expected to act on the variable
/// slot_vars[k] (triangularity is checked in this order).
struct DerivationTuple {
  std::vector<Derivation> derivations;
  std::vector<std::size_t> slot_vars;
  Check commuting = Check::unchecked;
  Check locally_nilpotent = Check::unchecked;
  Check triangular = Check::unchecked;
  Check open_orbit = Check::unchecked;
  std::vector<std::string> failures;

  bool certified() const {
    return commuting == Check::verified && locally_nilpotent == Check::verified &&
           triangular == Check::verified && open_orbit == Check::verified;
  }
};

/// Sets the four flags. A refuted flag records the failing slot or pair in
/// `failures`; a nilpotency chain that exhausts `cap` leaves that flag
/// unchecked.
DerivationTuple verify_additive_tuple(DerivationTuple t, std::size_t cap);

/// (d_{e_1}, ..., d_{e_n}) for a complete collection, slots on its basis.
DerivationTuple collection_tuple(const RaySystem& rs, const DegreeMap& dm,
                                 const CompleteCollection& cc);

/// The two tuples that separate a non-normalized additive action from the
/// normalized one. Slot order puts the maximal ray first and a ray below it
/// second; `na` is the normalized tuple, `nna` replaces its second slot by
/// d_{-p_2^*} + d_{-p_1^* + d p_2^*}.
struct WitnessTuples {
  DominancePair pair;
  std::vector<std::size_t> slot_order;
  Integer d;
  DerivationTuple na;
  DerivationTuple nna;
};

/// Throws UniquenessHolds for a trivial preorder and InvariantViolation if
/// either tuple fails certification.
WitnessTuples build_witness_tuples(const RaySystem& rs, const AdditiveStructure& s,
                                   const RootCatalog& catalog, const PreorderSummary& preorder,
                                   std::size_t cap);

/// Rank of the matrix whose k-th column is D_k(f) in `component_basis`.
/// Throws InputError if f is not in the span of the basis.
std::size_t annihilator_rank(const DerivationTuple& t, const Polynomial& f,
                             const std::vector<Monomial>& component_basis);

/// A 2x2 minor of the symbolic matrix above, as a quadratic form in the
/// coefficients l1..lk of f in the component basis.
struct Minor {
  std::size_t row1 = 0, row2 = 0;
  std::size_t col1 = 0, col2 = 0;
  Polynomial value;
};

std::vector<Minor> minor_equations(const DerivationTuple& t,
                                   const std::vector<Monomial>& component_basis);

struct SeparationCertificate {
  DivisorClass distinguished_class;
  std::size_t witness_variable = 0;
  std::vector<Monomial> component;
  std::size_t rank_na = 0;
  std::size_t rank_nna = 0;
  bool member_in_na = false;
  bool member_in_nna = false;
  std::size_t samples_checked = 0;

  bool valid() const { return member_in_na && !member_in_nna; }
};

/// Shows that the witness variable lies in the rank <= 1 locus for the
/// normalized tuple but not for the other one, then samples random points to
/// confirm that the loci agree on the slice where the witness coefficient
/// vanishes and on every other variable component, and that no point off
/// the slice is in the second locus. Throws InvariantViolation on failure.
SeparationCertificate separating_invariant(const RaySystem& rs, const DegreeMap& dm,
                                           const WitnessTuples& w, std::uint64_t seed,
                                           std::size_t samples = 100);

/// Builds the witness tuples with the default nilpotency cap, then certifies.
SeparationCertificate separating_invariant(const RaySystem& rs, const AdditiveStructure& s,
                                           const RootCatalog& catalog,
                                           const PreorderSummary& preorder, std::uint64_t seed);

}  // namespace toradd
