#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toradd/derivation.hpp"
#include "toradd/fan_file.hpp"
#include "toradd/rays.hpp"
#include "toradd/roots.hpp"
#include "toradd/uniqueness.hpp"
#include "toradd/witness.hpp"

namespace toradd {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct AnalysisOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Nilpotency cap; default_nilpotency_cap() when unset.
  std::optional<std::size_t> cap;
  /// Build the witness tuples and separation certificate when the action is
  /// not unique.
  bool witness = true;
  std::size_t samples = 100;
};

struct AnalysisReport {
  std::optional<std::string> label;
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  std::uint64_t seed = kDefaultSeed;

  bool existence = false;
  std::optional<AdditiveStructure> structure;
  std::optional<DegreeMap> degrees;
  std::optional<PreorderSummary> preorder;

  RootCatalog roots;
  std::size_t dim_unipotent = 0;
  std::vector<CompleteCollection> collections;

  std::optional<UniquenessVerdict> uniqueness;
  std::optional<bool> dimension_criterion;
  std::optional<bool> surface_wide;
  std::optional<bool> projection_wide;

  std::size_t cap = 0;
  std::optional<WitnessTuples> witness;
  std::optional<SeparationCertificate> certificate;
};

/// Runs the whole pipeline. Throws InputError when the file does not assert
/// completeness or the rays do not positively span, and InvariantViolation
/// when any cross-check fails.
AnalysisReport analyze(const FanFile& ff, const AnalysisOptions& options = {});

/// Every cross-module consistency check, re-run on a finished report. Returns
/// one message per failure.
std::vector<std::string> report_invariant_violations(const AnalysisReport& r);

}  // namespace toradd
