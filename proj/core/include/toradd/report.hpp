#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toradd/analysis.hpp"

namespace toradd {

// Plain-data mirror of the structured report. Ray, variable and slot indices
// are 1-based; integers are stored exactly.

using IntegerRow = std::vector<Integer>;

struct RootEntryDoc {
  std::size_t ray = 0;
  IntegerRow vector;
  std::string notation;

  friend bool operator==(const RootEntryDoc&, const RootEntryDoc&) = default;
};

struct StructureDoc {
  std::vector<std::size_t> basis;
  std::vector<std::size_t> extra;
  std::vector<std::size_t> canonical_order;
  std::vector<IntegerRow> dual;

  friend bool operator==(const StructureDoc&, const StructureDoc&) = default;
};

struct RootsDoc {
  std::vector<std::vector<IntegerRow>> per_ray;
  std::vector<RootEntryDoc> semisimple;
  std::vector<RootEntryDoc> unipotent;
  std::optional<IntegerRow> regularizing_vector;
  std::vector<RootEntryDoc> positive;

  friend bool operator==(const RootsDoc&, const RootsDoc&) = default;
};

struct CollectionDoc {
  std::vector<std::size_t> basis;
  std::vector<IntegerRow> roots;

  friend bool operator==(const CollectionDoc&, const CollectionDoc&) = default;
};

struct EvidenceDoc {
  std::size_t maximal = 0;
  std::size_t dominated = 0;

  friend bool operator==(const EvidenceDoc&, const EvidenceDoc&) = default;
};

struct UniquenessDoc {
  bool cond_roots = false;
  bool cond_positive = false;
  bool cond_preorder = false;
  bool unique = false;
  std::optional<EvidenceDoc> evidence;
  std::vector<std::size_t> maximal_rays;
  bool dimension_criterion = false;
  bool projection_wide = false;
  std::optional<bool> surface_wide;

  friend bool operator==(const UniquenessDoc&, const UniquenessDoc&) = default;
};

struct TupleDoc {
  std::vector<std::string> derivations;
  std::vector<std::size_t> slot_vars;
  std::string commuting;
  std::string locally_nilpotent;
  std::string triangular;
  std::string open_orbit;
  std::vector<std::string> failures;

  friend bool operator==(const TupleDoc&, const TupleDoc&) = default;
};

struct TuplesDoc {
  EvidenceDoc pair;
  std::vector<std::size_t> slot_order;
  Integer d;
  std::size_t cap = 0;
  TupleDoc na;
  TupleDoc nna;

  friend bool operator==(const TuplesDoc&, const TuplesDoc&) = default;
};

struct MinorDoc {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::string value;

  friend bool operator==(const MinorDoc&, const MinorDoc&) = default;
};

struct CertificateDoc {
  IntegerRow distinguished_class;
  std::size_t witness_variable = 0;
  std::vector<std::string> component;
  std::size_t rank_na = 0;
  std::size_t rank_nna = 0;
  bool member_in_na = false;
  bool member_in_nna = false;
  std::size_t samples_checked = 0;
  std::vector<MinorDoc> minors_nna;

  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

struct WitnessDoc {
  TuplesDoc tuples;
  CertificateDoc certificate;

  friend bool operator==(const WitnessDoc&, const WitnessDoc&) = default;
};

struct ReportDocument {
  std::string schema;
  std::optional<std::string> label;
  std::size_t dim = 0;
  std::vector<IntegerRow> rays;
  std::uint64_t seed = 0;
  bool existence = false;
  std::optional<StructureDoc> structure;
  std::optional<std::vector<IntegerRow>> alpha;
  RootsDoc roots;
  std::size_t dim_unipotent = 0;
  std::vector<CollectionDoc> collections;
  std::optional<UniquenessDoc> uniqueness;
  std::optional<WitnessDoc> witness;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline constexpr const char* kReportSchema = "toradd-report/1";

ReportDocument to_document(const AnalysisReport& r);

/// Deterministic JSON text of a document, two-space indented, with a
/// trailing newline.
std::string serialize(const ReportDocument& doc);

/// Parses structured output back into a document. Throws InputError on any
/// missing, mistyped or unknown field.
ReportDocument parse_report(std::string_view text);

enum class ReportFormat { text, structured };

std::string emit_structured(const AnalysisReport& r);
std::string emit_text(const AnalysisReport& r);
std::string emit_report(const AnalysisReport& r, ReportFormat format);

/// Writes a character in the basis dual to `basis_rays`, naming the dual
/// vectors by the 1-based input indices in `labels`: "-p1* + p2*", "2p3*",
/// "0". Negative terms come first.
std::string dual_notation(const std::vector<LatticeVector>& basis_rays,
                          const std::vector<std::size_t>& labels, const LatticeVector& e);

}  // namespace toradd
