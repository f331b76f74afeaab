#include "toradd/analysis.hpp"

#include <algorithm>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

const char* const kCompleteness =
    "completeness assumed: only the rays are given; the fan is taken to be complete";
const char* const kPairingRoots =
    "pairing-only root definition: roots are characters with <p_i,e> = -1 and "
    "<p_j,e> >= 0, which is the full definition for complete fans";

}  // namespace

AnalysisReport analyze(const FanFile& ff, const AnalysisOptions& options) {
  if (!ff.assume_complete) {
    throw InputError("fan file does not set assume_complete; completeness cannot be checked");
  }
  AnalysisReport r;
  r.label = ff.label;
  r.dim = ff.dim;
  r.rays = ff.rays;
  r.warnings = ff.warnings;
  r.assumptions = {kCompleteness, kPairingRoots};
  r.seed = options.seed;

  const RaySystem rs(ff.rays);
  if (!positively_spanning(rs)) throw InputError("not a complete fan's ray set");

  r.structure = detect_additive_structure(rs);
  r.existence = r.structure.has_value();
  r.roots = enumerate_roots(rs, r.structure);
  r.dim_unipotent = unipotent_dimension(r.roots);
  r.collections = complete_collections(rs, r.roots);

  if (r.structure) {
    const AdditiveStructure& s = *r.structure;
    r.degrees = degree_map(s);
    r.preorder = ray_preorder(s);
    r.uniqueness = uniqueness_verdict(s, r.roots, *r.preorder);
    r.dimension_criterion = dimension_criterion(r.roots, s.dim());
    r.projection_wide = projection_wideness_all_pairs(s);
    if (s.dim() == 2) r.surface_wide = surface_wideness(s);
    r.cap = options.cap.value_or(default_nilpotency_cap(*r.degrees));

    if (!r.uniqueness->unique && options.witness) {
      r.witness = build_witness_tuples(rs, s, r.roots, *r.preorder, r.cap);
      r.certificate = separating_invariant(rs, *r.degrees, *r.witness, options.seed,
                                           options.samples);
    }
  }

  const auto bad = report_invariant_violations(r);
  if (!bad.empty()) {
    std::string msg = "internal invariant violation";
    for (const auto& b : bad) msg += "\n  " + b;
    throw InvariantViolation(msg);
  }
  return r;
}

std::vector<std::string> report_invariant_violations(const AnalysisReport& r) {
  std::vector<std::string> bad;
  const RaySystem rs(r.rays);

  if (r.existence != r.structure.has_value()) bad.push_back("existence flag out of sync");
  if (r.existence == r.collections.empty()) {
    bad.push_back("existence disagrees with the complete collections");
  }
  if (r.dim_unipotent != unipotent_dimension(r.roots)) bad.push_back("unipotent dimension stale");
  if (r.roots.semisimple.size() % 2 != 0) bad.push_back("odd number of semisimple roots");

  if (!r.structure) return bad;
  const AdditiveStructure& s = *r.structure;

  if (!reconstructs_rays(rs, s)) bad.push_back("alpha does not reconstruct the rays");
  if (!positively_spanning(s)) bad.push_back("alpha has a column without positive entry");
  for (const auto& m : root_invariant_violations(rs, s, r.roots)) bad.push_back(m);

  if (r.degrees) {
    for (std::size_t l = 0; l < s.dim(); ++l) {
      if (!exact_on(rs, *r.degrees, s.dual[l])) bad.push_back("Cl(X) grading is not exact");
    }
    for (const auto& m : homogeneous_basis_violations(rs, *r.degrees, r.roots)) bad.push_back(m);
    for (const auto& cc : r.collections) {
      const DerivationTuple t = verify_additive_tuple(collection_tuple(rs, *r.degrees, cc), r.cap);
      if (!t.certified()) bad.push_back("complete collection tuple failed certification");
    }
  }
  if (r.preorder && !r.preorder->is_preorder()) bad.push_back("ray preorder is not transitive");

  if (r.uniqueness) {
    const bool unique = r.uniqueness->unique;
    if (r.dimension_criterion && *r.dimension_criterion != unique) {
      bad.push_back("dimension criterion disagrees with the uniqueness verdict");
    }
    if (r.surface_wide && *r.surface_wide != unique) {
      bad.push_back("surface wideness disagrees with the uniqueness verdict");
    }
    if (r.projection_wide && *r.projection_wide != unique) {
      bad.push_back("projection wideness disagrees with the uniqueness verdict");
    }
    if (s.extra_indices.size() == 1 && s.dim() >= 2 && unique) {
      bad.push_back("rank one class group with a unique additive action");
    }
    if (unique && (r.witness || r.certificate)) bad.push_back("witness present for a unique case");
  }
  if (r.witness && (!r.witness->na.certified() || !r.witness->nna.certified())) {
    bad.push_back("witness tuple not certified");
  }
  if (r.certificate && !r.certificate->valid()) bad.push_back("separation certificate invalid");
  return bad;
}

}  // namespace toradd
