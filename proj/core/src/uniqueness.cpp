#include "toradd/uniqueness.hpp"

#include <algorithm>
#include <sstream>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

bool wide_pair(const AdditiveStructure& s, std::size_t a, std::size_t b) {
  bool above = false;
  bool below = false;
  for (const auto& row : s.alpha) {
    above = above || row[a] > row[b];
    below = below || row[a] < row[b];
  }
  return above && below;
}

}  // namespace

std::optional<DominancePair> select_dominance_pair(const AdditiveStructure& s,
                                                   const PreorderSummary& preorder) {
  for (std::size_t top : preorder.maximal) {
    for (std::size_t below = 0; below < s.dim(); ++below) {
      if (below != top && preorder.leq[below][top]) {
        return DominancePair{s.basis_indices[top], s.basis_indices[below]};
      }
    }
  }
  return std::nullopt;
}

UniquenessVerdict uniqueness_verdict(const AdditiveStructure& s, const RootCatalog& catalog,
                                     const PreorderSummary& preorder) {
  UniquenessVerdict v;
  const std::size_t n = s.dim();

  v.cond_roots = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& set = catalog.per_ray[s.basis_indices[i]];
    v.cond_roots = v.cond_roots && set.size() == 1 && set.front() == -s.dual[i];
  }

  std::vector<LatticeVector> expected;
  for (std::size_t i = 0; i < n; ++i) expected.push_back(-s.dual[i]);
  std::sort(expected.begin(), expected.end());
  std::vector<LatticeVector> positive;
  for (const auto& r : catalog.positive) positive.push_back(r.vector);
  v.cond_positive = catalog.u.has_value() && positive == expected;

  v.cond_preorder = preorder.trivial;

  if (v.cond_roots != v.cond_positive || v.cond_positive != v.cond_preorder) {
    std::ostringstream os;
    os << "uniqueness conditions disagree: roots=" << v.cond_roots
       << " positive=" << v.cond_positive << " preorder=" << v.cond_preorder << " basis=[";
    for (std::size_t i : s.basis_indices) os << ' ' << i + 1;
    os << " ]";
    throw InvariantViolation(os.str());
  }
  v.unique = v.cond_roots;
  if (!v.unique) {
    v.evidence = select_dominance_pair(s, preorder);
    if (!v.evidence) throw InvariantViolation("nontrivial preorder without a dominance pair");
  }
  return v;
}

UniquenessVerdict uniqueness_verdict(const std::optional<AdditiveStructure>& s,
                                     const RootCatalog& catalog) {
  if (!s) throw NoAdditiveAction();
  return uniqueness_verdict(*s, catalog, ray_preorder(*s));
}

bool dimension_criterion(const RootCatalog& catalog, std::size_t n) {
  return unipotent_dimension(catalog) == n;
}

bool surface_wideness(const AdditiveStructure& s) {
  if (s.dim() != 2) throw DimensionError("wideness is defined for surfaces only");
  return wide_pair(s, 0, 1);
}

bool projection_wideness_all_pairs(const AdditiveStructure& s) {
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      if (!wide_pair(s, a, b)) return false;
    }
  }
  return true;
}

}  // namespace toradd
