#include "toradd/rays.hpp"

#include <algorithm>
#include <utility>

#include "toradd/errors.hpp"
#include "toradd/polyhedral.hpp"

namespace toradd {

namespace {

// Next n-subset of {0..m-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t n = c.size();
  for (std::size_t k = n; k-- > 0;) {
    if (c[k] < m - n + k) {
      ++c[k];
      for (std::size_t l = k + 1; l < n; ++l) c[l] = c[l - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t rational_rank(const std::vector<LatticeVector>& rows) {
  RationalMatrix m;
  for (const auto& v : rows) {
    std::vector<Rational> r;
    for (const auto& c : v.coords()) r.emplace_back(c);
    m.push_back(std::move(r));
  }
  return rank(std::move(m));
}

}  // namespace

RaySystem::RaySystem(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {
  if (rays_.empty()) throw InputError("ray system without rays");
  dim_ = rays_.front().dim();
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& p = rays_[i];
    if (p.dim() != dim_) {
      throw DimensionError("ray " + std::to_string(i + 1) + " has length " +
                           std::to_string(p.dim()) + ", expected " + std::to_string(dim_));
    }
    if (p.is_zero()) throw InputError("ray " + std::to_string(i + 1) + " is zero");
    if (!(primitive(p) == p)) {
      throw InputError("ray " + std::to_string(i + 1) + " " + p.to_string() + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_[j] == p) {
        throw InputError("rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                         " coincide");
      }
    }
  }
}

std::vector<std::size_t> AdditiveStructure::canonical_order() const {
  std::vector<std::size_t> order = basis_indices;
  order.insert(order.end(), extra_indices.begin(), extra_indices.end());
  return order;
}

std::optional<std::size_t> AdditiveStructure::basis_position(std::size_t i) const {
  const auto it = std::find(basis_indices.begin(), basis_indices.end(), i);
  if (it == basis_indices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_indices.begin());
}

std::optional<AdditiveStructure> structure_for_basis(const RaySystem& rs,
                                                     std::vector<std::size_t> basis_indices) {
  const std::size_t n = rs.dim();
  if (basis_indices.size() != n) throw DimensionError("basis subset must have n rays");
  std::sort(basis_indices.begin(), basis_indices.end());
  std::vector<LatticeVector> vs;
  for (std::size_t i : basis_indices) vs.push_back(rs[i]);
  if (!is_lattice_basis(vs)) return std::nullopt;

  Basis basis(std::move(vs));
  std::vector<std::size_t> extra;
  std::vector<std::vector<Integer>> alpha;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    if (std::binary_search(basis_indices.begin(), basis_indices.end(), j)) continue;
    const LatticeVector c = basis_coordinates(basis, rs[j]);
    std::vector<Integer> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] > 0) return std::nullopt;
      row[i] = -c[i];
    }
    extra.push_back(j);
    alpha.push_back(std::move(row));
  }
  Basis dual = dual_basis(basis);
  return AdditiveStructure{std::move(basis_indices), std::move(extra), std::move(alpha),
                           std::move(basis), std::move(dual)};
}

std::vector<AdditiveStructure> all_additive_structures(const RaySystem& rs) {
  const std::size_t n = rs.dim();
  const std::size_t m = rs.size();
  if (m < n) throw InputError("too few rays");
  if (rational_rank(rs.rays()) < n) throw InputError("degenerate ray system");
  std::vector<AdditiveStructure> out;
  std::vector<std::size_t> subset(n);
  for (std::size_t k = 0; k < n; ++k) subset[k] = k;
  do {
    if (auto s = structure_for_basis(rs, subset)) out.push_back(std::move(*s));
  } while (next_combination(subset, m));
  return out;
}

std::optional<AdditiveStructure> detect_additive_structure(const RaySystem& rs) {
  const std::size_t n = rs.dim();
  const std::size_t m = rs.size();
  if (m < n) throw InputError("too few rays");
  if (rational_rank(rs.rays()) < n) throw InputError("degenerate ray system");
  std::vector<std::size_t> subset(n);
  for (std::size_t k = 0; k < n; ++k) subset[k] = k;
  do {
    if (auto s = structure_for_basis(rs, subset)) return s;
  } while (next_combination(subset, m));
  return std::nullopt;
}

bool reconstructs_rays(const RaySystem& rs, const AdditiveStructure& s) {
  for (std::size_t j = 0; j < s.extra_indices.size(); ++j) {
    LatticeVector acc = LatticeVector::zero(rs.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) acc = acc - s.alpha[j][i] * s.basis[i];
    if (!(acc == rs[s.extra_indices[j]])) return false;
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!(s.basis[i] == rs[s.basis_indices[i]])) return false;
  }
  return true;
}

DivisorClass DegreeMap::degree_of(std::span<const unsigned> exponents) const {
  if (exponents.size() != degrees.size()) throw DimensionError("exponent vector length mismatch");
  DivisorClass out = zero();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    for (std::size_t k = 0; k < rank; ++k) out[k] += degrees[i][k] * exponents[i];
  }
  return out;
}

DegreeMap degree_map(const AdditiveStructure& s) {
  const std::size_t r = s.extra_indices.size();
  DegreeMap dm;
  dm.rank = r;
  dm.degrees.assign(s.num_rays(), DivisorClass(r, Integer(0)));
  for (std::size_t j = 0; j < r; ++j) dm.degrees[s.extra_indices[j]][j] = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto& d = dm.degrees[s.basis_indices[i]];
    for (std::size_t j = 0; j < r; ++j) d[j] = s.alpha[j][i];
  }
  return dm;
}

bool exact_on(const RaySystem& rs, const DegreeMap& dm, const LatticeVector& w) {
  DivisorClass acc = dm.zero();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Integer c = pairing(rs[i], w);
    for (std::size_t k = 0; k < dm.rank; ++k) acc[k] += c * dm.degrees[i][k];
  }
  return acc == dm.zero();
}

bool PreorderSummary::is_preorder() const {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) return false;
      }
    }
  }
  return true;
}

PreorderSummary ray_preorder(const AdditiveStructure& s) {
  const std::size_t n = s.dim();
  PreorderSummary p;
  p.leq.assign(n, std::vector<bool>(n, true));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& row : s.alpha) {
        if (row[a] > row[b]) {
          p.leq[a][b] = false;
          break;
        }
      }
      if (a != b && p.leq[a][b]) p.trivial = false;
    }
  }
  // a is maximal iff nothing lies strictly above it.
  for (std::size_t a = 0; a < n; ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < n && maximal; ++b) {
      if (p.leq[a][b] && !p.leq[b][a]) maximal = false;
    }
    if (maximal) p.maximal.push_back(a);
  }
  return p;
}

bool positively_spanning(const RaySystem& rs) {
  const std::size_t n = rs.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (int sign : {1, -1}) {
      ConstraintSystem cone(n);
      for (const auto& p : rs.rays()) cone.add_ge(p.coords(), 0);
      std::vector<Integer> axis(n, Integer(0));
      axis[k] = sign;
      cone.add_ge(std::move(axis), -1);
      if (cone.feasible()) return false;
    }
  }
  return true;
}

bool positively_spanning(const AdditiveStructure& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const bool positive = std::any_of(s.alpha.begin(), s.alpha.end(),
                                      [i](const auto& row) { return row[i] > 0; });
    if (!positive) return false;
  }
  return true;
}

}  // namespace toradd
