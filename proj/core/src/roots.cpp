#include "toradd/roots.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "toradd/errors.hpp"
#include "toradd/polyhedral.hpp"

namespace toradd {

namespace {

constexpr const char* kInfiniteRoots = "non-complete ray system: infinite root set";

void sort_unique(std::vector<LatticeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool by_vector(const DemazureRoot& a, const DemazureRoot& b) { return a.vector < b.vector; }

// Depth-first search over eps_l >= 0 for the free basis positions, with one
// budget per extra ray: sum_l alpha[j][l] * eps_l <= budget[j].
class BasisSearch {
 public:
  BasisSearch(const AdditiveStructure& s, std::vector<Integer> budget,
              std::optional<std::size_t> fixed, std::optional<std::size_t> exact_row)
      : s_(s), budget_(std::move(budget)), fixed_(fixed), exact_row_(exact_row),
        eps_(s.dim(), Integer(0)) {
    if (fixed_) eps_[*fixed_] = -1;
  }

  std::vector<LatticeVector> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t l) {
    const std::size_t n = s_.dim();
    if (l == n) {
      if (exact_row_ && budget_[*exact_row_] != 0) return;
      LatticeVector e = LatticeVector::zero(n);
      for (std::size_t k = 0; k < n; ++k) e = e + eps_[k] * s_.dual[k];
      found_.push_back(std::move(e));
      return;
    }
    if (fixed_ && *fixed_ == l) {
      descend(l + 1);
      return;
    }
    std::optional<Integer> cap;
    for (std::size_t j = 0; j < s_.alpha.size(); ++j) {
      const Integer& a = s_.alpha[j][l];
      if (a <= 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), budget_[j].get_mpz_t(), a.get_mpz_t());
      if (!cap || q < *cap) cap = q;
    }
    if (!cap) throw InputError(kInfiniteRoots);
    for (Integer t = 0; t <= *cap; ++t) {
      eps_[l] = t;
      for (std::size_t j = 0; j < s_.alpha.size(); ++j) budget_[j] -= s_.alpha[j][l] * t;
      descend(l + 1);
      for (std::size_t j = 0; j < s_.alpha.size(); ++j) budget_[j] += s_.alpha[j][l] * t;
    }
    eps_[l] = 0;
  }

  const AdditiveStructure& s_;
  std::vector<Integer> budget_;
  std::optional<std::size_t> fixed_;
  std::optional<std::size_t> exact_row_;
  std::vector<Integer> eps_;
  std::vector<LatticeVector> found_;
};

bool in_basis_sets(const RootCatalog& c, const AdditiveStructure& s, const LatticeVector& e) {
  const auto ray = c.ray_of(e);
  return ray && s.basis_position(*ray).has_value();
}

}  // namespace

std::optional<std::size_t> RootCatalog::ray_of(const LatticeVector& e) const {
  for (std::size_t i = 0; i < per_ray.size(); ++i) {
    if (std::binary_search(per_ray[i].begin(), per_ray[i].end(), e)) return i;
  }
  return std::nullopt;
}

RootSets roots_in_basis(const RaySystem& rs, const AdditiveStructure& s) {
  RootSets out(rs.size());
  const std::size_t r = s.extra_indices.size();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<Integer> budget(r);
    for (std::size_t j = 0; j < r; ++j) budget[j] = s.alpha[j][i];
    out[s.basis_indices[i]] = BasisSearch(s, std::move(budget), i, std::nullopt).run();
  }
  for (std::size_t j0 = 0; j0 < r; ++j0) {
    std::vector<Integer> budget(r, Integer(0));
    budget[j0] = 1;
    out[s.extra_indices[j0]] = BasisSearch(s, std::move(budget), std::nullopt, j0).run();
  }
  for (auto& set : out) sort_unique(set);
  return out;
}

RootSets roots_by_elimination(const RaySystem& rs) {
  const std::size_t n = rs.dim();
  RootSets out(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    ConstraintSystem poly(n);
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (j == i) {
        poly.add_eq(rs[j].coords(), 1);
      } else {
        poly.add_ge(rs[j].coords(), 0);
      }
    }
    try {
      poly.for_each_integer_point(
          [&](const std::vector<Integer>& e) { out[i].emplace_back(e); });
    } catch (const UnboundedPolyhedron&) {
      throw InputError(kInfiniteRoots);
    }
    sort_unique(out[i]);
  }
  return out;
}

RootSets brute_force_roots(const RaySystem& rs, unsigned box_radius) {
  const std::size_t n = rs.dim();
  const std::size_t m = rs.size();
  const Integer radius = box_radius;
  RootSets out(m);
  std::vector<Integer> e(n, -radius);
  std::vector<Integer> pr(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < n; ++k) pr[j] -= radius * rs[j][k];
  }
  while (true) {
    std::size_t minus_one = m;
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      if (pr[j] >= 0) continue;
      if (pr[j] == -1 && minus_one == m) {
        minus_one = j;
      } else {
        ok = false;
      }
    }
    if (ok && minus_one < m) out[minus_one].emplace_back(e);

    std::size_t k = 0;
    while (k < n && e[k] == radius) {
      e[k] = -radius;
      for (std::size_t j = 0; j < m; ++j) pr[j] -= 2 * radius * rs[j][k];
      ++k;
    }
    if (k == n) break;
    ++e[k];
    for (std::size_t j = 0; j < m; ++j) pr[j] += rs[j][k];
  }
  for (auto& set : out) sort_unique(set);
  return out;
}

RootCatalog classify_roots(RootSets per_ray) {
  RootCatalog c;
  c.per_ray = std::move(per_ray);
  for (std::size_t i = 0; i < c.per_ray.size(); ++i) {
    for (const auto& e : c.per_ray[i]) {
      const RootKind kind = c.contains(-e) ? RootKind::semisimple : RootKind::unipotent;
      (kind == RootKind::semisimple ? c.semisimple : c.unipotent).push_back({i, e, kind});
    }
  }
  std::sort(c.semisimple.begin(), c.semisimple.end(), by_vector);
  std::sort(c.unipotent.begin(), c.unipotent.end(), by_vector);
  return c;
}

RootCatalog enumerate_roots(const RaySystem& rs, const std::optional<AdditiveStructure>& s) {
  if (!positively_spanning(rs)) throw InputError(kInfiniteRoots);
  RootCatalog c = classify_roots(s ? roots_in_basis(rs, *s) : roots_by_elimination(rs));
  if (s) {
    PositiveSystem ps = positive_system(c, *s);
    c.u = std::move(ps.u);
    c.positive = std::move(ps.roots);
  }
  return c;
}

bool is_valid_regularizer(const RootCatalog& catalog, const AdditiveStructure& s,
                          const LatticeVector& u) {
  for (const auto& r : catalog.semisimple) {
    const Integer p = pairing(u, r.vector);
    if (p == 0) return false;
    if (p > 0 && !in_basis_sets(catalog, s, r.vector)) return false;
  }
  return true;
}

std::optional<LatticeVector> search_regularizing_vector(const RootCatalog& catalog,
                                                        const AdditiveStructure& s,
                                                        unsigned radius) {
  const std::size_t n = s.dim();
  const long r = static_cast<long>(radius);
  std::vector<Integer> u(n, Integer(-r));
  while (true) {
    LatticeVector candidate(u);
    if (is_valid_regularizer(catalog, s, candidate)) return candidate;
    std::size_t k = 0;
    while (k < n && u[k] == r) u[k++] = -r;
    if (k == n) return std::nullopt;
    ++u[k];
  }
}

PositiveSystem positive_system(const RootCatalog& catalog, const AdditiveStructure& s) {
  LatticeVector u = LatticeVector::zero(s.dim());
  for (std::size_t l = 0; l < s.dim(); ++l) u = u - Integer(l + 1) * s.basis[l];
  if (!is_valid_regularizer(catalog, s, u)) {
    auto found = search_regularizing_vector(
        catalog, s, static_cast<unsigned>(s.dim() * s.num_rays()));
    if (!found) throw InvariantViolation("positive system construction failed");
    u = std::move(*found);
  }
  PositiveSystem ps{u, catalog.unipotent};
  for (const auto& r : catalog.semisimple) {
    if (pairing(u, r.vector) > 0) ps.roots.push_back(r);
  }
  std::sort(ps.roots.begin(), ps.roots.end(), by_vector);
  return ps;
}

std::size_t unipotent_dimension(const RootCatalog& catalog) {
  return catalog.unipotent.size() + catalog.semisimple.size() / 2;
}

std::vector<CompleteCollection> complete_collections(const RaySystem& rs,
                                                     const RootCatalog& catalog) {
  std::vector<CompleteCollection> out;
  for (const auto& s : all_additive_structures(rs)) {
    CompleteCollection cc{s.basis_indices, {}};
    for (std::size_t i = 0; i < s.dim(); ++i) {
      LatticeVector e = -s.dual[i];
      const auto& set = catalog.per_ray[s.basis_indices[i]];
      if (!std::binary_search(set.begin(), set.end(), e)) {
        throw InvariantViolation("-p^* of basis ray " + std::to_string(s.basis_indices[i] + 1) +
                                 " is not one of its roots");
      }
      cc.roots.push_back(std::move(e));
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<std::string> root_invariant_violations(const RaySystem& rs,
                                                   const AdditiveStructure& s,
                                                   const RootCatalog& catalog) {
  std::vector<std::string> bad;
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ray = s.basis_indices[i];
    const auto& set = catalog.per_ray[ray];
    if (!std::binary_search(set.begin(), set.end(), -s.dual[i])) {
      bad.push_back("-p^* missing from roots of ray " + std::to_string(ray + 1));
    }
    for (const auto& e : set) {
      for (std::size_t l = 0; l < n; ++l) {
        const Integer c = pairing(s.basis[l], e);
        if ((l == i && c != -1) || (l != i && c < 0)) {
          bad.push_back("root " + e.to_string() + " of ray " + std::to_string(ray + 1) +
                        " has the wrong dual-basis shape");
        }
      }
    }
  }
  for (std::size_t j : s.extra_indices) {
    for (const auto& e : catalog.per_ray[j]) {
      bool is_dual = false;
      for (std::size_t l = 0; l < n; ++l) is_dual = is_dual || e == s.dual[l];
      if (!is_dual) {
        bad.push_back("root " + e.to_string() + " of extra ray " + std::to_string(j + 1) +
                      " is not a dual basis vector");
      }
    }
  }
  for (const auto& r : catalog.unipotent) {
    if (!s.basis_position(r.ray)) {
      bad.push_back("unipotent root " + r.vector.to_string() + " outside the basis root sets");
    }
  }
  const PreorderSummary pre = ray_preorder(s);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const bool is_root = catalog.contains(s.dual[b] - s.dual[a]);
      if (is_root != pre.leq[b][a]) {
        bad.push_back("root test for -p_" + std::to_string(s.basis_indices[a] + 1) + "^* + p_" +
                      std::to_string(s.basis_indices[b] + 1) + "^* disagrees with the preorder");
      }
    }
  }
  std::set<std::vector<Integer>> ss;
  for (const auto& r : catalog.semisimple) ss.insert(r.vector.coords());
  for (const auto& r : catalog.semisimple) {
    if (!ss.count((-r.vector).coords())) {
      bad.push_back("semisimple root " + r.vector.to_string() + " without its negative");
    }
  }
  if (catalog.u && catalog.positive.size() != unipotent_dimension(catalog)) {
    bad.push_back("positive system size differs from the unipotent dimension");
  }
  for (std::size_t i = 0; i < catalog.per_ray.size(); ++i) {
    for (const auto& e : catalog.per_ray[i]) {
      for (std::size_t j = 0; j < rs.size(); ++j) {
        const Integer c = pairing(rs[j], e);
        if ((j == i && c != -1) || (j != i && c < 0)) {
          bad.push_back("vector " + e.to_string() + " listed for ray " + std::to_string(i + 1) +
                        " is not a root of it");
        }
      }
    }
  }
  return bad;
}

}  // namespace toradd
