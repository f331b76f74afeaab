#include "toradd/witness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

Check merge(Check a, Check b) {
  if (a == Check::refuted || b == Check::refuted) return Check::refuted;
  if (a == Check::unchecked || b == Check::unchecked) return Check::unchecked;
  return Check::verified;
}

std::string slot_name(std::size_t k) { return "slot " + std::to_string(k + 1); }

Polynomial random_point(std::mt19937_64& rng, const std::vector<Monomial>& basis,
                        std::optional<std::size_t> zero_at) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  Polynomial f(basis.front().num_vars());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (zero_at && *zero_at == b) continue;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    f.add_term(basis[b], c);
  }
  return f;
}

bool in_locus(const DerivationTuple& t, const Polynomial& f, const std::vector<Monomial>& basis) {
  return annihilator_rank(t, f, basis) <= 1;
}

}  // namespace

std::string to_string(Check c) {
  switch (c) {
    case Check::verified:
      return "verified";
    case Check::refuted:
      return "refuted";
    case Check::unchecked:
      break;
  }
  return "unchecked";
}

DerivationTuple verify_additive_tuple(DerivationTuple t, std::size_t cap) {
  const std::size_t n = t.derivations.size();
  if (t.slot_vars.size() != n) throw DimensionError("tuple needs one slot variable per derivation");
  t.failures.clear();
  const std::size_t m = n == 0 ? 0 : t.derivations.front().num_vars();

  t.commuting = Check::verified;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Derivation br = commutator(t.derivations[a], t.derivations[b]);
      if (!br.is_zero()) {
        t.commuting = Check::refuted;
        t.failures.push_back(slot_name(a) + " and " + slot_name(b) +
                             " do not commute: bracket " + br.to_string());
      }
    }
  }

  t.locally_nilpotent = Check::verified;
  for (std::size_t k = 0; k < n; ++k) {
    const NilpotencyReport r = is_locally_nilpotent(t.derivations[k], cap);
    if (r.result == Nilpotency::refuted) {
      t.locally_nilpotent = merge(t.locally_nilpotent, Check::refuted);
      t.failures.push_back(slot_name(k) + " is not locally nilpotent (x" +
                           std::to_string(*r.culprit + 1) + ")");
    } else if (r.result == Nilpotency::cap_exceeded) {
      t.locally_nilpotent = merge(t.locally_nilpotent, Check::unchecked);
      t.failures.push_back(slot_name(k) + ": nilpotency chain of x" +
                           std::to_string(*r.culprit + 1) + " exceeds cap " +
                           std::to_string(cap));
    }
  }

  t.triangular = Check::verified;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(m, t.slot_vars[i]);
    if (t.derivations[i].apply(xi).is_zero()) {
      t.triangular = Check::refuted;
      t.failures.push_back(slot_name(i) + " kills its own variable");
    }
    for (std::size_t l = 0; l < i; ++l) {
      if (!t.derivations[l].apply(xi).is_zero()) {
        t.triangular = Check::refuted;
        t.failures.push_back(slot_name(l) + " moves the variable of " + slot_name(i));
      }
    }
  }

  Polynomial jacobian = Polynomial::constant(m, 1);
  for (std::size_t i = 0; i < n; ++i) {
    jacobian = jacobian * t.derivations[i].apply(Polynomial::variable(m, t.slot_vars[i]));
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (std::find(t.slot_vars.begin(), t.slot_vars.end(), j) == t.slot_vars.end()) {
      jacobian = jacobian * Polynomial::variable(m, j);
    }
  }
  t.open_orbit = jacobian.is_zero() ? Check::refuted : Check::verified;
  if (jacobian.is_zero()) t.failures.push_back("orbit Jacobian vanishes identically");
  return t;
}

DerivationTuple collection_tuple(const RaySystem& rs, const DegreeMap& dm,
                                 const CompleteCollection& cc) {
  DerivationTuple t;
  for (const auto& e : cc.roots) t.derivations.push_back(root_derivation(rs, e, dm));
  t.slot_vars = cc.basis_indices;
  return t;
}

WitnessTuples build_witness_tuples(const RaySystem& rs, const AdditiveStructure& s,
                                   const RootCatalog& catalog, const PreorderSummary& preorder,
                                   std::size_t cap) {
  const auto pair = select_dominance_pair(s, preorder);
  if (!pair) throw UniquenessHolds();
  const DegreeMap dm = degree_map(s);

  WitnessTuples w{*pair, {pair->maximal, pair->dominated}, 0, {}, {}};
  for (std::size_t i : s.basis_indices) {
    if (i != pair->maximal && i != pair->dominated) w.slot_order.push_back(i);
  }
  const LatticeVector& top = s.dual[*s.basis_position(pair->maximal)];
  const LatticeVector& low = s.dual[*s.basis_position(pair->dominated)];

  // d = max { eps : -top + eps * low in R_top }
  bool found = false;
  for (const auto& e : catalog.per_ray[pair->maximal]) {
    const Integer eps = pairing(rs[pair->dominated], e);
    if (e == eps * low - top && (!found || eps > w.d)) {
      w.d = eps;
      found = true;
    }
  }
  if (!found || w.d < 1) throw InvariantViolation("no root -p_1^* + d p_2^* with d >= 1");

  for (std::size_t i : w.slot_order) {
    w.na.derivations.push_back(
        root_derivation(rs, -s.dual[*s.basis_position(i)], dm));
  }
  w.na.slot_vars = w.slot_order;
  w.nna = w.na;
  w.nna.derivations[1] += root_derivation(rs, w.d * low - top, dm);

  w.na = verify_additive_tuple(std::move(w.na), cap);
  w.nna = verify_additive_tuple(std::move(w.nna), cap);
  for (const auto* t : {&w.na, &w.nna}) {
    if (!t->certified()) {
      std::string why;
      for (const auto& f : t->failures) why += "; " + f;
      throw InvariantViolation("witness tuple failed certification" + why);
    }
  }
  return w;
}

std::size_t annihilator_rank(const DerivationTuple& t, const Polynomial& f,
                             const std::vector<Monomial>& component_basis) {
  for (const auto& [m, c] : f.terms()) {
    if (std::find(component_basis.begin(), component_basis.end(), m) == component_basis.end()) {
      throw InputError("polynomial is not homogeneous of the component's class");
    }
  }
  RationalMatrix mat(component_basis.size(), std::vector<Rational>(t.derivations.size()));
  for (std::size_t k = 0; k < t.derivations.size(); ++k) {
    const Polynomial img = t.derivations[k].apply(f);
    for (const auto& [m, c] : img.terms()) {
      const auto it = std::find(component_basis.begin(), component_basis.end(), m);
      if (it == component_basis.end()) {
        throw InvariantViolation("derivation leaves the homogeneous component");
      }
      mat[static_cast<std::size_t>(it - component_basis.begin())][k] = c;
    }
  }
  return rank(std::move(mat));
}

std::vector<Minor> minor_equations(const DerivationTuple& t,
                                   const std::vector<Monomial>& component_basis) {
  const std::size_t dim = component_basis.size();
  const std::size_t n = t.derivations.size();
  // entry[r][k] is linear in the coefficients l_b of f.
  std::vector<std::vector<Polynomial>> entry(dim, std::vector<Polynomial>(n, Polynomial(dim)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < dim; ++b) {
      const Polynomial img = t.derivations[k].apply(Polynomial(component_basis[b]));
      for (std::size_t r = 0; r < dim; ++r) {
        const Rational c = img.coefficient(component_basis[r]);
        if (c != 0) entry[r][k].add_term(Monomial::variable(dim, b), c);
      }
    }
  }
  std::vector<Minor> out;
  for (std::size_t r1 = 0; r1 < dim; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < dim; ++r2) {
      for (std::size_t c1 = 0; c1 < n; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
          out.push_back({r1, r2, c1, c2,
                         entry[r1][c1] * entry[r2][c2] - entry[r1][c2] * entry[r2][c1]});
        }
      }
    }
  }
  return out;
}

SeparationCertificate separating_invariant(const RaySystem& rs, const DegreeMap& dm,
                                           const WitnessTuples& w, std::uint64_t seed,
                                           std::size_t samples) {
  const std::size_t m = rs.size();
  SeparationCertificate cert;
  cert.witness_variable = w.pair.maximal;
  cert.distinguished_class = dm.degrees[cert.witness_variable];
  cert.component = homogeneous_component(dm, cert.distinguished_class);

  const Polynomial x = Polynomial::variable(m, cert.witness_variable);
  cert.rank_na = annihilator_rank(w.na, x, cert.component);
  cert.rank_nna = annihilator_rank(w.nna, x, cert.component);
  cert.member_in_na = cert.rank_na <= 1;
  cert.member_in_nna = cert.rank_nna <= 1;
  if (!cert.valid()) {
    throw InvariantViolation("witness variable does not separate the two tuples (ranks " +
                             std::to_string(cert.rank_na) + ", " +
                             std::to_string(cert.rank_nna) + ")");
  }

  const auto pos = std::find(cert.component.begin(), cert.component.end(),
                             Monomial::variable(m, cert.witness_variable));
  const std::size_t witness_slot = static_cast<std::size_t>(pos - cert.component.begin());
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Polynomial on_slice = random_point(rng, cert.component, witness_slot);
    if (!on_slice.is_zero() &&
        in_locus(w.na, on_slice, cert.component) != in_locus(w.nna, on_slice, cert.component)) {
      throw InvariantViolation("loci differ on the slice at " + on_slice.to_string());
    }
    Polynomial off_slice = random_point(rng, cert.component, witness_slot);
    off_slice.add_term(cert.component[witness_slot], Rational(1 + static_cast<long>(k % 7)));
    if (in_locus(w.nna, off_slice, cert.component)) {
      throw InvariantViolation("point off the slice lies in the second locus: " +
                               off_slice.to_string());
    }
    cert.samples_checked += 2;
  }

  std::set<DivisorClass> others;
  for (const auto& d : dm.degrees) {
    if (d != cert.distinguished_class) others.insert(d);
  }
  for (const auto& cls : others) {
    const std::vector<Monomial> basis = homogeneous_component(dm, cls);
    for (std::size_t k = 0; k < samples; ++k) {
      const Polynomial f = random_point(rng, basis, std::nullopt);
      if (f.is_zero()) continue;
      if (in_locus(w.na, f, basis) != in_locus(w.nna, f, basis)) {
        throw InvariantViolation("loci differ on another component at " + f.to_string());
      }
      ++cert.samples_checked;
    }
  }
  return cert;
}

SeparationCertificate separating_invariant(const RaySystem& rs, const AdditiveStructure& s,
                                           const RootCatalog& catalog,
                                           const PreorderSummary& preorder, std::uint64_t seed) {
  const DegreeMap dm = degree_map(s);
  const WitnessTuples w =
      build_witness_tuples(rs, s, catalog, preorder, default_nilpotency_cap(dm));
  return separating_invariant(rs, dm, w, seed);
}

}  // namespace toradd
