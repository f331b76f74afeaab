#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toradd/lattice.hpp"
#include "toradd/polynomial.hpp"
#include "toradd/rays.hpp"
#include "toradd/roots.hpp"

namespace toradd {

/// One summand c * x^D * d/dx_target.
struct DerivationTerm {
  Rational coefficient;
  Monomial monomial;
  std::size_t target = 0;
};

/// A derivation of Q[x_1..x_m], stored by its values on the variables.
class Derivation {
 public:
  explicit Derivation(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Derivation single(const Monomial& m, std::size_t target, Rational c = 1);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return images_.empty(); }

  /// d(x_i)
  Polynomial image(std::size_t i) const;
  const std::map<std::size_t, Polynomial>& images() const { return images_; }
  std::vector<DerivationTerm> terms() const;

  /// Leibniz rule: sum_i d(x_i) * df/dx_i.
  Polynomial apply(const Polynomial& f) const;

  /// Common value of D - e_target over all terms, if there is one.
  std::optional<std::vector<long>> zm_degree() const;
  /// Common Cl(X)-degree of all terms, if there is one.
  std::optional<DivisorClass> class_degree(const DegreeMap& dm) const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.num_vars_ == b.num_vars_ && a.images_ == b.images_;
  }

  /// "x3*d/dx1 + x1^2*d/dx2"
  std::string to_string() const;

 private:
  void set_image(std::size_t i, Polynomial p);

  std::size_t num_vars_;
  std::map<std::size_t, Polynomial> images_;
};

/// [d1, d2] = d1 d2 - d2 d1, computed on the variables.
Derivation commutator(const Derivation& d1, const Derivation& d2);

enum class Nilpotency { verified, refuted, cap_exceeded };

struct NilpotencyReport {
  Nilpotency result = Nilpotency::cap_exceeded;
  /// Per variable, the smallest k with d^k(x_i) = 0 (verified runs only).
  std::vector<std::size_t> orders;
  /// Variable whose chain refuted or exhausted the cap.
  std::optional<std::size_t> culprit;
};

/// Iterates d on each variable. Verified when every chain reaches 0 within
/// `cap` steps; refuted when x_i divides a nonzero d(x_i) or a chain
/// revisits a multiple of an earlier element.
NilpotencyReport is_locally_nilpotent(const Derivation& d, std::size_t cap);

/// f, d(f), d^2(f), ... up to and including the first zero, at most cap + 1
/// entries.
std::vector<Polynomial> derivation_chain(const Derivation& d, const Polynomial& f,
                                         std::size_t cap);

/// exp(s d)(f) = sum_k s^k / k! d^k(f). Throws InputError unless d is
/// certified locally nilpotent within `cap`.
ParametricPolynomial exponentiate(const Derivation& d, const Polynomial& f, std::size_t cap);

/// d_e = prod_{j != i} x_j^{<p_j, e>} d/dx_i for the ray i with <p_i, e> = -1.
/// Throws InputError if e is not a root.
Derivation root_derivation(const RaySystem& rs, const LatticeVector& e);

/// As above, and checks that the Cl(X)-degree is zero.
Derivation root_derivation(const RaySystem& rs, const LatticeVector& e, const DegreeMap& dm);

/// Monomial basis of the degree-w part of the Cox ring, in descending
/// lexicographic order. Throws InvariantViolation if some variable has
/// degree zero or a negative entry.
std::vector<Monomial> homogeneous_component(const DegreeMap& dm, const DivisorClass& w);

/// 2 + the largest dimension of a component containing a variable. A
/// degree-zero derivation preserves each of these components, so a chain
/// starting at a variable that has not vanished after this many steps never
/// will.
std::size_t default_nilpotency_cap(const DegreeMap& dm);

/// Checks that the component of each deg(x_i) is spanned exactly by x_i and
/// the monomials d_e(x_i), e in R_i. One message per mismatch.
std::vector<std::string> homogeneous_basis_violations(const RaySystem& rs, const DegreeMap& dm,
                                                      const RootCatalog& catalog);

}  // namespace toradd
