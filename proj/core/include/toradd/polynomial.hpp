#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "toradd/linear_algebra.hpp"

namespace toradd {

/// x_1^{a_1} ... x_m^{a_m}; the exponent vector is also its Z^m-degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }
  static Monomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// "x1^2*x3", or "1" for the constant monomial. `prefix` names the
  /// variables.
  std::string to_string(const std::string& prefix = "x") const;

 private:
  std::vector<unsigned> exps_;
};

/// Sparse polynomial with rational coefficients. Terms are kept with nonzero
/// coefficients only, in descending lexicographic order of exponents.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  Polynomial(const Monomial& m, Rational c = 1);

  static Polynomial constant(std::size_t num_vars, Rational c);
  static Polynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  /// d/dx_i
  Polynomial partial(std::size_t i) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::string& prefix = "x") const;

 private:
  std::size_t num_vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Polynomial in a formal parameter s with Cox-ring polynomial coefficients:
/// coefficients()[k] multiplies s^k.
class ParametricPolynomial {
 public:
  explicit ParametricPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  Polynomial coefficient(std::size_t k) const;

  void add(std::size_t power, const Polynomial& p);

  friend ParametricPolynomial operator*(const ParametricPolynomial& a,
                                        const ParametricPolynomial& b);
  friend bool operator==(const ParametricPolynomial& a, const ParametricPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& prefix = "x") const;

 private:
  void trim();

  std::size_t num_vars_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace toradd
