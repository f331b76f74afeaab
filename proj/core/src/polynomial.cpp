#include "toradd/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("polynomials over different numbers of variables");
}

// Writes c * body with the conventions "x1", "-x1", "2*x1", "1/3*x1", "5".
void write_term(std::ostream& os, const Rational& c, const std::string& body, bool first) {
  Rational mag = abs(c);
  if (!first) {
    os << (c < 0 ? " - " : " + ");
  } else if (c < 0) {
    os << '-';
  }
  if (body.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << body;
  } else {
    os << mag << '*' << body;
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t num_vars, std::size_t i) {
  std::vector<unsigned> e(num_vars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.num_vars(), b.num_vars());
  std::vector<unsigned> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const std::string& prefix) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (any) os << '*';
    os << prefix << i + 1;
    if (exps_[i] > 1) os << '^' << exps_[i];
    any = true;
  }
  return any ? os.str() : "1";
}

Polynomial::Polynomial(const Monomial& m, Rational c) : num_vars_(m.num_vars()) {
  add_term(m, c);
}

Polynomial Polynomial::constant(std::size_t num_vars, Rational c) {
  return Polynomial(Monomial::one(num_vars), std::move(c));
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  return Polynomial(Monomial::variable(num_vars, i));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  require_same_ring(num_vars_, m.num_vars());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(std::size_t i) const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    --e[i];
    out.add_term(Monomial(std::move(e)), c * m[i]);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(num_vars_, other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(num_vars_, other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.num_vars_, b.num_vars_);
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  if (c == 0) return out;
  for (const auto& [m, k] : a.terms_) out.terms_.emplace(m, c * k);
  return out;
}

std::string Polynomial::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string body = m.total_degree() == 0 ? "" : m.to_string(prefix);
    write_term(os, c, body, first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial ParametricPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Polynomial(num_vars_);
}

void ParametricPolynomial::add(std::size_t power, const Polynomial& p) {
  require_same_ring(num_vars_, p.num_vars());
  if (coeffs_.size() <= power) coeffs_.resize(power + 1, Polynomial(num_vars_));
  coeffs_[power] += p;
  trim();
}

void ParametricPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ParametricPolynomial operator*(const ParametricPolynomial& a, const ParametricPolynomial& b) {
  require_same_ring(a.num_vars_, b.num_vars_);
  ParametricPolynomial out(a.num_vars_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.add(i + j, a.coeffs_[i] * b.coeffs_[j]);
  }
  return out;
}

std::string ParametricPolynomial::to_string(const std::string& prefix) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::string s_part;
    if (k == 1) s_part = "s";
    if (k > 1) s_part = "s^" + std::to_string(k);
    for (const auto& [m, c] : coeffs_[k].terms()) {
      std::string body = s_part;
      if (m.total_degree() > 0) body += (body.empty() ? "" : "*") + m.to_string(prefix);
      write_term(os, c, body, first);
      first = false;
    }
  }
  return os.str();
}

}  // namespace toradd
