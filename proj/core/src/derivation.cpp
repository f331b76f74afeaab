#include "toradd/derivation.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("derivation and polynomial over different rings");
}

// True if q = c * p for some nonzero rational c.
bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero() || p.terms().size() != q.terms().size()) return false;
  const Rational ratio = q.terms().begin()->second / p.terms().begin()->second;
  auto it = q.terms().begin();
  for (const auto& [m, c] : p.terms()) {
    if (it->first != m || it->second != ratio * c) return false;
    ++it;
  }
  return true;
}

bool divisible_by_variable(const Polynomial& p, std::size_t i) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [i](const auto& t) { return t.first[i] > 0; });
}

unsigned to_exponent(const Integer& v) {
  if (v < 0 || !v.fits_uint_p()) throw InputError("exponent out of range: " + v.get_str());
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

Derivation Derivation::single(const Monomial& m, std::size_t target, Rational c) {
  Derivation d(m.num_vars());
  if (target >= m.num_vars()) throw DimensionError("derivation target out of range");
  d.set_image(target, Polynomial(m, std::move(c)));
  return d;
}

void Derivation::set_image(std::size_t i, Polynomial p) {
  if (p.is_zero()) {
    images_.erase(i);
  } else {
    images_.insert_or_assign(i, std::move(p));
  }
}

Polynomial Derivation::image(std::size_t i) const {
  const auto it = images_.find(i);
  return it == images_.end() ? Polynomial(num_vars_) : it->second;
}

std::vector<DerivationTerm> Derivation::terms() const {
  std::vector<DerivationTerm> out;
  for (const auto& [i, p] : images_) {
    for (const auto& [m, c] : p.terms()) out.push_back({c, m, i});
  }
  return out;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  require_same_ring(num_vars_, f.num_vars());
  Polynomial out(num_vars_);
  for (const auto& [i, p] : images_) {
    Polynomial df = f.partial(i);
    if (!df.is_zero()) out += p * df;
  }
  return out;
}

std::optional<std::vector<long>> Derivation::zm_degree() const {
  std::optional<std::vector<long>> deg;
  for (const auto& t : terms()) {
    std::vector<long> d(num_vars_);
    for (std::size_t k = 0; k < num_vars_; ++k) d[k] = static_cast<long>(t.monomial[k]);
    d[t.target] -= 1;
    if (deg && *deg != d) return std::nullopt;
    deg = std::move(d);
  }
  return deg;
}

std::optional<DivisorClass> Derivation::class_degree(const DegreeMap& dm) const {
  if (dm.degrees.size() != num_vars_) throw DimensionError("grading over a different ring");
  std::optional<DivisorClass> deg;
  for (const auto& t : terms()) {
    DivisorClass d = dm.degree_of(t.monomial.exponents());
    for (std::size_t k = 0; k < dm.rank; ++k) d[k] -= dm.degrees[t.target][k];
    if (deg && *deg != d) return std::nullopt;
    deg = std::move(d);
  }
  return deg ? deg : std::optional<DivisorClass>(dm.zero());
}

Derivation& Derivation::operator+=(const Derivation& other) {
  require_same_ring(num_vars_, other.num_vars_);
  for (const auto& [i, p] : other.images_) set_image(i, image(i) + p);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  require_same_ring(num_vars_, other.num_vars_);
  for (const auto& [i, p] : other.images_) set_image(i, image(i) - p);
  return *this;
}

std::string Derivation::to_string() const {
  if (images_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, p] : images_) {
    const std::string d = "d/dx" + std::to_string(i + 1);
    for (const auto& [m, c] : p.terms()) {
      const Rational mag = abs(c);
      if (!first) {
        os << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        os << '-';
      }
      if (mag != 1) os << mag << '*';
      if (m.total_degree() > 0) os << m.to_string() << '*';
      os << d;
      first = false;
    }
  }
  return os.str();
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  require_same_ring(d1.num_vars(), d2.num_vars());
  Derivation out(d1.num_vars());
  for (std::size_t i = 0; i < d1.num_vars(); ++i) {
    Polynomial v = d1.apply(d2.image(i)) - d2.apply(d1.image(i));
    for (const auto& [m, c] : v.terms()) out += Derivation::single(m, i, c);
  }
  return out;
}

std::vector<Polynomial> derivation_chain(const Derivation& d, const Polynomial& f,
                                         std::size_t cap) {
  std::vector<Polynomial> chain{f};
  while (!chain.back().is_zero() && chain.size() <= cap) chain.push_back(d.apply(chain.back()));
  return chain;
}

NilpotencyReport is_locally_nilpotent(const Derivation& d, std::size_t cap) {
  NilpotencyReport report;
  const std::size_t m = d.num_vars();
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial first = d.image(i);
    if (!first.is_zero() && divisible_by_variable(first, i)) {
      report.result = Nilpotency::refuted;
      report.culprit = i;
      return report;
    }
    std::vector<Polynomial> chain{Polynomial::variable(m, i)};
    while (!chain.back().is_zero() && chain.size() <= cap) {
      Polynomial next = d.apply(chain.back());
      for (const auto& earlier : chain) {
        if (proportional(earlier, next)) {
          report.result = Nilpotency::refuted;
          report.culprit = i;
          return report;
        }
      }
      chain.push_back(std::move(next));
    }
    if (!chain.back().is_zero()) {
      report.result = Nilpotency::cap_exceeded;
      report.culprit = i;
      return report;
    }
    report.orders.push_back(chain.size() - 1);
  }
  report.result = Nilpotency::verified;
  return report;
}

ParametricPolynomial exponentiate(const Derivation& d, const Polynomial& f, std::size_t cap) {
  const NilpotencyReport lnd = is_locally_nilpotent(d, cap);
  if (lnd.result != Nilpotency::verified) {
    throw InputError("derivation is not certified locally nilpotent: " + d.to_string());
  }
  // d^k(x_i) = 0 for k >= orders[i], so d^N kills x^a once
  // N > sum_i a_i (orders[i] - 1).
  std::size_t bound = 0;
  for (const auto& [mono, c] : f.terms()) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < mono.num_vars(); ++i) {
      if (mono[i] > 0 && lnd.orders[i] > 0) b += mono[i] * (lnd.orders[i] - 1);
    }
    bound = std::max(bound, b);
  }
  ParametricPolynomial out(f.num_vars());
  Polynomial term = f;
  Integer factorial = 1;
  for (std::size_t k = 0; !term.is_zero(); ++k) {
    if (k > bound) throw InvariantViolation("exponential series did not terminate");
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    out.add(k, Rational(1, factorial) * term);
    term = d.apply(term);
  }
  return out;
}

Derivation root_derivation(const RaySystem& rs, const LatticeVector& e) {
  const std::size_t m = rs.size();
  std::optional<std::size_t> target;
  std::vector<unsigned> exps(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const Integer c = pairing(rs[j], e);
    if (c == -1 && !target) {
      target = j;
    } else if (c < 0) {
      throw InputError(e.to_string() + " is not a Demazure root");
    } else {
      exps[j] = to_exponent(c);
    }
  }
  if (!target) throw InputError(e.to_string() + " is not a Demazure root");
  return Derivation::single(Monomial(std::move(exps)), *target);
}

Derivation root_derivation(const RaySystem& rs, const LatticeVector& e, const DegreeMap& dm) {
  Derivation d = root_derivation(rs, e);
  const auto deg = d.class_degree(dm);
  if (!deg || *deg != dm.zero()) {
    throw InvariantViolation("root derivation of " + e.to_string() + " has nonzero Cl-degree");
  }
  return d;
}

std::vector<Monomial> homogeneous_component(const DegreeMap& dm, const DivisorClass& w) {
  if (w.size() != dm.rank) throw DimensionError("divisor class of the wrong rank");
  const std::size_t m = dm.degrees.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& d = dm.degrees[i];
    const bool nonneg = std::all_of(d.begin(), d.end(), [](const Integer& c) { return c >= 0; });
    const bool nonzero = std::any_of(d.begin(), d.end(), [](const Integer& c) { return c > 0; });
    if (!nonneg || !nonzero) {
      throw InvariantViolation("component is not finite: variable x" + std::to_string(i + 1) +
                               " has a degree without positive part");
    }
  }
  std::vector<Monomial> out;
  if (std::any_of(w.begin(), w.end(), [](const Integer& c) { return c < 0; })) return out;

  std::vector<unsigned> exps(m, 0);
  DivisorClass residual = w;
  auto descend = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      if (residual == dm.zero()) out.emplace_back(exps);
      return;
    }
    Integer cap = -1;
    for (std::size_t k = 0; k < dm.rank; ++k) {
      if (dm.degrees[i][k] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), residual[k].get_mpz_t(), dm.degrees[i][k].get_mpz_t());
      if (cap < 0 || q < cap) cap = q;
    }
    const unsigned top = to_exponent(cap);
    for (unsigned a = 0; a <= top; ++a) {
      exps[i] = a;
      self(self, i + 1);
      for (std::size_t k = 0; k < dm.rank; ++k) residual[k] -= dm.degrees[i][k];
    }
    for (std::size_t k = 0; k < dm.rank; ++k) residual[k] += dm.degrees[i][k] * (top + 1);
    exps[i] = 0;
  };
  descend(descend, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t default_nilpotency_cap(const DegreeMap& dm) {
  std::size_t largest = 0;
  std::set<DivisorClass> seen;
  for (const auto& d : dm.degrees) {
    if (seen.insert(d).second) largest = std::max(largest, homogeneous_component(dm, d).size());
  }
  return largest + 2;
}

std::vector<std::string> homogeneous_basis_violations(const RaySystem& rs, const DegreeMap& dm,
                                                      const RootCatalog& catalog) {
  std::vector<std::string> bad;
  const std::size_t m = rs.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Monomial> expected{Monomial::variable(m, i)};
    for (const auto& e : catalog.per_ray[i]) {
      const Polynomial img = root_derivation(rs, e).image(i);
      expected.push_back(img.terms().begin()->first);
    }
    std::sort(expected.begin(), expected.end(), std::greater<>());
    if (homogeneous_component(dm, dm.degrees[i]) != expected) {
      bad.push_back("component of deg(x" + std::to_string(i + 1) +
                    ") is not spanned by x" + std::to_string(i + 1) + " and its root images");
    }
  }
  return bad;
}

}  // namespace toradd
