#include "toradd/polyhedral.hpp"

#include <algorithm>
#include <utility>

namespace toradd {

namespace {

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

void ConstraintSystem::add_ge(std::vector<Integer> coeffs, Integer constant) {
  if (coeffs.size() != num_vars_) throw DimensionError("constraint length mismatch");
  add_normalized({std::move(coeffs), std::move(constant)});
}

void ConstraintSystem::add_eq(const std::vector<Integer>& coeffs, const Integer& constant) {
  add_ge(coeffs, constant);
  std::vector<Integer> neg(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) neg[k] = -coeffs[k];
  add_ge(std::move(neg), -constant);
}

void ConstraintSystem::add_normalized(LinearConstraint c) {
  Integer g = 0;
  for (const auto& a : c.coeffs) g = gcd(g, a);
  if (g == 0) {
    if (c.constant < 0) infeasible_ = true;
    return;
  }
  g = gcd(g, c.constant);
  if (g != 1) {
    for (auto& a : c.coeffs) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.constant.get_mpz_t(), c.constant.get_mpz_t(), g.get_mpz_t());
  }
  if (std::find(rows_.begin(), rows_.end(), c) == rows_.end()) rows_.push_back(std::move(c));
}

ConstraintSystem ConstraintSystem::eliminate(std::size_t var) const {
  ConstraintSystem out(num_vars_);
  out.infeasible_ = infeasible_;
  std::vector<const LinearConstraint*> pos;
  std::vector<const LinearConstraint*> neg;
  for (const auto& c : rows_) {
    const int s = sgn(c.coeffs[var]);
    if (s > 0) {
      pos.push_back(&c);
    } else if (s < 0) {
      neg.push_back(&c);
    } else {
      out.add_normalized(c);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const Integer wp = -q->coeffs[var];
      const Integer wq = p->coeffs[var];
      LinearConstraint combo{std::vector<Integer>(num_vars_), wp * p->constant + wq * q->constant};
      for (std::size_t k = 0; k < num_vars_; ++k) {
        combo.coeffs[k] = wp * p->coeffs[k] + wq * q->coeffs[k];
      }
      combo.coeffs[var] = 0;
      out.add_normalized(std::move(combo));
    }
  }
  return out;
}

ConstraintSystem ConstraintSystem::substitute(std::size_t var, const Integer& value) const {
  ConstraintSystem out(num_vars_);
  out.infeasible_ = infeasible_;
  for (const auto& c : rows_) {
    LinearConstraint fixed = c;
    fixed.constant += fixed.coeffs[var] * value;
    fixed.coeffs[var] = 0;
    out.add_normalized(std::move(fixed));
  }
  return out;
}

bool ConstraintSystem::feasible() const {
  ConstraintSystem s = *this;
  for (std::size_t v = 0; v < num_vars_ && !s.infeasible_; ++v) s = s.eliminate(v);
  return !s.infeasible_;
}

Interval ConstraintSystem::bounds(std::size_t var) const {
  ConstraintSystem s = *this;
  for (std::size_t v = 0; v < num_vars_ && !s.infeasible_; ++v) {
    if (v != var) s = s.eliminate(v);
  }
  Interval out;
  if (s.infeasible_) {
    out.empty = true;
    return out;
  }
  for (const auto& c : s.rows_) {
    // a x + c >= 0
    Rational bound(-c.constant, c.coeffs[var]);
    bound.canonicalize();
    if (c.coeffs[var] > 0) {
      if (!out.lower || bound > *out.lower) out.lower = bound;
    } else {
      if (!out.upper || bound < *out.upper) out.upper = bound;
    }
  }
  if (out.lower && out.upper && *out.lower > *out.upper) out.empty = true;
  return out;
}

void ConstraintSystem::for_each_integer_point(
    const std::function<void(const std::vector<Integer>&)>& visit) const {
  std::vector<Integer> point(num_vars_);
  enumerate_from(0, point, visit);
}

void ConstraintSystem::enumerate_from(
    std::size_t var, std::vector<Integer>& point,
    const std::function<void(const std::vector<Integer>&)>& visit) const {
  if (infeasible_) return;
  if (var == num_vars_) {
    visit(point);
    return;
  }
  const Interval range = bounds(var);
  if (range.empty) return;
  if (!range.lower || !range.upper) {
    throw UnboundedPolyhedron("coordinate " + std::to_string(var) + " is unbounded");
  }
  const Integer hi = floor_of(*range.upper);
  for (Integer t = ceil_of(*range.lower); t <= hi; ++t) {
    point[var] = t;
    substitute(var, t).enumerate_from(var + 1, point, visit);
  }
}

}  // namespace toradd
