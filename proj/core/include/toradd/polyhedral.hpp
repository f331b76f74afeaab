#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "toradd/errors.hpp"
#include "toradd/linear_algebra.hpp"

namespace toradd {

/// coeffs . x + constant >= 0
struct LinearConstraint {
  std::vector<Integer> coeffs;
  Integer constant;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Rational interval; a missing end is unbounded.
struct Interval {
  bool empty = false;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

class UnboundedPolyhedron : public InputError {
 public:
  using InputError::InputError;
};

/// A system of linear inequalities over Q^k handled by exact Fourier-Motzkin
/// elimination. Constraints are stored scaled to coprime integers and
/// deduplicated; a system that collapses to 0 >= c with c < 0 is marked
/// infeasible.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  bool trivially_infeasible() const { return infeasible_; }

  void add_ge(std::vector<Integer> coeffs, Integer constant);
  void add_eq(const std::vector<Integer>& coeffs, const Integer& constant);

  /// Projection eliminating `var`; the variable keeps its slot with all
  /// coefficients zero.
  ConstraintSystem eliminate(std::size_t var) const;

  /// Fixes `var` to `value`.
  ConstraintSystem substitute(std::size_t var, const Integer& value) const;

  bool feasible() const;

  /// Exact range of `var` over the rational polyhedron.
  Interval bounds(std::size_t var) const;

  /// Calls `visit` with every integer point, in lexicographic order. Throws
  /// UnboundedPolyhedron if some coordinate range is infinite.
  void for_each_integer_point(const std::function<void(const std::vector<Integer>&)>& visit) const;

 private:
  void add_normalized(LinearConstraint c);
  void enumerate_from(std::size_t var, std::vector<Integer>& point,
                      const std::function<void(const std::vector<Integer>&)>& visit) const;

  std::size_t num_vars_;
  std::vector<LinearConstraint> rows_;
  bool infeasible_ = false;
};

}  // namespace toradd
