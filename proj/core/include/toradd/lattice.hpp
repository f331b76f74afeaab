#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toradd/linear_algebra.hpp"

namespace toradd {

/// An element of N or M in fixed integer coordinates. The two lattices share
/// this representation; the pairing between them is the dot product.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector zero(std::size_t dim);
  static LatticeVector unit(std::size_t dim, std::size_t k);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;

  /// Largest absolute coordinate.
  Integer max_norm() const;

  std::string to_string() const;

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(const Integer& k, const LatticeVector& a);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  /// Lexicographic on coordinates.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// A unimodular basis of a lattice. Construction fails unless the
/// determinant is +1 or -1.
class Basis {
 public:
  explicit Basis(std::vector<LatticeVector> vectors);

  std::size_t dim() const { return vectors_.size(); }
  const LatticeVector& operator[](std::size_t k) const { return vectors_[k]; }
  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  const Integer& determinant() const { return determinant_; }

 private:
  std::vector<LatticeVector> vectors_;
  Integer determinant_;
};

/// v divided by the gcd of its entries. Throws InputError for v == 0.
LatticeVector primitive(const LatticeVector& v);

/// Determinant of the square matrix whose rows are `rows`.
Integer determinant(std::span<const LatticeVector> rows);

/// True iff `vs` is n vectors of length n with determinant +-1.
bool is_lattice_basis(std::span<const LatticeVector> vs);

/// Integer coefficients c with v = sum_l c_l * b[l].
LatticeVector basis_coordinates(const Basis& b, const LatticeVector& v);

/// The basis q of the dual lattice with pairing(b[i], q[j]) = delta_ij.
Basis dual_basis(const Basis& b);

Integer pairing(const LatticeVector& u, const LatticeVector& e);

}  // namespace toradd
