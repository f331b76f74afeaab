#include "toradd/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "toradd/errors.hpp"

namespace toradd {

namespace {

void require_same_dim(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("lattice vectors of length " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()));
  }
}

IntegerMatrix as_rows(std::span<const LatticeVector> rows) {
  IntegerMatrix m;
  m.reserve(rows.size());
  for (const auto& v : rows) m.push_back(v.coords());
  return m;
}

// Columns of the result are the basis vectors.
IntegerMatrix as_columns(const Basis& b) {
  const std::size_t n = b.dim();
  IntegerMatrix m(n, std::vector<Integer>(n));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) m[k][l] = b[l][k];
  }
  return m;
}

LatticeVector to_integral(const std::vector<Rational>& x) {
  std::vector<Integer> out;
  out.reserve(x.size());
  for (const auto& q : x) {
    if (q.get_den() != 1) {
      throw InvariantViolation("non-integral solution over a unimodular basis");
    }
    out.push_back(q.get_num());
  }
  return LatticeVector(std::move(out));
}

}  // namespace

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("lattice vector of length 0");
}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  if (coords.size() == 0) throw DimensionError("lattice vector of length 0");
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t dim) {
  return LatticeVector(std::vector<Integer>(dim, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t k) {
  std::vector<Integer> c(dim, Integer(0));
  c.at(k) = 1;
  return LatticeVector(std::move(c));
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::max_norm() const {
  Integer best = 0;
  for (const auto& c : coords_) {
    Integer a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<Integer> c(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) c[k] = a[k] + b[k];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<Integer> c(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) c[k] = a[k] - b[k];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a) {
  std::vector<Integer> c(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) c[k] = -a[k];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Integer& s, const LatticeVector& a) {
  std::vector<Integer> c(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) c[k] = s * a[k];
  return LatticeVector(std::move(c));
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.coords_ == b.coords_;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                      b.coords_.begin(), b.coords_.end());
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t k = 0; k < v.dim(); ++k) {
    if (k) os << ", ";
    os << v[k];
  }
  return os << ')';
}

Basis::Basis(std::vector<LatticeVector> vectors) : vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.dim() != vectors_.size()) {
      throw DimensionError("basis needs n vectors of length n");
    }
  }
  determinant_ = toradd::determinant(vectors_);
  if (abs(determinant_) != 1) {
    throw InputError("vectors are not a lattice basis (determinant " +
                     determinant_.get_str() + ")");
  }
}

LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) throw InputError("zero vector has no primitive generator");
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  if (g == 1) return v;
  std::vector<Integer> out(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    mpz_divexact(out[k].get_mpz_t(), v[k].get_mpz_t(), g.get_mpz_t());
  }
  return LatticeVector(std::move(out));
}

Integer determinant(std::span<const LatticeVector> rows) {
  for (const auto& v : rows) {
    if (v.dim() != rows.size()) throw DimensionError("determinant needs n vectors of length n");
  }
  return determinant(as_rows(rows));
}

bool is_lattice_basis(std::span<const LatticeVector> vs) {
  return abs(determinant(vs)) == 1;
}

LatticeVector basis_coordinates(const Basis& b, const LatticeVector& v) {
  if (v.dim() != b.dim()) throw DimensionError("vector and basis dimensions differ");
  return to_integral(solve(as_columns(b), v.coords()));
}

Basis dual_basis(const Basis& b) {
  // Rows of B times columns of B^{-1} give the identity, so the j-th dual
  // vector is the j-th column of B^{-1}.
  const std::size_t n = b.dim();
  IntegerMatrix rows = as_rows(b.vectors());
  std::vector<LatticeVector> dual;
  dual.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> rhs(n, Integer(0));
    rhs[j] = 1;
    dual.push_back(to_integral(solve(rows, rhs)));
  }
  return Basis(std::move(dual));
}

Integer pairing(const LatticeVector& u, const LatticeVector& e) {
  require_same_dim(u, e);
  Integer s = 0;
  for (std::size_t k = 0; k < u.dim(); ++k) s += u[k] * e[k];
  return s;
}

}  // namespace toradd
