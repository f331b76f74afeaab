#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace toradd {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant of a square integer matrix by fraction-free (Bareiss)
// elimination. Every intermediate division is exact.
Integer determinant(IntegerMatrix m);

// Solves a * x = b for square nonsingular a. Elimination is fraction-free;
// rationals appear only in back substitution. Throws InputError when a is
// singular or the shapes disagree.
std::vector<Rational> solve(IntegerMatrix a, const std::vector<Integer>& b);

// Rank over the rationals.
std::size_t rank(RationalMatrix m);

}  // namespace toradd
