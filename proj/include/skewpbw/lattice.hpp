#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace skewpbw {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

struct LatticeRank {
  std::size_t rank = 0;
  /// Z-basis of {c : sum_i c_i v_i = 0}. Each vector is sign-normalized
  /// (first nonzero entry positive).
  IntegerMatrix kernel;
};

/// Rank of the integer vectors and a basis of their integral relations,
/// computed by unimodular row reduction of [V | I].
LatticeRank integer_lattice_rank(const IntegerMatrix& vectors);

/// Exact determinant (fraction-free Bareiss elimination). Requires a square
/// matrix; the empty matrix has determinant 1.
Integer determinant(IntegerMatrix m);

/// Scales each rational row by the lcm of its denominators. The scaling is
/// positive, so the sign pattern of every row dot product is preserved.
IntegerMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows);

/// Row-major transpose.
IntegerMatrix transpose(const IntegerMatrix& m);

}  // namespace skewpbw
