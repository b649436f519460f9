#pragma once

#include <optional>
#include <vector>

#include "lpcount/rational.hpp"

namespace lpcount {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major, rectangular

/// Exact solution of a square nonsingular system A x = b by elimination with
/// full pivoting on numerator magnitude. Exactness makes the pivot choice a
/// size heuristic only; any nonzero pivot gives the same answer.
/// Throws DimensionMismatchError for shape problems and SingularMatrixError
/// for singular A.
RationalVector solve_linear_system(const RationalMatrix& a, const RationalVector& b);

/// solve_linear_system with singularity reported as nullopt instead of a
/// throw. Shape errors still throw.
std::optional<RationalVector> try_solve_linear_system(const RationalMatrix& a,
                                                      const RationalVector& b);

Rational determinant(const RationalMatrix& a);

int matrix_rank(const RationalMatrix& a);

/// Basis of the right null space {x : A x = 0}. `cols` disambiguates the
/// width when `a` has no rows.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a, int cols);

/// Dimension of the affine hull of a point set; -1 for an empty set, 0 for a
/// single point.
int affine_rank(const std::vector<RationalVector>& points);

Rational dot(const std::vector<Int>& a, const RationalVector& x);

}  // namespace lpcount
