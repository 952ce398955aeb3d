#pragma once

#include <optional>
#include <vector>

#include "minkin/exact/matrix.hpp"
#include "minkin/exact/rational.hpp"
#include "minkin/exact/sparse_poly.hpp"

namespace minkin {

using RationalMatrix = Matrix<BigRational>;
using PolyMatrix = Matrix<SparsePoly>;

// Fraction-free (Bareiss) determinant; every intermediate division is exact.
// NotSquare for non-square input; size capped at 8.
SparsePoly det_polynomial_matrix(const PolyMatrix& m);
BigRational det_rational(const RationalMatrix& m);

// Right nullspace basis, each vector scaled to integers with content 1 and
// positive leading nonzero entry.
std::vector<std::vector<BigInt>> nullspace_rational(const RationalMatrix& a);
std::size_t rank_rational(const RationalMatrix& a);

// Unique solution of a x = b, or nullopt when inconsistent or underdetermined.
std::optional<std::vector<BigRational>> solve_rational(const RationalMatrix& a, const std::vector<BigRational>& b);

}  // namespace minkin
