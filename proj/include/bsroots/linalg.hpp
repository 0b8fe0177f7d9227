#pragma once

#include "bsroots/rational.hpp"

#include <optional>
#include <vector>

namespace bsroots {

using RatMatrix = std::vector<RatVector>;  // row-major
using IntMatrix = std::vector<IntVector>;

RatMatrix to_rational(const IntMatrix& m);

/// Row-reduced echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

/// Some solution of m·x = rhs (free variables set to 0), or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);

/// Coefficients y with yᵀ·m = v, or nullopt when v is outside the row space.
std::optional<RatVector> row_space_coefficients(const RatMatrix& m, const RatVector& v);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(IntMatrix m);

/// Unimodular column reduction m·U = [H | 0] with H of full column rank.
struct ColumnReduction {
    IntMatrix unimodular;   // columns 0..rank-1 map onto H, the rest span ker(m) ∩ ℤⁿ
    std::size_t rank = 0;
};
ColumnReduction column_reduce(const IntMatrix& m, std::size_t ncols);

IntMatrix transpose(const IntMatrix& m, std::size_t ncols);

}  // namespace bsroots
