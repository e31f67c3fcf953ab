#ifndef DODGSON_ORACLE_HPP
#define DODGSON_ORACLE_HPP

#include <cstddef>

#include "dodgson/matrix.hpp"

// Independent determinant routines used to cross-check condensation. Nothing
// here calls into the condensation engine.

namespace dodgson {

inline constexpr std::size_t kCofactorMaxDimension = 8;

/// Determinant by first-row Laplace expansion (minors shared across
/// branches). Works for symbolic entries. Throws DimensionError above
/// kCofactorMaxDimension.
Polynomial det_cofactor(const SymMatrix& m);

/// Fraction-free (Bareiss) elimination on a constant matrix, swapping rows
/// only when the pivot is exactly zero. Throws Error on a symbolic entry.
Rational det_bareiss(const SymMatrix& m);

/// The (n-k) x (n-k) matrix whose (i,j) entry is the determinant of the
/// (k+1)-square contiguous block starting at (i,j). Requires 1 <= k <= n-1.
SymMatrix all_minors_level(const SymMatrix& a, std::size_t k);

}  // namespace dodgson

#endif  // DODGSON_ORACLE_HPP
