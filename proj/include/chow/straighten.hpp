#pragma once

#include <map>

#include "chow/matrix.hpp"
#include "chow/tableaux.hpp"

namespace chow {

/// Expansion of a Schur-module element in the semistandard basis.
/// Keys are semistandard tableaux of one common shape; zero coefficients
/// are never stored.
using TableauExpansion = std::map<Tableau, Rational>;

/// Straighten an arbitrary filling (entries in 1..n) into the semistandard
/// basis. Columns are first sorted (with sign; a repeated entry in a column
/// gives 0), then semistandardness violations are resolved by signed column
/// exchange (Garnir) relations. Results are memoized per filling.
TableauExpansion straighten(const Tableau& filling);

TableauExpansion operator*(const Rational& c, const TableauExpansion& e);

/// Perfect-pairing matrix between Schur modules of complementary shapes.
///
/// shapeA and shapeB must be complementary inside an n x w rectangle, i.e.
/// shapeA[i] + shapeB[n-1-i] = w for all i. The returned matrix is indexed
/// by SSYT(shapeB) x SSYT(shapeA); entry (T,S) is the coefficient of the
/// canonical rectangular tableau (row i constant equal to i+1) in the
/// straightening of the rectangle filled with S on top and T rotated by
/// 180 degrees below. The overall scalar normalization is this choice;
/// everything downstream is scale-invariant.
///
/// Throws std::invalid_argument if the shapes are not complementary.
RationalMatrix dual_pairing_matrix(const Partition& shapeA, const Partition& shapeB, int n);

}  // namespace chow
