#pragma once

#include <Eigen/Dense>
#include <vector>

#include "chow/matrix.hpp"
#include "chow/rational.hpp"

namespace chow {

using FloatMatrix = Eigen::MatrixXd;

/// Rank over Q by exact Gaussian elimination.
std::size_t rank_exact(const RationalMatrix& m);

/// Determinant over Q (square input) by exact elimination.
Rational det_exact(const RationalMatrix& m);

/// Basis of the right kernel over Q; each element is one basis column.
std::vector<std::vector<Rational>> nullspace_exact(const RationalMatrix& m);

/// Pfaffian of an exactly skew-symmetric even-sized matrix, computed by
/// Parlett-Reid style congruence elimination with exact rational pivoting.
/// Sign convention: pf([[0,a],[-a,0]]) = a. Throws std::invalid_argument on
/// odd size or non-skew input.
Rational pfaffian_exact(const RationalMatrix& m);

/// Singular values sorted descending (Eigen Jacobi SVD). Throws
/// std::invalid_argument if any entry is non-finite.
std::vector<double> singular_values(const FloatMatrix& m);

RationalMatrix inverse_exact(const RationalMatrix& m);

}  // namespace chow
