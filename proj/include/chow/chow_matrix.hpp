#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "chow/exterior.hpp"
#include "chow/pieri.hpp"

namespace chow {

enum class Ambient { Sym10, Ess9 };

/// 20x20 exactly skew-symmetric matrix whose entries are integer linear
/// forms in the degree-3 exterior coordinates (120 of them over the ten
/// symmetric-matrix coordinates, 84 over the nine 3x3-matrix coordinates).
/// Its Pfaffian, evaluated at the Pluecker coordinates of a projective
/// plane, vanishes exactly when the plane meets the underlying variety.
struct ChowMatrix {
    ResolutionVariant variant;
    Ambient ambient;
    int nvars = 0;                      // ambient coordinate count (10 or 9)
    std::vector<ExteriorCubic> entries;  // row-major 20x20

    const ExteriorCubic& at(int r, int c) const { return entries[r * 20 + c]; }
    ExteriorCubic& at(int r, int c) { return entries[r * 20 + c]; }

    int triple_count() const;  // C(nvars, 3)

    RationalMatrix evaluated(const std::vector<Rational>& pluecker) const;
    Eigen::MatrixXd evaluated(const std::vector<double>& pluecker) const;
};

/// Exterior-algebra triple product alpha . phi_sym . alpha^T of a built
/// resolution; entries land in the degree-3 exterior algebra on the ten
/// coordinates. Result is checked to be exactly skew-symmetric and is
/// normalized to primitive integer coefficients.
ChowMatrix chow_matrix_symmetric(const FreeResolution& res);

/// Pull the ten ambient coordinates back along the isometric embedding of
/// 3x3 matrices into traceless symmetric 4x4 matrices; output is over the 84
/// exterior triples of the nine 3x3-matrix coordinates.
ChowMatrix pullback_to_essential(const ChowMatrix& cm);

/// Same pullback computed from substituted differentials (independent route,
/// used for cross-checks).
ChowMatrix pullback_via_differentials(const FreeResolution& res);

/// Number of quadric generators of the Pluecker ideal of Gr(3,n):
/// C(C(n,3)+1, 2) - dim S_{(2,2,2)}(C^n).
BigInt grassmannian_quadric_count(int k, int n);

/// Pluecker coordinates (all 3x3 minors, lexicographic triples) of the row
/// space of a 3 x nvars matrix.
std::vector<Rational> pluecker_of_rows(const RationalMatrix& span3);

void serialize(const ChowMatrix& cm, std::ostream& os);
ChowMatrix deserialize_chow(std::istream& is);

struct ChowMatrixStats {
    int zero_offdiag_entries;
    BigInt max_abs_coeff;
};
ChowMatrixStats chow_stats(const ChowMatrix& cm);

/// The ten linear forms over the nine 3x3-matrix coordinates giving the
/// traceless symmetric 4x4 image (doubled to stay integral: these are
/// 2*s(M)_ij; overall scale is irrelevant downstream).
std::vector<LinearForm> sym4_substitution_forms();

}  // namespace chow
