#pragma once

#include <Eigen/Dense>
#include <array>

#include "chow/matrix.hpp"
#include "chow/rational.hpp"
#include "chow/rng.hpp"

namespace chow {

/// Gaussian rational a + b*i with exact components.
struct GaussQ {
    Rational re, im;

    GaussQ() = default;
    GaussQ(Rational r) : re(std::move(r)) {}
    GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    GaussQ operator-() const { return {-re, -im}; }
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussQ&) const = default;
};

inline GaussQ gauss_i() { return GaussQ(Rational(0), Rational(1)); }

using CMatrix3 = std::array<std::array<GaussQ, 3>, 3>;
using CMatrix4 = std::array<std::array<GaussQ, 4>, 4>;

/// Isometric linear embedding of 3x3 matrices into traceless symmetric 4x4
/// matrices. Rank of the image classifies membership: rank <= 2 exactly on
/// matrices with singular values (s, s, 0), rank <= 1 exactly on the
/// singular surface of the complexification.
RationalMatrix to_sym4(const RationalMatrix& m3);
Eigen::Matrix4d to_sym4(const Eigen::Matrix3d& m3);
CMatrix4 to_sym4(const CMatrix3& m3);

/// The ten cubics cutting out the variety: det(M) and the nine entries of
/// 2(M M^T)M - tr(M M^T) M.
std::array<Rational, 10> essential_cubics(const RationalMatrix& m3);
std::array<double, 10> essential_cubics(const Eigen::Matrix3d& m3);
std::array<GaussQ, 10> essential_cubics(const CMatrix3& m3);

enum class EssentialClass { NotInE, InE, InSing };

/// Exact classification of a rational 3x3 matrix by the rank of its
/// traceless symmetric 4x4 image.
EssentialClass rank_classify(const RationalMatrix& m3);

/// Isotropic parametrization data of a point on the singular surface.
struct IsotropicParam {
    GaussQ u1, u2, v1, v2;  // (u,v) != 0
};
struct SingularPoint {
    CMatrix3 M;               // rank-one a*b^T with isotropic a, b
    std::array<GaussQ, 4> k;  // isotropic 4-vector with k^T k = sym4(M)
};
SingularPoint sing_parametrization(const IsotropicParam& p);

/// Nearest-point style projection onto matrices with singular values
/// (s, s, 0): average the two leading singular values, zero the last, with
/// det(U) = det(V) = +1 enforced before reassembly.
Eigen::Matrix3d project_to_essential(const Eigen::Matrix3d& m);

/// [t]_x skew matrix of a 3-vector.
RationalMatrix cross_matrix(const std::array<Rational, 3>& t);

/// Haar-distributed rotation (double precision) via uniform unit quaternion.
Eigen::Matrix3d haar_rotation(Rng& rng);

/// Exactly orthogonal rational rotation with det 1: a Haar quaternion is
/// pulled back stereographically to R^3, approximated by a nearby rational
/// point, and pushed forward; the quaternion-to-matrix formula divides by
/// the exact norm, so no square roots appear.
RationalMatrix random_rational_rotation(Rng& rng, unsigned long denominator_bound = 1000);

/// Rational rotation from an explicit quaternion (need not be normalized).
RationalMatrix rotation_from_quaternion(const std::array<Rational, 4>& q);

struct EssentialSample {
    RationalMatrix R;            // exact rotation
    std::array<Rational, 3> t;   // nonzero translation
    RationalMatrix M;            // cross_matrix(t) * R
};
EssentialSample random_essential(Rng& rng, unsigned long denominator_bound = 1000);

/// Best rational approximation with denominator <= bound (continued
/// fractions, refined by the final semiconvergent).
Rational best_rational_approx(double x, unsigned long bound);

}  // namespace chow
