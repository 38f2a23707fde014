#include "chow/essential.hpp"

#include <cmath>
#include <stdexcept>

#include "chow/exact_linalg.hpp"

namespace chow {

namespace {

// Coefficient table of the embedding: for each of the ten upper-triangle
// positions (i<=j) of the symmetric 4x4 image, the linear combination of the
// nine 3x3 entries m_ab (row-major), all times 1/2.
struct SymEntry {
    int i, j;
    int coeff[9];  // numerators over 2, indexed 3*a+b
};
constexpr SymEntry kSym4[10] = {
    {0, 0, {1, 0, 0, 0, -1, 0, 0, 0, -1}},   // m11 - m22 - m33
    {0, 1, {0, 0, 1, 0, 0, 0, 1, 0, 0}},     // m13 + m31
    {0, 2, {0, 1, 0, 1, 0, 0, 0, 0, 0}},     // m12 + m21
    {0, 3, {0, 0, 0, 0, 0, 1, 0, -1, 0}},    // m23 - m32
    {1, 1, {-1, 0, 0, 0, -1, 0, 0, 0, 1}},   // -m11 - m22 + m33
    {1, 2, {0, 0, 0, 0, 0, 1, 0, 1, 0}},     // m23 + m32
    {1, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}},    // m12 - m21
    {2, 2, {-1, 0, 0, 0, 1, 0, 0, 0, -1}},   // -m11 + m22 - m33
    {2, 3, {0, 0, -1, 0, 0, 0, 1, 0, 0}},    // -m13 + m31
    {3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}},     // m11 + m22 + m33
};

}  // namespace

RationalMatrix to_sym4(const RationalMatrix& m3) {
    if (m3.rows() != 3 || m3.cols() != 3) throw std::invalid_argument("to_sym4: need 3x3");
    RationalMatrix s(4, 4);
    for (const SymEntry& e : kSym4) {
        Rational v = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (e.coeff[3 * a + b]) v += Rational(e.coeff[3 * a + b]) * m3(a, b);
        v /= 2;
        s(e.i, e.j) = v;
        s(e.j, e.i) = v;
    }
    return s;
}

Eigen::Matrix4d to_sym4(const Eigen::Matrix3d& m3) {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    for (const SymEntry& e : kSym4) {
        double v = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (e.coeff[3 * a + b]) v += e.coeff[3 * a + b] * m3(a, b);
        v /= 2;
        s(e.i, e.j) = v;
        s(e.j, e.i) = v;
    }
    return s;
}

CMatrix4 to_sym4(const CMatrix3& m3) {
    CMatrix4 s{};
    for (const SymEntry& e : kSym4) {
        GaussQ v;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (e.coeff[3 * a + b])
                    v = v + GaussQ(Rational(e.coeff[3 * a + b])) * m3[a][b];
        v = GaussQ(rat(1, 2)) * v;
        s[e.i][e.j] = v;
        s[e.j][e.i] = v;
    }
    return s;
}

std::array<Rational, 10> essential_cubics(const RationalMatrix& m) {
    std::array<Rational, 10> out;
    out[0] = det_exact(m);
    RationalMatrix mmt = m * m.transposed();
    Rational tr = mmt(0, 0) + mmt(1, 1) + mmt(2, 2);
    RationalMatrix rest = mmt * m;
    int idx = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[idx++] = 2 * rest(i, j) - tr * m(i, j);
    return out;
}

std::array<double, 10> essential_cubics(const Eigen::Matrix3d& m) {
    std::array<double, 10> out;
    out[0] = m.determinant();
    Eigen::Matrix3d mmt = m * m.transpose();
    Eigen::Matrix3d rest = 2.0 * mmt * m - mmt.trace() * m;
    int idx = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[idx++] = rest(i, j);
    return out;
}

std::array<GaussQ, 10> essential_cubics(const CMatrix3& m) {
    auto mul = [](const CMatrix3& a, const CMatrix3& b) {
        CMatrix3 c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        return c;
    };
    CMatrix3 mt{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mt[i][j] = m[j][i];
    CMatrix3 mmt = mul(m, mt);
    GaussQ tr = mmt[0][0] + mmt[1][1] + mmt[2][2];
    CMatrix3 mmtm = mul(mmt, m);

    std::array<GaussQ, 10> out;
    out[0] = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    int idx = 1;
    GaussQ two(Rational(2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[idx++] = two * mmtm[i][j] - tr * m[i][j];
    return out;
}

EssentialClass rank_classify(const RationalMatrix& m3) {
    std::size_t r = rank_exact(to_sym4(m3));
    if (r <= 1) return EssentialClass::InSing;
    if (r == 2) return EssentialClass::InE;
    return EssentialClass::NotInE;
}

SingularPoint sing_parametrization(const IsotropicParam& p) {
    if (p.u1.is_zero() && p.u2.is_zero())
        throw std::invalid_argument("sing_parametrization: u = 0");
    if (p.v1.is_zero() && p.v2.is_zero())
        throw std::invalid_argument("sing_parametrization: v = 0");
    const GaussQ i = gauss_i();
    const GaussQ two(Rational(2));
    std::array<GaussQ, 3> a = {p.u1 * p.u1 - p.u2 * p.u2, two * p.u1 * p.u2,
                               i * (p.u1 * p.u1 + p.u2 * p.u2)};
    std::array<GaussQ, 3> b = {p.v1 * p.v1 - p.v2 * p.v2, two * p.v1 * p.v2,
                               i * (p.v1 * p.v1 + p.v2 * p.v2)};
    SingularPoint out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.M[r][c] = a[r] * b[c];
    // isotropic 4-vector with k^T k equal (exactly, not just up to scale) to
    // the symmetric 4x4 image of M
    out.k = {p.u1 * p.v1 - p.u2 * p.v2, i * (p.u1 * p.v1 + p.u2 * p.v2),
             p.u1 * p.v2 + p.u2 * p.v1, i * (p.u2 * p.v1 - p.u1 * p.v2)};
    return out;
}

Eigen::Matrix3d project_to_essential(const Eigen::Matrix3d& m) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU(), v = svd.matrixV();
    if (u.determinant() < 0) u.col(2) *= -1;  // last column never contributes
    if (v.determinant() < 0) v.col(2) *= -1;
    double s = (svd.singularValues()(0) + svd.singularValues()(1)) / 2.0;
    Eigen::Vector3d d(s, s, 0.0);
    return u * d.asDiagonal() * v.transpose();
}

RationalMatrix cross_matrix(const std::array<Rational, 3>& t) {
    RationalMatrix m(3, 3);
    m(0, 1) = t[2];
    m(0, 2) = -t[1];
    m(1, 0) = -t[2];
    m(1, 2) = t[0];
    m(2, 0) = t[1];
    m(2, 1) = -t[0];
    return m;
}

namespace {

std::array<double, 4> haar_quaternion(Rng& rng) {
    for (;;) {
        std::array<double, 4> q{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
        if (n < 1e-8) continue;
        for (double& x : q) x /= n;
        return q;
    }
}

}  // namespace

Eigen::Matrix3d haar_rotation(Rng& rng) {
    auto q = haar_quaternion(rng);
    double a = q[0], b = q[1], c = q[2], d = q[3];
    Eigen::Matrix3d r;
    r << a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c),
        2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b),
        2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d;
    return r;
}

RationalMatrix rotation_from_quaternion(const std::array<Rational, 4>& q) {
    const Rational &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    Rational n = a * a + b * b + c * c + d * d;
    if (n == 0) throw std::invalid_argument("rotation_from_quaternion: zero quaternion");
    RationalMatrix r(3, 3);
    r(0, 0) = (a * a + b * b - c * c - d * d) / n;
    r(0, 1) = 2 * (b * c - a * d) / n;
    r(0, 2) = 2 * (b * d + a * c) / n;
    r(1, 0) = 2 * (b * c + a * d) / n;
    r(1, 1) = (a * a - b * b + c * c - d * d) / n;
    r(1, 2) = 2 * (c * d - a * b) / n;
    r(2, 0) = 2 * (b * d - a * c) / n;
    r(2, 1) = 2 * (c * d + a * b) / n;
    r(2, 2) = (a * a - b * b - c * c + d * d) / n;
    return r;
}

RationalMatrix random_rational_rotation(Rng& rng, unsigned long denominator_bound) {
    auto q = haar_quaternion(rng);
    // keep away from the projection pole (quaternions are projective: q ~ -q)
    if (q[3] > 0)
        for (double& x : q) x = -x;
    // stereographic chart from the pole (0,0,0,1)
    double w = 1.0 - q[3];
    std::array<Rational, 3> p = {best_rational_approx(q[0] / w, denominator_bound),
                                 best_rational_approx(q[1] / w, denominator_bound),
                                 best_rational_approx(q[2] / w, denominator_bound)};
    Rational n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    // inverse chart lands exactly on the rational unit sphere
    std::array<Rational, 4> qr = {2 * p[0], 2 * p[1], 2 * p[2], n2 - 1};
    return rotation_from_quaternion(qr);
}

EssentialSample random_essential(Rng& rng, unsigned long denominator_bound) {
    EssentialSample s;
    s.R = random_rational_rotation(rng, denominator_bound);
    do {
        for (auto& c : s.t) c = best_rational_approx(rng.uniform(-2.0, 2.0), 64);
    } while (s.t[0] == 0 && s.t[1] == 0 && s.t[2] == 0);
    s.M = cross_matrix(s.t) * s.R;
    return s;
}

Rational best_rational_approx(double x, unsigned long bound) {
    if (bound < 1) throw std::invalid_argument("best_rational_approx: bound must be >= 1");
    if (!std::isfinite(x)) throw std::invalid_argument("best_rational_approx: non-finite");
    Rational target = rational_from_double(x);
    BigInt bnd(bound);
    if (target.get_den() <= bnd) return target;

    // continued fraction convergents of the exact target
    BigInt p0 = 1, q0 = 0, p1, q1;  // p1/q1 = floor(target)
    BigInt num = target.get_num(), den = target.get_den();
    mpz_fdiv_q(p1.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    q1 = 1;
    Rational frac = target - Rational(p1);
    while (frac != 0) {
        Rational inv = Rational(frac.get_den(), frac.get_num());
        inv.canonicalize();
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bnd) {
            // best semiconvergent still within the bound
            BigInt k = (bnd - q0) / q1;
            if (k > 0) {
                Rational semi(p0 + k * p1, q0 + k * q1);
                semi.canonicalize();
                Rational best(p1, q1);
                best.canonicalize();
                return abs(target - semi) < abs(target - best) ? semi : best;
            }
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - Rational(a);
    }
    Rational best(p1, q1);
    best.canonicalize();
    return best;
}

}  // namespace chow
