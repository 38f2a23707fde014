#include <doctest.h>

#include "chow/exact_linalg.hpp"
#include "chow/rng.hpp"

using namespace chow;

namespace {

Rational rnd_rational(Rng& rng) {
    long num = static_cast<long>(rng.below(21)) - 10;
    long den = static_cast<long>(rng.below(7)) + 1;
    return rat(num, den);
}

// Independent determinant oracle via plain LU with partial (first nonzero)
// pivoting; deliberately a different code path from the library's
// elimination.
Rational det_lu_oracle(RationalMatrix a) {
    std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (a(r, k) != 0) {
                piv = r;
                break;
            }
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            Rational f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return det;
}

RationalMatrix random_skew(Rng& rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rnd_rational(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("rank_exact basic") {
    CHECK(rank_exact(RationalMatrix::identity(3)) == 3);
    RationalMatrix m{{1, 2}, {2, 4}};
    CHECK(rank_exact(m) == 1);
    CHECK(rank_exact(RationalMatrix(2, 3)) == 0);
}

TEST_CASE("rank invariant under row scaling and permutation") {
    Rng rng(1);
    for (int it = 0; it < 25; ++it) {
        std::size_t rows = 2 + rng.below(4), cols = 2 + rng.below(4);
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd_rational(rng);
        std::size_t r = rank_exact(m);

        RationalMatrix scaled = m;
        Rational c = 0;
        while (c == 0) c = rnd_rational(rng);
        for (std::size_t j = 0; j < cols; ++j) scaled(0, j) *= c;
        CHECK(rank_exact(scaled) == r);

        RationalMatrix perm(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) perm(i, j) = m((i + 1) % rows, j);
        CHECK(rank_exact(perm) == r);
    }
}

TEST_CASE("pfaffian base cases") {
    RationalMatrix m{{0, 5}, {-5, 0}};
    CHECK(pfaffian_exact(m) == 5);

    RationalMatrix bd(4, 4);
    bd(0, 1) = rat(3, 7);
    bd(1, 0) = -bd(0, 1);
    bd(2, 3) = rat(-2, 5);
    bd(3, 2) = -bd(2, 3);
    CHECK(pfaffian_exact(bd) == rat(3, 7) * rat(-2, 5));

    CHECK_THROWS_AS(pfaffian_exact(RationalMatrix(3, 3)), std::invalid_argument);
    RationalMatrix notskew{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(pfaffian_exact(notskew), std::invalid_argument);
}

TEST_CASE("pfaffian squared equals determinant (LU oracle), sizes 2..12") {
    Rng rng(42);
    for (std::size_t n = 2; n <= 12; n += 2)
        for (int rep = 0; rep < 6; ++rep) {
            RationalMatrix m = random_skew(rng, n);
            Rational pf = pfaffian_exact(m);
            CHECK(pf * pf == det_lu_oracle(m));
        }
}

TEST_CASE("pfaffian of singular skew matrix is exact zero") {
    Rng rng(5);
    RationalMatrix m = random_skew(rng, 6);
    // force rank deficiency: duplicate a row/column pair
    for (std::size_t j = 0; j < 6; ++j) {
        m(1, j) = m(0, j);
        m(j, 1) = m(j, 0);
    }
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = 0;
    CHECK(pfaffian_exact(m) == 0);
}

TEST_CASE("nullspace_exact") {
    CHECK(nullspace_exact(RationalMatrix::identity(4)).empty());
    auto basis = nullspace_exact(RationalMatrix(2, 3));
    CHECK(basis.size() == 3);

    Rng rng(9);
    for (int it = 0; it < 10; ++it) {
        RationalMatrix m(3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = rnd_rational(rng);
        auto ns = nullspace_exact(m);
        CHECK(ns.size() == 5 - rank_exact(m));
        for (const auto& v : ns)
            for (std::size_t i = 0; i < 3; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < 5; ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("singular values") {
    FloatMatrix d = FloatMatrix::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    auto sv = singular_values(d);
    CHECK(sv[0] == doctest::Approx(3));
    CHECK(sv[1] == doctest::Approx(2));
    CHECK(sv[2] == doctest::Approx(1));

    FloatMatrix skew(2, 2);
    skew << 0, 3, -3, 0;
    sv = singular_values(skew);
    CHECK(sv[0] == doctest::Approx(3));
    CHECK(sv[1] == doctest::Approx(3));

    FloatMatrix bad(1, 1);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(singular_values(bad), std::invalid_argument);
}

TEST_CASE("skew singular values pair up to 1e-9 relative") {
    Rng rng(77);
    FloatMatrix m = FloatMatrix::Zero(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j) {
            m(i, j) = rng.uniform(-1, 1);
            m(j, i) = -m(i, j);
        }
    auto sv = singular_values(m);
    for (int k = 0; k < 10; ++k) {
        double a = sv[2 * k], b = sv[2 * k + 1];
        CHECK(std::abs(a - b) <= 1e-9 * std::max(a, 1e-6 * sv[0]));
    }
}

TEST_CASE("inverse_exact") {
    Rng rng(31);
    for (int it = 0; it < 5; ++it) {
        RationalMatrix m(4, 4);
        do {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m(i, j) = rnd_rational(rng);
        } while (det_lu_oracle(m) == 0);
        CHECK(m * inverse_exact(m) == RationalMatrix::identity(4));
    }
}
