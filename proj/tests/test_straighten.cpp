#include <doctest.h>

#include "chow/exact_linalg.hpp"
#include "chow/rng.hpp"
#include "chow/straighten.hpp"

using namespace chow;

namespace {

// Bideterminant model of the Schur module: a filling T maps to the product,
// over its columns, of the minor of Y on rows given by the column entries
// and the first (column height) columns of Y. Straightening identities must
// hold verbatim for these polynomials, which gives an oracle independent of
// the exchange-relation implementation.
Rational bideterminant(const Tableau& t, const RationalMatrix& y) {
    const Partition& sh = t.shape();
    Rational prod = 1;
    for (int c = 0; c < sh.width(); ++c) {
        int h = sh.col_height(c);
        RationalMatrix minor(h, h);
        for (int r = 0; r < h; ++r)
            for (int cc = 0; cc < h; ++cc) minor(r, cc) = y(t.at(r, c) - 1, cc);
        prod *= det_exact(minor);
    }
    return prod;
}

Rational rnd_rational(Rng& rng) {
    return rat(static_cast<long>(rng.below(19)) - 9, static_cast<long>(rng.below(5)) + 1);
}

Tableau random_filling(Rng& rng, const Partition& sh, int n) {
    std::vector<std::uint8_t> e(sh.size());
    for (auto& v : e) v = static_cast<std::uint8_t>(1 + rng.below(n));
    return Tableau(sh, e);
}

}  // namespace

TEST_CASE("straighten trivial cases") {
    Tableau ssyt(Partition{2, 1}, {1, 2, 2});
    auto e = straighten(ssyt);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->first == ssyt);
    CHECK(e.begin()->second == 1);

    // single-column antisymmetry
    Tableau col(Partition{1, 1}, {2, 1});
    e = straighten(col);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->first == Tableau(Partition{1, 1}, {1, 2}));
    CHECK(e.begin()->second == -1);

    // repeated entry in a column
    CHECK(straighten(Tableau(Partition{1, 1}, {3, 3})).empty());
}

TEST_CASE("straighten agrees with the bideterminant oracle") {
    Rng rng(123);
    std::vector<Partition> shapes = {Partition{2, 1}, Partition{3, 2},     Partition{2, 2, 1},
                                     Partition{3, 3, 1}, Partition{3, 2, 2}, Partition{4, 2, 2, 1}};
    for (const Partition& sh : shapes)
        for (int rep = 0; rep < 8; ++rep) {
            Tableau f = random_filling(rng, sh, 4);
            TableauExpansion e = straighten(f);
            for (const auto& [tab, coef] : e) CHECK(tab.is_semistandard());
            for (int trial = 0; trial < 3; ++trial) {
                RationalMatrix y(4, 4);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) y(i, j) = rnd_rational(rng);
                Rational lhs = bideterminant(f, y);
                Rational rhs = 0;
                for (const auto& [tab, coef] : e) rhs += coef * bideterminant(tab, y);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("straighten is idempotent on its output") {
    Rng rng(321);
    for (int rep = 0; rep < 10; ++rep) {
        Tableau f = random_filling(rng, Partition{3, 2}, 4);
        TableauExpansion e = straighten(f);
        for (const auto& [tab, coef] : e) {
            TableauExpansion again = straighten(tab);
            REQUIRE(again.size() == 1);
            CHECK(again.begin()->first == tab);
            CHECK(again.begin()->second == 1);
        }
    }
}

TEST_CASE("dual pairing matrix: perfect pairing for the resolution shapes") {
    RationalMatrix p = dual_pairing_matrix(Partition{3, 2}, Partition{3, 3, 1}, 4);
    CHECK(p.rows() == 60);
    CHECK(p.cols() == 60);
    CHECK(rank_exact(p) == 60);

    for (auto [a, b] : {std::pair<Partition, Partition>{Partition{3, 2, 2}, Partition{4, 2, 2, 1}},
                        {Partition{3, 2, 1, 1}, Partition{3, 3, 2, 1}},
                        {Partition{2, 2, 2, 1}, Partition{3, 2, 2, 2}}}) {
        RationalMatrix q = dual_pairing_matrix(a, b, 4);
        CHECK(q.rows() == q.cols());
        CHECK(rank_exact(q) == q.rows());
    }
}

TEST_CASE("dual pairing matrix: degenerate and rejected cases") {
    RationalMatrix one = dual_pairing_matrix(Partition{1}, Partition{}, 1);
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one(0, 0) == 1);

    CHECK_THROWS_AS(dual_pairing_matrix(Partition{2, 2, 2}, Partition{1}, 4),
                    std::invalid_argument);
}
