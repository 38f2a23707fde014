#include <doctest.h>

#include <set>

#include "chow/tableaux.hpp"

using namespace chow;

TEST_CASE("partition basics") {
    Partition p{3, 2};
    CHECK(p.size() == 5);
    CHECK(p.width() == 3);
    CHECK(p.conjugate() == Partition{2, 2, 1});
    CHECK(Partition{3, 0, 0} == Partition{3});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("ssyt enumeration counts") {
    CHECK(ssyt_enumerate(Partition{3}, 4).size() == 20);
    CHECK(ssyt_enumerate(Partition{3, 2}, 4).size() == 60);
    CHECK(ssyt_enumerate(Partition{1, 1, 1, 1}, 4).size() == 1);
    CHECK(ssyt_enumerate(Partition{1, 1, 1, 1, 1}, 4).empty());
}

TEST_CASE("enumeration is sorted by column word and semistandard") {
    auto list = ssyt_enumerate(Partition{3, 2}, 4);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].is_semistandard());
        if (i) CHECK(list[i - 1].column_word() < list[i].column_word());
    }
}

TEST_CASE("hook content dimensions") {
    CHECK(schur_dimension(Partition{3, 3, 1}, 4) == 60);
    CHECK(schur_dimension(Partition{3}, 4) == 20);
    CHECK(schur_dimension(Partition{3, 3, 3}, 4) == 20);
    CHECK(schur_dimension(Partition{2, 2, 1}, 4) == 20);
    CHECK(schur_dimension(Partition{4, 3, 2, 2}, 4) == 20);
    CHECK(schur_dimension(Partition{10, 10, 10}, 10) == BigInt("108284013552"));
    CHECK(schur_dimension(Partition{10, 10, 10}, 9) == BigInt("9386849472"));
    CHECK(schur_dimension(Partition{1, 1, 1}, 2) == 0);
}

TEST_CASE("enumeration count equals hook content dimension (exhaustive small shapes)") {
    // all partitions with at most 8 boxes, n <= 5
    std::vector<Partition> shapes;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c)
                for (int d = 0; d <= c; ++d)
                    for (int e = 0; e <= d; ++e)
                        if (a + b + c + d + e <= 8) shapes.push_back(Partition{a, b, c, d, e});
    for (int n = 1; n <= 5; ++n)
        for (const Partition& sh : shapes)
            CHECK(BigInt(ssyt_enumerate(sh, n).size()) == schur_dimension(sh, n));
}

TEST_CASE("canonical tableau is the unique highest one") {
    Tableau t = canonical_tableau(Partition{3, 2});
    CHECK(t.is_semistandard());
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 2);
    auto ct = t.content(4);
    CHECK(ct == std::vector<int>{3, 2, 0, 0});
}
