#include "chow/reference_data.hpp"

namespace chow {

CorrespondenceSet reference_consistent_correspondences() {
    auto q = [](long n, long d) { return rat(n, d); };
    CorrespondenceSet c;
    c.pts[0] = {q(0, 1), q(0, 1), q(8, 11), q(16, 11)};
    c.pts[1] = {q(1, 1), q(-1, 1), q(7, 22), q(5, 22)};
    c.pts[2] = {q(0, 1), q(-1, 2), q(8, 29), q(34, 29)};
    c.pts[3] = {q(-3, 1), q(0, 1), q(17, 20), q(-1, 1)};
    c.pts[4] = {q(3, 2), q(-5, 2), q(1, 7), q(1, 7)};
    c.pts[5] = {q(1, 1), q(1, 7), q(9, 4), q(3, 4)};
    return c;
}

ReferenceScene reference_scene() {
    ReferenceScene s;
    s.camera_a = RationalMatrix(3, 4);
    for (int i = 0; i < 3; ++i) s.camera_a(i, i) = 1;
    s.camera_b = RationalMatrix(3, 4);
    auto q = [](long n, long d) { return rat(n, d); };
    const Rational b[3][4] = {{q(7, 9), q(4, 9), q(4, 9), q(0, 1)},
                              {q(-4, 9), q(-1, 9), q(8, 9), q(0, 1)},
                              {q(4, 9), q(-8, 9), q(1, 9), q(1, 1)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) s.camera_b(i, j) = b[i][j];
    const long w[6][3] = {{0, 0, 2}, {1, -1, 1}, {0, -2, 4}, {3, 0, -1}, {3, -5, 2}, {7, 1, 7}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) s.world[i][j] = w[i][j];
    return s;
}

}  // namespace chow
