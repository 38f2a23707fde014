#pragma once

#include "chow/detector.hpp"
#include "chow/matrix.hpp"

namespace chow {

/// Hand-checked consistent configuration used as the regression fixture for
/// the dual-Pluecker sign convention: six image point pairs that are exact
/// projections of six world points through two calibrated cameras. The
/// detector must report an exactly zero Pfaffian on this input.
CorrespondenceSet reference_consistent_correspondences();

struct ReferenceScene {
    RationalMatrix camera_a, camera_b;             // 3x4
    std::array<std::array<Rational, 3>, 6> world;
};

/// The cameras and world points realizing the fixture above.
ReferenceScene reference_scene();

}  // namespace chow
