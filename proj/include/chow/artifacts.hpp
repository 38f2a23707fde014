#pragma once

#include "chow/chow_matrix.hpp"
#include "chow/pieri.hpp"

namespace chow {

/// Everything the detector needs, built once per process.
struct BuiltArtifacts {
    FreeResolution first, second;
    ChowMatrix chow_first_sym, chow_second_sym;
    ChowMatrix chow_first_ess, chow_second_ess;
};

/// Lazily constructed singleton (thread-safe).
const BuiltArtifacts& built_artifacts();

const ChowMatrix& essential_chow(ResolutionVariant v);

}  // namespace chow
