#include "chow/artifacts.hpp"

namespace chow {

const BuiltArtifacts& built_artifacts() {
    static const BuiltArtifacts artifacts = [] {
        BuiltArtifacts a;
        a.first = build_resolution(ResolutionVariant::First);
        a.second = build_resolution(ResolutionVariant::Second);
        a.chow_first_sym = chow_matrix_symmetric(a.first);
        a.chow_second_sym = chow_matrix_symmetric(a.second);
        a.chow_first_ess = pullback_to_essential(a.chow_first_sym);
        a.chow_second_ess = pullback_to_essential(a.chow_second_sym);
        return a;
    }();
    return artifacts;
}

const ChowMatrix& essential_chow(ResolutionVariant v) {
    const BuiltArtifacts& a = built_artifacts();
    return v == ResolutionVariant::First ? a.chow_first_ess : a.chow_second_ess;
}

}  // namespace chow
