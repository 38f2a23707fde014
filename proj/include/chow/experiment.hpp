#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "chow/detector.hpp"
#include "chow/essential.hpp"
#include "chow/rng.hpp"

namespace chow {

struct SceneConfig {
    double world_radius = 6.0;
    double translation_radius = 2.0;
    double depth_floor = 0.05;
    bool rationalize = true;
    unsigned long denominator_bound = 1000;
};

/// A synthetic calibrated two-view scene with exact rational data: two
/// camera matrices [R|t], six world points, and the exact projected
/// correspondences. World points whose projective depth falls under
/// cfg.depth_floor in either view are resampled (dehomogenization would
/// otherwise blow up independently of the noise level).
struct Scene {
    RationalMatrix camera_a, camera_b;              // 3x4
    std::array<std::array<Rational, 3>, 6> world;
    CorrespondenceSet correspondences;
};

Scene sample_scene(Rng& rng, const SceneConfig& cfg);

/// Perturb all 24 coordinates by i.i.d. uniform[-10^-r, 10^-r] noise.
/// r = +infinity means no noise.
CorrespondenceSet add_noise(const CorrespondenceSet& c, double r, Rng& rng);

/// Best rational approximation with denominator <= bound.
Rational rationalize(double x, unsigned long bound);

struct TrialRecord {
    double r;
    int trial;
    std::uint64_t seed;
    double log10_first;   // NaN when the variant was not run
    double log10_second;
};

struct SweepResult {
    std::vector<double> r_grid;
    int trials = 0;
    std::vector<TrialRecord> records;                      // r-major, then trial
    std::vector<double> mean_first, sd_first, mean_second, sd_second;  // per r
};

enum class VariantChoice { First, Second, Both };

/// Noise sweep: per (r, trial), sample a scene, add noise, run the float
/// detector for the requested variants, and aggregate log10 spectral-gap
/// ratios. Per-trial RNG streams derive from (master_seed, r index, trial),
/// so results are independent of execution order and thread count.
SweepResult run_sweep(const std::vector<double>& r_grid, int trials, const SceneConfig& cfg,
                      VariantChoice variants, const ChowMatrix* first, const ChowMatrix* second,
                      std::uint64_t master_seed);

void write_trials_csv(const SweepResult& s, std::ostream& os);
void write_aggregate_csv(const SweepResult& s, std::ostream& os);

/// Documented per-trial stream derivation (exposed for reproducibility).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t r_index, int trial);

}  // namespace chow
