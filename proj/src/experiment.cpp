#include "chow/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace chow {

namespace {

std::array<Rational, 3> sample_ball_point(Rng& rng, double radius, unsigned long bound,
                                          bool make_rational) {
    for (;;) {
        double x = rng.uniform(-radius, radius);
        double y = rng.uniform(-radius, radius);
        double z = rng.uniform(-radius, radius);
        if (x * x + y * y + z * z > radius * radius) continue;
        if (make_rational)
            return {rationalize(x, bound), rationalize(y, bound), rationalize(z, bound)};
        return {rational_from_double(x), rational_from_double(y), rational_from_double(z)};
    }
}

RationalMatrix make_camera(Rng& rng, const SceneConfig& cfg) {
    RationalMatrix rot =
        cfg.rationalize
            ? random_rational_rotation(rng, cfg.denominator_bound)
            : [&] {
                  Eigen::Matrix3d r = haar_rotation(rng);
                  RationalMatrix m(3, 3);
                  for (int i = 0; i < 3; ++i)
                      for (int j = 0; j < 3; ++j) m(i, j) = rational_from_double(r(i, j));
                  return m;
              }();
    auto t = sample_ball_point(rng, cfg.translation_radius, cfg.denominator_bound,
                               cfg.rationalize);
    RationalMatrix cam(3, 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) cam(i, j) = rot(i, j);
        cam(i, 3) = t[i];
    }
    return cam;
}

std::array<Rational, 3> project(const RationalMatrix& cam, const std::array<Rational, 3>& x) {
    std::array<Rational, 3> h;
    for (int i = 0; i < 3; ++i)
        h[i] = cam(i, 0) * x[0] + cam(i, 1) * x[1] + cam(i, 2) * x[2] + cam(i, 3);
    return h;
}

}  // namespace

Scene sample_scene(Rng& rng, const SceneConfig& cfg) {
    if (cfg.world_radius <= 0 || cfg.translation_radius <= 0)
        throw std::invalid_argument("sample_scene: radii must be positive");
    Scene s;
    s.camera_a = make_camera(rng, cfg);
    s.camera_b = make_camera(rng, cfg);
    for (int i = 0; i < 6; ++i) {
        bool ok = false;
        for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
            auto x = sample_ball_point(rng, cfg.world_radius, cfg.denominator_bound,
                                       cfg.rationalize);
            auto ha = project(s.camera_a, x);
            auto hb = project(s.camera_b, x);
            if (std::fabs(ha[2].get_d()) < cfg.depth_floor ||
                std::fabs(hb[2].get_d()) < cfg.depth_floor)
                continue;
            s.world[i] = x;
            s.correspondences.pts[i] =
                Correspondence{ha[0] / ha[2], ha[1] / ha[2], hb[0] / hb[2], hb[1] / hb[2]};
            ok = true;
        }
        if (!ok) throw std::runtime_error("sample_scene: depth resampling failed 100 times");
    }
    return s;
}

CorrespondenceSet add_noise(const CorrespondenceSet& c, double r, Rng& rng) {
    if (r < 0) throw std::invalid_argument("add_noise: r must be >= 0");
    if (std::isinf(r)) return c;
    double eps = std::pow(10.0, -r);
    CorrespondenceSet out = c;
    for (auto& p : out.pts)
        for (Rational* coord : {&p.x1, &p.x2, &p.y1, &p.y2}) {
            double noisy = coord->get_d() + rng.uniform(-eps, eps);
            *coord = rational_from_double(noisy);
        }
    return out;
}

Rational rationalize(double x, unsigned long bound) { return best_rational_approx(x, bound); }

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t r_index, int trial) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(master_seed + 0x9e3779b97f4a7c15ULL * (r_index + 1) +
               0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(trial) + 1));
}

SweepResult run_sweep(const std::vector<double>& r_grid, int trials, const SceneConfig& cfg,
                      VariantChoice variants, const ChowMatrix* first, const ChowMatrix* second,
                      std::uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
    bool want_first = variants != VariantChoice::Second;
    bool want_second = variants != VariantChoice::First;
    if (want_first && !first) throw std::invalid_argument("run_sweep: first matrix missing");
    if (want_second && !second) throw std::invalid_argument("run_sweep: second matrix missing");

    SweepResult out;
    out.r_grid = r_grid;
    out.trials = trials;
    out.records.assign(r_grid.size() * trials, TrialRecord{});

    const std::size_t total = out.records.size();
    int nthreads = 1;
    if (const char* s = std::getenv("ESSCHOW_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) nthreads = n;
    } else {
        unsigned hc = std::thread::hardware_concurrency();
        nthreads = hc ? static_cast<int>(hc) : 1;
    }
    nthreads = std::min<std::size_t>(nthreads, total);

    auto work = [&](std::size_t idx) {
        std::size_t ri = idx / trials;
        int trial = static_cast<int>(idx % trials);
        double r = r_grid[ri];
        std::uint64_t seed = trial_seed(master_seed, ri, trial);
        Rng rng(seed);
        Scene scene = sample_scene(rng, cfg);
        CorrespondenceSet noisy = add_noise(scene.correspondences, r, rng);
        TrialRecord rec;
        rec.r = r;
        rec.trial = trial;
        rec.seed = seed;
        rec.log10_first = std::numeric_limits<double>::quiet_NaN();
        rec.log10_second = std::numeric_limits<double>::quiet_NaN();
        if (want_first) rec.log10_first = detect(noisy, DetectMode::Float, *first).log10_gap;
        if (want_second) rec.log10_second = detect(noisy, DetectMode::Float, *second).log10_gap;
        out.records[idx] = rec;
    };
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < total; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= total) return;
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    auto aggregate = [&](auto get, std::vector<double>& mean, std::vector<double>& sd) {
        mean.assign(r_grid.size(), std::numeric_limits<double>::quiet_NaN());
        sd.assign(r_grid.size(), std::numeric_limits<double>::quiet_NaN());
        for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
            double sum = 0;
            int n = 0;
            for (int t = 0; t < trials; ++t) {
                double v = get(out.records[ri * trials + t]);
                if (std::isnan(v)) continue;
                sum += v;
                ++n;
            }
            if (n == 0) continue;
            double m = sum / n;
            double ss = 0;
            for (int t = 0; t < trials; ++t) {
                double v = get(out.records[ri * trials + t]);
                if (std::isnan(v)) continue;
                ss += (v - m) * (v - m);
            }
            mean[ri] = m;
            sd[ri] = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
        }
    };
    aggregate([](const TrialRecord& r) { return r.log10_first; }, out.mean_first, out.sd_first);
    aggregate([](const TrialRecord& r) { return r.log10_second; }, out.mean_second,
              out.sd_second);
    return out;
}

namespace {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_trials_csv(const SweepResult& s, std::ostream& os) {
    os << "r,trial,seed,log10_ratio_first,log10_ratio_second\n";
    for (const TrialRecord& rec : s.records)
        os << fmt_double(rec.r) << "," << rec.trial << "," << rec.seed << ","
           << fmt_double(rec.log10_first) << "," << fmt_double(rec.log10_second) << "\n";
}

void write_aggregate_csv(const SweepResult& s, std::ostream& os) {
    os << "r,mean_first,sd_first,mean_second,sd_second,trials\n";
    for (std::size_t ri = 0; ri < s.r_grid.size(); ++ri)
        os << fmt_double(s.r_grid[ri]) << "," << fmt_double(s.mean_first[ri]) << ","
           << fmt_double(s.sd_first[ri]) << "," << fmt_double(s.mean_second[ri]) << ","
           << fmt_double(s.sd_second[ri]) << "," << s.trials << "\n";
}

}  // namespace chow
