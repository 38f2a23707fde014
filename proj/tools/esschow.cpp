// Command-line driver: build/serialize the Chow matrices, run the invariant
// suite, detect consistency of six point correspondences, and reproduce the
// noise-sweep experiment.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "chow/artifacts.hpp"
#include "chow/detector.hpp"
#include "chow/experiment.hpp"
#include "chow/selfcheck.hpp"

namespace fs = std::filesystem;
using namespace chow;

namespace {

void write_matrix_file(const ChowMatrix& cm, const fs::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    serialize(cm, os);
    ChowMatrixStats st = chow_stats(cm);
    std::cerr << path.string() << ": " << st.zero_offdiag_entries
              << " zero off-diagonal entries, max |coeff| = " << st.max_abs_coeff.get_str()
              << "\n";
}

ChowMatrix load_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return deserialize_chow(is);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian consistency detector for six calibrated point correspondences"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct and serialize the Chow matrices");
    std::string build_variant = "both", build_out = ".";
    build->add_option("--variant", build_variant)->check(CLI::IsMember({"first", "second", "both"}));
    build->add_option("--out", build_out, "output directory");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    std::string verify_level = "quick";
    verify->add_option("--level", verify_level)->check(CLI::IsMember({"quick", "full"}));

    auto* det = app.add_subcommand("detect", "detect consistency of six correspondences");
    std::string det_matrix, det_input, det_mode = "exact", det_variant = "first";
    det->add_option("--matrix", det_matrix, "serialized Chow matrix file (built in-process if omitted)");
    det->add_option("--input", det_input, "CSV with columns x1,x2,y1,y2")->required();
    det->add_option("--mode", det_mode)->check(CLI::IsMember({"exact", "float"}));
    det->add_option("--variant", det_variant)->check(CLI::IsMember({"first", "second"}));

    auto* exp = app.add_subcommand("experiment", "noise sweep over r");
    std::string exp_grid = "1,1.5,2,2.5,3,3.5,4,4.5,5,5.5,6,6.5,7,7.5,8,8.5,9,9.5,10,10.5,11,11.5,12,12.5,13,13.5,14,14.5,15";
    int exp_trials = 500;
    std::uint64_t exp_seed = 0;
    std::string exp_out = "sweep.csv", exp_agg, exp_variant = "both";
    exp->add_option("--r-grid", exp_grid, "comma-separated noise exponents");
    exp->add_option("--trials", exp_trials);
    exp->add_option("--seed", exp_seed);
    exp->add_option("--out-csv", exp_out);
    exp->add_option("--agg-csv", exp_agg, "aggregate file (default: <out>.agg.csv)");
    exp->add_option("--variant", exp_variant)->check(CLI::IsMember({"first", "second", "both"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            const BuiltArtifacts& a = built_artifacts();
            fs::create_directories(build_out);
            fs::path dir(build_out);
            if (build_variant != "second") {
                write_matrix_file(a.chow_first_sym, dir / "chow-first-sym10.txt");
                write_matrix_file(a.chow_first_ess, dir / "chow-first-ess9.txt");
            }
            if (build_variant != "first") {
                write_matrix_file(a.chow_second_sym, dir / "chow-second-sym10.txt");
                write_matrix_file(a.chow_second_ess, dir / "chow-second-ess9.txt");
            }
            return 0;
        }
        if (*verify) {
            bool ok = run_selfcheck(
                verify_level == "full" ? CheckLevel::Full : CheckLevel::Quick, std::cout);
            return ok ? 0 : 1;
        }
        if (*det) {
            ChowMatrix cm;
            if (det_matrix.empty()) {
                cm = essential_chow(det_variant == "first" ? ResolutionVariant::First
                                                           : ResolutionVariant::Second);
            } else {
                cm = load_matrix(det_matrix);
                if (cm.ambient != Ambient::Ess9)
                    throw std::runtime_error("detect: matrix file must have ambient=ess9");
                std::string want = det_variant;
                std::string have = cm.variant == ResolutionVariant::First ? "first" : "second";
                if (det->count("--variant") && want != have)
                    throw std::runtime_error("detect: matrix file variant is " + have);
            }
            std::ifstream is(det_input);
            if (!is) throw std::runtime_error("cannot open " + det_input);
            CorrespondenceSet c = read_correspondence_csv(is);
            DetectionReport rep =
                detect(c, det_mode == "exact" ? DetectMode::Exact : DetectMode::Float, cm);
            std::cout << report_to_json(rep) << "\n";
            return 0;
        }
        if (*exp) {
            std::vector<double> grid;
            std::stringstream gs(exp_grid);
            std::string tok;
            while (std::getline(gs, tok, ',')) grid.push_back(std::stod(tok));
            VariantChoice vc = exp_variant == "first"    ? VariantChoice::First
                               : exp_variant == "second" ? VariantChoice::Second
                                                         : VariantChoice::Both;
            const BuiltArtifacts& a = built_artifacts();
            SweepResult res = run_sweep(grid, exp_trials, SceneConfig{}, vc, &a.chow_first_ess,
                                        &a.chow_second_ess, exp_seed);
            {
                std::ofstream os(exp_out);
                if (!os) throw std::runtime_error("cannot open " + exp_out);
                write_trials_csv(res, os);
            }
            std::string agg = exp_agg.empty() ? exp_out + ".agg.csv" : exp_agg;
            {
                std::ofstream os(agg);
                if (!os) throw std::runtime_error("cannot open " + agg);
                write_aggregate_csv(res, os);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
