#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "chow/chow_matrix.hpp"
#include "chow/matrix.hpp"

namespace chow {

struct Correspondence {
    Rational x1, x2, y1, y2;
};

/// Exactly six point pairs.
struct CorrespondenceSet {
    std::array<Correspondence, 6> pts;
};

/// 6x9 bilinear constraint matrix: row i is
/// (y1*x1, y1*x2, y1, y2*x1, y2*x2, y2, x1, x2, 1) for pair i, matching the
/// row-major order of the nine 3x3-matrix coordinates.
RationalMatrix build_Z(const CorrespondenceSet& c);
Eigen::Matrix<double, 6, 9> build_Z_double(const CorrespondenceSet& c);

/// Dual Pluecker coordinates of ker(Z): for each increasing triple (i,j,k)
/// of removed columns, (-1)^(i+j+k) times the determinant of the remaining
/// 6x6 block (1-based exponent convention; the global sign is irrelevant to
/// every downstream use). When Z drops rank all 84 values are zero.
std::vector<Rational> dual_pluecker(const RationalMatrix& z);
std::vector<double> dual_pluecker(const Eigen::Matrix<double, 6, 9>& z);

/// Substitute dual Pluecker values into a Chow matrix over the nine
/// coordinates. Throws on ambient mismatch.
RationalMatrix evaluate_chow(const ChowMatrix& cm, const std::vector<Rational>& q);
Eigen::MatrixXd evaluate_chow(const ChowMatrix& cm, const std::vector<double>& q);

enum class Verdict { ExactConsistent, Signal, Degenerate };
enum class DetectMode { Exact, Float };

struct DetectionReport {
    std::optional<Rational> pfaffian;              // exact mode only
    std::optional<std::array<double, 20>> spectrum;  // absent when degenerate
    double gap_ratio = 0.0;   // sigma_18 / sigma_20 (1-based), >= 1
    double log10_gap = 0.0;
    Verdict verdict = Verdict::Degenerate;
};

DetectionReport detect(const CorrespondenceSet& c, DetectMode mode, const ChowMatrix& cm);

/// Five exact pairs consistent with one essential matrix plus a sixth pair:
/// true iff the six-tuple is detected as exactly consistent. When the sixth
/// pair lies on the bilinear curve of the same essential matrix this must
/// hold; a generic sixth pair must fail.
bool fivepoint_vanishing_check(const std::array<Correspondence, 5>& five,
                               const Correspondence& sixth, const ChowMatrix& cm);

/// CSV input: optional header, then six rows x1,x2,y1,y2 with decimal or p/q
/// values. Throws std::runtime_error on malformed input.
CorrespondenceSet read_correspondence_csv(std::istream& is);

std::string verdict_name(Verdict v);
std::string report_to_json(const DetectionReport& r);

}  // namespace chow
