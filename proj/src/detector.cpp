#include "chow/detector.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "chow/exact_linalg.hpp"

namespace chow {

RationalMatrix build_Z(const CorrespondenceSet& c) {
    RationalMatrix z(6, 9);
    for (int i = 0; i < 6; ++i) {
        const Correspondence& p = c.pts[i];
        z(i, 0) = p.y1 * p.x1;
        z(i, 1) = p.y1 * p.x2;
        z(i, 2) = p.y1;
        z(i, 3) = p.y2 * p.x1;
        z(i, 4) = p.y2 * p.x2;
        z(i, 5) = p.y2;
        z(i, 6) = p.x1;
        z(i, 7) = p.x2;
        z(i, 8) = 1;
    }
    return z;
}

Eigen::Matrix<double, 6, 9> build_Z_double(const CorrespondenceSet& c) {
    RationalMatrix z = build_Z(c);
    Eigen::Matrix<double, 6, 9> out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 9; ++j) out(i, j) = z(i, j).get_d();
    return out;
}

std::vector<Rational> dual_pluecker(const RationalMatrix& z) {
    std::vector<Rational> q;
    q.reserve(84);
    RationalMatrix sub(6, 6);
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            for (int k = j + 1; k < 9; ++k) {
                int cc = 0;
                for (int c = 0; c < 9; ++c) {
                    if (c == i || c == j || c == k) continue;
                    for (int r = 0; r < 6; ++r) sub(r, cc) = z(r, c);
                    ++cc;
                }
                Rational d = det_exact(sub);
                // 1-based index parity (i+1)+(j+1)+(k+1) == i+j+k+3
                if ((i + j + k) % 2 == 0) d = -d;
                q.push_back(std::move(d));
            }
    return q;
}

std::vector<double> dual_pluecker(const Eigen::Matrix<double, 6, 9>& z) {
    std::vector<double> q;
    q.reserve(84);
    Eigen::Matrix<double, 6, 6> sub;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            for (int k = j + 1; k < 9; ++k) {
                int cc = 0;
                for (int c = 0; c < 9; ++c) {
                    if (c == i || c == j || c == k) continue;
                    sub.col(cc++) = z.col(c);
                }
                double d = sub.determinant();
                if ((i + j + k) % 2 == 0) d = -d;
                q.push_back(d);
            }
    return q;
}

RationalMatrix evaluate_chow(const ChowMatrix& cm, const std::vector<Rational>& q) {
    if (cm.ambient != Ambient::Ess9)
        throw std::invalid_argument("evaluate_chow: matrix not over the nine coordinates");
    if (static_cast<int>(q.size()) != cm.triple_count())
        throw std::invalid_argument("evaluate_chow: need 84 values");
    return cm.evaluated(q);
}

Eigen::MatrixXd evaluate_chow(const ChowMatrix& cm, const std::vector<double>& q) {
    if (cm.ambient != Ambient::Ess9)
        throw std::invalid_argument("evaluate_chow: matrix not over the nine coordinates");
    if (static_cast<int>(q.size()) != cm.triple_count())
        throw std::invalid_argument("evaluate_chow: need 84 values");
    return cm.evaluated(q);
}

namespace {

// Pfaffian of the evaluated matrix, computed after clearing entries to a
// common integer scale; pf scales by lambda^10 which we divide back out.
Rational pfaffian_cleared(const RationalMatrix& m) {
    BigInt lcm = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    RationalMatrix scaled = m;
    Rational lambda(lcm);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= lambda;
    Rational pf = pfaffian_exact(scaled);
    Rational denom = 1;
    for (int i = 0; i < 10; ++i) denom *= lambda;
    return pf / denom;
}

void fill_spectrum(DetectionReport& rep, const Eigen::MatrixXd& m) {
    auto sv = singular_values(m);
    std::array<double, 20> sp{};
    for (int i = 0; i < 20; ++i) sp[i] = sv[i];
    rep.spectrum = sp;
    rep.gap_ratio = sp[17] / sp[19];
    rep.log10_gap = std::log10(rep.gap_ratio);
}

}  // namespace

DetectionReport detect(const CorrespondenceSet& c, DetectMode mode, const ChowMatrix& cm) {
    DetectionReport rep;
    if (mode == DetectMode::Exact) {
        RationalMatrix z = build_Z(c);
        std::vector<Rational> q = dual_pluecker(z);
        bool all_zero = true;
        for (const Rational& v : q) all_zero = all_zero && v == 0;
        if (all_zero) {
            rep.verdict = Verdict::Degenerate;
            return rep;
        }
        RationalMatrix m = evaluate_chow(cm, q);
        rep.pfaffian = pfaffian_cleared(m);
        rep.verdict = (*rep.pfaffian == 0) ? Verdict::ExactConsistent : Verdict::Signal;
        Eigen::MatrixXd md(20, 20);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) md(i, j) = m(i, j).get_d();
        fill_spectrum(rep, md);
        return rep;
    }

    Eigen::Matrix<double, 6, 9> z = build_Z_double(c);
    std::vector<double> q = dual_pluecker(z);
    double maxq = 0;
    for (double v : q) maxq = std::max(maxq, std::fabs(v));
    double hadamard = 1.0;  // product of row norms bounds every 6x6 minor
    for (int r = 0; r < 6; ++r) hadamard *= z.row(r).norm();
    if (maxq < 1e-13 * hadamard) {
        rep.verdict = Verdict::Degenerate;
        return rep;
    }
    fill_spectrum(rep, evaluate_chow(cm, q));
    rep.verdict = Verdict::Signal;
    return rep;
}

bool fivepoint_vanishing_check(const std::array<Correspondence, 5>& five,
                               const Correspondence& sixth, const ChowMatrix& cm) {
    CorrespondenceSet c;
    for (int i = 0; i < 5; ++i) c.pts[i] = five[i];
    c.pts[5] = sixth;
    return detect(c, DetectMode::Exact, cm).verdict == Verdict::ExactConsistent;
}

CorrespondenceSet read_correspondence_csv(std::istream& is) {
    CorrespondenceSet out;
    std::string line;
    int row = 0;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (first) {
            first = false;
            if (!fields.empty() && !parse_rational(fields[0])) continue;  // header line
        }
        if (fields.size() != 4)
            throw std::runtime_error("correspondence csv: expected 4 columns x1,x2,y1,y2");
        if (row >= 6) throw std::runtime_error("correspondence csv: more than 6 data rows");
        std::array<Rational, 4> vals;
        for (int i = 0; i < 4; ++i) {
            auto v = parse_rational(fields[i]);
            if (!v) throw std::runtime_error("correspondence csv: bad value '" + fields[i] + "'");
            vals[i] = *v;
        }
        out.pts[row] = Correspondence{vals[0], vals[1], vals[2], vals[3]};
        ++row;
    }
    if (row != 6) throw std::runtime_error("correspondence csv: need exactly 6 data rows");
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ExactConsistent: return "exact-consistent";
        case Verdict::Signal: return "signal";
        case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

std::string report_to_json(const DetectionReport& r) {
    nlohmann::json j;
    j["pfaffian"] = r.pfaffian ? nlohmann::json(to_string(*r.pfaffian)) : nlohmann::json(nullptr);
    if (r.spectrum) {
        j["gap_ratio"] = r.gap_ratio;
        j["log10_gap"] = r.log10_gap;
    } else {
        j["gap_ratio"] = nullptr;
        j["log10_gap"] = nullptr;
    }
    j["verdict"] = verdict_name(r.verdict);
    return j.dump();
}

}  // namespace chow
