#include "chow/selfcheck.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "chow/artifacts.hpp"
#include "chow/detector.hpp"
#include "chow/exact_linalg.hpp"
#include "chow/experiment.hpp"
#include "chow/reference_data.hpp"
#include "chow/rng.hpp"

namespace chow {

namespace {

Rational small_rational(Rng& rng) {
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = static_cast<long>(rng.below(9)) + 1;
    return rat(num, den);
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
    return m;
}

struct Checker {
    std::ostream& os;
    bool all_ok = true;

    void report(const std::string& name, bool ok) {
        os << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        all_ok = all_ok && ok;
    }
};

bool chow_is_primitive(const ChowMatrix& cm) {
    BigInt g = 0;
    for (const auto& e : cm.entries)
        for (const auto& [t, c] : e.terms) {
            if (c.get_den() != 1) return false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        }
    return g == 1;
}

bool scale_coherence(const BuiltArtifacts& a, Rng& rng, int planes) {
    Rational num = 0, den = 0;  // reference ratio pf1/pf2 as num/den
    for (int i = 0; i < planes; ++i) {
        RationalMatrix span = random_matrix(rng, 3, 10);
        auto p = pluecker_of_rows(span);
        Rational pf1 = pfaffian_exact(a.chow_first_sym.evaluated(p));
        Rational pf2 = pfaffian_exact(a.chow_second_sym.evaluated(p));
        if (pf1 == 0 || pf2 == 0) return false;  // non-generic draw
        if (den == 0) {
            num = pf1;
            den = pf2;
        } else if (pf1 * den != pf2 * num) {
            return false;
        }
    }
    return true;
}

bool pencil_degree_is_ten(const ChowMatrix& cm, Rng& rng) {
    // plane pencil: two fixed rows and one row affine-linear in t
    RationalMatrix base = random_matrix(rng, 3, 10);
    RationalMatrix dir = random_matrix(rng, 1, 10);
    const int npts = 31;
    std::vector<Rational> xs(npts), ys(npts);
    for (int i = 0; i < npts; ++i) {
        xs[i] = i;
        RationalMatrix span = base;
        for (int c = 0; c < 10; ++c) span(2, c) += Rational(i) * dir(0, c);
        ys[i] = pfaffian_exact(cm.evaluated(pluecker_of_rows(span)));
    }
    // Newton divided differences: coefficients above degree 10 must vanish
    std::vector<Rational> dd = ys;
    for (int order = 1; order < npts; ++order)
        for (int i = npts - 1; i >= order; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order]);
    for (int k = 11; k < npts; ++k)
        if (dd[k] != 0) return false;
    return dd[10] != 0;
}

bool geometry_oracles(Rng& rng, int random_cases, int essential_cases) {
    for (int i = 0; i < random_cases; ++i) {
        RationalMatrix m = random_matrix(rng, 3, 3);
        auto cub = essential_cubics(m);
        bool cubics_zero = true;
        for (const auto& c : cub) cubics_zero = cubics_zero && c == 0;
        bool rank_low = rank_exact(to_sym4(m)) <= 2;
        if (cubics_zero != rank_low) return false;
        // isometry: tr(s(M) s(M)^T) == tr(M M^T)
        RationalMatrix s = to_sym4(m);
        Rational lhs = 0, rhs = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) lhs += s(a, b) * s(a, b);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) rhs += m(a, b) * m(a, b);
        if (lhs != rhs) return false;
    }
    for (int i = 0; i < essential_cases; ++i) {
        EssentialSample es = random_essential(rng, 50);
        auto cub = essential_cubics(es.M);
        for (const auto& c : cub)
            if (c != 0) return false;
        if (rank_classify(es.M) != EssentialClass::InE) return false;
    }
    return true;
}

}  // namespace

bool run_selfcheck(CheckLevel level, std::ostream& os) {
    Checker ck{os};
    const BuiltArtifacts& a = built_artifacts();

    ck.report("resolution shape and symmetry (first)", verify_ulrich(a.first));
    ck.report("resolution shape and symmetry (second)", verify_ulrich(a.second));

    {
        SupportReport s1 = verify_support(a.first), s2 = verify_support(a.second);
        bool ok = true;
        for (const SupportReport& s : {s1, s2})
            ok = ok && s.rank_at_diag[0] == 0 && s.rank_at_diag[2] == 18 &&
                 s.rank_at_diag[3] == 20 && s.rank_at_diag[4] == 20;
        ck.report("support ranks at diagonal matrices", ok);
    }

    ck.report("chow matrices primitive integer",
              chow_is_primitive(a.chow_first_sym) && chow_is_primitive(a.chow_second_sym) &&
                  chow_is_primitive(a.chow_first_ess) && chow_is_primitive(a.chow_second_ess));

    {
        CorrespondenceSet ref = reference_consistent_correspondences();
        bool ok = detect(ref, DetectMode::Exact, a.chow_first_ess).verdict ==
                      Verdict::ExactConsistent &&
                  detect(ref, DetectMode::Exact, a.chow_second_ess).verdict ==
                      Verdict::ExactConsistent;
        ck.report("positive control: exact Pfaffian zero on reference data", ok);
    }

    {
        Rng rng(2024);
        bool ok = true;
        int count = level == CheckLevel::Full ? 20 : 5;
        for (int i = 0; i < count && ok; ++i) {
            CorrespondenceSet c;
            for (auto& p : c.pts)
                p = {small_rational(rng), small_rational(rng), small_rational(rng),
                     small_rational(rng)};
            auto rep1 = detect(c, DetectMode::Exact, a.chow_first_ess);
            auto rep2 = detect(c, DetectMode::Exact, a.chow_second_ess);
            ok = rep1.verdict == Verdict::Signal && rep2.verdict == Verdict::Signal;
        }
        ck.report("negative control: random data gives nonzero Pfaffians", ok);
    }

    ck.report("counting oracles",
              schur_dimension(Partition{10, 10, 10}, 10) == BigInt("108284013552") &&
                  schur_dimension(Partition{10, 10, 10}, 9) == BigInt("9386849472") &&
                  grassmannian_quadric_count(3, 10) == 2310 &&
                  grassmannian_quadric_count(3, 9) == 1050);

    if (level == CheckLevel::Full) {
        ck.report("equivariance residual zero (first alpha)",
                  check_equivariance(a.first.alpha, Partition{3, 2}, Partition{3}));
        {
            Rng rng(7);
            ck.report("scale coherence over 20 random planes", scale_coherence(a, rng, 20));
        }
        {
            Rng rng(11);
            ck.report("pencil degree = 10 (first)", pencil_degree_is_ten(a.chow_first_sym, rng));
        }
        {
            Rng rng(13);
            ck.report("geometry oracles (cubics vs rank, isometry)",
                      geometry_oracles(rng, 200, 50));
        }
        {
            bool ok = true;
            for (const FreeResolution* res : {&a.first, &a.second}) {
                BigInt expected[5] = {20, 140, 560, 1680, 4200};
                for (int d = 0; d <= 4; ++d)
                    ok = ok && presentation_hilbert(*res, d) == expected[d];
            }
            ck.report("Hilbert function degrees 0..4", ok);
        }
        {
            std::stringstream buf;
            serialize(a.chow_first_ess, buf);
            ChowMatrix back = deserialize_chow(buf);
            ck.report("chow matrix serialization round trip",
                      back.entries == a.chow_first_ess.entries);
        }
    }
    return ck.all_ok;
}

}  // namespace chow
