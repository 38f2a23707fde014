#include "chow/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chow {

namespace {

// Structural size of a rational: total bit length of numerator and
// denominator. Elimination pivots on the smallest one available to keep
// coefficient growth down; correctness is pivot-independent.
std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> pivot_cols;
    int det_sign = 1;  // sign of the row permutation applied
};

Echelon row_echelon(RationalMatrix m) {
    Echelon e{std::move(m), {}, 1};
    RationalMatrix& a = e.m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t best = a.rows();
        std::size_t best_size = 0;
        for (std::size_t r = row; r < a.rows(); ++r) {
            if (a(r, col) == 0) continue;
            std::size_t sz = bit_size(a(r, col));
            if (best == a.rows() || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == a.rows()) continue;
        if (best != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(best, c));
            e.det_sign = -e.det_sign;
        }
        for (std::size_t r = row + 1; r < a.rows(); ++r) {
            if (a(r, col) == 0) continue;
            Rational f = a(r, col) / a(row, col);
            a(r, col) = 0;
            for (std::size_t c = col + 1; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= f * a(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) { return row_echelon(m).pivot_cols.size(); }

Rational det_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: not square");
    Echelon e = row_echelon(m);
    if (e.pivot_cols.size() < m.rows()) return 0;
    Rational d = e.det_sign;
    for (std::size_t i = 0; i < m.rows(); ++i) d *= e.m(i, i);
    return d;
}

std::vector<std::vector<Rational>> nullspace_exact(const RationalMatrix& m) {
    Echelon e = row_echelon(m);
    const RationalMatrix& a = e.m;
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n);
        v[free_col] = 1;
        // Back-substitute through the pivot rows above this free column.
        for (std::size_t pi = e.pivot_cols.size(); pi-- > 0;) {
            std::size_t pc = e.pivot_cols[pi];
            if (pc > free_col) continue;
            Rational s = 0;
            for (std::size_t c = pc + 1; c < n; ++c)
                if (v[c] != 0 && a(pi, c) != 0) s += a(pi, c) * v[c];
            v[pc] = -s / a(pi, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational pfaffian_exact(const RationalMatrix& m) {
    std::size_t n = m.rows();
    if (m.cols() != n || n % 2 != 0)
        throw std::invalid_argument("pfaffian_exact: need square even-sized matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (m(i, j) != -m(j, i))
                throw std::invalid_argument("pfaffian_exact: matrix not skew-symmetric");
    if (n == 0) return 1;

    RationalMatrix a = m;
    Rational pf = 1;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        // Simplest nonzero pivot in column k below the diagonal.
        std::size_t best = n;
        std::size_t best_size = 0;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            std::size_t sz = bit_size(a(r, k));
            if (best == n || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == n) return 0;  // zero column: singular, exact zero Pfaffian
        if (best != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(best, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, best));
            pf = -pf;
        }
        const Rational piv = a(k + 1, k);
        for (std::size_t r = k + 2; r < n; ++r) {
            if (a(r, k) == 0) continue;
            Rational f = a(r, k) / piv;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k + 1, c);
            for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, k + 1);
        }
        pf *= a(k, k + 1);
    }
    return pf;
}

std::vector<double> singular_values(const FloatMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j)))
                throw std::invalid_argument("singular_values: non-finite entry");
    Eigen::JacobiSVD<FloatMatrix> svd(m);
    auto sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

RationalMatrix inverse_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_exact: not square");
    std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        std::size_t best_size = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (a(r, col) == 0) continue;
            std::size_t sz = bit_size(a(r, col));
            if (best == n || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == n) throw std::invalid_argument("inverse_exact: singular matrix");
        if (best != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(col, c), a(best, c));
                std::swap(inv(col, c), inv(best, c));
            }
        Rational piv = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= piv;
            inv(col, c) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace chow
