#include "chow/exterior.hpp"

#include <map>
#include <stdexcept>

namespace chow {

TripleBasis::TripleBasis(int nvars) : nvars_(nvars) {
    rank_.assign(nvars * nvars * nvars, -1);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            for (int k = j + 1; k < nvars; ++k) {
                rank_[(i * nvars + j) * nvars + k] = count();
                triples_.push_back({i, j, k});
            }
}

int TripleBasis::index(int i, int j, int k) const {
    int r = rank_[(i * nvars_ + j) * nvars_ + k];
    if (r < 0) throw std::invalid_argument("TripleBasis::index: not strictly increasing");
    return r;
}

ExteriorCubic wedge3(const TripleBasis& basis, const LinearForm& u, const LinearForm& v,
                     const LinearForm& w) {
    const int n = basis.nvars();
    std::map<int, Rational> acc;
    std::vector<int> usup, vsup, wsup;
    for (int i = 0; i < n; ++i) {
        if (u.coeff[i] != 0) usup.push_back(i);
        if (v.coeff[i] != 0) vsup.push_back(i);
        if (w.coeff[i] != 0) wsup.push_back(i);
    }
    for (int a : usup)
        for (int b : vsup) {
            if (b == a) continue;
            Rational uv = u.coeff[a] * v.coeff[b];
            for (int c : wsup) {
                if (c == a || c == b) continue;
                // sort (a,b,c) and pick up the permutation sign
                int i = a, j = b, k = c, sign = 1;
                if (i > j) {
                    std::swap(i, j);
                    sign = -sign;
                }
                if (j > k) {
                    std::swap(j, k);
                    sign = -sign;
                }
                if (i > j) {
                    std::swap(i, j);
                    sign = -sign;
                }
                Rational term = uv * w.coeff[c];
                if (sign < 0) term = -term;
                acc[basis.index(i, j, k)] += term;
            }
        }
    ExteriorCubic out;
    for (auto& [t, coeff] : acc)
        if (coeff != 0) out.terms.emplace_back(t, std::move(coeff));
    return out;
}

}  // namespace chow
