#include "chow/straighten.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace chow {

namespace {

std::string memo_key(const Tableau& t) {
    std::string k;
    for (int p : t.shape().parts()) k += static_cast<char>(p);
    k += '\xff';
    for (std::uint8_t e : t.entries()) k += static_cast<char>(e);
    return k;
}

// Sort every column increasingly. Returns the sign of the sorting
// permutation, or 0 if some column has a repeated entry.
int column_sort(Tableau& t) {
    int sign = 1;
    const Partition& sh = t.shape();
    for (int c = 0; c < sh.width(); ++c) {
        int h = sh.col_height(c);
        // insertion sort, counting swaps
        for (int i = 1; i < h; ++i)
            for (int j = i; j > 0 && t.at(j - 1, c) > t.at(j, c); --j) {
                std::swap(t.at(j - 1, c), t.at(j, c));
                sign = -sign;
            }
        for (int i = 1; i < h; ++i)
            if (t.at(i - 1, c) == t.at(i, c)) return 0;
    }
    return sign;
}

// First row violation T(r,c) > T(r,c+1), scanning columns left to right.
bool find_violation(const Tableau& t, int& vr, int& vc) {
    const Partition& sh = t.shape();
    for (int c = 0; c + 1 < sh.width(); ++c) {
        int h = sh.col_height(c + 1);
        for (int r = 0; r < h; ++r)
            if (t.at(r, c) > t.at(r, c + 1)) {
                vr = r;
                vc = c;
                return true;
            }
    }
    return false;
}

std::unordered_map<std::string, TableauExpansion> g_memo;
std::mutex g_memo_mutex;

TableauExpansion straighten_sorted(const Tableau& t, int depth);

void accumulate(TableauExpansion& into, const TableauExpansion& e, const Rational& c) {
    for (const auto& [tab, coef] : e) {
        Rational v = into[tab] += c * coef;
        if (v == 0) into.erase(tab);
    }
}

TableauExpansion straighten_impl(Tableau t, int depth) {
    if (depth > 512) throw std::logic_error("straighten: recursion depth exceeded");
    int sign = column_sort(t);
    if (sign == 0) return {};
    TableauExpansion e = straighten_sorted(t, depth);
    return sign == 1 ? e : Rational(-1) * e;
}

// t has sorted, strictly increasing columns here.
TableauExpansion straighten_sorted(const Tableau& t, int depth) {
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_memo.find(memo_key(t));
        if (it != g_memo.end()) return it->second;
    }

    TableauExpansion result;
    int vr, vc;
    if (!find_violation(t, vr, vc)) {
        result.emplace(t, 1);
    } else {
        // Exchange relation between the bottom of column vc (rows vr..end)
        // and the top of column vc+1 (rows 0..vr): the signed sum over all
        // shuffles of the combined entries vanishes, and the identity
        // shuffle is t itself.
        int h0 = t.shape().col_height(vc);
        int na = h0 - vr;      // cells taken from column vc
        int nb = vr + 1;       // cells taken from column vc+1
        int k = na + nb;
        std::vector<std::uint8_t> w(k);
        for (int i = 0; i < na; ++i) w[i] = t.at(vr + i, vc);
        for (int i = 0; i < nb; ++i) w[na + i] = t.at(i, vc + 1);

        std::vector<int> sel(na);
        for (int i = 0; i < na; ++i) sel[i] = i;
        auto advance = [&]() -> bool {
            int i = na - 1;
            while (i >= 0 && sel[i] == k - na + i) --i;
            if (i < 0) return false;
            ++sel[i];
            for (int j = i + 1; j < na; ++j) sel[j] = sel[j - 1] + 1;
            return true;
        };
        while (advance()) {
            int inv = 0;
            for (int i = 0; i < na; ++i) inv += sel[i] - i;
            int sgn = (inv % 2 == 0) ? 1 : -1;
            Tableau u = t;
            std::vector<bool> chosen(k, false);
            for (int i = 0; i < na; ++i) {
                chosen[sel[i]] = true;
                u.at(vr + i, vc) = w[sel[i]];
            }
            int bi = 0;
            for (int i = 0; i < k; ++i)
                if (!chosen[i]) u.at(bi++, vc + 1) = w[i];
            accumulate(result, straighten_impl(std::move(u), depth + 1), Rational(-sgn));
        }
    }

    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(memo_key(t), result);
    return result;
}

}  // namespace

TableauExpansion straighten(const Tableau& filling) {
    for (std::uint8_t e : filling.entries())
        if (e < 1) throw std::invalid_argument("straighten: entries must be >= 1");
    return straighten_impl(filling, 0);
}

TableauExpansion operator*(const Rational& c, const TableauExpansion& e) {
    TableauExpansion out;
    if (c == 0) return out;
    for (const auto& [tab, coef] : e) out.emplace(tab, c * coef);
    return out;
}

RationalMatrix dual_pairing_matrix(const Partition& shapeA, const Partition& shapeB, int n) {
    const int w = shapeA.part(0) + shapeB.part(n - 1);
    for (int i = 0; i < n; ++i)
        if (shapeA.part(i) + shapeB.part(n - 1 - i) != w)
            throw std::invalid_argument("dual_pairing_matrix: shapes not complementary in an n-row rectangle");
    if (shapeA.rows() > n || shapeB.rows() > n)
        throw std::invalid_argument("dual_pairing_matrix: more rows than n");

    std::vector<int> rect_parts(n, w);
    Partition rect{std::move(rect_parts)};
    Tableau target = canonical_tableau(rect);

    auto ssytA = ssyt_enumerate(shapeA, n);
    auto ssytB = ssyt_enumerate(shapeB, n);
    RationalMatrix out(ssytB.size(), ssytA.size());
    if (w == 0) {  // degenerate empty rectangle
        for (std::size_t i = 0; i < ssytB.size(); ++i)
            for (std::size_t j = 0; j < ssytA.size(); ++j) out(i, j) = 1;
        return out;
    }

    for (std::size_t bi = 0; bi < ssytB.size(); ++bi) {
        const Tableau& T = ssytB[bi];
        for (std::size_t ai = 0; ai < ssytA.size(); ++ai) {
            const Tableau& S = ssytA[ai];
            Tableau fitted = canonical_tableau(rect);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < w; ++c) {
                    if (c < shapeA.part(r))
                        fitted.at(r, c) = S.at(r, c);
                    else
                        fitted.at(r, c) = T.at(n - 1 - r, w - 1 - c);
                }
            TableauExpansion e = straighten(fitted);
            auto it = e.find(target);
            out(bi, ai) = (it == e.end()) ? Rational(0) : it->second;
        }
    }
    return out;
}

}  // namespace chow
