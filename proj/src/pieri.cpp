#include "chow/pieri.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chow/exact_linalg.hpp"

namespace chow {

RationalMatrix EquivariantLinearMatrix::evaluated(const std::vector<Rational>& point) const {
    RationalMatrix out(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) out(r, c) = at(r, c).eval(point);
    return out;
}

namespace {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Apply E_ab to a vector in S_target (x) Sym2, index layout s*nv + m.
Vec tensor_apply(const SchurModule& tgt, const SymCoords& coords, int a, int b, const Vec& v) {
    const RationalMatrix& ms = tgt.action(a, b);
    const RationalMatrix g = sym2_action(coords, a, b);
    int dt = tgt.dim(), nv = coords.count();
    Vec out(v.size());
    for (int s = 0; s < dt; ++s)
        for (int m = 0; m < nv; ++m) {
            const Rational& x = v[s * nv + m];
            if (x == 0) continue;
            for (int s2 = 0; s2 < dt; ++s2)
                if (ms(s2, s) != 0) out[s2 * nv + m] += ms(s2, s) * x;
            for (int m2 = 0; m2 < nv; ++m2)
                if (g(m2, m) != 0) out[s * nv + m2] += g(m2, m) * x;
        }
    return out;
}

// Reduced echelon over the source module together with carried images in
// the target tensor space: each row stores (u, f(u)) with a unit pivot.
struct CarriedEchelon {
    struct Row {
        Vec u, fu;
        std::size_t pivot;
    };
    std::vector<Row> rows;

    // Reduce u in place, accumulating the matching image combination into fu.
    void reduce(Vec& u, Vec& fu) const {
        for (const Row& r : rows) {
            const Rational f = u[r.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (r.u[i] != 0) u[i] -= f * r.u[i];
            for (std::size_t i = 0; i < fu.size(); ++i)
                if (r.fu[i] != 0) fu[i] -= f * r.fu[i];
        }
    }

    // Insert (u, fu); returns false if u reduces to zero (and then requires
    // fu to reduce to zero as well -- the map would be ill-defined otherwise).
    bool insert(Vec u, Vec fu) {
        reduce(u, fu);
        std::size_t p = u.size();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0) {
                p = i;
                break;
            }
        if (p == u.size()) {
            if (!is_zero_vec(fu))
                throw std::logic_error("equivariant map propagation is inconsistent");
            return false;
        }
        Rational inv = 1 / u[p];
        for (auto& x : u) x *= inv;
        for (auto& x : fu) x *= inv;
        for (Row& r : rows) {
            const Rational f = r.u[p];
            if (f == 0) continue;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] != 0) r.u[i] -= f * u[i];
            for (std::size_t i = 0; i < fu.size(); ++i)
                if (fu[i] != 0) r.fu[i] -= f * fu[i];
        }
        rows.push_back(Row{std::move(u), std::move(fu), p});
        return true;
    }
};

void normalize_primitive(EquivariantLinearMatrix& m) {
    BigInt den_lcm = 1, num_gcd = 0;
    for (const LinearForm& f : m.entries)
        for (const Rational& c : f.coeff) {
            if (c == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
    if (num_gcd == 0) return;  // zero matrix
    Rational scale = rat(den_lcm, num_gcd);
    // first nonzero coefficient (row-major, then variable index) made positive
    for (const LinearForm& f : m.entries)
        for (const Rational& c : f.coeff)
            if (c != 0) {
                if (c * scale < 0) scale = -scale;
                goto scaled;
            }
scaled:
    for (LinearForm& f : m.entries)
        for (Rational& c : f.coeff) c *= scale;
}

std::optional<EquivariantLinearMatrix> pieri_impl(const Partition& source, const Partition& target,
                                                  int n, bool require_unique) {
    if (source.size() != target.size() + 2)
        throw std::invalid_argument("pieri: source must have two more boxes than target");
    const SchurModule& src = schur_module(source, n);
    const SchurModule& tgt = schur_module(target, n);
    const SymCoords coords(n);
    const int nv = coords.count();
    const int dt = tgt.dim(), ds = src.dim();
    if (ds == 0 || dt == 0) return std::nullopt;

    // Highest weight vectors of weight `source` inside S_target (x) Sym2:
    // kernel of all simple raising operators on that weight space.
    std::vector<int> mu(n, 0);
    for (int i = 0; i < source.rows(); ++i) mu[i] = source.part(i);
    std::vector<std::pair<int, int>> wt_pairs;
    for (int s = 0; s < dt; ++s)
        for (int m = 0; m < nv; ++m) {
            std::vector<int> w = tgt.weight(s);
            auto w2 = sym2_weight(coords, m);
            for (int i = 0; i < n; ++i) w[i] += w2[i];
            if (w == mu) wt_pairs.emplace_back(s, m);
        }
    if (wt_pairs.empty()) return std::nullopt;

    std::vector<Vec> images;  // one tensor-space image per raising generator & pair
    RationalMatrix constraints(0, 0);
    {
        std::vector<std::vector<Rational>> rows;
        for (int a = 0; a + 1 < n; ++a) {
            std::vector<Vec> img(wt_pairs.size());
            for (std::size_t p = 0; p < wt_pairs.size(); ++p) {
                Vec v = zero_vec(static_cast<std::size_t>(dt) * nv);
                v[wt_pairs[p].first * nv + wt_pairs[p].second] = 1;
                img[p] = tensor_apply(tgt, coords, a, a + 1, v);
            }
            // collect the coordinates where anything is nonzero
            for (std::size_t i = 0; i < img[0].size(); ++i) {
                bool any = false;
                for (const Vec& v : img)
                    if (v[i] != 0) {
                        any = true;
                        break;
                    }
                if (!any) continue;
                std::vector<Rational> row(wt_pairs.size());
                for (std::size_t p = 0; p < wt_pairs.size(); ++p) row[p] = img[p][i];
                rows.push_back(std::move(row));
            }
        }
        constraints = RationalMatrix(rows.size(), wt_pairs.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < wt_pairs.size(); ++c) constraints(r, c) = rows[r][c];
    }
    auto kernel = nullspace_exact(constraints);
    if (kernel.empty()) return std::nullopt;
    if (kernel.size() > 1)
        throw std::logic_error("pieri: equivariant map space has dimension > 1");

    Vec hw = zero_vec(static_cast<std::size_t>(dt) * nv);
    for (std::size_t p = 0; p < wt_pairs.size(); ++p)
        hw[wt_pairs[p].first * nv + wt_pairs[p].second] = kernel[0][p];

    // Propagate from the highest weight vector with the simple lowering
    // operators until the images of a full basis of the source are known.
    CarriedEchelon ech;
    std::deque<std::pair<Vec, Vec>> queue;
    {
        Vec u0 = zero_vec(ds);
        u0[src.index_of(canonical_tableau(source))] = 1;
        ech.insert(u0, hw);
        queue.emplace_back(std::move(u0), std::move(hw));
        // note: insert() copies were consumed; rebuild the queue entry from
        // the echelon row to keep (u, fu) consistent.
        queue.back() = {ech.rows.back().u, ech.rows.back().fu};
    }
    while (!queue.empty() && static_cast<int>(ech.rows.size()) < ds) {
        auto [u, fu] = queue.front();
        queue.pop_front();
        for (int a = 0; a + 1 < n; ++a) {
            Vec lu(ds);
            const RationalMatrix& low = src.action(a + 1, a);
            for (int s = 0; s < ds; ++s) {
                if (u[s] == 0) continue;
                for (int s2 = 0; s2 < ds; ++s2)
                    if (low(s2, s) != 0) lu[s2] += low(s2, s) * u[s];
            }
            if (is_zero_vec(lu)) continue;
            Vec lfu = tensor_apply(tgt, coords, a + 1, a, fu);
            if (ech.insert(lu, lfu))
                queue.emplace_back(ech.rows.back().u, ech.rows.back().fu);
            if (static_cast<int>(ech.rows.size()) == ds) break;
        }
    }
    if (static_cast<int>(ech.rows.size()) != ds)
        throw std::logic_error("pieri: lowering operators did not span the source module");

    EquivariantLinearMatrix out;
    out.row_labels = tgt.basis();
    out.col_labels = src.basis();
    out.num_vars = nv;
    out.entries.assign(static_cast<std::size_t>(dt) * ds, LinearForm(nv));
    for (int t = 0; t < ds; ++t) {
        Vec u = zero_vec(ds);
        u[t] = 1;
        Vec fu = zero_vec(static_cast<std::size_t>(dt) * nv);
        ech.reduce(u, fu);
        if (!is_zero_vec(u)) throw std::logic_error("pieri: basis extraction failed");
        // reduce() subtracted the combination, so f(e_t) = -fu
        for (int s = 0; s < dt; ++s)
            for (int m = 0; m < nv; ++m)
                if (fu[s * nv + m] != 0) out.at(s, t).coeff[m] = -fu[s * nv + m];
    }
    normalize_primitive(out);
    if (require_unique) {
        // all-zero output would mean the unique map vanished, which cannot
        // happen for a nonzero highest weight vector
        bool any = false;
        for (const LinearForm& f : out.entries) any = any || !f.is_zero();
        if (!any) throw std::logic_error("pieri: built map is zero");
    }
    return out;
}

}  // namespace

EquivariantLinearMatrix build_pieri_map(const Partition& source, const Partition& target, int n) {
    auto m = pieri_impl(source, target, n, true);
    if (!m)
        throw std::invalid_argument(
            "build_pieri_map: no equivariant map (shapes do not differ by a horizontal 2-strip)");
    return *m;
}

std::optional<EquivariantLinearMatrix> try_build_pieri_map(const Partition& source,
                                                           const Partition& target, int n) {
    return pieri_impl(source, target, n, false);
}

namespace {

// index of the degree-2 monomial x_a x_b (a <= b) among all nv*(nv+1)/2
int quad_index(int nv, int a, int b) {
    if (a > b) std::swap(a, b);
    return a * nv - a * (a - 1) / 2 + (b - a);
}

// Product row i of A times column j of B, expanded as a quadratic form.
Vec quadratic_product(const EquivariantLinearMatrix& a, const EquivariantLinearMatrix& b,
                      std::size_t i, std::size_t j) {
    const int nv = a.num_vars;
    Vec q(static_cast<std::size_t>(nv) * (nv + 1) / 2);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const LinearForm& u = a.at(i, k);
        const LinearForm& v = b.at(k, j);
        for (int p = 0; p < nv; ++p) {
            if (u.coeff[p] == 0) continue;
            for (int r = 0; r < nv; ++r) {
                if (v.coeff[r] == 0) continue;
                q[quad_index(nv, p, r)] += u.coeff[p] * v.coeff[r];
            }
        }
    }
    return q;
}

}  // namespace

bool product_is_zero(const EquivariantLinearMatrix& a, const EquivariantLinearMatrix& b) {
    if (a.cols() != b.rows() || a.num_vars != b.num_vars)
        throw std::invalid_argument("product_is_zero: dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!is_zero_vec(quadratic_product(a, b, i, j))) return false;
    return true;
}

bool check_equivariance(const EquivariantLinearMatrix& m, const Partition& source,
                        const Partition& target, int n) {
    const SchurModule& src = schur_module(source, n);
    const SchurModule& tgt = schur_module(target, n);
    const SymCoords coords(n);
    const int nv = coords.count();
    const int dt = tgt.dim(), ds = src.dim();
    if (static_cast<int>(m.rows()) != dt || static_cast<int>(m.cols()) != ds) return false;

    std::vector<Vec> cols(ds);
    for (int t = 0; t < ds; ++t) {
        cols[t] = zero_vec(static_cast<std::size_t>(dt) * nv);
        for (int s = 0; s < dt; ++s)
            for (int v = 0; v < nv; ++v) cols[t][s * nv + v] = m.at(s, t).coeff[v];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const RationalMatrix& ms = src.action(a, b);
            for (int t = 0; t < ds; ++t) {
                Vec lhs = zero_vec(static_cast<std::size_t>(dt) * nv);
                for (int t2 = 0; t2 < ds; ++t2)
                    if (ms(t2, t) != 0)
                        for (std::size_t i = 0; i < lhs.size(); ++i)
                            if (cols[t2][i] != 0) lhs[i] += ms(t2, t) * cols[t2][i];
                Vec rhs = tensor_apply(tgt, coords, a, b, cols[t]);
                if (lhs != rhs) return false;
            }
        }
    return true;
}

namespace {

EquivariantLinearMatrix hcat(const std::vector<EquivariantLinearMatrix>& blocks) {
    EquivariantLinearMatrix out;
    out.row_labels = blocks.front().row_labels;
    out.num_vars = blocks.front().num_vars;
    for (const auto& b : blocks) {
        if (b.row_labels != out.row_labels)
            throw std::invalid_argument("hcat: row label mismatch");
        out.col_labels.insert(out.col_labels.end(), b.col_labels.begin(), b.col_labels.end());
    }
    out.entries.assign(out.rows() * out.cols(), LinearForm(out.num_vars));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, off + c) = b.at(r, c);
        off += b.cols();
    }
    return out;
}

// Right-multiply a matrix of linear forms by a rational matrix (column
// recombination), relabeling the columns.
EquivariantLinearMatrix times_rational(const EquivariantLinearMatrix& m, const RationalMatrix& c,
                                       std::vector<Tableau> new_col_labels) {
    if (m.cols() != c.rows()) throw std::invalid_argument("times_rational: dimension mismatch");
    EquivariantLinearMatrix out;
    out.row_labels = m.row_labels;
    out.col_labels = std::move(new_col_labels);
    out.num_vars = m.num_vars;
    out.entries.assign(out.rows() * out.cols(), LinearForm(m.num_vars));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const LinearForm& f = m.at(r, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < c.cols(); ++j)
                if (c(k, j) != 0) out.at(r, j).add_scaled(f, c(k, j));
        }
    return out;
}

bool entrywise_symmetric(const EquivariantLinearMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m.at(i, j) == m.at(j, i))) return false;
    return true;
}

}  // namespace

FreeResolution build_resolution(ResolutionVariant variant) {
    FreeResolution res;
    res.variant = variant;

    if (variant == ResolutionVariant::First) {
        res.f1_components = {Partition{3, 2}};
        res.f2_components = {Partition{3, 3, 1}};
        res.f1_offsets = {0, 60};
        res.alpha = build_pieri_map(Partition{3, 2}, Partition{3});
        EquivariantLinearMatrix phi = build_pieri_map(Partition{3, 3, 1}, Partition{3, 2});
        if (!product_is_zero(res.alpha, phi))
            throw std::logic_error("first resolution: alpha*phi != 0");
        RationalMatrix pairing = dual_pairing_matrix(Partition{3, 2}, Partition{3, 3, 1}, 4);
        RationalMatrix change = inverse_exact(pairing.transposed());
        res.phi_sym = times_rational(phi, change, res.alpha.col_labels);
        if (!entrywise_symmetric(res.phi_sym))
            throw std::logic_error("first resolution: middle map failed to symmetrize");
        normalize_primitive(res.phi_sym);
    } else {
        const std::vector<Partition> f1 = {Partition{3, 2, 2}, Partition{3, 2, 1, 1},
                                           Partition{2, 2, 2, 1}};
        const std::vector<Partition> f2 = {Partition{4, 2, 2, 1}, Partition{3, 3, 2, 1},
                                           Partition{3, 2, 2, 2}};
        res.f1_components = f1;
        res.f2_components = f2;

        std::vector<EquivariantLinearMatrix> alpha_blocks;
        for (const auto& comp : f1) alpha_blocks.push_back(build_pieri_map(comp, Partition{2, 2, 1}));
        res.alpha = hcat(alpha_blocks);
        res.f1_offsets = {0};
        for (const auto& b : alpha_blocks)
            res.f1_offsets.push_back(res.f1_offsets.back() + static_cast<int>(b.cols()));

        // Middle-map blocks: component (i,j) maps S_{f2[j]} into
        // S_{f1[i]} (x) degree-one forms. Two of the nine blocks admit no
        // equivariant map at all, which we assert.
        std::array<std::array<std::optional<EquivariantLinearMatrix>, 3>, 3> block;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) block[i][j] = try_build_pieri_map(f2[j], f1[i]);
        if (block[1][2] || block[2][1])
            throw std::logic_error("second resolution: expected zero blocks are nonzero");

        // Per source component, fix the relative block scalars by requiring
        // alpha composed with the middle map to vanish identically.
        const SymCoords coords(4);
        const int nq = coords.count() * (coords.count() + 1) / 2;
        for (int j = 0; j < 3; ++j) {
            std::vector<int> present;
            for (int i = 0; i < 3; ++i)
                if (block[i][j]) present.push_back(i);
            const std::size_t dj = block[present[0]][j]->cols();
            // products alpha_i * block_{ij} as stacked quadratic coefficients
            std::vector<std::vector<Vec>> prod(present.size());
            for (std::size_t pi = 0; pi < present.size(); ++pi) {
                int i = present[pi];
                prod[pi].reserve(20 * dj);
                for (std::size_t r = 0; r < 20; ++r)
                    for (std::size_t c = 0; c < dj; ++c)
                        prod[pi].push_back(quadratic_product(alpha_blocks[i], *block[i][j], r, c));
            }
            std::vector<std::vector<Rational>> rows;
            for (std::size_t e = 0; e < prod[0].size(); ++e)
                for (int q = 0; q < nq; ++q) {
                    bool any = false;
                    for (std::size_t pi = 0; pi < present.size(); ++pi)
                        if (prod[pi][e][q] != 0) any = true;
                    if (!any) continue;
                    std::vector<Rational> row(present.size());
                    for (std::size_t pi = 0; pi < present.size(); ++pi) row[pi] = prod[pi][e][q];
                    rows.push_back(std::move(row));
                }
            RationalMatrix sys(rows.size(), present.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < present.size(); ++c) sys(r, c) = rows[r][c];
            auto kernel = nullspace_exact(sys);
            if (kernel.size() != 1)
                throw std::logic_error("second resolution: syzygy scalar system not 1-dimensional");
            for (std::size_t pi = 0; pi < present.size(); ++pi) {
                const Rational& t = kernel[0][pi];
                for (LinearForm& f : block[present[pi]][j]->entries)
                    for (Rational& c : f.coeff) c *= t;
            }
        }

        // Assemble the 60x60 middle map with its two zero blocks.
        EquivariantLinearMatrix phi;
        phi.num_vars = coords.count();
        for (int j = 0; j < 3; ++j) {
            const auto& labels = schur_module(f2[j], 4).basis();
            phi.col_labels.insert(phi.col_labels.end(), labels.begin(), labels.end());
        }
        phi.row_labels = res.alpha.col_labels;
        phi.entries.assign(phi.rows() * phi.cols(), LinearForm(phi.num_vars));
        std::vector<int> f2_offsets = {0};
        for (int j = 0; j < 3; ++j)
            f2_offsets.push_back(f2_offsets.back() +
                                 static_cast<int>(schur_module(f2[j], 4).dim()));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (!block[i][j]) continue;
                for (std::size_t r = 0; r < block[i][j]->rows(); ++r)
                    for (std::size_t c = 0; c < block[i][j]->cols(); ++c)
                        phi.at(res.f1_offsets[i] + r, f2_offsets[j] + c) = block[i][j]->at(r, c);
            }
        if (!product_is_zero(res.alpha, phi))
            throw std::logic_error("second resolution: alpha*phi != 0");

        // Change each source block to the basis dual (under the complementary
        // pairing) to the matching target block.
        RationalMatrix change(60, 60);
        for (int j = 0; j < 3; ++j) {
            RationalMatrix pairing = dual_pairing_matrix(f1[j], f2[j], 4);
            RationalMatrix cj = inverse_exact(pairing.transposed());
            for (std::size_t r = 0; r < cj.rows(); ++r)
                for (std::size_t c = 0; c < cj.cols(); ++c)
                    change(f2_offsets[j] + r, res.f1_offsets[j] + c) = cj(r, c);
        }
        res.phi_sym = times_rational(phi, change, res.alpha.col_labels);

        // The diagonal blocks are now symmetric; the off-diagonal pairs agree
        // only up to one scalar each, fixed by rescaling source blocks.
        auto block_view = [&](int i, int j, std::size_t r, std::size_t c) -> LinearForm& {
            return res.phi_sym.at(res.f1_offsets[i] + r, res.f1_offsets[j] + c);
        };
        auto block_dims = [&](int i) {
            return static_cast<std::size_t>(res.f1_offsets[i + 1] - res.f1_offsets[i]);
        };
        std::array<Rational, 3> scale = {1, 1, 1};
        for (int j : {1, 2}) {
            // find scalar with scale*B(0,j) == B(j,0)^T
            Rational s = 0;
            for (std::size_t r = 0; r < block_dims(0) && s == 0; ++r)
                for (std::size_t c = 0; c < block_dims(j) && s == 0; ++c) {
                    const LinearForm& up = block_view(0, j, r, c);
                    const LinearForm& lo = block_view(j, 0, c, r);
                    for (int v = 0; v < res.phi_sym.num_vars; ++v)
                        if (up.coeff[v] != 0) {
                            s = lo.coeff[v] / up.coeff[v];
                            break;
                        }
                }
            scale[j] = (s == 0) ? Rational(1) : s;
        }
        for (int j : {1, 2}) {
            if (scale[j] == 1) continue;
            for (std::size_t r = 0; r < res.phi_sym.rows(); ++r)
                for (std::size_t c = 0; c < block_dims(j); ++c)
                    for (Rational& v : res.phi_sym.at(r, res.f1_offsets[j] + c).coeff)
                        v *= scale[j];
        }
        if (!entrywise_symmetric(res.phi_sym))
            throw std::logic_error("second resolution: middle map failed to symmetrize");
        normalize_primitive(res.phi_sym);
    }

    if (!product_is_zero(res.alpha, res.phi_sym))
        throw std::logic_error("resolution: alpha*phi_sym != 0 after symmetrization");
    res.betti = {static_cast<int>(res.alpha.rows()), static_cast<int>(res.alpha.cols()),
                 static_cast<int>(res.phi_sym.cols()), static_cast<int>(res.alpha.rows())};
    return res;
}

SupportReport verify_support(const FreeResolution& res) {
    SupportReport report{};
    const SymCoords coords(4);
    for (int r = 0; r <= 4; ++r) {
        std::vector<Rational> point(coords.count());
        for (int i = 0; i < r; ++i) point[coords.index(i, i)] = 1;
        report.rank_at_diag[r] = rank_exact(res.alpha.evaluated(point));
    }
    return report;
}

bool verify_ulrich(const FreeResolution& res) {
    if (res.betti != std::array<int, 4>{20, 60, 60, 20}) return false;
    if (res.alpha.rows() != 20 || res.alpha.cols() != 60) return false;
    if (res.phi_sym.rows() != 60 || res.phi_sym.cols() != 60) return false;
    bool alpha_nonzero = false;
    for (const LinearForm& f : res.alpha.entries) alpha_nonzero = alpha_nonzero || !f.is_zero();
    if (!alpha_nonzero) return false;
    if (!entrywise_symmetric(res.phi_sym)) return false;
    if (!product_is_zero(res.alpha, res.phi_sym)) return false;
    SupportReport s = verify_support(res);
    // cokernel vanishes exactly on rank >= 3, has fiber dimension 2 on the
    // smooth rank-2 stratum (sheaf of rank 2), and everything at 0
    return s.rank_at_diag[4] == 20 && s.rank_at_diag[3] == 20 && s.rank_at_diag[2] == 18 &&
           s.rank_at_diag[0] == 0;
}

void serialize(const EquivariantLinearMatrix& m, const std::string& role, std::ostream& os) {
    os << "pieri-matrix v1 role=" << role << " rows=" << m.rows() << " cols=" << m.cols()
       << " vars=" << m.num_vars << "\n";
    auto put_label = [&os](const char* tag, const Tableau& t) {
        os << tag;
        for (int p : t.shape().parts()) os << " " << p;
        os << " :";
        for (std::uint8_t e : t.entries()) os << " " << int(e);
        os << "\n";
    };
    for (const Tableau& t : m.row_labels) put_label("row", t);
    for (const Tableau& t : m.col_labels) put_label("col", t);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (int v = 0; v < m.num_vars; ++v) {
                const Rational& q = m.at(r, c).coeff[v];
                if (q == 0) continue;
                os << r << " " << c << " " << v << " " << q.get_num() << " " << q.get_den()
                   << "\n";
            }
    os << "end\n";
}

EquivariantLinearMatrix deserialize_equivariant(std::istream& is, std::string* role) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("pieri deserialize: empty stream");
    std::istringstream hdr(line);
    std::string magic, version, rolekv, rowskv, colskv, varskv;
    hdr >> magic >> version >> rolekv >> rowskv >> colskv >> varskv;
    if (magic != "pieri-matrix" || version != "v1")
        throw std::runtime_error("pieri deserialize: bad header");
    auto value_of = [](const std::string& kv) { return kv.substr(kv.find('=') + 1); };
    if (role) *role = value_of(rolekv);
    std::size_t rows = std::stoul(value_of(rowskv));
    std::size_t cols = std::stoul(value_of(colskv));
    int vars = std::stoi(value_of(varskv));

    EquivariantLinearMatrix m;
    m.num_vars = vars;
    auto read_label = [&](const char* tag) {
        if (!std::getline(is, line)) throw std::runtime_error("pieri deserialize: truncated");
        std::istringstream ls(line);
        std::string t;
        ls >> t;
        if (t != tag) throw std::runtime_error("pieri deserialize: bad label line");
        std::vector<int> parts;
        std::string tok;
        while (ls >> tok && tok != ":") parts.push_back(std::stoi(tok));
        std::vector<std::uint8_t> entries;
        int e;
        while (ls >> e) entries.push_back(static_cast<std::uint8_t>(e));
        return Tableau(Partition(parts), entries);
    };
    for (std::size_t i = 0; i < rows; ++i) m.row_labels.push_back(read_label("row"));
    for (std::size_t i = 0; i < cols; ++i) m.col_labels.push_back(read_label("col"));
    m.entries.assign(rows * cols, LinearForm(vars));
    while (std::getline(is, line)) {
        if (line == "end") return m;
        std::istringstream ls(line);
        std::size_t r, c;
        int v;
        std::string num, den;
        ls >> r >> c >> v >> num >> den;
        m.at(r, c).coeff[v] = rat(BigInt(num), BigInt(den));
    }
    throw std::runtime_error("pieri deserialize: missing end marker");
}

namespace {

// Monomials of given total degree in nv variables (exponent vectors).
void monomials_rec(int nv, int var, int remaining, std::vector<int>& buf,
                   std::vector<std::vector<int>>& out) {
    if (var == nv - 1) {
        buf.push_back(remaining);
        out.push_back(buf);
        buf.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        buf.push_back(e);
        monomials_rec(nv, var + 1, remaining - e, buf, out);
        buf.pop_back();
    }
}

std::vector<std::vector<int>> monomials(int nv, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> buf;
    monomials_rec(nv, 0, degree, buf, out);
    return out;
}

}  // namespace

BigInt presentation_hilbert(const FreeResolution& res, int degree) {
    const SymCoords coords(4);
    const int nv = coords.count();
    auto mons_d = monomials(nv, degree);
    if (degree == 0) return BigInt(res.alpha.rows());
    auto mons_d1 = monomials(nv, degree - 1);

    auto mon_weight = [&](const std::vector<int>& mon) {
        std::vector<int> w(4, 0);
        for (int m = 0; m < nv; ++m) {
            if (!mon[m]) continue;
            auto wm = sym2_weight(coords, m);
            for (int i = 0; i < 4; ++i) w[i] += mon[m] * wm[i];
        }
        return w;
    };
    std::map<std::vector<int>, int> mon_d_index;
    for (std::size_t i = 0; i < mons_d.size(); ++i) mon_d_index[mons_d[i]] = static_cast<int>(i);

    // Row space (s, monomial of degree d) and column space (k, monomial of
    // degree d-1) both split by gl-weight; ranks add over the blocks.
    const SchurModule& f0 = schur_module(res.variant == ResolutionVariant::First
                                             ? Partition{3}
                                             : Partition{2, 2, 1},
                                         4);
    std::map<std::vector<int>, std::map<std::pair<int, int>, int>> row_index;
    for (int s = 0; s < f0.dim(); ++s) {
        std::vector<int> ws = f0.weight(s);
        for (std::size_t mi = 0; mi < mons_d.size(); ++mi) {
            std::vector<int> w = mon_weight(mons_d[mi]);
            for (int i = 0; i < 4; ++i) w[i] += ws[i];
            auto& idx = row_index[w];
            int next = static_cast<int>(idx.size());
            idx[{s, static_cast<int>(mi)}] = next;
        }
    }

    // gather columns per weight
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> cols_by_weight;
    std::vector<std::vector<int>> col_weights(res.alpha.cols());
    for (std::size_t k = 0; k < res.alpha.cols(); ++k)
        col_weights[k] = res.alpha.col_labels[k].content(4);
    for (std::size_t k = 0; k < res.alpha.cols(); ++k)
        for (std::size_t mi = 0; mi < mons_d1.size(); ++mi) {
            std::vector<int> w = mon_weight(mons_d1[mi]);
            for (int i = 0; i < 4; ++i) w[i] += col_weights[k][i];
            cols_by_weight[w].emplace_back(static_cast<int>(k), static_cast<int>(mi));
        }

    BigInt rank = 0;
    for (const auto& [w, cols] : cols_by_weight) {
        auto rit = row_index.find(w);
        if (rit == row_index.end()) continue;
        const auto& ridx = rit->second;
        RationalMatrix block(ridx.size(), cols.size());
        for (std::size_t cj = 0; cj < cols.size(); ++cj) {
            auto [k, mi] = cols[cj];
            for (int s = 0; s < f0.dim(); ++s) {
                const LinearForm& f = res.alpha.at(s, k);
                for (int v = 0; v < nv; ++v) {
                    if (f.coeff[v] == 0) continue;
                    std::vector<int> mon = mons_d1[mi];
                    ++mon[v];
                    auto it = ridx.find({s, mon_d_index.at(mon)});
                    if (it == ridx.end()) continue;
                    block(it->second, cj) += f.coeff[v];
                }
            }
        }
        rank += rank_exact(block);
    }
    return BigInt(res.alpha.rows()) * BigInt(mons_d.size()) - rank;
}

}  // namespace chow
