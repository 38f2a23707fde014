#include "chow/chow_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chow {

namespace {

int env_thread_count() {
    if (const char* s = std::getenv("ESSCHOW_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int nthreads = std::min<std::size_t>(env_thread_count(), count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

// Degree-2 exterior elements during the staged triple product.
struct ExtQuad {
    std::vector<std::pair<int, Rational>> terms;  // index over i<j pairs
};

int pair_index(int nv, int i, int j) {  // i < j
    return i * nv - i * (i + 1) / 2 + (j - i - 1);
}

ExtQuad wedge2(int nv, const LinearForm& u, const LinearForm& v) {
    std::map<int, Rational> acc;
    for (int a = 0; a < nv; ++a) {
        if (u.coeff[a] == 0) continue;
        for (int b = 0; b < nv; ++b) {
            if (b == a || v.coeff[b] == 0) continue;
            Rational t = u.coeff[a] * v.coeff[b];
            if (a < b)
                acc[pair_index(nv, a, b)] += t;
            else
                acc[pair_index(nv, b, a)] -= t;
        }
    }
    ExtQuad out;
    for (auto& [i, c] : acc)
        if (c != 0) out.terms.emplace_back(i, std::move(c));
    return out;
}

void add_wedge_ql(const TripleBasis& basis, const ExtQuad& q, const LinearForm& w,
                  std::map<int, Rational>& acc) {
    const int nv = basis.nvars();
    for (const auto& [pi, qc] : q.terms) {
        // recover (a<b) from the pair index
        int a = 0, rem = pi;
        while (rem >= nv - 1 - a) {
            rem -= nv - 1 - a;
            ++a;
        }
        int b = a + 1 + rem;
        for (int c = 0; c < nv; ++c) {
            if (w.coeff[c] == 0 || c == a || c == b) continue;
            int i = a, j = b, k = c, sign = 1;
            if (k < j) {
                std::swap(j, k);
                sign = -sign;
                if (j < i) {
                    std::swap(i, j);
                    sign = -sign;
                }
            }
            Rational t = qc * w.coeff[c];
            if (sign < 0) t = -t;
            acc[basis.index(i, j, k)] += t;
        }
    }
}

void normalize_content(ChowMatrix& cm) {
    BigInt den_lcm = 1, num_gcd = 0;
    for (const ExteriorCubic& e : cm.entries)
        for (const auto& [t, c] : e.terms) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
    if (num_gcd == 0) return;
    Rational scale = rat(den_lcm, num_gcd);
    if (scale < 0) scale = -scale;
    for (ExteriorCubic& e : cm.entries)
        for (auto& [t, c] : e.terms) c *= scale;
}

ChowMatrix exterior_triple_product(const EquivariantLinearMatrix& alpha,
                                   const EquivariantLinearMatrix& phi_sym,
                                   ResolutionVariant variant, Ambient ambient) {
    const int nv = alpha.num_vars;
    const TripleBasis basis(nv);
    const std::size_t g = alpha.rows();   // 20
    const std::size_t mid = alpha.cols();  // 60

    // stage 1: U = alpha ^ phi (degree-2 entries), row-major g x mid
    std::vector<ExtQuad> u(g * mid);
    parallel_for(g * mid, [&](std::size_t idx) {
        std::size_t i = idx / mid, l = idx % mid;
        std::map<int, Rational> acc;
        for (std::size_t k = 0; k < mid; ++k) {
            const LinearForm& a = alpha.at(i, k);
            const LinearForm& p = phi_sym.at(k, l);
            if (a.is_zero() || p.is_zero()) continue;
            ExtQuad w = wedge2(nv, a, p);
            for (auto& [pi, c] : w.terms) acc[pi] += c;
        }
        ExtQuad& out = u[idx];
        for (auto& [pi, c] : acc)
            if (c != 0) out.terms.emplace_back(pi, std::move(c));
    });

    // stage 2: N(i,j) = sum_l U(i,l) ^ alpha(j,l)
    ChowMatrix cm;
    cm.variant = variant;
    cm.ambient = ambient;
    cm.nvars = nv;
    cm.entries.assign(g * g, ExteriorCubic{});
    parallel_for(g * g, [&](std::size_t idx) {
        std::size_t i = idx / g, j = idx % g;
        std::map<int, Rational> acc;
        for (std::size_t l = 0; l < mid; ++l) {
            const ExtQuad& q = u[i * mid + l];
            const LinearForm& a = alpha.at(j, l);
            if (q.terms.empty() || a.is_zero()) continue;
            add_wedge_ql(basis, q, a, acc);
        }
        ExteriorCubic& out = cm.entries[idx];
        for (auto& [t, c] : acc)
            if (c != 0) out.terms.emplace_back(t, std::move(c));
    });

    for (int i = 0; i < 20; ++i) {
        if (!cm.at(i, i).is_zero())
            throw std::logic_error("chow matrix: nonzero diagonal entry");
        for (int j = i + 1; j < 20; ++j) {
            ExteriorCubic neg = cm.at(j, i);
            for (auto& [t, c] : neg.terms) c = -c;
            if (!(neg == cm.at(i, j)))
                throw std::logic_error("chow matrix: skew-symmetry check failed");
        }
    }
    normalize_content(cm);
    return cm;
}

}  // namespace

int ChowMatrix::triple_count() const { return nvars * (nvars - 1) * (nvars - 2) / 6; }

RationalMatrix ChowMatrix::evaluated(const std::vector<Rational>& pluecker) const {
    RationalMatrix m(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) m(i, j) = at(i, j).eval(pluecker);
    return m;
}

Eigen::MatrixXd ChowMatrix::evaluated(const std::vector<double>& pluecker) const {
    Eigen::MatrixXd m(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) m(i, j) = at(i, j).eval(pluecker);
    return m;
}

ChowMatrix chow_matrix_symmetric(const FreeResolution& res) {
    return exterior_triple_product(res.alpha, res.phi_sym, res.variant, Ambient::Sym10);
}

std::vector<LinearForm> sym4_substitution_forms() {
    // row-major 3x3 coordinates m_11..m_33 (indices 0..8); forms are
    // 2*s(M)_ij in the fixed symmetric coordinate order
    auto m = [](int i, int j) { return 3 * i + j; };  // 0-based
    std::vector<LinearForm> f(10, LinearForm(9));
    auto set = [&](int idx, std::initializer_list<std::pair<int, int>> terms) {
        for (auto [var, c] : terms) f[idx].coeff[var] += c;
    };
    set(0, {{m(0, 0), 1}, {m(1, 1), -1}, {m(2, 2), -1}});  // x11
    set(1, {{m(0, 2), 1}, {m(2, 0), 1}});                  // x12
    set(2, {{m(0, 1), 1}, {m(1, 0), 1}});                  // x13
    set(3, {{m(1, 2), 1}, {m(2, 1), -1}});                 // x14
    set(4, {{m(0, 0), -1}, {m(1, 1), -1}, {m(2, 2), 1}});  // x22
    set(5, {{m(1, 2), 1}, {m(2, 1), 1}});                  // x23
    set(6, {{m(0, 1), 1}, {m(1, 0), -1}});                 // x24
    set(7, {{m(0, 0), -1}, {m(1, 1), 1}, {m(2, 2), -1}});  // x33
    set(8, {{m(0, 2), -1}, {m(2, 0), 1}});                 // x34
    set(9, {{m(0, 0), 1}, {m(1, 1), 1}, {m(2, 2), 1}});    // x44
    return f;
}

ChowMatrix pullback_to_essential(const ChowMatrix& cm) {
    if (cm.ambient != Ambient::Sym10)
        throw std::invalid_argument("pullback_to_essential: input must be over the 10 coordinates");
    const TripleBasis src(10);
    const TripleBasis dst(9);
    const auto sub = sym4_substitution_forms();

    // images of all 120 basis triples under the induced degree-3 map
    std::vector<ExteriorCubic> images(src.count());
    for (int t = 0; t < src.count(); ++t) {
        auto [a, b, c] = src.triple(t);
        images[t] = wedge3(dst, sub[a], sub[b], sub[c]);
    }

    ChowMatrix out;
    out.variant = cm.variant;
    out.ambient = Ambient::Ess9;
    out.nvars = 9;
    out.entries.assign(400, ExteriorCubic{});
    for (int idx = 0; idx < 400; ++idx) {
        std::map<int, Rational> acc;
        for (const auto& [t, coeff] : cm.entries[idx].terms)
            for (const auto& [t9, c9] : images[t].terms) acc[t9] += coeff * c9;
        for (auto& [t9, c] : acc)
            if (c != 0) out.entries[idx].terms.emplace_back(t9, std::move(c));
    }
    for (int i = 0; i < 20; ++i) {
        if (!out.at(i, i).is_zero())
            throw std::logic_error("pullback: nonzero diagonal entry");
        for (int j = i + 1; j < 20; ++j) {
            ExteriorCubic neg = out.at(j, i);
            for (auto& [t, c] : neg.terms) c = -c;
            if (!(neg == out.at(i, j)))
                throw std::logic_error("pullback: skew-symmetry lost");
        }
    }
    normalize_content(out);
    return out;
}

ChowMatrix pullback_via_differentials(const FreeResolution& res) {
    const auto sub = sym4_substitution_forms();
    auto substitute = [&](const EquivariantLinearMatrix& m) {
        EquivariantLinearMatrix out;
        out.row_labels = m.row_labels;
        out.col_labels = m.col_labels;
        out.num_vars = 9;
        out.entries.assign(m.entries.size(), LinearForm(9));
        for (std::size_t i = 0; i < m.entries.size(); ++i)
            for (int v = 0; v < m.num_vars; ++v)
                if (m.entries[i].coeff[v] != 0)
                    out.entries[i].add_scaled(sub[v], m.entries[i].coeff[v]);
        return out;
    };
    return exterior_triple_product(substitute(res.alpha), substitute(res.phi_sym), res.variant,
                                   Ambient::Ess9);
}

BigInt grassmannian_quadric_count(int k, int n) {
    if (k != 3) throw std::invalid_argument("grassmannian_quadric_count: only k=3 supported");
    BigInt nb;
    mpz_bin_uiui(nb.get_mpz_t(), n, 3);
    BigInt amb = nb + 1;
    BigInt pairs = amb * (amb - 1) / 2;
    return pairs - schur_dimension(Partition{2, 2, 2}, n);
}

std::vector<Rational> pluecker_of_rows(const RationalMatrix& span3) {
    if (span3.rows() != 3) throw std::invalid_argument("pluecker_of_rows: need 3 rows");
    const int n = static_cast<int>(span3.cols());
    std::vector<Rational> p;
    p.reserve(n * (n - 1) * (n - 2) / 6);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const auto& a = span3;
                Rational det = a(0, i) * (a(1, j) * a(2, k) - a(1, k) * a(2, j)) -
                               a(0, j) * (a(1, i) * a(2, k) - a(1, k) * a(2, i)) +
                               a(0, k) * (a(1, i) * a(2, j) - a(1, j) * a(2, i));
                p.push_back(det);
            }
    return p;
}

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string ambient_name(Ambient a) { return a == Ambient::Sym10 ? "sym10" : "ess9"; }
std::string variant_name(ResolutionVariant v) {
    return v == ResolutionVariant::First ? "first" : "second";
}

}  // namespace

void serialize(const ChowMatrix& cm, std::ostream& os) {
    std::ostringstream body;
    body << "chow-matrix v1 variant=" << variant_name(cm.variant)
         << " ambient=" << ambient_name(cm.ambient) << "\n";
    TripleBasis basis(cm.nvars);
    for (int r = 0; r < 20; ++r)
        for (int c = r + 1; c < 20; ++c)
            for (const auto& [t, coeff] : cm.at(r, c).terms) {
                auto [i1, i2, i3] = basis.triple(t);
                if (coeff.get_den() != 1)
                    throw std::logic_error("serialize: non-integer coefficient");
                body << r << " " << c << " " << i1 << " " << i2 << " " << i3 << " "
                     << coeff.get_num() << "\n";
            }
    std::string text = body.str();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(text)));
    os << text << "hash fnv1a64 " << hex << "\n";
}

ChowMatrix deserialize_chow(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("chow deserialize: empty stream");
    std::istringstream hdr(line);
    std::string magic, version, variantkv, ambientkv;
    hdr >> magic >> version >> variantkv >> ambientkv;
    if (magic != "chow-matrix") throw std::runtime_error("chow deserialize: bad magic");
    if (version != "v1") throw std::runtime_error("chow deserialize: unsupported version");
    auto value_of = [](const std::string& kv) { return kv.substr(kv.find('=') + 1); };

    ChowMatrix cm;
    std::string variant = value_of(variantkv), ambient = value_of(ambientkv);
    if (variant == "first")
        cm.variant = ResolutionVariant::First;
    else if (variant == "second")
        cm.variant = ResolutionVariant::Second;
    else
        throw std::runtime_error("chow deserialize: bad variant");
    if (ambient == "sym10")
        cm.ambient = Ambient::Sym10;
    else if (ambient == "ess9")
        cm.ambient = Ambient::Ess9;
    else
        throw std::runtime_error("chow deserialize: bad ambient");
    cm.nvars = cm.ambient == Ambient::Sym10 ? 10 : 9;
    cm.entries.assign(400, ExteriorCubic{});

    TripleBasis basis(cm.nvars);
    std::string body = line + "\n";
    bool saw_hash = false;
    while (std::getline(is, line)) {
        if (line.rfind("hash ", 0) == 0) {
            std::istringstream hs(line);
            std::string tag, algo, hex;
            hs >> tag >> algo >> hex;
            if (algo != "fnv1a64") throw std::runtime_error("chow deserialize: unknown hash");
            char expect[17];
            std::snprintf(expect, sizeof expect, "%016llx",
                          static_cast<unsigned long long>(fnv1a64(body)));
            if (hex != expect) throw std::runtime_error("chow deserialize: checksum mismatch");
            saw_hash = true;
            break;
        }
        body += line + "\n";
        std::istringstream ls(line);
        int r, c, i1, i2, i3;
        std::string coeff;
        if (!(ls >> r >> c >> i1 >> i2 >> i3 >> coeff))
            throw std::runtime_error("chow deserialize: malformed entry line");
        cm.at(r, c).terms.emplace_back(basis.index(i1, i2, i3), Rational(BigInt(coeff)));
    }
    if (!saw_hash) throw std::runtime_error("chow deserialize: missing hash footer");
    // restore lower triangle by skewness
    for (int r = 0; r < 20; ++r)
        for (int c = r + 1; c < 20; ++c) {
            ExteriorCubic& e = cm.at(r, c);
            std::sort(e.terms.begin(), e.terms.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ExteriorCubic neg = e;
            for (auto& [t, q] : neg.terms) q = -q;
            cm.at(c, r) = std::move(neg);
        }
    return cm;
}

ChowMatrixStats chow_stats(const ChowMatrix& cm) {
    ChowMatrixStats st{0, BigInt(0)};
    for (int r = 0; r < 20; ++r)
        for (int c = 0; c < 20; ++c) {
            if (r != c && cm.at(r, c).is_zero()) ++st.zero_offdiag_entries;
            for (const auto& [t, coeff] : cm.at(r, c).terms) {
                BigInt a = abs(coeff.get_num());
                if (a > st.max_abs_coeff) st.max_abs_coeff = a;
            }
        }
    return st;
}

}  // namespace chow
