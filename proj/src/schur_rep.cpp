#include "chow/schur_rep.hpp"

#include <mutex>
#include <stdexcept>

namespace chow {

SchurModule::SchurModule(Partition shape, int n) : shape_(std::move(shape)), n_(n) {
    basis_ = ssyt_enumerate(shape_, n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(basis_[i].column_word(), static_cast<int>(i));
    weights_.reserve(basis_.size());
    for (const Tableau& t : basis_) weights_.push_back(t.content(n_));
}

int SchurModule::index_of(const Tableau& t) const {
    auto it = index_.find(t.column_word());
    if (it == index_.end()) throw std::invalid_argument("tableau not in basis");
    return it->second;
}

const RationalMatrix& SchurModule::action(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;

    RationalMatrix m(basis_.size(), basis_.size());
    if (a == b) {
        for (int k = 0; k < dim(); ++k) m(k, k) = weights_[k][a];
    } else {
        for (int col = 0; col < dim(); ++col) {
            const Tableau& t = basis_[col];
            for (int r = 0; r < shape_.rows(); ++r)
                for (int c = 0; c < shape_.part(r); ++c) {
                    if (t.at(r, c) != b + 1) continue;
                    Tableau u = t;
                    u.at(r, c) = static_cast<std::uint8_t>(a + 1);
                    for (const auto& [tab, coef] : straighten(u))
                        m(index_of(tab), col) += coef;
                }
        }
    }
    return action_cache_.emplace(key, std::move(m)).first->second;
}

namespace {
std::map<std::pair<std::vector<int>, int>, SchurModule> g_modules;
std::mutex g_modules_mutex;
}  // namespace

const SchurModule& schur_module(const Partition& shape, int n) {
    std::lock_guard<std::mutex> lock(g_modules_mutex);
    auto key = std::make_pair(shape.parts(), n);
    auto it = g_modules.find(key);
    if (it != g_modules.end()) return it->second;
    return g_modules.emplace(key, SchurModule(shape, n)).first->second;
}

RationalMatrix sym2_action(const SymCoords& coords, int a, int b) {
    int nv = coords.count();
    RationalMatrix m(nv, nv);
    for (int col = 0; col < nv; ++col) {
        auto [i, j] = coords.pairs[col];
        if (a == b) {
            m(col, col) = (i == a ? 1 : 0) + (j == a ? 1 : 0);
            continue;
        }
        if (i == b) m(coords.index(a, j), col) += 1;
        if (j == b) m(coords.index(i, a), col) += 1;
    }
    return m;
}

std::vector<int> sym2_weight(const SymCoords& coords, int m) {
    std::vector<int> w(coords.n, 0);
    auto [i, j] = coords.pairs[m];
    ++w[i];
    ++w[j];
    return w;
}

}  // namespace chow
