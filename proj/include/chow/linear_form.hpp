#pragma once

#include <utility>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Linear form over a fixed ordered coordinate list (dense coefficients).
struct LinearForm {
    std::vector<Rational> coeff;

    LinearForm() = default;
    explicit LinearForm(std::size_t nvars) : coeff(nvars) {}

    bool is_zero() const {
        for (const auto& c : coeff)
            if (c != 0) return false;
        return true;
    }
    LinearForm& add_scaled(const LinearForm& f, const Rational& s) {
        for (std::size_t i = 0; i < coeff.size(); ++i)
            if (f.coeff[i] != 0) coeff[i] += s * f.coeff[i];
        return *this;
    }
    Rational eval(const std::vector<Rational>& point) const {
        Rational v = 0;
        for (std::size_t i = 0; i < coeff.size(); ++i)
            if (coeff[i] != 0) v += coeff[i] * point[i];
        return v;
    }
    bool operator==(const LinearForm&) const = default;
};

/// Coordinates x_ij (i <= j) on symmetric n x n matrices, in the fixed order
/// x_11, x_12, ..., x_1n, x_22, x_23, ..., x_nn.
struct SymCoords {
    int n;
    std::vector<std::pair<int, int>> pairs;  // 0-based (i,j), i <= j

    explicit SymCoords(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    }
    int count() const { return static_cast<int>(pairs.size()); }
    int index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
};

}  // namespace chow
