#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chow/linear_form.hpp"
#include "chow/rational.hpp"

namespace chow {

/// Strictly increasing index triples into an ambient coordinate list of size
/// nvars, ordered lexicographically; the degree-3 part of the exterior
/// algebra on the coordinates is indexed by them.
class TripleBasis {
public:
    explicit TripleBasis(int nvars);

    int nvars() const { return nvars_; }
    int count() const { return static_cast<int>(triples_.size()); }
    const std::array<int, 3>& triple(int idx) const { return triples_[idx]; }
    int index(int i, int j, int k) const;  // requires i<j<k

private:
    int nvars_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<int> rank_;  // lookup table
};

/// Element of the degree-3 exterior algebra on the coordinates: sparse
/// coefficients over strictly increasing triples. No zero coefficients kept.
struct ExteriorCubic {
    std::vector<std::pair<int, Rational>> terms;  // sorted by triple index

    bool is_zero() const { return terms.empty(); }
    Rational eval(const std::vector<Rational>& pluecker) const {
        Rational v = 0;
        for (const auto& [t, c] : terms) v += c * pluecker[t];
        return v;
    }
    double eval(const std::vector<double>& pluecker) const {
        double v = 0;
        for (const auto& [t, c] : terms) v += c.get_d() * pluecker[t];
        return v;
    }
    bool operator==(const ExteriorCubic&) const = default;
};

/// Wedge of three linear forms over the same coordinate list, expanded on
/// the strictly-increasing-triple basis.
ExteriorCubic wedge3(const TripleBasis& basis, const LinearForm& u, const LinearForm& v,
                     const LinearForm& w);

}  // namespace chow
