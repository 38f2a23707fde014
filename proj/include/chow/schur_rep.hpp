#pragma once

#include <map>
#include <vector>

#include "chow/linear_form.hpp"
#include "chow/matrix.hpp"
#include "chow/straighten.hpp"
#include "chow/tableaux.hpp"

namespace chow {

/// A Schur module S_shape(C^n) realized on its semistandard-tableau basis,
/// together with the action of the gl(n) elementary generators E_ab
/// (E_ab sends basis vector e_b to e_a and acts on tableaux as a
/// derivation, followed by straightening).
class SchurModule {
public:
    SchurModule(Partition shape, int n);

    const Partition& shape() const { return shape_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Tableau>& basis() const { return basis_; }
    int index_of(const Tableau& t) const;

    /// Content vector of basis element k (the gl weight).
    const std::vector<int>& weight(int k) const { return weights_[k]; }

    /// Matrix of E_ab on this module (dense, integer entries). Cached.
    const RationalMatrix& action(int a, int b) const;

private:
    Partition shape_;
    int n_;
    std::vector<Tableau> basis_;
    std::map<std::vector<std::uint8_t>, int> index_;  // by column word
    std::vector<std::vector<int>> weights_;
    mutable std::map<std::pair<int, int>, RationalMatrix> action_cache_;
};

/// Shared registry so modules (and their action caches) are built once.
const SchurModule& schur_module(const Partition& shape, int n);

/// Action of E_ab on the degree-one coordinates x_ij of symmetric matrices
/// (the symmetric square of the standard representation).
RationalMatrix sym2_action(const SymCoords& coords, int a, int b);

/// Weight of the coordinate x_ij: e_i + e_j.
std::vector<int> sym2_weight(const SymCoords& coords, int m);

}  // namespace chow
