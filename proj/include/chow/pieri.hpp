#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chow/linear_form.hpp"
#include "chow/schur_rep.hpp"
#include "chow/tableaux.hpp"

namespace chow {

/// Matrix of degree-one forms in the symmetric-matrix coordinates, with rows
/// and columns labeled by semistandard tableaux (one shape per block).
struct EquivariantLinearMatrix {
    std::vector<Tableau> row_labels;
    std::vector<Tableau> col_labels;
    int num_vars = 0;
    std::vector<LinearForm> entries;  // row-major, rows()*cols()

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    LinearForm& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
    const LinearForm& at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }

    /// Substitute numeric values for the coordinates.
    RationalMatrix evaluated(const std::vector<Rational>& point) const;
    bool operator==(const EquivariantLinearMatrix&) const = default;
};

enum class ResolutionVariant { First, Second };

/// Linear free resolution data for one of the two equivariant module
/// presentations on rank<=2 symmetric 4x4 matrices: the presentation matrix
/// (20x60) and the middle differential written against dual bases so that it
/// is an exactly symmetric matrix of linear forms (60x60).
struct FreeResolution {
    ResolutionVariant variant;
    EquivariantLinearMatrix alpha;    // 20 x 60
    EquivariantLinearMatrix phi_sym;  // 60 x 60, entrywise symmetric
    std::array<int, 4> betti;         // generator counts per homological degree
    std::vector<Partition> f1_components, f2_components;
    std::vector<int> f1_offsets;  // column block offsets into the 60 columns
};

/// The unique-up-to-scale GL(n)-equivariant degree-one map from
/// S_source(E) x A to S_target(E) x A(-1), where target/source differ by a
/// horizontal two-box strip. Rows are labeled by SSYT(target), columns by
/// SSYT(source); entries are linear forms in the n(n+1)/2 coordinates.
/// Output is normalized to primitive integer coefficients with the first
/// nonzero coefficient positive (row-major scan). Throws if the equivariant
/// map space does not have dimension exactly 1.
EquivariantLinearMatrix build_pieri_map(const Partition& source, const Partition& target,
                                        int n = 4);

/// As build_pieri_map, but returns nullopt when no nonzero equivariant map
/// exists (Pieri multiplicity zero).
std::optional<EquivariantLinearMatrix> try_build_pieri_map(const Partition& source,
                                                           const Partition& target, int n = 4);

FreeResolution build_resolution(ResolutionVariant variant);

struct SupportReport {
    std::array<std::size_t, 5> rank_at_diag;  // rank of alpha at diag with r ones, r=0..4
};

/// Rank of the presentation evaluated at diagonal matrices of rank r.
SupportReport verify_support(const FreeResolution& res);

/// Checks: linear differentials, generator counts (20,60,60,20), exact
/// symmetry of the middle map, alpha*phi = 0 as polynomial matrices, and
/// codimension-3 support via the diagonal ranks.
bool verify_ulrich(const FreeResolution& res);

/// Exact intertwining check of an equivariant matrix against all gl(n)
/// generators; returns true iff every residual vanishes identically.
bool check_equivariance(const EquivariantLinearMatrix& m, const Partition& source,
                        const Partition& target, int n = 4);

/// Product of two matrices of linear forms as degree-two polynomial matrices;
/// true iff identically zero.
bool product_is_zero(const EquivariantLinearMatrix& a, const EquivariantLinearMatrix& b);

void serialize(const EquivariantLinearMatrix& m, const std::string& role, std::ostream& os);
EquivariantLinearMatrix deserialize_equivariant(std::istream& is, std::string* role = nullptr);

/// Hilbert function of the presented module in one degree, computed from
/// exact ranks of the degree-d presentation map (weight-block decomposed).
BigInt presentation_hilbert(const FreeResolution& res, int degree);

}  // namespace chow
