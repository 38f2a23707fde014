#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Integer partition: weakly decreasing positive parts (trailing zeros are
/// normalized away on construction).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based
    int size() const;                                             // number of boxes
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    Partition conjugate() const;
    /// Column height above-or-at column c (0-based), i.e. conjugate part.
    int col_height(int c) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Filling of a Young diagram with entries in 1..n, stored row-major.
/// Semistandard = rows weakly increasing, columns strictly increasing.
class Tableau {
public:
    Tableau() = default;
    Tableau(Partition shape, std::vector<std::uint8_t> entries);

    const Partition& shape() const { return shape_; }
    std::uint8_t at(int r, int c) const { return entries_[offset_[r] + c]; }
    std::uint8_t& at(int r, int c) { return entries_[offset_[r] + c]; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    bool is_semistandard() const;
    /// Column reading word: columns left to right, each read top to bottom.
    /// This is the documented total order key for all basis enumerations.
    std::vector<std::uint8_t> column_word() const;
    /// Multiplicity of each value 1..n (content vector).
    std::vector<int> content(int n) const;

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& rhs) const;
    std::string str() const;

private:
    Partition shape_;
    std::vector<std::uint8_t> entries_;
    std::vector<int> offset_;  // row start offsets
};

/// All semistandard tableaux of the given shape with entries in 1..n,
/// ordered lexicographically by column reading word.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, int n);

/// dim S_shape(C^n) by the hook content formula (0 if more than n rows).
BigInt schur_dimension(const Partition& shape, int n);

/// The tableau of shape `shape` whose row i is filled with i+1 (the unique
/// semistandard filling of highest weight).
Tableau canonical_tableau(const Partition& shape);

}  // namespace chow
