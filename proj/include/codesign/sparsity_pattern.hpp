#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace codesign {

/// Binary structural pattern stored as the sorted set of 1-based nonzero
/// positions. Positions are validated against the matrix shape on
/// construction; duplicates are merged.
class SparsityPattern {
public:
    using Coord = std::pair<int, int>;

    SparsityPattern(int rows, int cols, std::vector<Coord> nonzeros = {});

    static SparsityPattern from_dense(const std::vector<std::vector<int>>& dense);
    static SparsityPattern identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::size_t count() const noexcept { return nz_.size(); }
    const std::vector<Coord>& nonzeros() const noexcept { return nz_; }

    bool contains(int i, int j) const;
    bool row_has_nonzero(int i) const;
    bool col_has_nonzero(int j) const;

    SparsityPattern transposed() const;

    /// Same shape with every nonzero outside the kept rows/columns removed.
    SparsityPattern masked_rows(const std::set<int>& keep) const;
    SparsityPattern masked_cols(const std::set<int>& keep) const;

    friend bool operator==(const SparsityPattern&, const SparsityPattern&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Coord> nz_;
};

}  // namespace codesign
