#include "codesign/sparsity_pattern.hpp"

#include "codesign/errors.hpp"

#include <algorithm>
#include <sstream>

namespace codesign {

SparsityPattern::SparsityPattern(int rows, int cols, std::vector<Coord> nonzeros)
    : rows_(rows), cols_(cols), nz_(std::move(nonzeros)) {
    if (rows_ < 0 || cols_ < 0) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "pattern dimensions must be non-negative");
    }
    for (const auto& [i, j] : nz_) {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            std::ostringstream os;
            os << "nonzero (" << i << "," << j << ") outside a " << rows_ << "x" << cols_
               << " pattern";
            throw ValidationError(ValidationError::Kind::index_out_of_range, os.str());
        }
    }
    std::sort(nz_.begin(), nz_.end());
    nz_.erase(std::unique(nz_.begin(), nz_.end()), nz_.end());
}

SparsityPattern SparsityPattern::from_dense(const std::vector<std::vector<int>>& dense) {
    const int rows = static_cast<int>(dense.size());
    const int cols = rows > 0 ? static_cast<int>(dense[0].size()) : 0;
    std::vector<Coord> nz;
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(dense[i].size()) != cols) {
            throw ValidationError(ValidationError::Kind::dimension_mismatch,
                                  "ragged dense matrix");
        }
        for (int j = 0; j < cols; ++j) {
            if (dense[i][j] != 0) nz.emplace_back(i + 1, j + 1);
        }
    }
    return SparsityPattern(rows, cols, std::move(nz));
}

SparsityPattern SparsityPattern::identity(int n) {
    std::vector<Coord> nz;
    nz.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) nz.emplace_back(i, i);
    return SparsityPattern(n, n, std::move(nz));
}

bool SparsityPattern::contains(int i, int j) const {
    return std::binary_search(nz_.begin(), nz_.end(), Coord{i, j});
}

bool SparsityPattern::row_has_nonzero(int i) const {
    auto it = std::lower_bound(nz_.begin(), nz_.end(), Coord{i, 0});
    return it != nz_.end() && it->first == i;
}

bool SparsityPattern::col_has_nonzero(int j) const {
    for (const auto& [i, c] : nz_) {
        if (c == j) return true;
        (void)i;
    }
    return false;
}

SparsityPattern SparsityPattern::transposed() const {
    std::vector<Coord> nz;
    nz.reserve(nz_.size());
    for (const auto& [i, j] : nz_) nz.emplace_back(j, i);
    return SparsityPattern(cols_, rows_, std::move(nz));
}

SparsityPattern SparsityPattern::masked_rows(const std::set<int>& keep) const {
    std::vector<Coord> nz;
    for (const auto& c : nz_) {
        if (keep.count(c.first)) nz.push_back(c);
    }
    return SparsityPattern(rows_, cols_, std::move(nz));
}

SparsityPattern SparsityPattern::masked_cols(const std::set<int>& keep) const {
    std::vector<Coord> nz;
    for (const auto& c : nz_) {
        if (keep.count(c.second)) nz.push_back(c);
    }
    return SparsityPattern(rows_, cols_, std::move(nz));
}

}  // namespace codesign
