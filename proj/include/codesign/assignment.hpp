#pragma once

#include "codesign/extended_cost.hpp"

#include <string>
#include <utility>
#include <vector>

namespace codesign {

/// Square cost matrix whose rows and columns share one ordered label list.
struct LabeledCostMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<ExtendedCost>> entries;

    std::size_t size() const noexcept { return labels.size(); }
};

/// A bijection between rows and columns with its saturating total cost.
/// `col_of_row[i]` is the 0-based column position assigned to row i.
struct AssignmentResult {
    std::vector<std::string> labels;
    std::vector<int> col_of_row;
    ExtendedCost total_cost;

    std::vector<std::pair<std::string, std::string>> pairs() const;
};

/// Minimum-cost assignment (Kuhn-Munkres, O(k^3)). Infinite entries are
/// excluded from the augmenting search; when no bijection over finite
/// entries exists the total cost is infinite and an arbitrary bijection is
/// returned. Ties among finite optima are broken lexicographically by row
/// label then column label.
AssignmentResult solve_assignment(const LabeledCostMatrix& M);

/// Decomposition of the assignment permutation into disjoint cycles covering
/// all labels. Each cycle starts at its smallest label; cycles are ordered
/// by smallest label.
std::vector<std::vector<std::string>> extract_cycles(const AssignmentResult& R);

}  // namespace codesign
