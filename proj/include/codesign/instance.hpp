#pragma once

#include "codesign/extended_cost.hpp"
#include "codesign/sparsity_pattern.hpp"

#include <set>
#include <utility>
#include <vector>

namespace codesign {

/// A co-design problem instance: plant patterns plus cost tables.
/// A is n-by-n, B is n-by-p, C is m-by-n; cost_f is p-by-m and may hold
/// infinite entries for unavailable feedback links. Input and output costs
/// are required to be finite.
struct Instance {
    SparsityPattern A;
    SparsityPattern B;
    SparsityPattern C;
    std::vector<double> cost_u;
    std::vector<double> cost_y;
    std::vector<std::vector<ExtendedCost>> cost_f;

    int n() const noexcept { return A.rows(); }
    int p() const noexcept { return B.cols(); }
    int m() const noexcept { return C.rows(); }
};

/// Chosen inputs, outputs and feedback pairs. Feedback pairs are
/// (input index, output index), 1-based, and must reference selected
/// inputs and outputs.
struct Selection {
    std::set<int> inputs;
    std::set<int> outputs;
    std::set<std::pair<int, int>> feedback;

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// Returns `inst` unchanged when every invariant holds; otherwise throws a
/// ValidationError naming the first violated invariant.
const Instance& validate_instance(const Instance& inst);

/// Bounds- and containment-checks a selection against an instance.
void validate_selection(const Instance& inst, const Selection& sel);

/// Saturating total of input, output and feedback costs; infinite exactly
/// when a selected feedback pair has infinite cost.
ExtendedCost selection_cost(const Instance& inst, const Selection& sel);

/// Closed-loop structural patterns induced by a selection: unselected input
/// columns and output rows are zeroed and the information pattern holds
/// exactly the selected feedback pairs.
struct ClosedLoopPatterns {
    SparsityPattern A;
    SparsityPattern B;
    SparsityPattern C;
    SparsityPattern K;
};

ClosedLoopPatterns apply_selection(const Instance& inst, const Selection& sel);

/// Information pattern admitting every finite-cost feedback pair.
SparsityPattern information_pattern(const Instance& inst);

}  // namespace codesign
