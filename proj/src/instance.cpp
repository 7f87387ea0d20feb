#include "codesign/instance.hpp"

#include "codesign/errors.hpp"

#include <cmath>
#include <sstream>

namespace codesign {

namespace {

void check_cost_vector(const std::vector<double>& v, const char* name) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < 0.0) {
            std::ostringstream os;
            os << name << "[" << k + 1 << "] is negative";
            throw ValidationError(ValidationError::Kind::negative_cost, os.str());
        }
        if (!std::isfinite(v[k])) {
            std::ostringstream os;
            os << name << "[" << k + 1 << "] must be finite";
            throw ValidationError(ValidationError::Kind::infinite_io_cost, os.str());
        }
    }
}

}  // namespace

const Instance& validate_instance(const Instance& inst) {
    if (inst.A.rows() < 1) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "A must have at least one state");
    }
    if (!inst.A.is_square()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch, "A must be square");
    }
    const int n = inst.n();
    if (inst.B.rows() != n) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "B must have n rows");
    }
    if (inst.C.cols() != n) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "C must have n columns");
    }
    const int p = inst.p();
    const int m = inst.m();
    if (static_cast<int>(inst.cost_u.size()) != p) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "cost_u length must equal the number of inputs");
    }
    if (static_cast<int>(inst.cost_y.size()) != m) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "cost_y length must equal the number of outputs");
    }
    if (static_cast<int>(inst.cost_f.size()) != p) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "cost_f must have one row per input");
    }
    for (const auto& row : inst.cost_f) {
        if (static_cast<int>(row.size()) != m) {
            throw ValidationError(ValidationError::Kind::dimension_mismatch,
                                  "cost_f must have one column per output");
        }
    }
    check_cost_vector(inst.cost_u, "cost_u");
    check_cost_vector(inst.cost_y, "cost_y");
    return inst;
}

void validate_selection(const Instance& inst, const Selection& sel) {
    for (int i : sel.inputs) {
        if (i < 1 || i > inst.p()) {
            throw ValidationError(ValidationError::Kind::index_out_of_range,
                                  "selected input index out of range");
        }
    }
    for (int j : sel.outputs) {
        if (j < 1 || j > inst.m()) {
            throw ValidationError(ValidationError::Kind::index_out_of_range,
                                  "selected output index out of range");
        }
    }
    for (const auto& [i, j] : sel.feedback) {
        if (i < 1 || i > inst.p() || j < 1 || j > inst.m()) {
            throw ValidationError(ValidationError::Kind::index_out_of_range,
                                  "feedback pair index out of range");
        }
        if (!sel.inputs.count(i) || !sel.outputs.count(j)) {
            throw ValidationError(ValidationError::Kind::index_out_of_range,
                                  "feedback pair references an unselected input or output");
        }
    }
}

ExtendedCost selection_cost(const Instance& inst, const Selection& sel) {
    ExtendedCost total;
    for (int i : sel.inputs) total += ExtendedCost(inst.cost_u[i - 1]);
    for (int j : sel.outputs) total += ExtendedCost(inst.cost_y[j - 1]);
    for (const auto& [i, j] : sel.feedback) total += inst.cost_f[i - 1][j - 1];
    return total;
}

ClosedLoopPatterns apply_selection(const Instance& inst, const Selection& sel) {
    std::vector<SparsityPattern::Coord> knz;
    knz.reserve(sel.feedback.size());
    for (const auto& [i, j] : sel.feedback) knz.emplace_back(i, j);
    return ClosedLoopPatterns{
        inst.A,
        inst.B.masked_cols(sel.inputs),
        inst.C.masked_rows(sel.outputs),
        SparsityPattern(inst.p(), inst.m(), std::move(knz)),
    };
}

SparsityPattern information_pattern(const Instance& inst) {
    std::vector<SparsityPattern::Coord> knz;
    for (int i = 1; i <= inst.p(); ++i) {
        for (int j = 1; j <= inst.m(); ++j) {
            if (inst.cost_f[i - 1][j - 1].is_finite()) knz.emplace_back(i, j);
        }
    }
    return SparsityPattern(inst.p(), inst.m(), std::move(knz));
}

}  // namespace codesign
