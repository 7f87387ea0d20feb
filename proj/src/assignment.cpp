#include "codesign/assignment.hpp"

#include "codesign/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <vector>

namespace codesign {

namespace {

// Tolerance for tightness tests against dual potentials; exact for
// integer-valued costs.
constexpr double kTightTol = 1e-9;

void validate_matrix(const LabeledCostMatrix& M) {
    const std::size_t k = M.labels.size();
    if (M.entries.size() != k) {
        throw ValidationError(ValidationError::Kind::not_square,
                              "cost matrix must be square over its labels");
    }
    for (const auto& row : M.entries) {
        if (row.size() != k) {
            throw ValidationError(ValidationError::Kind::not_square,
                                  "cost matrix must be square over its labels");
        }
    }
    std::set<std::string> seen(M.labels.begin(), M.labels.end());
    if (seen.size() != k) {
        throw ValidationError(ValidationError::Kind::invalid_label,
                              "cost matrix labels must be distinct");
    }
}

/// Shortest-augmenting-path Kuhn-Munkres with dual potentials. Infinite
/// entries never enter the alternating tree; an infinite minimum slack
/// means no perfect matching over finite entries exists.
struct HungarianCore {
    int k;
    const LabeledCostMatrix& M;
    std::vector<double> u, v;      // potentials, 1-based with sentinel 0
    std::vector<int> row_of_col;   // 1-based; 0 = unmatched
    bool feasible = true;

    explicit HungarianCore(const LabeledCostMatrix& mat)
        : k(static_cast<int>(mat.size())),
          M(mat),
          u(static_cast<std::size_t>(k) + 1, 0.0),
          v(static_cast<std::size_t>(k) + 1, 0.0),
          row_of_col(static_cast<std::size_t>(k) + 1, 0) {}

    void run() {
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> minv(static_cast<std::size_t>(k) + 1);
        std::vector<int> way(static_cast<std::size_t>(k) + 1, 0);
        std::vector<char> used(static_cast<std::size_t>(k) + 1);
        for (int i = 1; i <= k; ++i) {
            row_of_col[0] = i;
            int j0 = 0;
            std::fill(minv.begin(), minv.end(), inf);
            std::fill(used.begin(), used.end(), 0);
            do {
                used[static_cast<std::size_t>(j0)] = 1;
                const int i0 = row_of_col[static_cast<std::size_t>(j0)];
                int j1 = -1;
                double delta = inf;
                for (int j = 1; j <= k; ++j) {
                    if (used[static_cast<std::size_t>(j)]) continue;
                    const double c =
                        M.entries[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)]
                            .value();
                    const double cur = c - u[static_cast<std::size_t>(i0)] -
                                       v[static_cast<std::size_t>(j)];
                    if (cur < minv[static_cast<std::size_t>(j)]) {
                        minv[static_cast<std::size_t>(j)] = cur;
                        way[static_cast<std::size_t>(j)] = j0;
                    }
                    if (minv[static_cast<std::size_t>(j)] < delta) {
                        delta = minv[static_cast<std::size_t>(j)];
                        j1 = j;
                    }
                }
                if (j1 < 0 || std::isinf(delta)) {
                    feasible = false;
                    return;
                }
                for (int j = 0; j <= k; ++j) {
                    if (used[static_cast<std::size_t>(j)]) {
                        u[static_cast<std::size_t>(row_of_col[static_cast<std::size_t>(j)])] +=
                            delta;
                        v[static_cast<std::size_t>(j)] -= delta;
                    } else {
                        minv[static_cast<std::size_t>(j)] -= delta;
                    }
                }
                j0 = j1;
            } while (row_of_col[static_cast<std::size_t>(j0)] != 0);
            do {
                const int j1 = way[static_cast<std::size_t>(j0)];
                row_of_col[static_cast<std::size_t>(j0)] =
                    row_of_col[static_cast<std::size_t>(j1)];
                j0 = j1;
            } while (j0 != 0);
        }
    }
};

/// Rewrites an optimal assignment into the lexicographically smallest one
/// (by row, then column) among all minimum-cost assignments. Works on the
/// graph of tight edges under the final potentials: any perfect matching in
/// it attains the optimum.
void make_lexicographic(const LabeledCostMatrix& M, const std::vector<double>& u,
                        const std::vector<double>& v, std::vector<int>& col_of_row) {
    const int k = static_cast<int>(M.size());
    std::vector<std::vector<int>> tight(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            const double val =
                M.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].value();
            if (std::isinf(val)) continue;
            if (val - u[static_cast<std::size_t>(r + 1)] - v[static_cast<std::size_t>(c + 1)] <=
                kTightTol) {
                tight[static_cast<std::size_t>(r)].push_back(c);
            }
        }
        // The matched edge is tight by construction; keep it even if rounding
        // pushed its reduced cost past the tolerance.
        const int mc = col_of_row[static_cast<std::size_t>(r)];
        if (!std::binary_search(tight[static_cast<std::size_t>(r)].begin(),
                                tight[static_cast<std::size_t>(r)].end(), mc)) {
            tight[static_cast<std::size_t>(r)].push_back(mc);
            std::sort(tight[static_cast<std::size_t>(r)].begin(),
                      tight[static_cast<std::size_t>(r)].end());
        }
    }

    std::vector<int> row_of(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) row_of[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(r)])] = r;
    std::vector<char> frozen_row(static_cast<std::size_t>(k), 0);
    std::vector<char> frozen_col(static_cast<std::size_t>(k), 0);
    std::vector<char> visited(static_cast<std::size_t>(k), 0);

    std::function<bool(int, int)> rematch = [&](int row, int banned_row) -> bool {
        for (int c : tight[static_cast<std::size_t>(row)]) {
            if (frozen_col[static_cast<std::size_t>(c)] ||
                visited[static_cast<std::size_t>(c)]) {
                continue;
            }
            visited[static_cast<std::size_t>(c)] = 1;
            const int r2 = row_of[static_cast<std::size_t>(c)];
            if (r2 == -1 || (r2 != banned_row && !frozen_row[static_cast<std::size_t>(r2)] &&
                             rematch(r2, banned_row))) {
                row_of[static_cast<std::size_t>(c)] = row;
                col_of_row[static_cast<std::size_t>(row)] = c;
                return true;
            }
        }
        return false;
    };

    for (int r = 0; r < k; ++r) {
        const int c_cur = col_of_row[static_cast<std::size_t>(r)];
        for (int c : tight[static_cast<std::size_t>(r)]) {
            if (c >= c_cur) break;
            if (frozen_col[static_cast<std::size_t>(c)]) continue;
            const int r2 = row_of[static_cast<std::size_t>(c)];
            // Tentatively give column c to row r and ask the displaced row
            // to re-match; the only free column is r's previous one.
            col_of_row[static_cast<std::size_t>(r)] = c;
            row_of[static_cast<std::size_t>(c)] = r;
            col_of_row[static_cast<std::size_t>(r2)] = -1;
            row_of[static_cast<std::size_t>(c_cur)] = -1;
            std::fill(visited.begin(), visited.end(), 0);
            if (rematch(r2, r)) break;
            col_of_row[static_cast<std::size_t>(r)] = c_cur;
            row_of[static_cast<std::size_t>(c_cur)] = r;
            col_of_row[static_cast<std::size_t>(r2)] = c;
            row_of[static_cast<std::size_t>(c)] = r2;
        }
        frozen_row[static_cast<std::size_t>(r)] = 1;
        frozen_col[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(r)])] = 1;
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> AssignmentResult::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(labels.size());
    for (std::size_t r = 0; r < labels.size(); ++r) {
        out.emplace_back(labels[r], labels[static_cast<std::size_t>(col_of_row[r])]);
    }
    return out;
}

AssignmentResult solve_assignment(const LabeledCostMatrix& M) {
    validate_matrix(M);
    const int k = static_cast<int>(M.size());
    AssignmentResult result;
    result.labels = M.labels;
    result.col_of_row.assign(static_cast<std::size_t>(k), -1);
    result.total_cost = ExtendedCost(0.0);
    if (k == 0) return result;

    HungarianCore core(M);
    core.run();

    if (!core.feasible) {
        // No bijection over finite entries: complete the partial matching
        // arbitrarily and report infinite total cost.
        std::vector<char> col_used(static_cast<std::size_t>(k), 0);
        for (int j = 1; j <= k; ++j) {
            const int i = core.row_of_col[static_cast<std::size_t>(j)];
            if (i >= 1 && i <= k) {
                result.col_of_row[static_cast<std::size_t>(i - 1)] = j - 1;
                col_used[static_cast<std::size_t>(j - 1)] = 1;
            }
        }
        int next_free = 0;
        for (int r = 0; r < k; ++r) {
            if (result.col_of_row[static_cast<std::size_t>(r)] != -1) continue;
            while (col_used[static_cast<std::size_t>(next_free)]) ++next_free;
            result.col_of_row[static_cast<std::size_t>(r)] = next_free;
            col_used[static_cast<std::size_t>(next_free)] = 1;
        }
        result.total_cost = ExtendedCost::infinity();
        return result;
    }

    for (int j = 1; j <= k; ++j) {
        result.col_of_row[static_cast<std::size_t>(core.row_of_col[static_cast<std::size_t>(j)] -
                                                   1)] = j - 1;
    }
    make_lexicographic(M, core.u, core.v, result.col_of_row);

    ExtendedCost total;
    for (int r = 0; r < k; ++r) {
        total += M.entries[static_cast<std::size_t>(r)]
                          [static_cast<std::size_t>(result.col_of_row[static_cast<std::size_t>(r)])];
    }
    result.total_cost = total;
    return result;
}

std::vector<std::vector<std::string>> extract_cycles(const AssignmentResult& R) {
    const int k = static_cast<int>(R.labels.size());
    std::vector<char> visited(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<std::string>> cycles;
    for (int start = 0; start < k; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<std::string> cycle;
        int v = start;
        do {
            visited[static_cast<std::size_t>(v)] = 1;
            cycle.push_back(R.labels[static_cast<std::size_t>(v)]);
            v = R.col_of_row[static_cast<std::size_t>(v)];
        } while (v != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

}  // namespace codesign
