#pragma once

#include "codesign/graph.hpp"
#include "codesign/sparsity_pattern.hpp"

#include <utility>
#include <vector>

namespace codesign {

/// Outcome of the structurally-fixed-mode test, with certificates.
///
/// `no_sfms` is true iff both conditions hold:
///   a) every state vertex lies in an SCC of the closed-loop digraph that
///      contains a feedback edge (both endpoints inside the SCC);
///   b) a disjoint union of cycles covers all state vertices.
struct SfmWitness {
    enum class Failure { none, feedback_scc_coverage, spanning_cycle_family };

    bool no_sfms = false;
    Failure failure = Failure::none;
    bool condition_a_holds = false;
    bool condition_b_holds = false;

    /// State vertices in no feedback-carrying SCC (condition a failures).
    std::vector<Vertex> uncovered_states;

    /// On success: the SCCs carrying feedback edges that jointly cover all
    /// states, one feedback edge per SCC, and one spanning cycle family.
    std::vector<std::vector<Vertex>> certified_sccs;
    std::vector<std::pair<Vertex, Vertex>> certified_feedback_edges;
    std::vector<std::vector<Vertex>> cycle_family;
};

/// Structurally-fixed-mode test for the closed loop (A, B, C, K).
SfmWitness has_no_sfms(const SparsityPattern& A, const SparsityPattern& B,
                       const SparsityPattern& C, const SparsityPattern& K);

/// True iff every state is reachable from some input and the bipartite graph
/// of [A B] nonzeros matches all n state rows (generic rank n).
bool is_structurally_controllable(const SparsityPattern& A, const SparsityPattern& B);

/// Dual of controllability under transposition.
bool is_structurally_observable(const SparsityPattern& A, const SparsityPattern& C);

}  // namespace codesign
