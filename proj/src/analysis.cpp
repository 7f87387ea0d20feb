#include "codesign/analysis.hpp"

#include "codesign/errors.hpp"

#include <algorithm>
#include <string>

namespace codesign {

SfmWitness has_no_sfms(const SparsityPattern& A, const SparsityPattern& B,
                       const SparsityPattern& C, const SparsityPattern& K) {
    const SystemDigraph D = build_digraph(A, B, C, K);
    const int n = D.state_count();

    SfmWitness w;

    // Condition a: every state sits in an SCC that contains a feedback edge.
    const auto sccs = strongly_connected_components(D);
    std::vector<int> comp_of(static_cast<std::size_t>(D.vertex_count()), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        for (const Vertex& v : sccs[c]) {
            comp_of[static_cast<std::size_t>(D.id_of(v))] = static_cast<int>(c);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> feedback_edge_of(sccs.size(),
                                                            {Vertex{}, Vertex{}});
    std::vector<char> comp_has_feedback(sccs.size(), 0);
    for (const auto& [i, j] : K.nonzeros()) {
        const Vertex from = output_vertex(j);
        const Vertex to = input_vertex(i);
        const int cf = comp_of[static_cast<std::size_t>(D.id_of(from))];
        const int ct = comp_of[static_cast<std::size_t>(D.id_of(to))];
        if (cf == ct && !comp_has_feedback[static_cast<std::size_t>(cf)]) {
            comp_has_feedback[static_cast<std::size_t>(cf)] = 1;
            feedback_edge_of[static_cast<std::size_t>(cf)] = {from, to};
        }
    }
    std::vector<char> comp_certified(sccs.size(), 0);
    for (int s = 1; s <= n; ++s) {
        const int c = comp_of[static_cast<std::size_t>(D.id_of(state_vertex(s)))];
        if (comp_has_feedback[static_cast<std::size_t>(c)]) {
            comp_certified[static_cast<std::size_t>(c)] = 1;
        } else {
            w.uncovered_states.push_back(state_vertex(s));
        }
    }
    w.condition_a_holds = w.uncovered_states.empty();

    // Condition b: disjoint cycles covering all states.
    auto family = spanning_cycle_family(D);
    w.condition_b_holds = family.has_value();

    w.no_sfms = w.condition_a_holds && w.condition_b_holds;
    if (!w.condition_a_holds) {
        w.failure = SfmWitness::Failure::feedback_scc_coverage;
    } else if (!w.condition_b_holds) {
        w.failure = SfmWitness::Failure::spanning_cycle_family;
    }
    if (w.no_sfms) {
        for (std::size_t c = 0; c < sccs.size(); ++c) {
            if (comp_certified[c]) {
                w.certified_sccs.push_back(sccs[c]);
                w.certified_feedback_edges.push_back(feedback_edge_of[c]);
            }
        }
        w.cycle_family = std::move(*family);
    }
    return w;
}

bool is_structurally_controllable(const SparsityPattern& A, const SparsityPattern& B) {
    const SystemDigraph D = build_digraph(A, B);  // validates dimensions
    const int n = A.rows();
    const int p = B.cols();

    // Accessibility: every state reachable from some input.
    std::set<Vertex> sources;
    for (int i = 1; i <= p; ++i) sources.insert(input_vertex(i));
    const auto reached = reachable_from(D, sources);
    for (int s = 1; s <= n; ++s) {
        if (!reached.count(state_vertex(s))) return false;
    }

    // Generic rank: match every state row of [A B] to a distinct column.
    BipartiteGraph G;
    for (int i = 1; i <= n; ++i) G.left.push_back("r" + std::to_string(i));
    for (int j = 1; j <= n; ++j) G.right.push_back("a" + std::to_string(j));
    for (int j = 1; j <= p; ++j) G.right.push_back("b" + std::to_string(j));
    for (const auto& [i, j] : A.nonzeros()) {
        G.edges.emplace("r" + std::to_string(i), "a" + std::to_string(j));
    }
    for (const auto& [i, j] : B.nonzeros()) {
        G.edges.emplace("r" + std::to_string(i), "b" + std::to_string(j));
    }
    return max_bipartite_matching(G).size() == static_cast<std::size_t>(n);
}

bool is_structurally_observable(const SparsityPattern& A, const SparsityPattern& C) {
    if (!A.is_square() || C.cols() != A.rows()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "C must have one column per state");
    }
    return is_structurally_controllable(A.transposed(), C.transposed());
}

}  // namespace codesign
