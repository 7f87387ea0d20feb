#pragma once

#include "codesign/sparsity_pattern.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace codesign {

enum class VertexKind { state, input, output };

/// A labeled digraph vertex: x_i, u_i or y_i. Ordering is states first,
/// then inputs, then outputs, each by ascending index.
struct Vertex {
    VertexKind kind;
    int index;  // 1-based within its kind

    auto operator<=>(const Vertex&) const = default;
};

std::string to_label(const Vertex& v);

inline Vertex state_vertex(int i) { return Vertex{VertexKind::state, i}; }
inline Vertex input_vertex(int i) { return Vertex{VertexKind::input, i}; }
inline Vertex output_vertex(int i) { return Vertex{VertexKind::output, i}; }

/// Digraph of a (possibly closed-loop) structural system. Edges follow the
/// transposed index convention: a nonzero A(i,j) yields the edge x_j -> x_i,
/// and likewise for the B, C and K blocks. Immutable after construction.
class SystemDigraph {
public:
    SystemDigraph(int n_states, int n_inputs, int n_outputs,
                  std::vector<std::pair<Vertex, Vertex>> edge_list = {});

    int state_count() const noexcept { return n_; }
    int input_count() const noexcept { return p_; }
    int output_count() const noexcept { return m_; }
    int vertex_count() const noexcept { return n_ + p_ + m_; }
    std::size_t edge_count() const noexcept;

    bool contains(const Vertex& v) const noexcept;
    bool has_edge(const Vertex& from, const Vertex& to) const;

    std::vector<Vertex> vertices() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Dense 0-based ids: states, then inputs, then outputs.
    int id_of(const Vertex& v) const;  // throws on unknown vertex
    Vertex vertex_at(int id) const;
    const std::vector<int>& successors_of(int id) const { return adj_[id]; }

private:
    int n_;
    int p_;
    int m_;
    std::vector<std::vector<int>> adj_;  // sorted, unique
};

SystemDigraph build_digraph(const SparsityPattern& A);
SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B);
SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B,
                            const SparsityPattern& C);
SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B,
                            const SparsityPattern& C, const SparsityPattern& K);

/// Maximal strongly connected components; components and their members are
/// sorted by smallest contained label.
std::vector<std::vector<Vertex>> strongly_connected_components(const SystemDigraph& D);

/// True iff the digraph of a square pattern is a single SCC.
bool is_irreducible(const SparsityPattern& A);

/// Vertices reachable from the sources by directed paths of length >= 0.
std::set<Vertex> reachable_from(const SystemDigraph& D, const std::set<Vertex>& sources);

/// Bipartite graph over distinct string labels. The left/right label order
/// fixes tie-breaking for the matching routines.
struct BipartiteGraph {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::set<std::pair<std::string, std::string>> edges;
};

/// Maximum-cardinality matching (Hopcroft-Karp), deterministic under the
/// graph's label order. Returned edges are sorted by left label order.
std::vector<std::pair<std::string, std::string>> max_bipartite_matching(
    const BipartiteGraph& G);

/// True iff some disjoint union of cycles of D covers all state vertices.
/// Non-state vertices may be left out of the cycles.
bool has_spanning_cycle_family(const SystemDigraph& D);

/// The cycles of one such family (self-pairs of unused non-state vertices
/// dropped), or nullopt when no family exists. Each cycle starts at its
/// smallest vertex; cycles are ordered by smallest vertex.
std::optional<std::vector<std::vector<Vertex>>> spanning_cycle_family(const SystemDigraph& D);

}  // namespace codesign
