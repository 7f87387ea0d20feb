#include "codesign/graph.hpp"

#include "codesign/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace codesign {

std::string to_label(const Vertex& v) {
    const char* prefix = v.kind == VertexKind::state ? "x"
                         : v.kind == VertexKind::input ? "u"
                                                       : "y";
    return prefix + std::to_string(v.index);
}

SystemDigraph::SystemDigraph(int n_states, int n_inputs, int n_outputs,
                             std::vector<std::pair<Vertex, Vertex>> edge_list)
    : n_(n_states), p_(n_inputs), m_(n_outputs) {
    if (n_ < 0 || p_ < 0 || m_ < 0) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "vertex counts must be non-negative");
    }
    adj_.assign(static_cast<std::size_t>(vertex_count()), {});
    for (const auto& [from, to] : edge_list) {
        adj_[static_cast<std::size_t>(id_of(from))].push_back(id_of(to));
    }
    for (auto& succ : adj_) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
}

std::size_t SystemDigraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& succ : adj_) total += succ.size();
    return total;
}

bool SystemDigraph::contains(const Vertex& v) const noexcept {
    switch (v.kind) {
        case VertexKind::state: return v.index >= 1 && v.index <= n_;
        case VertexKind::input: return v.index >= 1 && v.index <= p_;
        case VertexKind::output: return v.index >= 1 && v.index <= m_;
    }
    return false;
}

int SystemDigraph::id_of(const Vertex& v) const {
    if (!contains(v)) {
        throw ValidationError(ValidationError::Kind::unknown_vertex,
                              "vertex " + to_label(v) + " is not in the digraph");
    }
    switch (v.kind) {
        case VertexKind::state: return v.index - 1;
        case VertexKind::input: return n_ + v.index - 1;
        default: return n_ + p_ + v.index - 1;
    }
}

Vertex SystemDigraph::vertex_at(int id) const {
    if (id < n_) return state_vertex(id + 1);
    if (id < n_ + p_) return input_vertex(id - n_ + 1);
    return output_vertex(id - n_ - p_ + 1);
}

bool SystemDigraph::has_edge(const Vertex& from, const Vertex& to) const {
    const auto& succ = adj_[static_cast<std::size_t>(id_of(from))];
    return std::binary_search(succ.begin(), succ.end(), id_of(to));
}

std::vector<Vertex> SystemDigraph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (int id = 0; id < vertex_count(); ++id) out.push_back(vertex_at(id));
    return out;
}

std::vector<std::pair<Vertex, Vertex>> SystemDigraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (int id = 0; id < vertex_count(); ++id) {
        for (int to : adj_[static_cast<std::size_t>(id)]) {
            out.emplace_back(vertex_at(id), vertex_at(to));
        }
    }
    return out;
}

namespace {

void require_square(const SparsityPattern& A) {
    if (!A.is_square()) {
        throw ValidationError(ValidationError::Kind::not_square, "A must be square");
    }
}

void append_state_edges(const SparsityPattern& A,
                        std::vector<std::pair<Vertex, Vertex>>& edges) {
    for (const auto& [i, j] : A.nonzeros()) {
        edges.emplace_back(state_vertex(j), state_vertex(i));
    }
}

}  // namespace

SystemDigraph build_digraph(const SparsityPattern& A) {
    require_square(A);
    std::vector<std::pair<Vertex, Vertex>> edges;
    append_state_edges(A, edges);
    return SystemDigraph(A.rows(), 0, 0, std::move(edges));
}

SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B) {
    require_square(A);
    if (B.rows() != A.rows()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "B must have one row per state");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    append_state_edges(A, edges);
    for (const auto& [i, j] : B.nonzeros()) {
        edges.emplace_back(input_vertex(j), state_vertex(i));
    }
    return SystemDigraph(A.rows(), B.cols(), 0, std::move(edges));
}

SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B,
                            const SparsityPattern& C) {
    require_square(A);
    if (B.rows() != A.rows() || C.cols() != A.rows()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "B rows and C columns must match the state count");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    append_state_edges(A, edges);
    for (const auto& [i, j] : B.nonzeros()) {
        edges.emplace_back(input_vertex(j), state_vertex(i));
    }
    for (const auto& [i, j] : C.nonzeros()) {
        edges.emplace_back(state_vertex(j), output_vertex(i));
    }
    return SystemDigraph(A.rows(), B.cols(), C.rows(), std::move(edges));
}

SystemDigraph build_digraph(const SparsityPattern& A, const SparsityPattern& B,
                            const SparsityPattern& C, const SparsityPattern& K) {
    require_square(A);
    if (B.rows() != A.rows() || C.cols() != A.rows()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "B rows and C columns must match the state count");
    }
    if (K.rows() != B.cols() || K.cols() != C.rows()) {
        throw ValidationError(ValidationError::Kind::dimension_mismatch,
                              "K must be inputs-by-outputs");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    append_state_edges(A, edges);
    for (const auto& [i, j] : B.nonzeros()) {
        edges.emplace_back(input_vertex(j), state_vertex(i));
    }
    for (const auto& [i, j] : C.nonzeros()) {
        edges.emplace_back(state_vertex(j), output_vertex(i));
    }
    for (const auto& [i, j] : K.nonzeros()) {
        edges.emplace_back(output_vertex(j), input_vertex(i));
    }
    return SystemDigraph(A.rows(), B.cols(), C.rows(), std::move(edges));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const SystemDigraph& D) {
    const int V = D.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(V), -1);
    std::vector<int> low(static_cast<std::size_t>(V), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(V), 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    for (int root = 0; root < V; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<std::pair<int, std::size_t>> frames;
        frames.emplace_back(root, 0);
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] =
            next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;

        while (!frames.empty()) {
            const int v = frames.back().first;
            const std::size_t ci = frames.back().second;
            const auto& succ = D.successors_of(v);
            if (ci < succ.size()) {
                ++frames.back().second;
                const int w = succ[ci];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] = std::min(
                        low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    comps.push_back(std::move(comp));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().first;
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)],
                                 low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }

    for (auto& comp : comps) std::sort(comp.begin(), comp.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<std::vector<Vertex>> out;
    out.reserve(comps.size());
    for (const auto& comp : comps) {
        std::vector<Vertex> vs;
        vs.reserve(comp.size());
        for (int id : comp) vs.push_back(D.vertex_at(id));
        out.push_back(std::move(vs));
    }
    return out;
}

bool is_irreducible(const SparsityPattern& A) {
    require_square(A);
    return strongly_connected_components(build_digraph(A)).size() == 1;
}

std::set<Vertex> reachable_from(const SystemDigraph& D, const std::set<Vertex>& sources) {
    std::vector<char> seen(static_cast<std::size_t>(D.vertex_count()), 0);
    std::deque<int> frontier;
    for (const Vertex& v : sources) {
        const int id = D.id_of(v);  // throws on unknown vertex
        if (!seen[static_cast<std::size_t>(id)]) {
            seen[static_cast<std::size_t>(id)] = 1;
            frontier.push_back(id);
        }
    }
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop_front();
        for (int w : D.successors_of(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                frontier.push_back(w);
            }
        }
    }
    std::set<Vertex> out;
    for (int id = 0; id < D.vertex_count(); ++id) {
        if (seen[static_cast<std::size_t>(id)]) out.insert(D.vertex_at(id));
    }
    return out;
}

namespace {

/// Hopcroft-Karp over 0-based index adjacency. Left adjacency lists must be
/// sorted; the result is deterministic for a fixed input.
class HopcroftKarp {
public:
    HopcroftKarp(int left_count, int right_count, std::vector<std::vector<int>> adj)
        : L_(left_count), R_(right_count), adj_(std::move(adj)) {}

    /// Returns match_of_left (size L, -1 when unmatched).
    std::vector<int> solve() {
        match_l_.assign(static_cast<std::size_t>(L_), -1);
        match_r_.assign(static_cast<std::size_t>(R_), -1);
        dist_.assign(static_cast<std::size_t>(L_), 0);
        while (bfs()) {
            for (int l = 0; l < L_; ++l) {
                if (match_l_[static_cast<std::size_t>(l)] == -1) dfs(l);
            }
        }
        return match_l_;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::deque<int> q;
        for (int l = 0; l < L_; ++l) {
            if (match_l_[static_cast<std::size_t>(l)] == -1) {
                dist_[static_cast<std::size_t>(l)] = 0;
                q.push_back(l);
            } else {
                dist_[static_cast<std::size_t>(l)] = kInf;
            }
        }
        bool found_free = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop_front();
            for (int r : adj_[static_cast<std::size_t>(l)]) {
                const int l2 = match_r_[static_cast<std::size_t>(r)];
                if (l2 == -1) {
                    found_free = true;
                } else if (dist_[static_cast<std::size_t>(l2)] == kInf) {
                    dist_[static_cast<std::size_t>(l2)] =
                        dist_[static_cast<std::size_t>(l)] + 1;
                    q.push_back(l2);
                }
            }
        }
        return found_free;
    }

    bool dfs(int l) {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            const int l2 = match_r_[static_cast<std::size_t>(r)];
            if (l2 == -1 || (dist_[static_cast<std::size_t>(l2)] ==
                                 dist_[static_cast<std::size_t>(l)] + 1 &&
                             dfs(l2))) {
                match_l_[static_cast<std::size_t>(l)] = r;
                match_r_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(l)] = kInf;
        return false;
    }

    int L_;
    int R_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_;
    std::vector<int> match_r_;
    std::vector<int> dist_;
};

}  // namespace

std::vector<std::pair<std::string, std::string>> max_bipartite_matching(
    const BipartiteGraph& G) {
    std::unordered_map<std::string, int> lidx, ridx;
    for (std::size_t k = 0; k < G.left.size(); ++k) {
        if (!lidx.emplace(G.left[k], static_cast<int>(k)).second) {
            throw ValidationError(ValidationError::Kind::invalid_label,
                                  "duplicate left label " + G.left[k]);
        }
    }
    for (std::size_t k = 0; k < G.right.size(); ++k) {
        if (!ridx.emplace(G.right[k], static_cast<int>(k)).second) {
            throw ValidationError(ValidationError::Kind::invalid_label,
                                  "duplicate right label " + G.right[k]);
        }
    }
    std::vector<std::vector<int>> adj(G.left.size());
    for (const auto& [l, r] : G.edges) {
        auto li = lidx.find(l);
        auto ri = ridx.find(r);
        if (li == lidx.end() || ri == ridx.end()) {
            throw ValidationError(ValidationError::Kind::unknown_vertex,
                                  "edge references unknown label");
        }
        adj[static_cast<std::size_t>(li->second)].push_back(ri->second);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    auto match = HopcroftKarp(static_cast<int>(G.left.size()),
                              static_cast<int>(G.right.size()), std::move(adj))
                     .solve();
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t l = 0; l < match.size(); ++l) {
        if (match[l] != -1) {
            out.emplace_back(G.left[l], G.right[static_cast<std::size_t>(match[l])]);
        }
    }
    return out;
}

std::optional<std::vector<std::vector<Vertex>>> spanning_cycle_family(const SystemDigraph& D) {
    const int V = D.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
        adj[static_cast<std::size_t>(v)] = D.successors_of(v);
        // Unused non-state vertices may sit out of the cycle family; a
        // zero-cost self-pair models that in the matching formulation.
        if (D.vertex_at(v).kind != VertexKind::state) {
            adj[static_cast<std::size_t>(v)].push_back(v);
            std::sort(adj[static_cast<std::size_t>(v)].begin(),
                      adj[static_cast<std::size_t>(v)].end());
            adj[static_cast<std::size_t>(v)].erase(
                std::unique(adj[static_cast<std::size_t>(v)].begin(),
                            adj[static_cast<std::size_t>(v)].end()),
                adj[static_cast<std::size_t>(v)].end());
        }
    }
    auto match = HopcroftKarp(V, V, std::move(adj)).solve();
    for (int v = 0; v < V; ++v) {
        if (match[static_cast<std::size_t>(v)] == -1) return std::nullopt;
    }
    std::vector<char> visited(static_cast<std::size_t>(V), 0);
    std::vector<std::vector<Vertex>> cycles;
    for (int start = 0; start < V; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int v = start;
        do {
            visited[static_cast<std::size_t>(v)] = 1;
            cycle.push_back(v);
            v = match[static_cast<std::size_t>(v)];
        } while (v != start);
        if (cycle.size() == 1 && D.vertex_at(cycle.front()).kind != VertexKind::state) {
            continue;  // artificial self-pair of an unused input/output
        }
        std::vector<Vertex> vs;
        vs.reserve(cycle.size());
        for (int id : cycle) vs.push_back(D.vertex_at(id));
        cycles.push_back(std::move(vs));
    }
    return cycles;
}

bool has_spanning_cycle_family(const SystemDigraph& D) {
    return spanning_cycle_family(D).has_value();
}

}  // namespace codesign
