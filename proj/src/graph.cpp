#include "evictlab/graph.hpp"

#include <algorithm>

namespace evictlab {

Graph::Graph(int n, std::string name) : n_(n), adj_(), name_(std::move(name)) {
    if (n < 1) throw ContractError("graph needs at least one vertex");
    if (n > max_vertices) throw CapacityError("graph capacity is 64 vertices, got " + std::to_string(n));
    adj_.assign(static_cast<size_t>(n), VertexSet());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ContractError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractError("loop edge " + std::to_string(u) + "-" + std::to_string(v) + " rejected");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<size_t>(u)].test(v);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const {
    return neighbors(v).with(v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph add_edge(const Graph& g, int u, int v) {
    Graph h = g;
    h.add_edge(u, v);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.size(), g.name().empty() ? "" : g.name() + "~");
    for (int u = 0; u < g.size(); ++u)
        for (int v : (g.vertices() - g.closed_neighborhood(u)))
            if (u < v) h.add_edge(u, v);
    return h;
}

Graph induced(const Graph& g, VertexSet keep, std::vector<int>* old_of_new) {
    if (!g.vertices().contains_all(keep)) throw ContractError("induced: vertex set not within graph");
    if (keep.empty()) throw ContractError("induced: empty vertex set");
    std::vector<int> old_labels;
    for (int v : keep) old_labels.push_back(v);
    Graph h(static_cast<int>(old_labels.size()));
    for (size_t i = 0; i < old_labels.size(); ++i)
        for (size_t j = i + 1; j < old_labels.size(); ++j)
            if (g.adjacent(old_labels[i], old_labels[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_of_new) *old_of_new = std::move(old_labels);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.size()) throw ContractError("relabel: permutation size mismatch");
    Graph h(g.size(), g.name());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

bool is_connected(const Graph& g) {
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == g.vertices();
}

bool is_independent_set(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!g.closed_neighborhood(v).contains_all(s)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, VertexSet s) {
    VertexSet covered;
    for (int v : s) covered = covered | g.closed_neighborhood(v);
    return covered == g.vertices();
}

}  // namespace evictlab
