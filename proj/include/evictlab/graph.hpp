#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evictlab/core.hpp"

namespace evictlab {

/// Finite simple graph on at most 64 vertices, adjacency held as one
/// vertex-set per row. Symmetric and irreflexive by construction; treat as
/// immutable once built (add_edge exists for builders and the value-semantics
/// free function below).
class Graph {
public:
    explicit Graph(int n, std::string name = "");

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;

    /// Open neighborhood N(v).
    VertexSet neighbors(int v) const;
    /// Closed neighborhood N[v].
    VertexSet closed_neighborhood(int v) const;

    int degree(int v) const { return neighbors(v).count(); }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
    std::string name_;
};

/// Copy of g with edge uv added (no-op if already present).
Graph add_edge(const Graph& g, int u, int v);

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing vertex
/// order. If old_of_new is given it receives the original label of each new
/// vertex.
Graph induced(const Graph& g, VertexSet keep, std::vector<int>* old_of_new = nullptr);

/// Relabeled copy: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);

bool is_independent_set(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);
bool is_dominating_set(const Graph& g, VertexSet s);

}  // namespace evictlab
