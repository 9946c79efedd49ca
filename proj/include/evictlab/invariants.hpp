#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "evictlab/graph.hpp"

namespace evictlab {

/// Exact independence number with a witness set. Branch and bound with a
/// greedy clique-cover upper bound.
std::pair<int, VertexSet> independence_number(const Graph& g);

/// Independence number of the subgraph induced by `within`.
int alpha_within(const Graph& g, VertexSet within);

/// Exact domination number with a witness set.
std::pair<int, VertexSet> domination_number(const Graph& g);

/// Exact chromatic number with a witness proper coloring (color classes),
/// DSATUR-ordered branch and bound.
std::pair<int, std::vector<VertexSet>> chromatic_number(const Graph& g);

/// Exact clique cover number theta = chi(complement), with a witness
/// partition of V into cliques.
std::pair<int, std::vector<VertexSet>> clique_cover_number(const Graph& g);

/// Exact clique number omega = alpha(complement).
std::pair<int, VertexSet> clique_number(const Graph& g);

struct Matching {
    std::vector<std::pair<int, int>> edges;  // sorted pairs, sorted list

    VertexSet covered() const {
        VertexSet s;
        for (auto [u, v] : edges) s.set(u).set(v);
        return s;
    }
    int size() const { return static_cast<int>(edges.size()); }
    bool is_matching() const;
};

/// Among matchings covering the most vertices of `targets`, returns one with
/// the fewest edges; ties broken by lexicographically smallest edge list.
/// Exact subset DP; graphs over 20 vertices are rejected.
Matching constrained_matching(const Graph& g, VertexSet targets);

/// Maximum matching = constrained_matching over all vertices.
Matching maximum_matching(const Graph& g);

/// All maximum independent sets of the subgraph induced by `within`,
/// in lexicographic order. "Maximum" is relative to the induced subgraph.
std::vector<VertexSet> maximum_independent_sets(const Graph& g, VertexSet within);

/// t pairwise-disjoint maximum independent sets (size alpha(g) each), or
/// nullopt. Exact backtracking over the MIS list; lexicographically first
/// solution.
std::optional<std::vector<VertexSet>> disjoint_max_independent_sets(const Graph& g, int t);

/// Largest t for which the above succeeds (within `within`).
int max_disjoint_mis_count(const Graph& g, VertexSet within);

bool is_triangle_free(const Graph& g);

/// No induced P4, decided by scanning vertex quadruples.
bool is_cograph(const Graph& g);

/// Same predicate via the closure characterization: single vertices are
/// cographs, and a graph is one iff it or its complement is disconnected
/// into cograph parts. Kept as an independent route for cross-checking.
bool is_cograph_by_construction(const Graph& g);

struct ParamReport {
    int alpha = 0, gamma = 0, theta = 0, omega = 0;
    VertexSet alpha_witness, gamma_witness, omega_witness;
    std::vector<VertexSet> theta_partition;
};

/// alpha, gamma, theta, omega with verified witnesses.
ParamReport param_report(const Graph& g);

std::string param_report_json(const ParamReport& r);

}  // namespace evictlab
