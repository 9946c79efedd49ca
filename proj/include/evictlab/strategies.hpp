#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evictlab/invariants.hpp"

namespace evictlab {

/*
 * The guard-array defense: a (k+1) x k array of distinct vertices whose rows
 * are maximum independent sets of the defended region and whose columns are
 * (k+1)-cliques. With k guards per column, an attacked guard always has the
 * unique unoccupied cell of its column to move to, and k^2 guards in k+1
 * rows always leave some row fully occupied, which dominates the region.
 */
struct RamseyArray {
    int k = 0;                           // row width = independence number
    std::vector<std::vector<int>> rows;  // k+1 rows; rows[i][j] sits in column j

    VertexSet cells() const;
    VertexSet row_set(int i) const;
    VertexSet column_set(int j) const;
    int column_of(int vertex) const;  // -1 when not a cell

    /// Rows independent and of maximum size within `region`, columns cliques,
    /// cells distinct.
    bool valid(const Graph& g, VertexSet region, std::string* why = nullptr) const;
};

/// Searches the subgraph induced by `within` (default: all of g) for a guard
/// array with k = alpha of that subgraph. Direct backtracking over disjoint
/// maximum independent sets and clique transversals; first solution in
/// lexicographic search order.
std::optional<RamseyArray> find_ramsey_array(const Graph& g);
std::optional<RamseyArray> find_ramsey_array(const Graph& g, VertexSet within);

/// k guards per column: rows 0..k-1 occupied, row k free.
VertexSet ramsey_initial_configuration(const RamseyArray& a);

/// The attacked guard relocates to the unique unoccupied cell of its column.
VertexSet ramsey_defend(const RamseyArray& a, VertexSet config, int attack);

/// Index of a fully occupied row (the pigeonhole row). Its absence under the
/// k-per-column precondition is a fatal internal error.
int ramsey_domination_witness(const RamseyArray& a, VertexSet config);

/*
 * The matching defense for the peeled-off region: keep exactly one guard on
 * each edge of a matching M that covers the most target vertices with the
 * fewest edges, and one guard on every target vertex M leaves uncovered.
 * Covered guards slide along their matching edge; uncovered guards step onto
 * a covered neighbour and the matching is swapped to keep the invariant.
 */
struct MatchingState {
    Matching matching;
    VertexSet region;   // targets plus matching endpoints
    VertexSet targets;  // the peeled set S
    VertexSet guards;

    bool invariant_ok(const Graph& g, std::string* why = nullptr) const;
};

MatchingState matching_init(const Graph& g, VertexSet targets);

/// occupied_elsewhere: guards outside this state (composite play); they block
/// destinations but never move here.
MatchingState matching_defend(const MatchingState& st, const Graph& g, int attack,
                              VertexSet occupied_elsewhere);

/*
 * Iterated minimum deletions, each lowering alpha by exactly one, until the
 * residual holds enough disjoint maximum independent sets: at residual
 * independence number a, "enough" is surrogate(a) + |removed so far|.
 */
struct PeelingResult {
    std::vector<VertexSet> removed;  // S_0, S_1, ... in original labels
    VertexSet residual;
    int level = 0;  // alpha of the residual where peeling stopped
    int disjoint_mis_at_level = 0;
    bool rule_fired = false;

    VertexSet removed_union() const;
};

/// surrogate defaults to a+1, the least packing that can host a guard array.
/// Requires alpha(g) >= 2 and at most 14 vertices (exact deletion search).
PeelingResult peel(const Graph& g, const std::function<int(int)>& surrogate = {});

/// Combined responder: guard-array defense on the residual region, matching
/// defense on the peeled region. Returns nullopt when the structural
/// preconditions fail (no peel rule, no array, nothing to defend).
struct CompositeDefense {
    PeelingResult peeling;
    RamseyArray array;
    MatchingState matching;
    VertexSet array_config;

    VertexSet occupied() const { return array_config | matching.guards; }

    /// Answers one attack; returns a note when the move left its region
    /// (logged by the harness as a finding, never silently accepted).
    std::optional<std::string> respond(const Graph& g, int attack);
};

std::optional<CompositeDefense> composite_defense(const Graph& g);

struct CompositeRun {
    long steps = 0;
    long first_violation = -1;  // step where domination failed, or -1
    std::vector<std::string> findings;
};

CompositeRun simulate_composite(const Graph& g, CompositeDefense& d, int steps, std::uint64_t seed);

std::string ramsey_array_json(const RamseyArray& a);
std::string matching_state_json(const MatchingState& st);

}  // namespace evictlab
