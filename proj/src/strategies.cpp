#include "evictlab/strategies.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include <nlohmann/json.hpp>

namespace evictlab {

VertexSet RamseyArray::cells() const {
    VertexSet s;
    for (const auto& row : rows)
        for (int v : row) s.set(v);
    return s;
}

VertexSet RamseyArray::row_set(int i) const {
    VertexSet s;
    for (int v : rows[static_cast<size_t>(i)]) s.set(v);
    return s;
}

VertexSet RamseyArray::column_set(int j) const {
    VertexSet s;
    for (const auto& row : rows) s.set(row[static_cast<size_t>(j)]);
    return s;
}

int RamseyArray::column_of(int vertex) const {
    for (const auto& row : rows)
        for (int j = 0; j < k; ++j)
            if (row[static_cast<size_t>(j)] == vertex) return j;
    return -1;
}

bool RamseyArray::valid(const Graph& g, VertexSet region, std::string* why) const {
    auto bad = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(rows.size()) != k + 1) return bad("array must have k+1 rows");
    if (cells().count() != k * (k + 1)) return bad("cells must be distinct");
    if (!region.contains_all(cells())) return bad("cells must lie in the region");
    int alpha = alpha_within(g, region);
    if (alpha != k) return bad("k must equal the region's independence number");
    for (int i = 0; i <= k; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != k) return bad("row of wrong width");
        if (!is_independent_set(g, row_set(i))) return bad("row is not independent");
    }
    for (int j = 0; j < k; ++j)
        if (!is_clique(g, column_set(j))) return bad("column is not a clique");
    return true;
}

namespace {

// Arrange the chosen disjoint MIS into clique columns: build column j by
// picking one still-unused vertex per row, all pairwise adjacent.
struct ColumnSearch {
    const Graph& g;
    int k;
    std::vector<VertexSet> remaining;  // unused cells per row
    std::vector<std::vector<int>> columns;

    bool fill_column(int j, int row, VertexSet picked, std::vector<int>& col) {
        if (row == static_cast<int>(remaining.size())) {
            for (int i = 0; i <= k; ++i) {
                remaining[static_cast<size_t>(i)].reset(col[static_cast<size_t>(i)]);
                columns[static_cast<size_t>(i)].push_back(col[static_cast<size_t>(i)]);
            }
            if (j + 1 == k || next_column(j + 1)) return true;
            for (int i = 0; i <= k; ++i) {
                remaining[static_cast<size_t>(i)].set(col[static_cast<size_t>(i)]);
                columns[static_cast<size_t>(i)].pop_back();
            }
            return false;
        }
        for (int v : remaining[static_cast<size_t>(row)]) {
            if (!picked.empty() && !g.closed_neighborhood(v).contains_all(picked)) continue;
            col[static_cast<size_t>(row)] = v;
            if (fill_column(j, row + 1, picked.with(v), col)) return true;
        }
        return false;
    }

    bool next_column(int j) {
        std::vector<int> col(remaining.size());
        return fill_column(j, 0, VertexSet(), col);
    }
};

bool choose_rows(const std::vector<VertexSet>& sets, size_t start, VertexSet used,
                 std::vector<VertexSet>& rows, int need, const Graph& g, int k, RamseyArray& out) {
    if (need == 0) {
        ColumnSearch cs{g, k, rows, std::vector<std::vector<int>>(rows.size())};
        if (!cs.next_column(0)) return false;
        out.k = k;
        out.rows = cs.columns;
        return true;
    }
    for (size_t i = start; i < sets.size(); ++i) {
        if (sets[i].intersects(used)) continue;
        rows.push_back(sets[i]);
        if (choose_rows(sets, i + 1, used | sets[i], rows, need - 1, g, k, out)) return true;
        rows.pop_back();
    }
    return false;
}

}  // namespace

std::optional<RamseyArray> find_ramsey_array(const Graph& g) {
    return find_ramsey_array(g, g.vertices());
}

std::optional<RamseyArray> find_ramsey_array(const Graph& g, VertexSet within) {
    if (within.empty()) return std::nullopt;
    int k = alpha_within(g, within);
    if (static_cast<long>(k) * (k + 1) > within.count()) return std::nullopt;
    auto sets = maximum_independent_sets(g, within);
    RamseyArray out;
    std::vector<VertexSet> rows;
    if (!choose_rows(sets, 0, VertexSet(), rows, k + 1, g, k, out)) return std::nullopt;
    assert(out.valid(g, within));
    return out;
}

VertexSet ramsey_initial_configuration(const RamseyArray& a) {
    VertexSet c;
    for (int i = 0; i < a.k; ++i) c = c | a.row_set(i);
    return c;
}

VertexSet ramsey_defend(const RamseyArray& a, VertexSet config, int attack) {
    if (!a.cells().contains_all(config))
        throw ContractError("ramsey_defend: configuration has guards outside the array");
    for (int j = 0; j < a.k; ++j)
        if ((config & a.column_set(j)).count() != a.k)
            throw ContractError("ramsey_defend: column " + std::to_string(j) + " does not hold exactly k guards");
    if (!config.test(attack)) throw ContractError("ramsey_defend: attacked vertex is unoccupied");
    int j = a.column_of(attack);
    if (j < 0) throw ContractError("ramsey_defend: attacked vertex is outside the array");
    VertexSet open = a.column_set(j) - config;
    assert(open.count() == 1);  // k of k+1 cells occupied
    return config.without(attack).with(open.lowest());
}

int ramsey_domination_witness(const RamseyArray& a, VertexSet config) {
    for (int i = 0; i <= a.k; ++i)
        if (config.contains_all(a.row_set(i))) return i;
    throw std::logic_error("guard array pigeonhole failed: no fully occupied row");
}

bool MatchingState::invariant_ok(const Graph& g, std::string* why) const {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!matching.is_matching()) return bad("edge set is not a matching");
    for (auto [u, v] : matching.edges) {
        if (guards.test(u) == guards.test(v)) return bad("matching edge must hold exactly one guard");
        if (!g.adjacent(u, v)) return bad("matching uses a non-edge");
    }
    VertexSet covered = matching.covered();
    if (!region.contains_all(covered | targets)) return bad("region must hold targets and matched vertices");
    for (int z : (region - covered))
        if (!guards.test(z)) return bad("uncovered region vertex without a guard");
    if (!region.contains_all(guards)) return bad("guard outside the region");
    return true;
}

MatchingState matching_init(const Graph& g, VertexSet targets) {
    MatchingState st;
    st.matching = constrained_matching(g, targets);
    st.targets = targets;
    st.region = targets | st.matching.covered();
    for (auto [u, v] : st.matching.edges) {
        bool tu = targets.test(u), tv = targets.test(v);
        int pick = tu == tv ? std::min(u, v) : (tu ? u : v);
        st.guards.set(pick);
    }
    for (int z : (targets - st.matching.covered())) st.guards.set(z);
    assert(st.invariant_ok(g));
    return st;
}

MatchingState matching_defend(const MatchingState& st, const Graph& g, int attack,
                              VertexSet occupied_elsewhere) {
    if (!st.guards.test(attack)) throw ContractError("matching_defend: attacked vertex holds no guard here");
    VertexSet occupied = st.guards | occupied_elsewhere;
    MatchingState next = st;

    for (auto [u, v] : st.matching.edges) {
        if (u != attack && v != attack) continue;
        // covered guard: slide along the matching edge
        int partner = u == attack ? v : u;
        if (occupied.test(partner))
            throw ContractError("matching_defend: matched partner unexpectedly occupied");
        next.guards = st.guards.without(attack).with(partner);
        return next;
    }

    // uncovered guard; by construction it sits on a target vertex
    VertexSet open = g.neighbors(attack) - occupied;
    if (open.empty()) return next;  // surrounded: nothing to do
    VertexSet covered = st.matching.covered();
    int dest = -1;
    for (int x : open)
        if (covered.test(x)) {
            dest = x;
            break;
        }
    if (dest < 0)
        throw ContractError("matching_defend: unoccupied neighbour not covered by the matching; "
                            "the matching does not cover a maximum number of targets");
    int partner = -1;
    for (auto [u, v] : next.matching.edges) {
        if (u == dest) partner = v;
        if (v == dest) partner = u;
    }
    if (partner < 0 || !st.guards.test(partner))
        throw std::logic_error("matching state corrupt: covered destination lacks a guarded partner");
    // swap the matching edge at dest onto the attacked vertex
    auto& edges = next.matching.edges;
    std::erase_if(edges, [&](auto e) { return e.first == dest || e.second == dest; });
    edges.emplace_back(std::min(attack, dest), std::max(attack, dest));
    std::sort(edges.begin(), edges.end());
    next.guards = st.guards.without(attack).with(dest);
    // the defended region itself never changes
    return next;
}

VertexSet PeelingResult::removed_union() const {
    VertexSet s;
    for (auto r : removed) s = s | r;
    return s;
}

namespace {

constexpr int peel_cap = 14;

// Smallest subset of `within` whose removal drops alpha to target;
// lexicographically least among those of minimum size.
VertexSet minimum_alpha_deletion(const Graph& g, VertexSet within, int target) {
    std::vector<int> verts;
    for (int v : within) verts.push_back(v);
    for (int size = 1; size <= static_cast<int>(verts.size()); ++size) {
        VertexSet found;
        bool ok = false;
        auto rec = [&](auto&& self, size_t from, int left, VertexSet acc) -> void {
            if (ok) return;
            if (left == 0) {
                if (alpha_within(g, within - acc) == target) {
                    found = acc;
                    ok = true;
                }
                return;
            }
            for (size_t i = from; i + static_cast<size_t>(left) <= verts.size(); ++i)
                self(self, i + 1, left - 1, acc.with(verts[i]));
        };
        rec(rec, 0, size, VertexSet());
        if (ok) return found;
    }
    throw std::logic_error("minimum_alpha_deletion: no subset works");  // unreachable: remove all but a clique
}

}  // namespace

PeelingResult peel(const Graph& g, const std::function<int(int)>& surrogate) {
    auto threshold_of = [&](int a) { return surrogate ? surrogate(a) : a + 1; };
    if (g.size() > peel_cap)
        throw CapacityError("peel: exact deletion search capped at " + std::to_string(peel_cap) + " vertices");
    PeelingResult r;
    r.residual = g.vertices();
    int a = alpha_within(g, r.residual);
    if (a < 2) throw ContractError("peel: independence number must be at least 2");

    while (true) {
        int d = max_disjoint_mis_count(g, r.residual);
        int removed_total = r.removed_union().count();
        r.level = a;
        r.disjoint_mis_at_level = d;
        if (d >= threshold_of(a) + removed_total) {
            r.rule_fired = true;
            return r;
        }
        if (a == 1) return r;  // cascade exhausted without firing the rule

        VertexSet cut = minimum_alpha_deletion(g, r.residual, a - 1);
        // cascade caps: the union of a maximal disjoint-MIS packing is a
        // deletion set, and the rule just failed to fire
        assert(cut.count() <= a * d);
        assert(cut.count() < a * (threshold_of(a) + removed_total));
        r.removed.push_back(cut);
        r.residual = r.residual - cut;
        a -= 1;
        assert(alpha_within(g, r.residual) == a);
    }
}

std::optional<std::string> CompositeDefense::respond(const Graph& g, int attack) {
    if (!occupied().test(attack)) throw ContractError("composite: attacked vertex is unoccupied");
    if (array.cells().test(attack)) {
        VertexSet before = array_config;
        array_config = ramsey_defend(array, array_config, attack);
        VertexSet dest = array_config - before;
        if (!dest.empty() && matching.region.test(dest.lowest()))
            return "array guard moved into the matching region at vertex " + std::to_string(dest.lowest());
        return std::nullopt;
    }
    VertexSet before = matching.guards;
    matching = matching_defend(matching, g, attack, array_config);
    VertexSet dest = matching.guards - before;
    if (!dest.empty() && array.cells().test(dest.lowest()))
        return "matching guard moved into the array region at vertex " + std::to_string(dest.lowest());
    return std::nullopt;
}

std::optional<CompositeDefense> composite_defense(const Graph& g) {
    PeelingResult p;
    try {
        p = peel(g);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!p.rule_fired) return std::nullopt;

    VertexSet peeled = p.removed_union();
    MatchingState ms;
    try {
        ms = peeled.empty() ? MatchingState{} : matching_init(g, peeled);
    } catch (const Error&) {
        return std::nullopt;
    }
    VertexSet array_region = g.vertices() - (peeled | ms.region);
    auto arr = find_ramsey_array(g, array_region);
    if (!arr) return std::nullopt;

    CompositeDefense d;
    d.peeling = p;
    d.array = *arr;
    d.matching = ms;
    d.array_config = ramsey_initial_configuration(*arr);
    return d;
}

CompositeRun simulate_composite(const Graph& g, CompositeDefense& d, int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CompositeRun run;
    for (int i = 0; i < steps; ++i) {
        std::vector<int> occ;
        for (int v : d.occupied()) occ.push_back(v);
        int attack = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
        auto note = d.respond(g, attack);
        if (note) run.findings.push_back("step " + std::to_string(i) + ": " + *note);
        ++run.steps;
        if (!is_dominating_set(g, d.occupied()) && run.first_violation < 0) run.first_violation = i;
        std::string why;
        if (!d.matching.region.empty() && !d.matching.invariant_ok(g, &why))
            run.findings.push_back("step " + std::to_string(i) + ": matching invariant: " + why);
        ramsey_domination_witness(d.array, d.array_config);  // pigeonhole must hold every step
    }
    return run;
}

std::string ramsey_array_json(const RamseyArray& a) {
    nlohmann::json j;
    j["k"] = a.k;
    j["rows"] = a.rows;
    return j.dump();
}

std::string matching_state_json(const MatchingState& st) {
    nlohmann::json j;
    auto list = [](VertexSet s) {
        std::vector<int> out;
        for (int v : s) out.push_back(v);
        return out;
    };
    j["matching"] = nlohmann::json::array();
    for (auto [u, v] : st.matching.edges) j["matching"].push_back({u, v});
    j["region"] = list(st.region);
    j["targets"] = list(st.targets);
    j["guards"] = list(st.guards);
    return j.dump();
}

}  // namespace evictlab
