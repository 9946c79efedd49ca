#include "evictlab/invariants.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

namespace evictlab {

namespace {

// Greedy clique cover of the vertices in `cands`: an upper bound on the size
// of any independent subset of cands.
int clique_cover_upper_bound(const Graph& g, VertexSet cands) {
    int cliques = 0;
    while (!cands.empty()) {
        int v = cands.lowest();
        VertexSet clique = VertexSet::single(v);
        VertexSet extend = cands & g.neighbors(v);
        cands.reset(v);
        while (!extend.empty()) {
            int u = extend.lowest();
            clique.set(u);
            cands.reset(u);
            extend = extend & g.neighbors(u);
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const Graph& g;
    VertexSet best;

    void expand(VertexSet chosen, VertexSet cands) {
        if (chosen.count() + clique_cover_upper_bound(g, cands) <= best.count()) return;
        if (cands.empty()) {
            if (chosen.count() > best.count()) best = chosen;
            return;
        }
        int v = cands.lowest();
        expand(chosen.with(v), cands - g.closed_neighborhood(v));
        expand(chosen, cands.without(v));
    }
};

}  // namespace

std::pair<int, VertexSet> independence_number(const Graph& g) {
    MisSearch s{g, VertexSet()};
    s.expand(VertexSet(), g.vertices());
    return {s.best.count(), s.best};
}

int alpha_within(const Graph& g, VertexSet within) {
    MisSearch s{g, VertexSet()};
    s.expand(VertexSet(), within);
    return s.best.count();
}

namespace {

struct DominationSearch {
    const Graph& g;
    int best;
    VertexSet best_set;

    void expand(VertexSet chosen, VertexSet covered) {
        if (covered == g.vertices()) {
            if (chosen.count() < best) {
                best = chosen.count();
                best_set = chosen;
            }
            return;
        }
        if (chosen.count() + 1 >= best) return;
        int v = (g.vertices() - covered).lowest();
        for (int u : g.closed_neighborhood(v))
            expand(chosen.with(u), covered | g.closed_neighborhood(u));
    }
};

}  // namespace

std::pair<int, VertexSet> domination_number(const Graph& g) {
    // greedy start for the bound
    VertexSet greedy, covered;
    while (covered != g.vertices()) {
        int pick = -1, gain = -1;
        for (int v : g.vertices()) {
            int add = (g.closed_neighborhood(v) - covered).count();
            if (add > gain) gain = add, pick = v;
        }
        greedy.set(pick);
        covered = covered | g.closed_neighborhood(pick);
    }
    DominationSearch s{g, greedy.count(), greedy};
    s.expand(VertexSet(), VertexSet());
    assert(is_dominating_set(g, s.best_set));
    return {s.best, s.best_set};
}

namespace {

struct ColoringSearch {
    const Graph& g;
    int best;                           // best (fewest) color count found
    std::vector<int> color;             // current partial assignment, -1 = none
    std::vector<int> best_color;

    explicit ColoringSearch(const Graph& graph, int upper)
        : g(graph), best(upper), color(static_cast<size_t>(graph.size()), -1), best_color() {}

    int pick_vertex() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            std::uint64_t seen = 0;
            for (int u : g.neighbors(v))
                if (color[static_cast<size_t>(u)] >= 0) seen |= std::uint64_t{1} << color[static_cast<size_t>(u)];
            int sat = std::popcount(seen);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void expand(int colored, int used) {
        if (used >= best) return;
        if (colored == g.size()) {
            best = used;
            best_color = color;
            return;
        }
        int v = pick_vertex();
        std::uint64_t forbidden = 0;
        for (int u : g.neighbors(v))
            if (color[static_cast<size_t>(u)] >= 0) forbidden |= std::uint64_t{1} << color[static_cast<size_t>(u)];
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden >> c & 1) continue;
            color[static_cast<size_t>(v)] = c;
            expand(colored + 1, std::max(used, c + 1));
            color[static_cast<size_t>(v)] = -1;
        }
    }
};

// Greedy coloring in degree order, for the initial upper bound.
std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<int> color(static_cast<size_t>(g.size()), -1);
    for (int v : order) {
        std::uint64_t forbidden = 0;
        for (int u : g.neighbors(v))
            if (color[static_cast<size_t>(u)] >= 0) forbidden |= std::uint64_t{1} << color[static_cast<size_t>(u)];
        int c = 0;
        while (forbidden >> c & 1) ++c;
        color[static_cast<size_t>(v)] = c;
    }
    return color;
}

std::vector<VertexSet> classes_of(const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    std::vector<VertexSet> classes(static_cast<size_t>(k));
    for (size_t v = 0; v < color.size(); ++v) classes[static_cast<size_t>(color[v])].set(static_cast<int>(v));
    return classes;
}

}  // namespace

std::pair<int, std::vector<VertexSet>> chromatic_number(const Graph& g) {
    std::vector<int> greedy = greedy_coloring(g);
    int upper = 0;
    for (int c : greedy) upper = std::max(upper, c + 1);
    ColoringSearch s(g, upper + 1);
    s.best_color = greedy;
    s.best = upper;
    s.expand(0, 0);
    return {s.best, classes_of(s.best_color)};
}

std::pair<int, std::vector<VertexSet>> clique_cover_number(const Graph& g) {
    auto [chi, classes] = chromatic_number(complement(g));
    return {chi, classes};  // color classes of the complement are cliques here
}

std::pair<int, VertexSet> clique_number(const Graph& g) {
    return independence_number(complement(g));
}

bool Matching::is_matching() const {
    VertexSet seen;
    for (auto [u, v] : edges) {
        if (u == v || seen.test(u) || seen.test(v)) return false;
        seen.set(u).set(v);
    }
    return true;
}

namespace {

constexpr int matching_cap = 20;

// Value of a matching sub-solution: maximize covered targets, then minimize
// edge count. Packed so bigger is better.
struct MatchValue {
    int covered = 0;
    int edges = 0;
    bool better_than(const MatchValue& o) const {
        return covered != o.covered ? covered > o.covered : edges < o.edges;
    }
    bool operator==(const MatchValue& o) const = default;
};

struct MatchingDP {
    const Graph& g;
    VertexSet targets;
    std::vector<MatchValue> memo;
    std::vector<bool> seen;

    MatchingDP(const Graph& graph, VertexSet t)
        : g(graph), targets(t), memo(size_t{1} << graph.size()), seen(size_t{1} << graph.size()) {}

    int weight(int v) const { return targets.test(v) ? 1 : 0; }

    MatchValue solve(VertexSet avail) {
        if (avail.empty()) return {};
        size_t key = static_cast<size_t>(avail.bits());
        if (seen[key]) return memo[key];
        int v = avail.lowest();
        MatchValue best = solve(avail.without(v));  // v stays unmatched
        for (int u : (g.neighbors(v) & avail)) {
            MatchValue sub = solve(avail.without(v).without(u));
            MatchValue cand{sub.covered + weight(v) + weight(u), sub.edges + 1};
            if (cand.better_than(best)) best = cand;
        }
        seen[key] = true;
        memo[key] = best;
        return best;
    }

    // Greedy reconstruction: lowest vertex first, smallest partner first,
    // yielding the lexicographically smallest optimal edge list.
    Matching reconstruct() {
        Matching m;
        VertexSet avail = g.vertices();
        while (!avail.empty()) {
            int v = avail.lowest();
            MatchValue want = solve(avail);
            bool matched = false;
            for (int u : (g.neighbors(v) & avail)) {
                MatchValue sub = solve(avail.without(v).without(u));
                if (MatchValue{sub.covered + weight(v) + weight(u), sub.edges + 1} == want) {
                    m.edges.emplace_back(v, u);
                    avail = avail.without(v).without(u);
                    matched = true;
                    break;
                }
            }
            if (!matched) avail = avail.without(v);
        }
        return m;
    }
};

}  // namespace

Matching constrained_matching(const Graph& g, VertexSet targets) {
    if (!g.vertices().contains_all(targets)) throw ContractError("constrained_matching: targets not within graph");
    if (g.size() > matching_cap)
        throw CapacityError("constrained_matching: exact search capped at " + std::to_string(matching_cap) +
                            " vertices, got " + std::to_string(g.size()));
    MatchingDP dp(g, targets);
    Matching m = dp.reconstruct();
    assert(m.is_matching());
    return m;
}

Matching maximum_matching(const Graph& g) {
    return constrained_matching(g, g.vertices());
}

namespace {

struct AllMisSearch {
    const Graph& g;
    int target;
    std::vector<VertexSet>& out;

    void expand(VertexSet chosen, VertexSet cands) {
        if (chosen.count() == target) {
            out.push_back(chosen);
            return;
        }
        if (chosen.count() + clique_cover_upper_bound(g, cands) < target) return;
        int v = cands.lowest();
        expand(chosen.with(v), cands - g.closed_neighborhood(v));
        expand(chosen, cands.without(v));
    }
};

}  // namespace

std::vector<VertexSet> maximum_independent_sets(const Graph& g, VertexSet within) {
    if (within.empty()) return {};
    std::vector<VertexSet> out;
    AllMisSearch s{g, alpha_within(g, within), out};
    s.expand(VertexSet(), within);
    return out;
}

namespace {

bool pick_disjoint(const std::vector<VertexSet>& sets, size_t start, VertexSet used, int need,
                   std::vector<VertexSet>& chosen) {
    if (need == 0) return true;
    for (size_t i = start; i < sets.size() && sets.size() - i >= static_cast<size_t>(need); ++i) {
        if (sets[i].intersects(used)) continue;
        chosen.push_back(sets[i]);
        if (pick_disjoint(sets, i + 1, used | sets[i], need - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexSet>> disjoint_max_independent_sets(const Graph& g, int t) {
    if (t < 1) throw ContractError("disjoint_max_independent_sets: t must be >= 1");
    auto sets = maximum_independent_sets(g, g.vertices());
    int alpha = sets.empty() ? 0 : sets.front().count();
    if (static_cast<long>(t) * alpha > g.size()) return std::nullopt;  // not enough vertices
    std::vector<VertexSet> chosen;
    if (!pick_disjoint(sets, 0, VertexSet(), t, chosen)) return std::nullopt;
    return chosen;
}

int max_disjoint_mis_count(const Graph& g, VertexSet within) {
    auto sets = maximum_independent_sets(g, within);
    if (sets.empty()) return 0;
    int alpha = sets.front().count();
    int best = 1;
    for (int t = 2; static_cast<long>(t) * alpha <= within.count(); ++t) {
        std::vector<VertexSet> chosen;
        if (!pick_disjoint(sets, 0, VertexSet(), t, chosen)) break;
        best = t;
    }
    return best;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

bool is_cograph(const Graph& g) {
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    VertexSet quad = VertexSet::of({a, b, c, d});
                    int deg_sum = 0, deg1 = 0, deg2 = 0;
                    for (int v : quad) {
                        int deg = (g.neighbors(v) & quad).count();
                        deg_sum += deg;
                        deg1 += deg == 1;
                        deg2 += deg == 2;
                    }
                    if (deg_sum == 6 && deg1 == 2 && deg2 == 2) return false;  // induced P4
                }
    return true;
}

namespace {

std::vector<VertexSet> components_within(const Graph& g, VertexSet mask, bool complemented) {
    std::vector<VertexSet> comps;
    VertexSet left = mask;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) {
                VertexSet adj = complemented ? (mask - g.closed_neighborhood(v)) : (g.neighbors(v) & mask);
                next = next | adj;
            }
            frontier = next - comp;
            comp = comp | next;
        }
        comps.push_back(comp);
        left = left - comp;
    }
    return comps;
}

bool cograph_rec(const Graph& g, VertexSet mask) {
    if (mask.count() <= 1) return true;
    auto comps = components_within(g, mask, false);
    if (comps.size() > 1) {
        for (auto c : comps)
            if (!cograph_rec(g, c)) return false;
        return true;
    }
    auto cocomps = components_within(g, mask, true);
    if (cocomps.size() > 1) {
        for (auto c : cocomps)
            if (!cograph_rec(g, c)) return false;
        return true;
    }
    return false;
}

}  // namespace

bool is_cograph_by_construction(const Graph& g) {
    return cograph_rec(g, g.vertices());
}

ParamReport param_report(const Graph& g) {
    ParamReport r;
    std::tie(r.alpha, r.alpha_witness) = independence_number(g);
    std::tie(r.gamma, r.gamma_witness) = domination_number(g);
    std::tie(r.theta, r.theta_partition) = clique_cover_number(g);
    std::tie(r.omega, r.omega_witness) = clique_number(g);
    assert(is_independent_set(g, r.alpha_witness));
    assert(is_dominating_set(g, r.gamma_witness));
    assert(is_clique(g, r.omega_witness));
    assert(r.gamma <= r.alpha && r.alpha <= r.theta);
    return r;
}

std::string param_report_json(const ParamReport& r) {
    nlohmann::json j;
    auto list = [](VertexSet s) {
        std::vector<int> out;
        for (int v : s) out.push_back(v);
        return out;
    };
    j["alpha"] = r.alpha;
    j["gamma"] = r.gamma;
    j["theta"] = r.theta;
    j["omega"] = r.omega;
    j["alpha_witness"] = list(r.alpha_witness);
    j["gamma_witness"] = list(r.gamma_witness);
    j["omega_witness"] = list(r.omega_witness);
    j["theta_partition"] = nlohmann::json::array();
    for (auto cls : r.theta_partition) j["theta_partition"].push_back(list(cls));
    return j.dump();
}

}  // namespace evictlab
