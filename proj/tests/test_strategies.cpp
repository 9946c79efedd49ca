#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evictlab/family.hpp"
#include "evictlab/strategies.hpp"

using namespace evictlab;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.4) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Oracle: smallest deletion set reaching the target alpha, by subset scan.
int min_deletion_brute(const Graph& g, VertexSet within, int target) {
    for (int size = 1; size <= within.count(); ++size) {
        std::vector<int> verts;
        for (int v : within) verts.push_back(v);
        bool found = false;
        auto rec = [&](auto&& self, size_t from, int left, VertexSet acc) -> void {
            if (found) return;
            if (left == 0) {
                if (alpha_within(g, within - acc) == target) found = true;
                return;
            }
            for (size_t i = from; i < verts.size(); ++i) self(self, i + 1, left - 1, acc.with(verts[i]));
        };
        rec(rec, 0, size, VertexSet());
        if (found) return size;
    }
    return -1;
}

Graph composite_fixture() {
    // two K4 copies with an extra vertex pending on one vertex of each
    Graph g = generate("union(2*complete:4,empty:1)");
    g.add_edge(0, 8);
    g.add_edge(4, 8);
    return g;
}

}  // namespace

TEST_CASE("guard array on disjoint cliques") {
    for (int k = 2; k <= 3; ++k) {
        Graph g = generate(std::to_string(k) + "*complete:" + std::to_string(k + 1));
        auto arr = find_ramsey_array(g);
        REQUIRE(arr.has_value());
        CHECK(arr->k == k);
        std::string why;
        CHECK(arr->valid(g, g.vertices(), &why));
        // columns are the clique copies, rows pick one vertex per copy
        for (int j = 0; j < k; ++j) CHECK(is_clique(g, arr->column_set(j)));
        for (int i = 0; i <= k; ++i) CHECK(is_independent_set(g, arr->row_set(i)));
    }
}

TEST_CASE("no guard array on C7 or K1") {
    CHECK_FALSE(find_ramsey_array(make_cycle(7)).has_value());  // needs 4 disjoint MIS, only 2 exist
    CHECK_FALSE(find_ramsey_array(make_complete(1)).has_value());
}

TEST_CASE("the k = 1 array is a single edge") {
    Graph k2 = make_complete(2);
    auto arr = find_ramsey_array(k2);
    REQUIRE(arr.has_value());
    CHECK(arr->k == 1);
    CHECK(arr->cells() == VertexSet::of({0, 1}));
    VertexSet config = ramsey_initial_configuration(*arr);
    CHECK(config.count() == 1);  // k^2 = 1 guard, occupying one row
    CHECK(ramsey_domination_witness(*arr, config) == 0);
    VertexSet next = ramsey_defend(*arr, config, config.lowest());
    CHECK(next.count() == 1);
    CHECK(next != config);
}

TEST_CASE("array defense moves stay in the column") {
    Graph g = generate("3*complete:4");
    auto arr = find_ramsey_array(g);
    REQUIRE(arr.has_value());
    VertexSet config = ramsey_initial_configuration(*arr);
    CHECK(config.count() == arr->k * arr->k);

    int attack = config.lowest();
    int col = arr->column_of(attack);
    VertexSet next = ramsey_defend(*arr, config, attack);
    VertexSet dest = next - config;
    REQUIRE(dest.count() == 1);
    CHECK(arr->column_of(dest.lowest()) == col);
    CHECK_FALSE(config.test(dest.lowest()));  // destination was unoccupied

    // attacking the moved guard again permutes the same column
    VertexSet again = ramsey_defend(*arr, next, dest.lowest());
    CHECK(arr->column_of((again - next).lowest()) == col);
    CHECK((again - next).lowest() == attack);  // only free cell is the one just vacated

    CHECK_THROWS_AS(ramsey_defend(*arr, config, (g.vertices() - config).lowest()), ContractError);
    // guard shifted across columns: the per-column count precondition fails
    int other_free = (arr->column_set((col + 1) % arr->k) - config).lowest();
    VertexSet malformed = config.without(attack).with(other_free);
    CHECK_THROWS_AS(ramsey_defend(*arr, malformed, other_free), ContractError);
}

TEST_CASE("random attack play keeps a full row") {
    for (int k = 2; k <= 3; ++k) {
        Graph g = generate(std::to_string(k) + "*complete:" + std::to_string(k + 1));
        auto arr = find_ramsey_array(g);
        REQUIRE(arr.has_value());
        VertexSet config = ramsey_initial_configuration(*arr);
        std::mt19937_64 rng(17);
        for (int step = 0; step < 10000; ++step) {
            std::vector<int> occ;
            for (int v : config) occ.push_back(v);
            int attack = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
            config = ramsey_defend(*arr, config, attack);
            int row = ramsey_domination_witness(*arr, config);
            CHECK(config.contains_all(arr->row_set(row)));
            CHECK(is_dominating_set(g, config));
        }
    }
}

TEST_CASE("matching initialization") {
    // single edge region: one guard on one endpoint
    Graph k2 = make_complete(2);
    MatchingState st = matching_init(k2, VertexSet::of({0, 1}));
    CHECK(st.matching.size() == 1);
    CHECK(st.guards.count() == 1);
    CHECK(st.invariant_ok(k2));

    // star with everything targeted: one matched guard plus two uncovered leaves
    Graph star = make_star(3);
    MatchingState sst = matching_init(star, star.vertices());
    CHECK(sst.matching.size() == 1);
    CHECK(sst.guards.count() == 3);
    CHECK(sst.invariant_ok(star));
    CHECK(sst.guards.count() == sst.matching.size() + (sst.targets - sst.matching.covered()).count());
}

TEST_CASE("matching defense slides along edges") {
    Graph k2 = make_complete(2);
    MatchingState st = matching_init(k2, VertexSet::of({0, 1}));
    int guard = st.guards.lowest();
    MatchingState moved = matching_defend(st, k2, guard, VertexSet());
    CHECK(moved.guards == VertexSet::single(1 - guard));
    CHECK(moved.matching.edges == st.matching.edges);
    CHECK(moved.invariant_ok(k2));
}

TEST_CASE("matching defense case 2 swaps the matching") {
    // z - x - y path, M = {xy}, guards on z and y; attacking z moves it onto x
    Graph p3 = make_path(3);  // 0 - 1 - 2
    MatchingState st;
    st.matching.edges = {{1, 2}};
    st.region = VertexSet::of({0, 1, 2});
    st.targets = VertexSet::of({0, 2});
    st.guards = VertexSet::of({0, 2});
    REQUIRE(st.invariant_ok(p3));

    MatchingState next = matching_defend(st, p3, 0, VertexSet());
    CHECK(next.guards == VertexSet::of({1, 2}));
    CHECK(next.matching.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(next.invariant_ok(p3));
}

TEST_CASE("matching defense surrounded target does nothing") {
    Graph star = make_star(3);
    MatchingState st = matching_init(star, star.vertices());
    // leaves 2 and 3 hold guards and their only neighbour is the matched center
    VertexSet uncovered = st.targets - st.matching.covered();
    int z = uncovered.lowest();
    // occupy the center from outside to pin z
    VertexSet elsewhere = st.guards.test(0) ? VertexSet() : VertexSet::single(0);
    MatchingState after = matching_defend(st, star, z, elsewhere);
    if ((star.neighbors(z) - (st.guards | elsewhere)).empty()) CHECK(after.guards == st.guards);
}

TEST_CASE("random region play maintains the matching invariant") {
    std::mt19937_64 rng(23);
    long checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 10), rng);
        VertexSet targets;
        for (int v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0) targets.set(v);
        if (targets.empty()) targets.set(static_cast<int>(rng() % g.size()));
        MatchingState st = matching_init(g, targets);
        for (int step = 0; step < 400; ++step) {
            std::vector<int> occ;
            for (int v : st.guards) occ.push_back(v);
            if (occ.empty()) break;
            int attack = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
            VertexSet covered = st.matching.covered();
            VertexSet before = st.guards;
            st = matching_defend(st, g, attack, VertexSet());
            std::string why;
            REQUIRE_MESSAGE(st.invariant_ok(g, &why), why);
            if (covered.test(attack)) CHECK(st.guards != before);  // covered guards always have a move
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("peeling the doubled edge") {
    Graph g = generate("2*complete:2");  // two disjoint edges, alpha = 2
    PeelingResult r = peel(g);
    REQUIRE(r.removed.size() == 1);
    CHECK(r.removed[0].count() == 2);  // one endpoint per component must go
    CHECK(r.removed[0] == VertexSet::of({0, 1}));  // lexicographically least choice
    CHECK(r.level == 1);
    CHECK(alpha_within(g, r.residual) == 1);
    CHECK(min_deletion_brute(g, g.vertices(), 1) == 2);
}

TEST_CASE("peeling C7 runs the full cascade") {
    Graph c7 = make_cycle(7);
    PeelingResult r = peel(c7);
    CHECK_FALSE(r.rule_fired);
    CHECK(r.level == 1);
    REQUIRE(r.removed.size() == 2);
    CHECK(static_cast<int>(r.removed[0].count()) == min_deletion_brute(c7, c7.vertices(), 2));
    CHECK(r.removed[0].count() == 3);
    VertexSet after0 = c7.vertices() - r.removed[0];
    CHECK(static_cast<int>(r.removed[1].count()) == min_deletion_brute(c7, after0, 1));
    CHECK(r.removed[1].count() == 2);
    // per-level cascade caps
    int total = 0;
    int a = 3;
    for (auto s : r.removed) {
        CHECK(static_cast<int>(s.count()) < a * (a + 1 + total));
        total += s.count();
        --a;
    }
}

TEST_CASE("peeling preconditions") {
    CHECK_THROWS_AS(peel(make_complete(5)), ContractError);  // alpha = 1
    CHECK_THROWS_AS(peel(make_path(15)), CapacityError);
}

TEST_CASE("peeling stops immediately when the packing is already there") {
    Graph g = generate("3*complete:4");  // alpha 3, 4 disjoint MIS >= surrogate 4
    PeelingResult r = peel(g);
    CHECK(r.rule_fired);
    CHECK(r.removed.empty());
    CHECK(r.level == 3);
    CHECK(r.disjoint_mis_at_level == 4);
}

TEST_CASE("composite defense on the pendant fixture") {
    Graph g = composite_fixture();
    auto d = composite_defense(g);
    REQUIRE(d.has_value());
    CHECK(d->peeling.rule_fired);
    CHECK(d->peeling.removed_union() == VertexSet::single(8));
    CHECK(d->matching.matching.edges == std::vector<std::pair<int, int>>{{0, 8}});
    CHECK(d->array.k == 2);
    CHECK_FALSE(d->array.cells().intersects(d->matching.region));
    CHECK(is_dominating_set(g, d->occupied()));

    CompositeRun run = simulate_composite(g, *d, 10000, 99);
    CHECK(run.steps == 10000);
    CHECK(run.first_violation == -1);
    CHECK(run.findings.empty());
}

TEST_CASE("composite reduces to the array alone when nothing is peeled") {
    Graph g = generate("2*complete:3");
    auto d = composite_defense(g);
    REQUIRE(d.has_value());
    CHECK(d->peeling.removed.empty());
    CHECK(d->matching.guards.empty());
    CHECK(d->occupied().count() == 4);  // k^2 guards, k = 2
}

TEST_CASE("composite absent when no array and no peel help") {
    CHECK_FALSE(composite_defense(make_cycle(7)).has_value());
    CHECK_FALSE(composite_defense(make_complete(4)).has_value());  // alpha = 1, peel refuses
}

TEST_CASE("strategy json shapes") {
    Graph g = generate("2*complete:3");
    auto arr = find_ramsey_array(g);
    REQUIRE(arr.has_value());
    CHECK(ramsey_array_json(*arr).find("\"rows\"") != std::string::npos);
    MatchingState st = matching_init(make_star(3), make_star(3).vertices());
    CHECK(matching_state_json(st).find("\"guards\"") != std::string::npos);
}
