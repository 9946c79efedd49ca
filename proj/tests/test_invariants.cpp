#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evictlab/canonical.hpp"
#include "evictlab/family.hpp"
#include "evictlab/invariants.hpp"

using namespace evictlab;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Oracle: largest independent set by scanning all subsets.
int alpha_brute(const Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
        VertexSet s(mask);
        if (is_independent_set(g, s)) best = std::max(best, s.count());
    }
    return best;
}

// Oracle: largest clique by scanning all subsets.
int omega_brute(const Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
        VertexSet s(mask);
        if (is_clique(g, s)) best = std::max(best, s.count());
    }
    return best;
}

// Oracle: minimum clique partition by recursive search over all cliques
// containing the lowest remaining vertex.
int theta_brute(const Graph& g, VertexSet left) {
    if (left.empty()) return 0;
    int v = left.lowest();
    int best = 1 << 20;
    std::vector<VertexSet> cliques;
    auto grow = [&](auto&& self, VertexSet clique, VertexSet cands) -> void {
        cliques.push_back(clique);
        for (int u : cands) self(self, clique.with(u), cands & g.neighbors(u) & (cands - VertexSet::full(u + 1)));
    };
    grow(grow, VertexSet::single(v), left & g.neighbors(v));
    for (auto c : cliques) best = std::min(best, 1 + theta_brute(g, left - c));
    return best;
}

// Oracle: best matching coverage of `targets` by enumerating all matchings.
int coverage_brute(const Graph& g, VertexSet targets) {
    auto edges = g.edges();
    int best = 0;
    auto rec = [&](auto&& self, size_t i, VertexSet used, int covered) -> void {
        best = std::max(best, covered);
        for (size_t e = i; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (used.test(u) || used.test(v)) continue;
            self(self, e + 1, used.with(u).with(v), covered + targets.test(u) + targets.test(v));
        }
    };
    rec(rec, 0, VertexSet(), 0);
    return best;
}

}  // namespace

TEST_CASE("independence number") {
    CHECK(independence_number(make_cycle(7)).first == 3);
    CHECK(independence_number(make_gk(1)).first == 4);
    CHECK(independence_number(make_gk(2)).first == 7);
    CHECK(independence_number(generate("join(complete:2,empty:4)")).first == 4);
    auto [a, witness] = independence_number(make_cycle(9));
    CHECK(a == 4);
    CHECK(witness.count() == 4);
    CHECK(is_independent_set(make_cycle(9), witness));
}

TEST_CASE("independence number matches brute force") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 9), rng);
        CHECK(independence_number(g).first == alpha_brute(g));
    }
}

TEST_CASE("domination number") {
    CHECK(domination_number(make_cycle(7)).first == 3);  // brute-force oracle value
    CHECK(domination_number(make_path(4)).first == 2);
    CHECK(domination_number(generate("join(complete:2,empty:5)")).first == 1);
    auto [gamma, witness] = domination_number(make_gk(2));
    CHECK(gamma == 1);  // the hub vertex
    CHECK(is_dominating_set(make_gk(2), witness));
}

TEST_CASE("clique cover number") {
    CHECK(clique_cover_number(make_cycle(7)).first == 4);  // brute-force partition oracle
    CHECK(clique_cover_number(make_complete(6)).first == 1);
    CHECK(clique_cover_number(make_gk(1)).first == 5);
    CHECK(clique_cover_number(make_gk(2)).first == 9);
    auto [theta, part] = clique_cover_number(make_cycle(7));
    VertexSet all;
    int total = 0;
    for (auto cls : part) {
        CHECK(is_clique(make_cycle(7), cls));
        all = all | cls;
        total += cls.count();
    }
    CHECK(all == make_cycle(7).vertices());
    CHECK(total == 7);
    CHECK(static_cast<int>(part.size()) == theta);
}

TEST_CASE("theta matches brute-force partition search") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 7), rng);
        CHECK(clique_cover_number(g).first == theta_brute(g, g.vertices()));
    }
}

TEST_CASE("omega equals alpha of complement on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 9), rng);
        CHECK(clique_number(g).first == omega_brute(g));
        CHECK(independence_number(complement(g)).first == omega_brute(g));
    }
}

TEST_CASE("parameter chain gamma <= alpha <= theta") {
    for (int n = 1; n <= 6; ++n)
        enumerate_nonisomorphic(n, false, [&](const Graph& g) {
            ParamReport r = param_report(g);
            CHECK(r.gamma <= r.alpha);
            CHECK(r.alpha <= r.theta);
            CHECK(is_independent_set(g, r.alpha_witness));
            CHECK(is_dominating_set(g, r.gamma_witness));
        });
}

TEST_CASE("constrained matching examples") {
    Matching m = constrained_matching(make_path(4), VertexSet::full(4));
    CHECK(m.size() == 2);
    CHECK(m.covered() == VertexSet::full(4));
    CHECK(m.edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    // star: no matching covers two leaves
    Matching star = constrained_matching(make_star(3), VertexSet::of({1, 2, 3}));
    CHECK(star.size() == 1);
    CHECK((star.covered() & VertexSet::of({1, 2, 3})).count() == 1);
    CHECK(star.edges == std::vector<std::pair<int, int>>{{0, 1}});

    CHECK(maximum_matching(make_complete(6)).size() == 3);
    CHECK_THROWS_AS(maximum_matching(make_path(21)), CapacityError);
}

TEST_CASE("constrained matching coverage matches exhaustive enumeration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 7), rng, 0.4);
        VertexSet targets(rng() & ((std::uint64_t{1} << g.size()) - 1));
        Matching m = constrained_matching(g, targets);
        CHECK(m.is_matching());
        CHECK((m.covered() & targets).count() == coverage_brute(g, targets));
    }
}

TEST_CASE("disjoint maximum independent sets") {
    // three copies of K4: alpha = 3, the four "levels" are disjoint MIS
    Graph g = generate("3*complete:4");
    auto four = disjoint_max_independent_sets(g, 4);
    REQUIRE(four.has_value());
    CHECK(four->size() == 4);
    VertexSet seen;
    for (auto s : *four) {
        CHECK(s.count() == 3);
        CHECK(is_independent_set(g, s));
        CHECK_FALSE(s.intersects(seen));
        seen = seen | s;
    }
    CHECK_FALSE(disjoint_max_independent_sets(g, 5).has_value());

    // C7 does have two disjoint maximum independent sets ({0,2,4}, {1,3,5})
    auto two = disjoint_max_independent_sets(make_cycle(7), 2);
    REQUIRE(two.has_value());
    CHECK((*two)[0] == VertexSet::of({0, 2, 4}));
    CHECK((*two)[1] == VertexSet::of({1, 3, 5}));
    CHECK_FALSE(disjoint_max_independent_sets(make_cycle(7), 3).has_value());

    auto one = disjoint_max_independent_sets(make_cycle(7), 1);
    REQUIRE(one.has_value());
    CHECK((*one)[0].count() == 3);
    CHECK(is_independent_set(make_cycle(7), (*one)[0]));

    CHECK(max_disjoint_mis_count(g, g.vertices()) == 4);
    CHECK(max_disjoint_mis_count(make_cycle(7), make_cycle(7).vertices()) == 2);
}

TEST_CASE("triangle-free recognition") {
    CHECK(is_triangle_free(make_cycle(7)));
    CHECK(is_triangle_free(make_complete_bipartite(3, 4)));
    CHECK_FALSE(is_triangle_free(make_complete(3)));
    CHECK_FALSE(is_triangle_free(make_gk(1)));  // v forms triangles with the cycle
}

TEST_CASE("cograph recognition") {
    CHECK_FALSE(is_cograph(make_path(4)));
    CHECK(is_cograph(generate("join(complete:2,empty:6)")));
    CHECK(is_cograph(make_complete(5)));
    CHECK_FALSE(is_cograph(make_cycle(5)));
    CHECK(is_cograph(make_complete_bipartite(3, 4)));  // join of two empty graphs
}

TEST_CASE("cograph scan agrees with construction closure on all graphs up to 6") {
    for (int n = 1; n <= 6; ++n)
        enumerate_nonisomorphic(n, false,
                                [&](const Graph& g) { CHECK(is_cograph(g) == is_cograph_by_construction(g)); });
}
