#include "evictlab/verify.hpp"

#include <ostream>
#include <random>

#include "evictlab/bounds.hpp"
#include "evictlab/canonical.hpp"
#include "evictlab/family.hpp"
#include "evictlab/game.hpp"
#include "evictlab/invariants.hpp"
#include "evictlab/strategies.hpp"

namespace evictlab {

namespace {

struct Suite {
    std::ostream& out;
    int failures = 0;

    void check(bool ok, const std::string& what) {
        out << (ok ? "ok    " : "FAIL  ") << what << "\n";
        if (!ok) ++failures;
    }
};

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void suite_paths(Suite& s) {
    for (int n = 1; n <= 12; ++n) {
        int e = eviction_number(make_path(n));
        s.check(e == (n + 1) / 2, "eviction(P" + std::to_string(n) + ") = " + std::to_string((n + 1) / 2) +
                                      " (got " + std::to_string(e) + ")");
    }
}

void suite_cycles(Suite& s) {
    for (int n = 3; n <= 12; ++n) {
        int expect = n == 3 ? 1 : n == 5 ? 2 : (n + 1) / 2;
        int e = eviction_number(make_cycle(n));
        s.check(e == expect, "eviction(C" + std::to_string(n) + ") = " + std::to_string(expect) + " (got " +
                                 std::to_string(e) + ")");
    }
}

void suite_bipartite(Suite& s) {
    for (int m = 1; m <= 5; ++m)
        for (int n = m; m + n <= 10; ++n) {
            int e = eviction_number(make_complete_bipartite(m, n));
            s.check(e == n, "eviction(K" + std::to_string(m) + "," + std::to_string(n) + ") = " +
                                std::to_string(n) + " (got " + std::to_string(e) + ")");
        }
}

void suite_gk(Suite& s) {
    for (int k = 1; k <= 2; ++k) {
        Graph g = make_gk(k);
        auto [alpha, aw] = independence_number(g);
        auto [theta, part] = clique_cover_number(g);
        int e = eviction_number(g);
        s.check(alpha == 3 * k + 1, "alpha(G" + std::to_string(k) + ") = " + std::to_string(3 * k + 1));
        s.check(theta == 4 * k + 1, "theta(G" + std::to_string(k) + ") = " + std::to_string(4 * k + 1));
        s.check(e == 4 * k + 1, "eviction(G" + std::to_string(k) + ") = " + std::to_string(4 * k + 1) +
                                    " (got " + std::to_string(e) + ")");
    }
    s.check(eviction_number(make_cycle(7)) * 3 == independence_number(make_cycle(7)).first * 4,
            "eviction(C7)/alpha(C7) = 4/3 exactly");
}

void suite_anomaly(Suite& s) {
    for (int t = 2; t <= 3; ++t) {
        Graph base = generate("union(complete:1,join(complete:2,empty:" + std::to_string(t) + "))");
        // vertex 0 isolated; vertices 1,2 are the degree-(t+1) pair of the join
        Graph bridged = add_edge(base, 0, 1);
        int e0 = eviction_number(base);
        int e1 = eviction_number(bridged);
        s.check(e0 == 2, "eviction(K1 + (K2 v E" + std::to_string(t) + ")) = 2 (got " + std::to_string(e0) + ")");
        s.check(e1 == t + 1, "after bridge edge: eviction = " + std::to_string(t + 1) + " (got " +
                                 std::to_string(e1) + ")");
    }
    Graph g2 = figure_g2(), g2p = figure_g2_prime();
    s.check(!eviction_safe_set(g2, 4).empty(), "G2 defended by 4 guards (safe set nonempty)");
    s.check(eviction_safe_set(g2p, 4).empty(), "G2' not defended by 4 guards");
    AttackCertificate cert = attacker_certificate(g2p, 4);
    s.check(!cert.choice.empty(), "attacker certificate for G2' at k=4 exists");
    s.check(eviction_number(g2) == 4, "eviction(G2) = 4");
    s.check(eviction_number(g2p) == 5, "eviction(G2') = 5");
}

void suite_spider(Suite& s) {
    for (int k = 2; k <= 4; ++k) {
        int e = eviction_number(make_spider(k));
        s.check(e == k + 1, "eviction(Sp(2;" + std::to_string(k) + ")) = " + std::to_string(k + 1) + " (got " +
                                std::to_string(e) + ")");
    }
}

void suite_universal(Suite& s) {
    for (int m = 3; m <= 6; ++m) {
        Graph g = make_join(make_complete(2), make_empty(m));
        s.check(eviction_number(g) == 1, "eviction(K2 v E" + std::to_string(m) + ") = 1");
        s.check(independence_number(g).first == m, "alpha(K2 v E" + std::to_string(m) + ") = " + std::to_string(m));
    }
    SafeSet one = eviction_safe_set(make_join(make_complete(2), make_empty(4)), 1);
    s.check(one.members.size() == 2 && one.members[0] == VertexSet::of({0}) && one.members[1] == VertexSet::of({1}),
            "safe singletons of K2 v E4 are exactly the two universal vertices");
}

void suite_bounds_chain(Suite& s) {
    auto chain = ramsey_chain(2);
    s.check(chain.size() == 3 && chain[0].exact() && chain[0].lo == 3 && chain[1].lo == 6 && chain[2].lo == 18 &&
                chain[2].exact(),
            "chain for k=2 is (3, 6, 18), so c_2 = 18");
    s.check(guards_bound(1, BigInt(0)) == 1, "f(1) = 1");
    s.check(guards_bound(2, BigInt(18)) == 72, "f(2) with c_2 = 18 is 72");
    s.check(peel_size_total(2, BigInt(18)) == 36, "total peel cap at k=2 is half of f(2)");
    auto r33 = ramsey_brute_force(3, 3, 6);
    s.check(r33 && *r33 == 6, "r(3,3) = 6 re-derived by exhaustive 2-coloring");
    for (int k = 2; k <= 12; ++k) {
        BigInt power = 1;
        for (int i = 0; i < k - 1; ++i) power *= k;
        s.check((power - 1) % (k - 1) == 0, "(k^{k-1}-1) divisible by k-1 at k = " + std::to_string(k));
    }
}

void suite_monotonicity(Suite& s) {
    long violations = 0, tested = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_nonisomorphic(n, false, [&](const Graph& g) {
            for (int k = 1; k < n; ++k) {
                bool low = !eviction_safe_set(g, k).empty();
                bool high = !eviction_safe_set(g, k + 1).empty();
                ++tested;
                if (low && !high) ++violations;
            }
        });
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(7, 0.4, rng);
        for (int k = 1; k < 7; ++k) {
            bool low = !eviction_safe_set(g, k).empty();
            bool high = !eviction_safe_set(g, k + 1).empty();
            ++tested;
            if (low && !high) ++violations;
        }
    }
    s.check(violations == 0,
            "safe-set monotonicity in k (" + std::to_string(tested) + " cases, " + std::to_string(violations) +
                " violations)");
}

void suite_small_alpha(Suite& s) {
    long violations = 0, tested = 0;
    for (int n = 1; n <= 6; ++n)
        enumerate_nonisomorphic(n, false, [&](const Graph& g) {
            int alpha = independence_number(g).first;
            if (alpha > 3) return;
            int e = eviction_number(g);
            ++tested;
            bool ok = (alpha != 1 || e == 1) && (alpha != 2 || e <= 2) && (alpha != 3 || e <= 5);
            if (!ok) ++violations;
        });
    s.check(violations == 0, "alpha in {1,2,3} eviction bounds (" + std::to_string(tested) + " graphs)");
}

void suite_strategies(Suite& s) {
    for (int k = 2; k <= 3; ++k) {
        Graph g = generate(std::to_string(k) + "*complete:" + std::to_string(k + 1));
        auto arr = find_ramsey_array(g);
        s.check(arr.has_value(), "guard array exists on " + std::to_string(k) + "K" + std::to_string(k + 1));
        if (!arr) continue;
        VertexSet config = ramsey_initial_configuration(*arr);
        std::mt19937_64 rng(7);
        bool all_good = true;
        for (int step = 0; step < 10000; ++step) {
            std::vector<int> occ;
            for (int v : config) occ.push_back(v);
            int attack = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
            config = ramsey_defend(*arr, config, attack);
            ramsey_domination_witness(*arr, config);
            if (!is_dominating_set(g, config)) all_good = false;
        }
        s.check(all_good, "10^4 random attacks on " + std::to_string(k) + "K" + std::to_string(k + 1) +
                              " keep domination");
    }
    // matching defense on a random region
    std::mt19937_64 rng(11);
    bool invariants_held = true;
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(10, 0.35, rng);
        VertexSet targets;
        for (int v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0) targets.set(v);
        if (targets.empty()) targets.set(0);
        MatchingState st = matching_init(g, targets);
        for (int step = 0; step < 1000; ++step) {
            std::vector<int> occ;
            for (int v : st.guards) occ.push_back(v);
            if (occ.empty()) break;
            int attack = occ[std::uniform_int_distribution<size_t>(0, occ.size() - 1)(rng)];
            st = matching_defend(st, g, attack, VertexSet());
            if (!st.invariant_ok(g)) invariants_held = false;
        }
    }
    s.check(invariants_held, "matching invariant holds through random attack play");
    // composite fixture: two K4 copies plus a vertex pending on both
    Graph fixture = generate("union(2*complete:4,empty:1)");
    fixture = add_edge(add_edge(fixture, 0, 8), 4, 8);
    auto composite = composite_defense(fixture);
    s.check(composite.has_value(), "composite defense assembles on the pendant fixture");
    if (composite) {
        CompositeRun run = simulate_composite(fixture, *composite, 10000, 13);
        s.check(run.first_violation < 0, "composite defense keeps domination for 10^4 attacks");
        s.check(run.findings.empty(), "composite defense never crosses regions");
    }
}

void suite_oracle(Suite& s) {
    long mismatches = 0, cases = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_nonisomorphic(n, false, [&](const Graph& g) {
            for (int k = 1; k <= n; ++k) {
                SolveOptions naive;
                naive.engine = Engine::naive;
                auto a = eviction_safe_set(g, k).members;
                auto b = eviction_safe_set(g, k, naive).members;
                ++cases;
                if (a != b) ++mismatches;
            }
        });
    s.check(mismatches == 0, "naive and worklist fixed points agree (" + std::to_string(cases) + " cases)");
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"paths",       "cycles",      "bipartite",  "gk",     "anomaly", "spider",
            "bounds-chain", "monotonicity", "small-alpha", "strategies", "universal", "oracle"};
}

int run_verify_suite(const std::string& name, std::ostream& out) {
    Suite s{out};
    if (name == "paths") suite_paths(s);
    else if (name == "cycles") suite_cycles(s);
    else if (name == "bipartite") suite_bipartite(s);
    else if (name == "gk") suite_gk(s);
    else if (name == "anomaly") suite_anomaly(s);
    else if (name == "spider") suite_spider(s);
    else if (name == "bounds-chain") suite_bounds_chain(s);
    else if (name == "monotonicity") suite_monotonicity(s);
    else if (name == "small-alpha") suite_small_alpha(s);
    else if (name == "strategies") suite_strategies(s);
    else if (name == "universal") suite_universal(s);
    else if (name == "oracle") suite_oracle(s);
    else if (name == "all") {
        for (const auto& sub : verify_suite_names()) {
            out << "== " << sub << " ==\n";
            s.failures += run_verify_suite(sub, out);
        }
    } else {
        throw ContractError("unknown verify suite '" + name + "'");
    }
    return s.failures;
}

}  // namespace evictlab
