#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "evictlab/canonical.hpp"
#include "evictlab/family.hpp"
#include "evictlab/graph_io.hpp"

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

// Reference graph6 encoder, structured differently from the library path:
// builds the whole bit string first, then chunks it.
std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int v = 1; v < g.size(); ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(g.size() + 63));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (size_t b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] - '0');
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("basic adjacency and neighborhoods") {
    Graph c7 = make_cycle(7);
    CHECK(c7.size() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(c7.neighbors(0) == VertexSet::of({1, 6}));
    CHECK(c7.closed_neighborhood(0) == VertexSet::of({0, 1, 6}));
    for (int v = 0; v < 7; ++v) CHECK_FALSE(c7.neighbors(v).test(v));

    Graph join = make_join(make_complete(2), make_empty(4));
    CHECK(join.closed_neighborhood(0).count() == 6);  // universal vertex of K2 v E4

    CHECK_THROWS_AS(c7.neighbors(7), ContractError);
}

TEST_CASE("add_edge value semantics") {
    Graph e2 = make_empty(2);
    Graph k2 = add_edge(e2, 0, 1);
    CHECK(e2.edge_count() == 0);  // input unchanged
    CHECK(k2.edge_count() == 1);
    CHECK(add_edge(k2, 1, 0) == k2);  // idempotent
    CHECK_THROWS_AS(add_edge(k2, 1, 1), ContractError);
}

TEST_CASE("graph6 frozen records") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.size() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(emit_graph6(make_cycle(7)) == "FhCKG");
    CHECK(parse_graph6("FhCKG") == make_cycle(7));

    // 5 vertices, edges {1,4} and {2,3}
    Graph d = parse_graph6("D@O");
    CHECK(d.edges() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, rng);
        std::string rec = emit_graph6(g);
        CHECK(parse_graph6(rec) == g);
        CHECK(rec == reference_graph6(g));
    }
    CHECK(reference_graph6(make_cycle(7)) == "FhCKG");
}

TEST_CASE("graph6 long order form") {
    Graph p63 = make_path(63);
    std::string rec = emit_graph6(p63);
    CHECK(rec.substr(0, 4) == "~??~");
    CHECK(parse_graph6(rec) == p63);
    Graph p64 = make_path(64);
    CHECK(parse_graph6(emit_graph6(p64)) == p64);
}

TEST_CASE("graph6 distinct parse errors") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        return ParseError::Kind::bad_format;
    };
    CHECK(kind_of("") == ParseError::Kind::bad_header);
    CHECK(kind_of(std::string(1, '\x20')) == ParseError::Kind::bad_header);  // order byte below 63
    CHECK(kind_of("C\x01") == ParseError::Kind::bad_char);
    CHECK(kind_of("~~???") == ParseError::Kind::too_large);   // 8-byte order form
    CHECK(kind_of("~?B?????????") == ParseError::Kind::too_large);  // n = 130
    CHECK(kind_of("FhCK") == ParseError::Kind::truncated);
    CHECK(kind_of("FhCKGG") == ParseError::Kind::bad_format);  // trailing byte
}

TEST_CASE("graph6 stream parsing") {
    std::istringstream in(">>graph6<<\n# comment\nA_\n\nFhCKG\n");
    auto graphs = parse_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].size() == 2);
    CHECK(graphs[1] == make_cycle(7));
}

TEST_CASE("edge list round trip") {
    Graph g = make_gk(1);
    std::istringstream in(emit_edge_list(g));
    CHECK(parse_edge_list(in) == g);

    std::istringstream bad("3 1\n0 3\n");
    CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
    std::istringstream big("65 0\n");
    CHECK_THROWS_AS(parse_edge_list(big), ParseError);
}

TEST_CASE("json emission") {
    std::string j = emit_graph_json(make_path(3));
    CHECK(j.find("\"n\":3") != std::string::npos);
    CHECK(j.find("[0,1]") != std::string::npos);
    CHECK(j.find("[1,2]") != std::string::npos);
}

TEST_CASE("gk construction") {
    for (int k = 1; k <= 2; ++k) {
        Graph g = make_gk(k);
        CHECK(g.size() == 7 * k + 2);
        int v = 7 * k, w = 7 * k + 1;
        CHECK(g.degree(v) == 7 * k + 1);  // unique maximum degree
        CHECK(g.degree(w) == 1);
        for (int u = 0; u < 7 * k; ++u) CHECK(g.degree(u) == 3);
    }
    Graph g1 = make_gk(1);
    CHECK(g1.degree(7) == 8);
}

TEST_CASE("spider and star") {
    CHECK(canonical_graph6(make_spider(2)) == canonical_graph6(make_path(5)));
    Graph sp3 = make_spider(3);
    CHECK(sp3.size() == 7);
    CHECK(sp3.degree(0) == 3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(sp3.degree(i) == 2);
        CHECK(sp3.degree(3 + i) == 1);
    }
}

TEST_CASE("join and union") {
    Graph j = generate("join(complete:2,empty:4)");
    CHECK(j.size() == 6);
    CHECK(j.degree(0) == 5);
    CHECK(j.degree(1) == 5);
    for (int v = 2; v < 6; ++v) CHECK(j.degree(v) == 2);

    Graph u = generate("union(complete:1,path:3)");
    CHECK(u.size() == 4);
    CHECK(u.degree(0) == 0);

    Graph copies = generate("3*cycle:7");
    CHECK(copies.size() == 21);
    CHECK(copies.edge_count() == 21);
}

TEST_CASE("figure-3 constants") {
    Graph g2 = figure_g2();
    CHECK(g2.size() == 9);
    CHECK(g2.edge_count() == 12);
    CHECK_FALSE(g2.adjacent(0, 1));  // the dotted edge is absent in the base graph
    Graph g2p = figure_g2_prime();
    CHECK(g2p.adjacent(0, 1));
    CHECK(g2p.edge_count() == 13);
    CHECK(add_edge(g2, 0, 1).edges() == g2p.edges());
    // each side induces K4 minus an edge
    CHECK(is_clique(g2, VertexSet::of({1, 3, 5})));
    CHECK(is_clique(g2, VertexSet::of({2, 4, 6})));
    CHECK_FALSE(g2.adjacent(5, 7));
    CHECK_FALSE(g2.adjacent(6, 8));
    // N(v0) is independent in G2'
    CHECK(is_independent_set(g2p, g2p.neighbors(0)));
}

TEST_CASE("generators keep graphs simple") {
    std::vector<Graph> all = {make_path(9),   make_cycle(9), make_complete(5),          make_empty(4),
                              make_star(5),   make_spider(4), make_complete_bipartite(3, 4), make_gk(2),
                              figure_g2(),    figure_g2_prime()};
    for (const Graph& g : all) {
        for (int u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.neighbors(u).test(u));
            for (int v : g.neighbors(u)) CHECK(g.neighbors(v).test(u));
            CHECK(g.vertices().contains_all(g.neighbors(u)));
        }
    }
}

TEST_CASE("family spec errors") {
    CHECK_THROWS_AS(generate("gk:9"), CapacityError);       // 65 vertices
    CHECK_THROWS_AS(generate("cycle:0"), ContractError);
    CHECK_THROWS_AS(generate("nosuch:3"), ParseError);
    CHECK_THROWS_AS(generate("path:3 extra"), ParseError);
    CHECK(FamilySpec::parse("join(complete:2,empty:4)").describe() == "join(complete:2,empty:4)");
}
