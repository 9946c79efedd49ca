#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "evictlab/cache.hpp"
#include "evictlab/canonical.hpp"
#include "evictlab/family.hpp"
#include "evictlab/graph_io.hpp"
#include "evictlab/hunt.hpp"
#include "evictlab/verify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace evictlab;

TEST_CASE("canonical form groups isomorphic relabelings") {
    Graph c7 = make_cycle(7);
    std::string canon = canonical_graph6(c7);
    std::mt19937_64 rng(3);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_graph6(relabel(c7, perm)) == canon);
    }
    CHECK(canonical_graph6(make_path(7)) != canon);
    CHECK_THROWS_AS(canonical_form(make_path(9)), CapacityError);
}

TEST_CASE("nonisomorphic enumeration counts") {
    const long expected_all[] = {1, 2, 4, 11, 34, 156};        // n = 1..6
    const long expected_connected[] = {1, 1, 2, 6, 21, 112};   // n = 1..6
    for (int n = 1; n <= 6; ++n) {
        long all = 0, connected = 0;
        enumerate_nonisomorphic(n, false, [&](const Graph&) { ++all; });
        enumerate_nonisomorphic(n, true, [&](const Graph&) { ++connected; });
        CHECK(all == expected_all[n - 1]);
        CHECK(connected == expected_connected[n - 1]);
    }
}

TEST_CASE("hunt predicates parse and describe") {
    HuntPredicate p = HuntPredicate::parse("ratio-exceeds:4/3");
    CHECK(p.tag == HuntPredicate::Tag::ratio_exceeds);
    CHECK(p.num == 4);
    CHECK(p.den == 3);
    CHECK(HuntPredicate::parse("alpha3-eviction5").tag == HuntPredicate::Tag::alpha3_eviction5);
    CHECK(HuntPredicate::parse("eternal-lt-eviction").needs_eternal());
    CHECK_THROWS_AS(HuntPredicate::parse("bogus"), ParseError);
    CHECK_THROWS_AS(HuntPredicate::parse("ratio-exceeds:x/y"), ParseError);
}

TEST_CASE("hunt is deterministic across worker counts") {
    std::vector<Graph> graphs;
    for (int n = 3; n <= 6; ++n)
        enumerate_nonisomorphic(n, true, [&](const Graph& g) { graphs.push_back(g); });

    HuntPredicate pred = HuntPredicate::parse("ratio-exceeds:1/1");  // plenty of findings
    HuntOptions seq, par;
    par.workers = 4;
    HuntResult a = hunt(graphs, pred, seq);
    HuntResult b = hunt(graphs, pred, par);
    REQUIRE(a.findings.size() == b.findings.size());
    for (size_t i = 0; i < a.findings.size(); ++i) {
        CHECK(a.findings[i].graph6 == b.findings[i].graph6);
        CHECK(a.findings[i].value == b.findings[i].value);
    }
    CHECK(a.best_num == b.best_num);
    CHECK(a.best_den == b.best_den);
    CHECK(a.processed == b.processed);
}

TEST_CASE("hunt deduplicates isomorphic inputs") {
    std::vector<Graph> graphs;
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        graphs.push_back(relabel(make_cycle(7), perm));
    }
    HuntResult r = hunt(graphs, HuntPredicate::parse("ratio-exceeds:4/3"), HuntOptions{});
    CHECK(r.processed == 1);
    CHECK(r.duplicates == 9);
    CHECK(r.findings.empty());          // C7 sits exactly at 4/3, not above
    CHECK(r.best_num == 4);             // but it is the ratio maximum
    CHECK(r.best_den == 3);
}

TEST_CASE("eternal-lt-eviction on C7 is not a finding") {
    std::vector<Graph> graphs{make_cycle(7)};
    HuntResult r = hunt(graphs, HuntPredicate::parse("eternal-lt-eviction"), HuntOptions{});
    CHECK(r.processed == 1);
    CHECK(r.findings.empty());  // eternal domination number 4 is not below eviction number 4
}

TEST_CASE("hunt logs timeouts instead of dropping graphs") {
    std::vector<Graph> graphs{make_gk(2)};
    HuntOptions opts;
    opts.timeout_ms = 1;  // expires long before the 16-vertex solve finishes
    HuntResult r = hunt(graphs, HuntPredicate::parse("ratio-exceeds:4/3"), opts);
    CHECK(r.processed + r.skipped == 1);
    if (r.skipped == 1) {
        REQUIRE(r.errors.size() == 1);
        CHECK(r.errors[0].find("timeout") != std::string::npos);
    }
}

TEST_CASE("finding lines carry the full record") {
    std::vector<Graph> graphs{make_cycle(7)};
    HuntResult r = hunt(graphs, HuntPredicate::parse("ratio-exceeds:5/4"), HuntOptions{});
    REQUIRE(r.findings.size() == 1);
    // schema: parse the line back and check every field's type and value
    nlohmann::json j = nlohmann::json::parse(r.findings[0].jsonl());
    CHECK(j.at("graph6").get<std::string>() == "FhCKG");
    CHECK(j.at("alpha").get<int>() == 3);
    CHECK(j.at("eviction").get<int>() == 4);
    CHECK(j.at("predicate").get<std::string>() == "ratio-exceeds:5/4");
    CHECK(j.at("value").get<std::string>() == "4/3");
    CHECK_FALSE(j.contains("eternal"));  // not requested by this predicate
    // the record the graph6 key parses back to the same graph
    CHECK(parse_graph6(j.at("graph6").get<std::string>()) == make_cycle(7));
}

TEST_CASE("cache round trips through the file") {
    std::string path = "test-cache-tmp.jsonl";
    std::remove(path.c_str());
    {
        Cache cache(path);
        CHECK(cache.records().empty());
        CacheRecord rec;
        rec.graph6 = emit_graph6(make_cycle(7));
        rec.canonical = canonical_graph6(make_cycle(7));
        rec.alpha = 3;
        rec.gamma = 3;
        rec.theta = 4;
        rec.eviction = 4;
        rec.eternal = 4;
        rec.version = solver_version;
        rec.timestamp = 1700000000;
        cache.append(rec);
    }
    {
        Cache cache(path);
        REQUIRE(cache.records().size() == 1);
        const CacheRecord* hit = cache.find(emit_graph6(make_cycle(7)));
        REQUIRE(hit != nullptr);
        CHECK(hit->alpha == 3);
        CHECK(hit->eviction == 4);
        // canonical alias lookup
        std::vector<int> perm{1, 0, 2, 3, 4, 5, 6};
        Graph twisted = relabel(make_cycle(7), perm);
        const CacheRecord* alias = cache.find(canonical_graph6(twisted));
        CHECK(alias == hit);
        cache.clear();
        CHECK(cache.records().empty());
    }
    {
        Cache cache(path);
        CHECK(cache.records().empty());
    }
    std::remove(path.c_str());
}

TEST_CASE("cache record json round trip") {
    CacheRecord rec;
    rec.graph6 = "FhCKG";
    rec.alpha = 3;
    rec.version = solver_version;
    rec.timestamp = 42;
    CacheRecord back = CacheRecord::parse(rec.jsonl());
    CHECK(back.graph6 == rec.graph6);
    CHECK(back.alpha == rec.alpha);
    CHECK_FALSE(back.gamma.has_value());
    CHECK(back.timestamp == 42);
    CHECK_THROWS_AS(CacheRecord::parse("not json"), ParseError);
}

TEST_CASE("verify suites run clean") {
    std::ostringstream sink;
    const char* quick_suites[] = {"paths", "spider", "bounds-chain", "universal"};
    for (const char* name : quick_suites) CHECK(run_verify_suite(name, sink) == 0);
    CHECK_THROWS_AS(run_verify_suite("nonsense", sink), ContractError);
}
