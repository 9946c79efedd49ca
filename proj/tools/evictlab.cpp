#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "evictlab/bounds.hpp"
#include "evictlab/cache.hpp"
#include "evictlab/canonical.hpp"
#include "evictlab/family.hpp"
#include "evictlab/game.hpp"
#include "evictlab/graph_io.hpp"
#include "evictlab/hunt.hpp"
#include "evictlab/invariants.hpp"
#include "evictlab/verify.hpp"

using namespace evictlab;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_parse = 2;
constexpr int exit_capacity = 3;
constexpr int exit_timeout = 4;

struct GraphSource {
    std::string family, g6, edges_file;

    bool present() const { return !family.empty() || !g6.empty() || !edges_file.empty(); }

    Graph load() const {
        int given = !family.empty() + !g6.empty() + !edges_file.empty();
        if (given != 1)
            throw ParseError(ParseError::Kind::bad_format,
                             "give exactly one of --family, --g6, --edges");
        if (!family.empty()) return generate(family);
        if (!g6.empty()) return parse_graph6(g6);
        std::ifstream in(edges_file);
        if (!in) throw ParseError(ParseError::Kind::bad_format, "cannot open " + edges_file);
        return parse_edge_list(in);
    }
};

int env_workers() {
    if (const char* env = std::getenv("EVICTLAB_WORKERS"); env && *env) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

int cmd_solve(const GraphSource& source, const std::string& format, const std::string& cache_path,
              bool no_cache, bool skip_game, long timeout_ms, int workers,
              const std::vector<std::string>& emit, int k_override) {
    Graph g = source.load();
    std::string g6 = emit_graph6(g);

    Deadline deadline;
    SolveOptions opts;
    opts.workers = workers;
    if (timeout_ms > 0) {
        deadline = Deadline::after_ms(timeout_ms);
        opts.deadline = &deadline;
    }

    if (!emit.empty()) {
        int k = k_override > 0 ? k_override : eviction_number(g, opts);
        for (const std::string& what : emit) {
            if (what == "safe-set")
                std::cout << safe_set_json(eviction_safe_set(g, k, opts)) << "\n";
            else if (what == "strategy")
                std::cout << strategy_family_json(extract_eviction_family(g, k, opts)) << "\n";
            else  // certificate
                std::cout << certificate_json(attacker_certificate(g, k, opts)) << "\n";
        }
        return 0;
    }

    std::optional<Cache> cache;
    if (!no_cache) cache.emplace(cache_path);

    BoundReport report;
    const CacheRecord* hit = cache ? cache->find(g6) : nullptr;
    if (hit && hit->version == solver_version && hit->eviction && hit->eternal && !skip_game) {
        report = bound_report(g, false, opts);
        report.eviction = hit->eviction;
        report.eternal = hit->eternal;
        report.game_note = "from cache";
    } else {
        report = bound_report(g, !skip_game, opts);
        if (cache && !skip_game && report.eviction) {
            CacheRecord rec;
            rec.graph6 = g6;
            if (g.size() <= 8) rec.canonical = canonical_graph6(g);
            rec.alpha = report.alpha;
            rec.gamma = report.gamma;
            rec.theta = report.theta;
            rec.eviction = report.eviction;
            rec.eternal = report.eternal;
            rec.version = solver_version;
            rec.timestamp = static_cast<long long>(std::time(nullptr));
            if (!cache->find(g6)) cache->append(rec);
        }
    }

    if (format == "table")
        std::cout << bound_report_table(report);
    else
        std::cout << bound_report_json(report) << "\n";
    return report.all_pass() ? 0 : exit_failure;
}

int cmd_generate(const std::string& spec, const std::string& format) {
    Graph g = generate(spec);
    if (format == "g6")
        std::cout << emit_graph6(g) << "\n";
    else if (format == "edges")
        std::cout << emit_edge_list(g);
    else
        std::cout << emit_graph_json(g) << "\n";
    return 0;
}

int cmd_hunt(const std::string& input_file, int max_n, bool include_disconnected,
             const std::string& predicate, int workers, long timeout_ms, bool no_dedup) {
    std::vector<Graph> graphs;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) throw ParseError(ParseError::Kind::bad_format, "cannot open " + input_file);
        graphs = parse_graph6_stream(in);
    } else {
        for (int n = 1; n <= max_n; ++n)
            enumerate_nonisomorphic(n, !include_disconnected, [&](const Graph& g) { graphs.push_back(g); });
    }

    HuntPredicate pred = HuntPredicate::parse(predicate);
    HuntOptions opts;
    opts.workers = workers;
    opts.timeout_ms = timeout_ms;
    opts.dedup = !no_dedup;

    HuntResult result = hunt(graphs, pred, opts);
    for (const auto& f : result.findings) std::cout << f.jsonl() << "\n";
    for (const auto& e : result.errors) std::cerr << "skipped " << e << "\n";
    std::cerr << result.summary() << "\n";
    return 0;
}

int cmd_cache(const std::string& action, const std::string& cache_path, int sample) {
    Cache cache(cache_path);
    if (action == "list") {
        for (const auto& r : cache.records()) std::cout << r.jsonl() << "\n";
        std::cerr << cache.records().size() << " records in " << cache.path() << "\n";
        return 0;
    }
    if (action == "clear") {
        cache.clear();
        std::cerr << "cleared " << cache.path() << "\n";
        return 0;
    }
    if (action == "verify") {
        const auto& records = cache.records();
        if (records.empty()) {
            std::cerr << "cache empty, nothing to verify\n";
            return 0;
        }
        size_t step = std::max<size_t>(1, records.size() / static_cast<size_t>(std::max(1, sample)));
        int checked = 0, mismatched = 0;
        for (size_t i = 0; i < records.size() && checked < sample; i += step, ++checked) {
            const CacheRecord& r = records[i];
            Graph g = parse_graph6(r.graph6);
            bool ok = true;
            if (r.alpha && *r.alpha != independence_number(g).first) ok = false;
            if (r.gamma && *r.gamma != domination_number(g).first) ok = false;
            if (r.theta && *r.theta != clique_cover_number(g).first) ok = false;
            if (r.eviction && *r.eviction != eviction_number(g)) ok = false;
            if (r.eternal && *r.eternal != eternal_domination_number(g)) ok = false;
            std::cout << (ok ? "ok    " : "STALE ") << r.graph6 << "\n";
            if (!ok) ++mismatched;
        }
        std::cerr << "verified " << checked << " sampled records, " << mismatched << " mismatched\n";
        return mismatched == 0 ? 0 : exit_failure;
    }
    throw ContractError("cache: unknown action '" + action + "'");
}

// ---- interactive play ----

void render_board(const Graph& g, VertexSet occupied) {
    for (int v = 0; v < g.size(); ++v) {
        char mark = '.';
        if (occupied.test(v)) mark = (g.neighbors(v) - occupied).empty() ? '*' : 'G';  // * = surrounded
        std::cout << "  " << (v < 10 ? " " : "") << v << " [" << mark << "] :";
        for (int u : g.neighbors(v)) std::cout << ' ' << u;
        std::cout << "\n";
    }
}

std::optional<int> prompt_vertex(const std::string& prompt) {
    while (true) {
        std::cout << prompt << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) return std::nullopt;
        if (line == "quit" || line == "q") return std::nullopt;
        try {
            return std::stoi(line);
        } catch (const std::exception&) {
            std::cout << "  (enter a vertex number, or quit)\n";
        }
    }
}

int play_human_attacker(const Graph& g, int k) {
    SafeSet safe = eviction_safe_set(g, k);
    StrategyFamily family;
    bool winnable = !safe.empty();
    VertexSet config;
    if (winnable) {
        family = extract_eviction_family(g, k);
        config = family.start();
        std::cout << "Defender is backed by a proven eternal family; it will never lose.\n";
    } else {
        auto doms = dominating_sets(g, k);
        if (doms.empty()) {
            std::cout << "No dominating " << std::to_string(k) << "-set exists; the defender loses before play.\n";
            return 0;
        }
        config = doms.front();
        std::cout << "No safe family exists at k=" << k << "; the defender plays best-effort and will lose.\n";
    }

    for (int step = 1;; ++step) {
        render_board(g, config);
        auto attack = prompt_vertex("attack> ");
        if (!attack) return 0;
        if (*attack < 0 || *attack >= g.size() || !config.test(*attack)) {
            std::cout << "  only vertices holding a guard may be attacked\n";
            continue;
        }
        if ((g.neighbors(*attack) - config).empty()) {
            std::cout << "  vertex " << *attack << " is surrounded; the guard stays put\n";
            continue;
        }
        VertexSet next;
        if (winnable) {
            next = family.respond(config, *attack);
        } else {
            // best effort: lowest destination that keeps domination, else any
            int fallback = (g.neighbors(*attack) - config).lowest();
            next = config.without(*attack).with(fallback);
            for (int w : (g.neighbors(*attack) - config)) {
                VertexSet cand = config.without(*attack).with(w);
                if (is_dominating_set(g, cand)) {
                    next = cand;
                    break;
                }
            }
        }
        std::cout << "  guard moves " << *attack << " -> " << (next - config).lowest() << "\n";
        config = next;
        if (!is_dominating_set(g, config)) {
            std::cout << "Domination lost after " << step << " attacks. You win!\n";
            return 0;
        }
    }
}

int play_human_defender(const Graph& g, int k) {
    SafeSet safe = eviction_safe_set(g, k);
    std::optional<AttackCertificate> cert;
    if (safe.empty()) {
        cert = attacker_certificate(g, k);
        std::cout << "Attacker holds a winning certificate (" << cert->rounds << " rounds deep).\n";
    } else {
        std::cout << "The defender can win at k=" << k
                  << "; the engine attacks with a heuristic (fewest surviving replies) and says so.\n";
    }
    auto doms = dominating_sets(g, k);
    if (doms.empty()) {
        std::cout << "No dominating " << k << "-set exists; nothing to defend.\n";
        return 0;
    }
    VertexSet config = doms.front();
    std::cout << "Initial configuration is the first dominating set.\n";

    for (int step = 1;; ++step) {
        render_board(g, config);
        int attack = -1;
        if (cert) {
            attack = cert->attack_for(config);
            std::cout << "engine attacks " << attack << " (certificate)\n";
        } else {
            // heuristic: minimize the number of replies that stay in the safe set
            int best_count = g.size() + 1;
            for (int v : config) {
                if ((g.neighbors(v) - config).empty()) continue;
                int count = 0;
                for (int w : (g.neighbors(v) - config))
                    if (safe.contains(config.without(v).with(w))) ++count;
                if (count < best_count) {
                    best_count = count;
                    attack = v;
                }
            }
            if (attack < 0) {
                std::cout << "Every guard is surrounded; no attack changes anything. You win by stalemate.\n";
                return 0;
            }
            std::cout << "engine attacks " << attack << " (heuristic)\n";
        }
        if ((g.neighbors(attack) - config).empty()) {
            std::cout << "  vertex " << attack << " is surrounded; nothing moves\n";
            continue;
        }
        auto dest = prompt_vertex("move guard " + std::to_string(attack) + " to> ");
        if (!dest) return 0;
        if (*dest < 0 || *dest >= g.size() || !g.neighbors(attack).test(*dest) || config.test(*dest)) {
            std::cout << "  destination must be an unoccupied neighbour of " << attack << "\n";
            continue;
        }
        config = config.without(attack).with(*dest);
        if (!is_dominating_set(g, config)) {
            std::cout << "Domination lost after " << step << " attacks. The engine wins.\n";
            return 0;
        }
    }
}

int cmd_play(const GraphSource& source, const std::string& role, int k) {
    Graph g = source.load();
    if (k < 1 || k > g.size()) throw ContractError("play: k must lie in [1, n]");
    if (g.size() > 18)
        throw CapacityError("play: refusing graphs over 18 vertices, exact solving backs the engine");
    std::cout << "Playing the eviction game on " << (g.name().empty() ? emit_graph6(g) : g.name()) << " with "
              << k << " guards. You are the " << role << ".\n";
    return role == "attacker" ? play_human_attacker(g, k) : play_human_defender(g, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evictlab: exact solving, strategies and counterexample hunting for the eviction game"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_path = Cache::default_path();
    int workers = env_workers();
    app.add_option("--cache", cache_path, "cache file (JSON lines)")->envname("EVICTLAB_CACHE");
    app.add_option("--workers", workers, "worker threads");

    // solve
    auto* solve = app.add_subcommand("solve", "compute parameters, game numbers and bound checks");
    GraphSource solve_src;
    solve->add_option("--family", solve_src.family, "family spec, e.g. cycle:7");
    solve->add_option("--g6", solve_src.g6, "graph6 record");
    solve->add_option("--edges", solve_src.edges_file, "edge list file");
    std::string solve_format = "json";
    solve->add_option("--format", solve_format, "json or table")->check(CLI::IsMember({"json", "table"}));
    bool no_cache = false, skip_game = false;
    long timeout_ms = 0;
    std::vector<std::string> solve_emit;
    int solve_k = 0;
    solve->add_flag("--no-cache", no_cache, "do not read or write the cache");
    solve->add_flag("--skip-game", skip_game, "classical parameters only");
    solve->add_option("--timeout-ms", timeout_ms, "per-solve timeout");
    solve->add_option("--emit", solve_emit, "print a game artifact instead of the report")
        ->check(CLI::IsMember({"safe-set", "strategy", "certificate"}));
    solve->add_option("--k", solve_k, "guard count for --emit (default: the eviction number)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();

    // hunt
    auto* huntc = app.add_subcommand("hunt", "scan graphs for counterexample predicates");
    std::string hunt_input, hunt_predicate = "ratio-exceeds:4/3";
    int hunt_max_n = 6;
    bool hunt_disconnected = false, hunt_no_dedup = false;
    long hunt_timeout = 0;
    huntc->add_option("--input", hunt_input, "graph6 stream file (default: builtin generator)");
    huntc->add_option("--max-n", hunt_max_n, "builtin generator: all graphs up to this order (<= 7)");
    huntc->add_flag("--all-graphs", hunt_disconnected, "builtin generator: include disconnected graphs");
    huntc->add_option("--predicate", hunt_predicate,
                      "ratio-exceeds:p/q | alpha3-eviction5 | eternal-lt-eviction");
    huntc->add_option("--timeout-ms", hunt_timeout, "per-graph timeout, skipped graphs are logged");
    huntc->add_flag("--no-dedup", hunt_no_dedup, "skip canonical-form deduplication");

    // play
    auto* play = app.add_subcommand("play", "interactive eviction game");
    GraphSource play_src;
    play->add_option("--family", play_src.family, "family spec");
    play->add_option("--g6", play_src.g6, "graph6 record");
    play->add_option("--edges", play_src.edges_file, "edge list file");
    std::string role = "attacker";
    int play_k = 1;
    play->add_option("--role", role, "attacker or defender")->check(CLI::IsMember({"attacker", "defender"}));
    play->add_option("--k", play_k, "guard count")->required();

    // generate
    auto* gen = app.add_subcommand("generate", "emit a named graph");
    std::string gen_spec, gen_format = "g6";
    gen->add_option("spec", gen_spec, "family spec, e.g. gk:2")->required();
    gen->add_option("--format", gen_format, "g6, edges or json")->check(CLI::IsMember({"g6", "edges", "json"}));

    // cache
    auto* cachec = app.add_subcommand("cache", "inspect the result cache");
    std::string cache_action;
    int cache_sample = 5;
    cachec->add_option("action", cache_action, "list, clear or verify")->required()
        ->check(CLI::IsMember({"list", "clear", "verify"}));
    cachec->add_option("--sample", cache_sample, "records to re-solve for verify");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(solve_src, solve_format, cache_path, no_cache, skip_game, timeout_ms,
                             workers, solve_emit, solve_k);
        if (*verify) {
            int failures = run_verify_suite(suite, std::cout);
            if (failures > 0) std::cerr << failures << " checks failed\n";
            return failures == 0 ? 0 : exit_failure;
        }
        if (*huntc)
            return cmd_hunt(hunt_input, hunt_max_n, hunt_disconnected, hunt_predicate, workers, hunt_timeout,
                            hunt_no_dedup);
        if (*play) return cmd_play(play_src, role, play_k);
        if (*gen) return cmd_generate(gen_spec, gen_format);
        if (*cachec) return cmd_cache(cache_action, cache_path, cache_sample);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_timeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return 0;
}
