#include "evictlab/game.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "evictlab/invariants.hpp"

namespace evictlab {

namespace {

constexpr long config_cap = 2'000'000;

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > config_cap * 4) return config_cap * 4;  // saturate, callers only compare
    }
    return r;
}

void enumerate_subsets(int n, int k, int from, VertexSet acc, std::vector<VertexSet>& out,
                       const std::vector<VertexSet>& cover, VertexSet covered, VertexSet full) {
    if (k == 0) {
        if (covered == full) out.push_back(acc);
        return;
    }
    for (int v = from; v <= n - k; ++v)
        enumerate_subsets(n, k - 1, v + 1, acc.with(v), out, cover, covered | cover[static_cast<size_t>(v)], full);
}

struct EvictionRule {
    // Threats are occupied, non-surrounded vertices.
    template <typename F>
    static void for_each_threat(const Graph& g, VertexSet d, F&& f) {
        for (int v : d)
            if (!(g.neighbors(v) - d).empty()) f(v);
    }
    template <typename F>
    static void for_each_reply(const Graph& g, VertexSet d, int v, F&& f) {
        for (int w : (g.neighbors(v) - d)) f(d.without(v).with(w));
    }
    // Configurations that reach `d` in one reply, with the attacked vertex.
    template <typename F>
    static void for_each_predecessor(const Graph& g, VertexSet d, F&& f) {
        for (int w : d)
            for (int v : (g.neighbors(w) - d)) f(d.without(w).with(v), v);
    }
};

struct EternalRule {
    // Threats are unoccupied vertices.
    template <typename F>
    static void for_each_threat(const Graph& g, VertexSet d, F&& f) {
        for (int w : (g.vertices() - d)) f(w);
    }
    template <typename F>
    static void for_each_reply(const Graph& g, VertexSet d, int w, F&& f) {
        for (int v : (g.neighbors(w) & d)) f(d.without(v).with(w));
    }
    template <typename F>
    static void for_each_predecessor(const Graph& g, VertexSet d, F&& f) {
        for (int w : d)
            for (int v : (g.neighbors(w) - d)) f(d.without(w).with(v), w);
    }
};

struct ConfigIndex {
    std::vector<std::uint64_t> masks;  // sorted ascending

    explicit ConfigIndex(const std::vector<VertexSet>& configs) {
        masks.reserve(configs.size());
        for (auto c : configs) masks.push_back(c.bits());
        std::sort(masks.begin(), masks.end());
    }
    long find(VertexSet c) const {
        auto it = std::lower_bound(masks.begin(), masks.end(), c.bits());
        if (it == masks.end() || *it != c.bits()) return -1;
        return it - masks.begin();
    }
    size_t size() const { return masks.size(); }
};

// Round-synchronized deletion; survival in each round is judged against the
// set alive at the start of the round, so the result and the per-round ranks
// do not depend on scan order or worker count.
template <typename Rule>
std::vector<char> fixed_point_naive(const Graph& g, const ConfigIndex& index, const SolveOptions& opts,
                                    std::vector<int>* round_of_death, std::vector<int>* witness) {
    std::vector<char> alive(index.size(), 1);
    if (round_of_death) round_of_death->assign(index.size(), 0);
    if (witness) witness->assign(index.size(), -1);

    auto survives = [&](long i, int* bad_attack) {
        VertexSet d(index.masks[static_cast<size_t>(i)]);
        bool ok = true;
        Rule::for_each_threat(g, d, [&](int a) {
            if (!ok) return;
            bool answered = false;
            Rule::for_each_reply(g, d, a, [&](VertexSet r) {
                if (answered) return;
                long j = index.find(r);
                if (j >= 0 && alive[static_cast<size_t>(j)]) answered = true;
            });
            if (!answered) {
                ok = false;
                if (bad_attack) *bad_attack = a;
            }
        });
        return ok;
    };

    int workers = std::max(1, opts.workers);
    for (int round = 1;; ++round) {
        if (opts.deadline) opts.deadline->check("fixed point");
        std::vector<long> deaths;
        std::vector<int> death_attack;
        if (workers == 1 || index.size() < 1024) {
            for (long i = 0; i < static_cast<long>(index.size()); ++i) {
                int bad = -1;
                if (alive[static_cast<size_t>(i)] && !survives(i, &bad)) {
                    deaths.push_back(i);
                    death_attack.push_back(bad);
                }
            }
        } else {
            std::vector<std::vector<long>> dead_chunks(static_cast<size_t>(workers));
            std::vector<std::vector<int>> attack_chunks(static_cast<size_t>(workers));
            std::vector<std::thread> pool;
            long chunk = static_cast<long>((index.size() + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers));
            for (int t = 0; t < workers; ++t) {
                pool.emplace_back([&, t] {
                    long lo = t * chunk, hi = std::min<long>(lo + chunk, static_cast<long>(index.size()));
                    for (long i = lo; i < hi; ++i) {
                        int bad = -1;
                        if (alive[static_cast<size_t>(i)] && !survives(i, &bad)) {
                            dead_chunks[static_cast<size_t>(t)].push_back(i);
                            attack_chunks[static_cast<size_t>(t)].push_back(bad);
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < workers; ++t) {
                deaths.insert(deaths.end(), dead_chunks[static_cast<size_t>(t)].begin(), dead_chunks[static_cast<size_t>(t)].end());
                death_attack.insert(death_attack.end(), attack_chunks[static_cast<size_t>(t)].begin(), attack_chunks[static_cast<size_t>(t)].end());
            }
        }
        if (deaths.empty()) break;
        for (size_t d = 0; d < deaths.size(); ++d) {
            alive[static_cast<size_t>(deaths[d])] = 0;
            if (round_of_death) (*round_of_death)[static_cast<size_t>(deaths[d])] = round;
            if (witness) (*witness)[static_cast<size_t>(deaths[d])] = death_attack[d];
        }
    }
    return alive;
}

// Worklist deletion with per-(configuration, attack) counters of surviving
// replies; deleting a configuration decrements the counter of every
// predecessor pair that used it.
template <typename Rule>
std::vector<char> fixed_point_worklist(const Graph& g, const ConfigIndex& index, const SolveOptions& opts) {
    int n = g.size();
    size_t m = index.size();
    std::vector<char> alive(m, 1);
    std::vector<std::uint16_t> counts(m * static_cast<size_t>(n), 0);
    std::vector<long> queue;

    auto kill = [&](long i) {
        if (alive[static_cast<size_t>(i)]) {
            alive[static_cast<size_t>(i)] = 0;
            queue.push_back(i);
        }
    };

    for (long i = 0; i < static_cast<long>(m); ++i) {
        if (opts.deadline && (i & 0xfff) == 0) opts.deadline->check("fixed point init");
        VertexSet d(index.masks[static_cast<size_t>(i)]);
        Rule::for_each_threat(g, d, [&](int a) {
            std::uint16_t c = 0;
            Rule::for_each_reply(g, d, a, [&](VertexSet r) {
                if (index.find(r) >= 0) ++c;
            });
            counts[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(a)] = c;
            if (c == 0) kill(i);
        });
    }

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        if (opts.deadline && (qi & 0xfff) == 0) opts.deadline->check("fixed point propagation");
        VertexSet dead(index.masks[static_cast<size_t>(queue[qi])]);
        Rule::for_each_predecessor(g, dead, [&](VertexSet pred, int attacked) {
            long p = index.find(pred);
            if (p < 0 || !alive[static_cast<size_t>(p)]) return;
            std::uint16_t& c = counts[static_cast<size_t>(p) * static_cast<size_t>(n) + static_cast<size_t>(attacked)];
            assert(c > 0);
            if (--c == 0) kill(p);
        });
    }
    return alive;
}

template <typename Rule>
SafeSet solve_safe_set(const Graph& g, int k, const SolveOptions& opts) {
    SafeSet s;
    s.k = k;
    ConfigIndex index(dominating_sets(g, k));
    std::vector<char> alive = opts.engine == Engine::naive
                                  ? fixed_point_naive<Rule>(g, index, opts, nullptr, nullptr)
                                  : fixed_point_worklist<Rule>(g, index, opts);
    for (size_t i = 0; i < index.size(); ++i)
        if (alive[i]) s.members.push_back(VertexSet(index.masks[i]));
    std::sort(s.members.begin(), s.members.end(), lex_less);
    return s;
}

// The family is the whole safe set; each attack is answered by the surviving
// reply that the rule enumerates first (lowest destination vertex for
// eviction, lowest moving guard for eternal domination).
template <typename Rule>
StrategyFamily extract_family(const Graph& g, int k, const SolveOptions& opts, const char* game) {
    SafeSet safe = Rule::safe(g, k, opts);
    if (safe.empty())
        throw ContractError(std::string("no strategy: ") + game + " safe set at k=" + std::to_string(k) + " is empty");

    StrategyFamily f;
    f.k = k;
    f.family = safe.members;
    for (VertexSet d : f.family) {
        Rule::Base::for_each_threat(g, d, [&](int a) {
            VertexSet to;
            bool found = false;
            Rule::Base::for_each_reply(g, d, a, [&](VertexSet r) {
                if (!found && safe.contains(r)) {
                    to = r;
                    found = true;
                }
            });
            assert(found);  // d is in the fixed point
            f.moves[{d.bits(), a}] = to.bits();
        });
        if (Rule::self_loop_surrounded) {
            for (int v : d)
                if ((g.neighbors(v) - d).empty()) f.moves[{d.bits(), v}] = d.bits();
        }
    }
    return f;
}

struct EvictionFamilyRule {
    using Base = EvictionRule;
    static constexpr bool self_loop_surrounded = true;
    static SafeSet safe(const Graph& g, int k, const SolveOptions& o) { return eviction_safe_set(g, k, o); }
};

struct EternalFamilyRule {
    using Base = EternalRule;
    static constexpr bool self_loop_surrounded = false;
    static SafeSet safe(const Graph& g, int k, const SolveOptions& o) { return eternal_safe_set(g, k, o); }
};

std::vector<int> to_list(VertexSet s) {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    return out;
}

}  // namespace

std::vector<VertexSet> dominating_sets(const Graph& g, int k) {
    if (k < 1 || k > g.size())
        throw ContractError("dominating_sets: k must be in [1, n], got " + std::to_string(k));
    if (binomial(g.size(), k) > config_cap)
        throw CapacityError("dominating_sets: C(" + std::to_string(g.size()) + "," + std::to_string(k) +
                            ") exceeds the configuration cap");
    std::vector<VertexSet> cover;
    for (int v = 0; v < g.size(); ++v) cover.push_back(g.closed_neighborhood(v));
    std::vector<VertexSet> out;
    enumerate_subsets(g.size(), k, 0, VertexSet(), out, cover, VertexSet(), g.vertices());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool SafeSet::contains(VertexSet c) const {
    auto it = std::lower_bound(members.begin(), members.end(), c, lex_less);
    return it != members.end() && *it == c;
}

SafeSet eviction_safe_set(const Graph& g, int k, const SolveOptions& opts) {
    return solve_safe_set<EvictionRule>(g, k, opts);
}

SafeSet eternal_safe_set(const Graph& g, int k, const SolveOptions& opts) {
    return solve_safe_set<EternalRule>(g, k, opts);
}

int eviction_number(const Graph& g, const SolveOptions& opts) {
    auto [gamma, gamma_set] = domination_number(g);
    for (int k = gamma; k <= g.size(); ++k) {
        if (!eviction_safe_set(g, k, opts).empty()) {
            auto [theta, part] = clique_cover_number(g);
            if (k > theta)
                throw std::logic_error("eviction number " + std::to_string(k) + " exceeds theta = " +
                                       std::to_string(theta) + ": bound chain violated");
            return k;
        }
    }
    // the all-vertices configuration is dominating and every attack self-loops
    throw std::logic_error("eviction safe set empty even at k = n");
}

int eternal_domination_number(const Graph& g, const SolveOptions& opts) {
    auto [gamma, gamma_set] = domination_number(g);
    for (int k = gamma; k <= g.size(); ++k) {
        if (!eternal_safe_set(g, k, opts).empty()) {
            auto [alpha, alpha_set] = independence_number(g);
            if (k < alpha)
                throw std::logic_error("eternal domination number " + std::to_string(k) +
                                       " below alpha = " + std::to_string(alpha));
            if (2L * k > static_cast<long>(alpha + 1) * alpha)
                throw std::logic_error("eternal domination number " + std::to_string(k) +
                                       " above binom(alpha+1,2)");
            return k;
        }
    }
    throw std::logic_error("eternal safe set empty even at k = n");
}

bool StrategyFamily::knows(VertexSet config, int attacked) const {
    return moves.count({config.bits(), attacked}) > 0;
}

VertexSet StrategyFamily::respond(VertexSet config, int attacked) const {
    auto it = moves.find({config.bits(), attacked});
    if (it == moves.end()) throw ContractError("strategy has no move for this configuration/attack");
    return VertexSet(it->second);
}

VertexSet StrategyFamily::start() const {
    if (family.empty()) throw ContractError("empty strategy family");
    return family.front();
}

StrategyFamily extract_eviction_family(const Graph& g, int k, const SolveOptions& opts) {
    return extract_family<EvictionFamilyRule>(g, k, opts, "eviction");
}

StrategyFamily extract_eternal_family(const Graph& g, int k, const SolveOptions& opts) {
    return extract_family<EternalFamilyRule>(g, k, opts, "eternal domination");
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool in_family(const std::vector<VertexSet>& family, VertexSet c) {
    auto it = std::lower_bound(family.begin(), family.end(), c, lex_less);
    return it != family.end() && *it == c;
}

}  // namespace

bool verify_eviction_family(const Graph& g, const StrategyFamily& f, std::string* why) {
    for (auto d : f.family) {
        if (d.count() != f.k) return fail(why, "member with wrong guard count");
        if (!is_dominating_set(g, d)) return fail(why, "member is not a dominating set");
        for (int v : d) {
            if ((g.neighbors(v) - d).empty()) continue;  // surrounded: guard stays put
            auto it = f.moves.find({d.bits(), v});
            if (it == f.moves.end()) return fail(why, "missing reply to an attack");
            VertexSet to(it->second);
            if (to == d) return fail(why, "reply may not stand still when a move exists");
            VertexSet gone = d - to, arrived = to - d;
            if (gone.count() != 1 || arrived.count() != 1 || gone.lowest() != v ||
                !g.neighbors(v).test(arrived.lowest()))
                return fail(why, "reply is not an eviction of the attacked guard to a neighbour");
            if (!in_family(f.family, to)) return fail(why, "reply leaves the family");
        }
    }
    return true;
}

bool verify_eternal_family(const Graph& g, const StrategyFamily& f, std::string* why) {
    for (auto d : f.family) {
        if (d.count() != f.k) return fail(why, "member with wrong guard count");
        if (!is_dominating_set(g, d)) return fail(why, "member is not a dominating set");
        for (int w : (g.vertices() - d)) {
            auto it = f.moves.find({d.bits(), w});
            if (it == f.moves.end()) return fail(why, "missing reply to an attack");
            VertexSet to(it->second);
            VertexSet gone = d - to, arrived = to - d;
            if (gone.count() != 1 || arrived.count() != 1 || arrived.lowest() != w ||
                !g.neighbors(w).test(gone.lowest()))
                return fail(why, "reply must move one neighbouring guard onto the attacked vertex");
            if (!in_family(f.family, to)) return fail(why, "reply leaves the family");
        }
    }
    return true;
}

int AttackCertificate::attack_for(VertexSet config) const {
    auto it = choice.find(config.bits());
    if (it == choice.end()) throw ContractError("certificate has no entry for this configuration");
    return it->second;
}

AttackCertificate attacker_certificate(const Graph& g, int k, const SolveOptions& opts) {
    ConfigIndex index(dominating_sets(g, k));
    std::vector<int> round_of_death, witness;
    SolveOptions naive_opts = opts;
    naive_opts.workers = 1;
    std::vector<char> alive = fixed_point_naive<EvictionRule>(g, index, naive_opts, &round_of_death, &witness);
    for (char a : alive)
        if (a)
            throw ContractError("attacker_certificate: safe set at k=" + std::to_string(k) +
                                " is nonempty, the defender wins");
    AttackCertificate cert;
    cert.k = k;
    for (size_t i = 0; i < index.size(); ++i) {
        cert.choice[index.masks[i]] = witness[i];
        cert.rank[index.masks[i]] = round_of_death[i];
        cert.rounds = std::max(cert.rounds, round_of_death[i]);
    }
    return cert;
}

namespace {

Transcript run_simulation(const Graph& g, const StrategyFamily& f, const std::function<int(VertexSet, int)>& pick,
                          int steps) {
    Transcript t;
    VertexSet config = f.start();
    for (int i = 0; i < steps; ++i) {
        TranscriptStep step;
        step.index = i;
        step.before = config;
        int a = pick(config, i);
        step.attack = a;
        if (a < 0) break;  // attacker gives up
        if (a >= g.size() || !config.test(a)) {
            step.accepted = false;
            step.after = config;
            step.dominating = is_dominating_set(g, config);
            step.note = "attack rejected: vertex unoccupied";
            t.steps.push_back(step);
            continue;
        }
        step.accepted = true;
        if ((g.neighbors(a) - config).empty()) {
            step.after = config;
            step.note = "surrounded guard stays put";
        } else if (f.knows(config, a)) {
            step.after = f.respond(config, a);
        } else {
            step.after = config;
            step.dominating = is_dominating_set(g, config);
            step.note = "no reply in strategy";
            t.steps.push_back(step);
            t.first_violation = i;
            return t;
        }
        step.dominating = is_dominating_set(g, step.after);
        if (!step.dominating) {
            step.note = step.note.empty() ? "domination lost" : step.note + "; domination lost";
            t.steps.push_back(step);
            t.first_violation = i;
            return t;
        }
        t.steps.push_back(step);
        config = step.after;
    }
    return t;
}

}  // namespace

Transcript simulate(const Graph& g, const StrategyFamily& f, std::span<const int> attacks) {
    return run_simulation(
        g, f, [&](VertexSet, int i) { return attacks[static_cast<size_t>(i)]; },
        static_cast<int>(attacks.size()));
}

Transcript simulate_random(const Graph& g, const StrategyFamily& f, int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_simulation(
        g, f,
        [&](VertexSet config, int) {
            auto vs = to_list(config);
            return vs[std::uniform_int_distribution<size_t>(0, vs.size() - 1)(rng)];
        },
        steps);
}

Transcript simulate_duel(const Graph& g, const StrategyFamily& f, const AttackCertificate& cert, int max_steps) {
    return run_simulation(
        g, f,
        [&](VertexSet config, int) {
            auto it = cert.choice.find(config.bits());
            return it == cert.choice.end() ? -1 : it->second;
        },
        max_steps);
}

std::string safe_set_json(const SafeSet& s) {
    nlohmann::json j;
    j["k"] = s.k;
    j["members"] = nlohmann::json::array();
    for (auto m : s.members) j["members"].push_back(to_list(m));
    return j.dump();
}

std::string strategy_family_json(const StrategyFamily& f) {
    nlohmann::json j;
    j["k"] = f.k;
    j["family"] = nlohmann::json::array();
    std::vector<std::uint64_t> order;
    for (auto m : f.family) {
        j["family"].push_back(to_list(m));
        order.push_back(m.bits());
    }
    auto index_of = [&](std::uint64_t bits) {
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == bits) return static_cast<long>(i);
        return -1L;
    };
    j["moves"] = nlohmann::json::array();
    for (const auto& [key, to] : f.moves)
        j["moves"].push_back({index_of(key.first), key.second, index_of(to)});
    return j.dump();
}

std::string certificate_json(const AttackCertificate& c) {
    nlohmann::json j;
    j["k"] = c.k;
    j["rounds"] = c.rounds;
    j["nodes"] = nlohmann::json::array();
    for (const auto& [mask, attack] : c.choice)
        j["nodes"].push_back(
            {{"config", to_list(VertexSet(mask))}, {"attack", attack}, {"rank", c.rank.at(mask)}});
    return j.dump();
}

std::string transcript_jsonl(const Transcript& t) {
    std::ostringstream out;
    for (const auto& s : t.steps) {
        nlohmann::json j;
        j["step"] = s.index;
        j["attack"] = s.attack;
        j["accepted"] = s.accepted;
        j["before"] = to_list(s.before);
        j["after"] = to_list(s.after);
        j["dominating"] = s.dominating;
        if (!s.note.empty()) j["note"] = s.note;
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace evictlab
