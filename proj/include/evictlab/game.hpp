#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "evictlab/graph.hpp"

namespace evictlab {

/*
 * Game semantics. A configuration is a set of k occupied vertices, one guard
 * per vertex, and play starts from a dominating configuration.
 *
 * Eviction game: the attacker names an occupied vertex v. If every neighbour
 * of v is occupied the guard is surrounded and stays put; otherwise the guard
 * must move to some unoccupied neighbour. The defender loses as soon as the
 * configuration stops being dominating.
 *
 * Eternal domination game: the attacker names an unoccupied vertex w and a
 * guard on some occupied neighbour of w must move onto w.
 *
 * Safe sets are greatest fixed points: start from all dominating k-sets and
 * delete any configuration with an attack all of whose replies are already
 * deleted (or leave the dominating collection). Two engines compute the same
 * fixed point: a round-synchronized scan (the reference path, parallelizable
 * by partitioning each round) and a worklist with response counters (the
 * fast path).
 */

enum class Engine { worklist, naive };

struct SolveOptions {
    Engine engine = Engine::worklist;
    int workers = 1;  // naive engine only; result is worker-count independent
    const Deadline* deadline = nullptr;
};

/// All dominating k-subsets of V(g), sorted by configuration order.
std::vector<VertexSet> dominating_sets(const Graph& g, int k);

struct SafeSet {
    int k = 0;
    std::vector<VertexSet> members;  // sorted by lex_less

    bool empty() const { return members.empty(); }
    bool contains(VertexSet c) const;
};

SafeSet eviction_safe_set(const Graph& g, int k, const SolveOptions& opts = {});
SafeSet eternal_safe_set(const Graph& g, int k, const SolveOptions& opts = {});

/// Least k with a nonempty eviction safe set, searched upward from gamma(g).
/// Throws std::logic_error if the result would violate gamma <= e <= theta.
int eviction_number(const Graph& g, const SolveOptions& opts = {});

/// Least k with a nonempty eternal-domination safe set; checked against
/// alpha <= result <= binom(alpha+1, 2).
int eternal_domination_number(const Graph& g, const SolveOptions& opts = {});

/// A family of same-size configurations together with a move map
/// (configuration, attacked vertex) -> configuration, closed under moves.
struct StrategyFamily {
    int k = 0;
    std::vector<VertexSet> family;  // sorted by lex_less
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> moves;

    bool knows(VertexSet config, int attacked) const;
    VertexSet respond(VertexSet config, int attacked) const;  // ContractError if unknown
    VertexSet start() const;                                  // lex-least member
};

/// The full safe set with a move for every attack: the surviving reply with
/// the lowest destination vertex (eviction) or lowest moving guard (eternal).
/// ContractError when the safe set is empty.
StrategyFamily extract_eviction_family(const Graph& g, int k, const SolveOptions& opts = {});
StrategyFamily extract_eternal_family(const Graph& g, int k, const SolveOptions& opts = {});

/// Definitional checks of an eternal dominating family for each game: all
/// members dominating k-sets, every attack answered inside the family, every
/// move a legal single-guard step.
bool verify_eviction_family(const Graph& g, const StrategyFamily& f, std::string* why = nullptr);
bool verify_eternal_family(const Graph& g, const StrategyFamily& f, std::string* why = nullptr);

/// Attacker's winning plan when the eviction safe set at k is empty: for
/// every dominating configuration, a witness attack all of whose replies are
/// non-dominating or carry a strictly smaller deletion rank.
struct AttackCertificate {
    int k = 0;
    std::map<std::uint64_t, int> choice;  // config -> attacked vertex
    std::map<std::uint64_t, int> rank;    // deletion round, >= 1
    int rounds = 0;

    int attack_for(VertexSet config) const;  // ContractError if config unknown
};

/// ContractError if the safe set at k is nonempty.
AttackCertificate attacker_certificate(const Graph& g, int k, const SolveOptions& opts = {});

struct TranscriptStep {
    int index = 0;
    int attack = -1;
    bool accepted = false;
    VertexSet before, after;
    bool dominating = false;
    std::string note;
};

struct Transcript {
    std::vector<TranscriptStep> steps;
    int first_violation = -1;  // step index, or -1

    bool clean() const { return first_violation < 0; }
};

/// Plays the given attack sequence against the family's move map, starting
/// from its lex-least configuration. Attacks on unoccupied vertices are
/// rejected per step and play continues; the first step whose reply is
/// missing or breaks domination is flagged and ends the run.
Transcript simulate(const Graph& g, const StrategyFamily& f, std::span<const int> attacks);

/// Random occupied-vertex attacks from the given seed.
Transcript simulate_random(const Graph& g, const StrategyFamily& f, int steps, std::uint64_t seed);

/// Certificate attacker versus family defender (both eviction-side).
Transcript simulate_duel(const Graph& g, const StrategyFamily& f, const AttackCertificate& cert,
                         int max_steps);

std::string safe_set_json(const SafeSet& s);
std::string strategy_family_json(const StrategyFamily& f);
std::string certificate_json(const AttackCertificate& c);
std::string transcript_jsonl(const Transcript& t);

}  // namespace evictlab
