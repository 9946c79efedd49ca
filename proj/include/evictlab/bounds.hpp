#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "evictlab/game.hpp"
#include "evictlab/graph.hpp"

namespace evictlab {

using BigInt = boost::multiprecision::cpp_int;

/// An exact Ramsey value or a [lo, hi] interval, with provenance.
struct RamseyValue {
    BigInt lo, hi;
    std::string source;

    bool exact() const { return lo == hi; }
    std::string str() const;
};

/*
 * Known values and bounds of r(s,t). r(1,t) = 1 and r(2,t) = t are built-in
 * rules; tabulated entries carry a provenance tag (paper / bruteforce /
 * literature). Entries outside the table fall back to the best monotone
 * lower bound from the table and the binomial(s+t-2, s-1) upper bound.
 * Only paper-anchored and brute-force-verifiable entries gate tests.
 */
class RamseyTable {
public:
    struct Entry {
        int s, t;
        long lo, hi;
        std::string source;
    };

    static const RamseyTable& builtin();
    static RamseyTable parse(std::istream& in);  // "s t lo hi source" lines

    RamseyValue lookup(int s, const BigInt& t) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
    std::map<std::pair<int, int>, size_t> by_key_;
};

/// r(s,t) from the builtin table (exact value or interval).
RamseyValue ramsey_number(int s, int t);

/// Exhaustive check over all graphs on < n vertices for small s,t: the least
/// n forcing an independent s-set or a t-clique, or nullopt if above max_n.
std::optional<int> ramsey_brute_force(int s, int t, int max_n);

/// The nested sizes l_k = k+1, l_{j-1} = r(k+1, l_j), returned from l_k down
/// to l_0. The last element is the disjoint-MIS packing threshold c_k that
/// makes the k^2-guard array defense available. Exact where the table knows
/// the value, interval arithmetic otherwise. Capped at k <= 8: beyond that
/// the upper ends no longer fit in memory.
std::vector<RamseyValue> ramsey_chain(int k);

/// c_k = l_0 of the chain.
RamseyValue packing_threshold(int k);

/// f(k): guards that always suffice at independence number k. f(1) = 1;
/// for k >= 2 this evaluates 2 k c_k (k^{k-1} - 1)/(k - 1) exactly (the
/// division always comes out even).
BigInt guards_bound(int k, const BigInt& c_k);

/// Size cap k^{i+1} c_k of the i-th peeled set, 0 <= i <= k-2.
BigInt peel_size_bound(int k, const BigInt& c_k, int i);

/// Cap on the total peeled size: k c_k (k^{k-1} - 1)/(k - 1), half of f(k).
BigInt peel_size_total(int k, const BigInt& c_k);

struct BoundReport {
    std::string name;
    std::string graph6;
    int n = 0;
    int alpha = 0, gamma = 0, theta = 0, omega = 0;
    bool triangle_free = false, cograph = false;
    std::optional<int> eviction, eternal;
    std::string game_note;  // why exact game values are absent
    std::optional<RamseyValue> guards_bound_alpha;
    std::string guards_bound_note;

    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;

    bool all_pass() const;
};

/// Classical parameters, optional exact game numbers, f(alpha), and the
/// pass/fail status of every bound relation between them.
BoundReport bound_report(const Graph& g, bool with_exact_game, const SolveOptions& opts = {});

std::string bound_report_json(const BoundReport& r);
std::string bound_report_table(const BoundReport& r);

}  // namespace evictlab
