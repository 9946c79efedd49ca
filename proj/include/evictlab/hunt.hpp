#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evictlab/graph.hpp"

namespace evictlab {

/// Counterexample predicates over exact game numbers.
///   ratio-exceeds:p/q   eviction/alpha strictly above p/q (default 4/3)
///   alpha3-eviction5    alpha = 3 and eviction = 5
///   eternal-lt-eviction eternal domination number below eviction number
struct HuntPredicate {
    enum class Tag { ratio_exceeds, alpha3_eviction5, eternal_lt_eviction };

    Tag tag = Tag::ratio_exceeds;
    long num = 4, den = 3;

    static HuntPredicate parse(std::string_view text);
    bool needs_eternal() const { return tag == Tag::eternal_lt_eviction; }
    std::string describe() const;
};

struct Finding {
    std::string graph6;
    int alpha = 0;
    int eviction = 0;
    std::optional<int> eternal;
    std::string predicate;
    std::string value;

    std::string jsonl() const;
};

struct HuntOptions {
    int workers = 1;
    long timeout_ms = 0;  // per graph; 0 = none
    bool dedup = true;    // canonical-form dedup for n <= 8, verbatim g6 above
};

struct HuntResult {
    std::vector<Finding> findings;  // in input order, deterministic
    long processed = 0;
    long duplicates = 0;
    long skipped = 0;                 // timeouts / capacity, see errors
    std::vector<std::string> errors;  // one line per skipped graph
    long best_num = 0, best_den = 1;  // max observed eviction/alpha
    std::string best_graph6;

    std::string summary() const;
};

/// Evaluates the predicate on every graph. Worker pool over graphs; the
/// finding set and summary are independent of the worker count.
HuntResult hunt(const std::vector<Graph>& graphs, const HuntPredicate& pred, const HuntOptions& opts);

}  // namespace evictlab
