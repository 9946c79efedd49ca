#include "evictlab/hunt.hpp"

#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "evictlab/canonical.hpp"
#include "evictlab/game.hpp"
#include "evictlab/graph_io.hpp"
#include "evictlab/invariants.hpp"

namespace evictlab {

HuntPredicate HuntPredicate::parse(std::string_view text) {
    HuntPredicate p;
    if (text == "alpha3-eviction5") {
        p.tag = Tag::alpha3_eviction5;
        return p;
    }
    if (text == "eternal-lt-eviction") {
        p.tag = Tag::eternal_lt_eviction;
        return p;
    }
    if (text == "ratio-exceeds") return p;  // default 4/3
    if (text.rfind("ratio-exceeds:", 0) == 0) {
        std::string frac(text.substr(std::string_view("ratio-exceeds:").size()));
        size_t slash = frac.find('/');
        try {
            if (slash == std::string::npos) {
                p.num = std::stol(frac);
                p.den = 1;
            } else {
                p.num = std::stol(frac.substr(0, slash));
                p.den = std::stol(frac.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw ParseError(ParseError::Kind::bad_format, "predicate: bad ratio in '" + std::string(text) + "'");
        }
        if (p.den < 1 || p.num < 0)
            throw ParseError(ParseError::Kind::bad_format, "predicate: ratio must be nonnegative");
        return p;
    }
    throw ParseError(ParseError::Kind::bad_format, "unknown predicate '" + std::string(text) + "'");
}

std::string HuntPredicate::describe() const {
    switch (tag) {
        case Tag::ratio_exceeds: return "ratio-exceeds:" + std::to_string(num) + "/" + std::to_string(den);
        case Tag::alpha3_eviction5: return "alpha3-eviction5";
        case Tag::eternal_lt_eviction: return "eternal-lt-eviction";
    }
    return "?";
}

std::string Finding::jsonl() const {
    nlohmann::json j;
    j["graph6"] = graph6;
    j["alpha"] = alpha;
    j["eviction"] = eviction;
    if (eternal) j["eternal"] = *eternal;
    j["predicate"] = predicate;
    j["value"] = value;
    return j.dump();
}

std::string HuntResult::summary() const {
    std::ostringstream out;
    out << "processed " << processed << ", duplicates " << duplicates << ", skipped " << skipped << ", findings "
        << findings.size();
    if (best_den > 0 && best_num > 0)
        out << ", max eviction/alpha = " << best_num << "/" << best_den << " at " << best_graph6;
    return out.str();
}

namespace {

struct Evaluation {
    bool duplicate = false;
    bool skipped = false;
    std::string error;
    int alpha = 0;
    int eviction = 0;
    std::optional<int> eternal;
    std::string graph6;
};

}  // namespace

HuntResult hunt(const std::vector<Graph>& graphs, const HuntPredicate& pred, const HuntOptions& opts) {
    HuntResult result;
    std::vector<Evaluation> evals(graphs.size());

    // dedup pass is order-dependent, keep it sequential
    if (opts.dedup) {
        std::set<std::string> seen;
        for (size_t i = 0; i < graphs.size(); ++i) {
            std::string key =
                graphs[i].size() <= 8 ? canonical_graph6(graphs[i]) : emit_graph6(graphs[i]);
            if (!seen.insert(key).second) evals[i].duplicate = true;
        }
    }

    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) return;
            Evaluation& e = evals[i];
            if (e.duplicate) continue;
            const Graph& g = graphs[i];
            e.graph6 = emit_graph6(g);
            Deadline deadline;
            SolveOptions solve;
            if (opts.timeout_ms > 0) {
                deadline = Deadline::after_ms(opts.timeout_ms);
                solve.deadline = &deadline;
            }
            try {
                e.alpha = independence_number(g).first;
                e.eviction = eviction_number(g, solve);
                if (pred.needs_eternal()) e.eternal = eternal_domination_number(g, solve);
            } catch (const TimeoutError& ex) {
                e.skipped = true;
                e.error = e.graph6 + ": " + ex.what();
            } catch (const CapacityError& ex) {
                e.skipped = true;
                e.error = e.graph6 + ": " + ex.what();
            }
        }
    };

    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // aggregation in input order keeps output deterministic
    for (const Evaluation& e : evals) {
        if (e.duplicate) {
            ++result.duplicates;
            continue;
        }
        if (e.skipped) {
            ++result.skipped;
            result.errors.push_back(e.error);
            continue;
        }
        ++result.processed;
        if (static_cast<long>(e.eviction) * result.best_den > result.best_num * static_cast<long>(e.alpha)) {
            result.best_num = e.eviction;
            result.best_den = e.alpha;
            result.best_graph6 = e.graph6;
        }
        bool hit = false;
        std::string value;
        switch (pred.tag) {
            case HuntPredicate::Tag::ratio_exceeds:
                hit = static_cast<long>(e.eviction) * pred.den > pred.num * static_cast<long>(e.alpha);
                value = std::to_string(e.eviction) + "/" + std::to_string(e.alpha);
                break;
            case HuntPredicate::Tag::alpha3_eviction5:
                hit = e.alpha == 3 && e.eviction == 5;
                value = "alpha=3, eviction=" + std::to_string(e.eviction);
                break;
            case HuntPredicate::Tag::eternal_lt_eviction:
                hit = e.eternal && *e.eternal < e.eviction;
                value = "eternal=" + std::to_string(e.eternal.value_or(-1)) +
                        ", eviction=" + std::to_string(e.eviction);
                break;
        }
        if (hit)
            result.findings.push_back({e.graph6, e.alpha, e.eviction, e.eternal, pred.describe(), value});
    }
    return result;
}

}  // namespace evictlab
