#include "evictlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "evictlab/graph_io.hpp"
#include "evictlab/invariants.hpp"

namespace evictlab {

namespace {

// Content of data/ramsey.txt; kept in sync by a unit test.
constexpr const char* builtin_table_text = R"(# Ramsey number table, version 1
# s t lo hi source
3 3 6 6 paper
3 4 9 9 literature
3 5 14 14 literature
3 6 18 18 paper
3 7 23 23 literature
3 8 28 28 literature
3 9 36 36 literature
3 10 40 42 literature
4 4 18 18 literature
4 5 25 25 literature
4 6 36 40 literature
4 7 49 58 literature
5 5 43 48 literature
5 6 58 85 literature
6 6 102 165 literature
)";

BigInt binomial_big(const BigInt& n, int k) {
    if (k < 0 || n < k) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

}  // namespace

std::string RamseyValue::str() const {
    if (exact()) return lo.str();
    return "[" + lo.str() + "," + hi.str() + "]";
}

const RamseyTable& RamseyTable::builtin() {
    static const RamseyTable table = [] {
        std::istringstream in(builtin_table_text);
        return parse(in);
    }();
    return table;
}

RamseyTable RamseyTable::parse(std::istream& in) {
    RamseyTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        Entry e;
        if (!(row >> e.s >> e.t >> e.lo >> e.hi >> e.source))
            throw ParseError(ParseError::Kind::bad_format, "ramsey table: bad line: " + line);
        if (e.s > e.t) std::swap(e.s, e.t);
        if (e.s < 3 || e.lo > e.hi)
            throw ParseError(ParseError::Kind::bad_format, "ramsey table: inconsistent entry: " + line);
        table.by_key_[{e.s, e.t}] = table.entries_.size();
        table.entries_.push_back(e);
    }
    return table;
}

RamseyValue RamseyTable::lookup(int s, const BigInt& t) const {
    if (s < 1 || t < 1) throw ContractError("ramsey_number: arguments must be positive");
    if (t < s) {
        if (t > max_vertices) throw CapacityError("ramsey lookup: symmetric swap of oversized argument");
        return lookup(static_cast<int>(t), BigInt(s));
    }
    if (s == 1) return {1, 1, "definition"};
    if (s == 2) return {t, t, "definition"};
    if (t <= 1'000'000) {
        auto it = by_key_.find({s, static_cast<int>(t)});
        if (it != by_key_.end()) {
            const Entry& e = entries_[it->second];
            return {e.lo, e.hi, e.source};
        }
    }
    // interval fallback: monotone lower bound from the table (and from
    // r(2,t) = t), Erdos-Szekeres binomial upper bound
    BigInt lo = t;  // r(s,t) >= r(2,t) for s >= 2
    for (const Entry& e : entries_)
        if (e.s <= s && e.t <= t && e.lo > lo) lo = e.lo;
    BigInt hi = binomial_big(t + s - 2, s - 1);
    return {lo, hi, "interval"};
}

RamseyValue ramsey_number(int s, int t) {
    return RamseyTable::builtin().lookup(s, BigInt(t));
}

std::optional<int> ramsey_brute_force(int s, int t, int max_n) {
    // arrow(n): every graph on n vertices has an independent s-set or a t-clique
    auto arrow = [&](int n) {
        if (n == 0) return s == 0 || t == 0;
        long pairs = static_cast<long>(n) * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            long bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            if (alpha_within(g, g.vertices()) < s && alpha_within(complement(g), g.vertices()) < t)
                return false;  // witness avoiding both
        }
        return true;
    };
    for (int n = std::max(1, std::max(s, t) - 1); n <= max_n; ++n)
        if (arrow(n)) return n;
    return std::nullopt;
}

std::vector<RamseyValue> ramsey_chain(int k) {
    if (k < 1) throw ContractError("ramsey_chain: k must be >= 1");
    if (k > 8) throw CapacityError("ramsey_chain: upper ends beyond k = 8 are too large to materialize");
    std::vector<RamseyValue> chain;
    chain.push_back({k + 1, k + 1, "definition"});  // l_k
    const RamseyTable& table = RamseyTable::builtin();
    for (int j = k; j >= 1; --j) {
        const RamseyValue& prev = chain.back();
        RamseyValue lo_side = table.lookup(k + 1, prev.lo);
        RamseyValue hi_side = table.lookup(k + 1, prev.hi);
        chain.push_back({lo_side.lo, hi_side.hi, prev.exact() && lo_side.exact() ? lo_side.source : "interval"});
    }
    return chain;
}

RamseyValue packing_threshold(int k) {
    return ramsey_chain(k).back();
}

BigInt guards_bound(int k, const BigInt& c_k) {
    if (k < 1) throw ContractError("guards_bound: k must be >= 1");
    if (k == 1) return 1;
    BigInt power = 1;
    for (int i = 0; i < k - 1; ++i) power *= k;
    BigInt q = (power - 1) / (k - 1);  // exact: k = 1 mod (k-1)
    return 2 * k * c_k * q;
}

BigInt peel_size_bound(int k, const BigInt& c_k, int i) {
    if (i < 0 || i > k - 2) throw ContractError("peel_size_bound: i must lie in [0, k-2]");
    BigInt r = c_k;
    for (int p = 0; p <= i; ++p) r *= k;
    return r;
}

BigInt peel_size_total(int k, const BigInt& c_k) {
    return guards_bound(k, c_k) / 2;
}

bool BoundReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

BoundReport bound_report(const Graph& g, bool with_exact_game, const SolveOptions& opts) {
    BoundReport r;
    r.name = g.name();
    r.graph6 = emit_graph6(g);
    r.n = g.size();
    ParamReport params = param_report(g);
    r.alpha = params.alpha;
    r.gamma = params.gamma;
    r.theta = params.theta;
    r.omega = params.omega;
    r.triangle_free = is_triangle_free(g);
    r.cograph = is_cograph(g);

    if (with_exact_game) {
        constexpr int game_cap = 18;
        if (g.size() > game_cap) {
            r.game_note = "skipped: exact game solving capped at " + std::to_string(game_cap) + " vertices";
        } else {
            try {
                r.eviction = eviction_number(g, opts);
                r.eternal = eternal_domination_number(g, opts);
            } catch (const CapacityError& e) {
                r.game_note = std::string("skipped: ") + e.what();
            }
            // a TimeoutError propagates: the caller asked for the deadline
        }
    }

    if (r.alpha <= 6) {
        RamseyValue c = packing_threshold(r.alpha);
        r.guards_bound_alpha = RamseyValue{guards_bound(r.alpha, c.lo), guards_bound(r.alpha, c.hi),
                                           c.exact() ? c.source : "interval"};
    } else {
        r.guards_bound_note = "not evaluated: Ramsey chain at k = " + std::to_string(r.alpha) + " is astronomically large";
    }

    auto check = [&](const std::string& name, bool pass) { r.checks.push_back({name, pass}); };
    check("gamma <= alpha <= theta", r.gamma <= r.alpha && r.alpha <= r.theta);
    if (r.eviction) {
        check("gamma <= eviction <= theta", r.gamma <= *r.eviction && *r.eviction <= r.theta);
        if (r.triangle_free) check("triangle-free: eviction >= alpha", *r.eviction >= r.alpha);
        if (r.alpha == 1) check("alpha=1: eviction = 1", *r.eviction == 1);
        if (r.alpha == 2) check("alpha=2: eviction <= 2", *r.eviction <= 2);
        if (r.alpha == 3) check("alpha=3: eviction <= 5", *r.eviction <= 5);
        if (r.guards_bound_alpha) check("eviction <= f(alpha)", BigInt(*r.eviction) <= r.guards_bound_alpha->hi);
    }
    if (r.eternal) {
        check("alpha <= eternal <= binom(alpha+1,2)",
              r.alpha <= *r.eternal && 2L * *r.eternal <= static_cast<long>(r.alpha + 1) * r.alpha);
        check("gamma <= eternal <= theta", r.gamma <= *r.eternal && *r.eternal <= r.theta);
    }
    return r;
}

std::string bound_report_json(const BoundReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["gamma"] = r.gamma;
    j["theta"] = r.theta;
    j["omega"] = r.omega;
    j["triangle_free"] = r.triangle_free;
    j["cograph"] = r.cograph;
    if (r.eviction) {
        j["eviction"] = *r.eviction;
        j["ratio"] = std::to_string(*r.eviction) + "/" + std::to_string(r.alpha);
    }
    if (r.eternal) j["eternal"] = *r.eternal;
    if (!r.game_note.empty()) j["game_note"] = r.game_note;
    if (r.guards_bound_alpha) {
        j["f_alpha"] = r.guards_bound_alpha->str();
        j["f_alpha_exact"] = r.guards_bound_alpha->exact();
    }
    if (!r.guards_bound_note.empty()) j["f_alpha_note"] = r.guards_bound_note;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    j["all_pass"] = r.all_pass();
    return j.dump();
}

std::string bound_report_table(const BoundReport& r) {
    std::ostringstream out;
    out << "graph      " << (r.name.empty() ? r.graph6 : r.name) << "  (n=" << r.n << ", g6=" << r.graph6 << ")\n";
    out << "alpha      " << r.alpha << "\n";
    out << "gamma      " << r.gamma << "\n";
    out << "theta      " << r.theta << "\n";
    out << "omega      " << r.omega << "\n";
    out << "triangle-free " << (r.triangle_free ? "yes" : "no") << ", cograph " << (r.cograph ? "yes" : "no")
        << "\n";
    if (r.eviction) {
        out << "eviction   " << *r.eviction << "  (ratio " << *r.eviction << "/" << r.alpha << ")";
        if (*r.eviction > 1) out << "  (" << *r.eviction - 1 << " guards insufficient)";
        out << "\n";
    }
    if (r.eternal) out << "eternal    " << *r.eternal << "\n";
    if (!r.game_note.empty()) out << "game       " << r.game_note << "\n";
    if (r.guards_bound_alpha) out << "f(alpha)   " << r.guards_bound_alpha->str() << "\n";
    if (!r.guards_bound_note.empty()) out << "f(alpha)   " << r.guards_bound_note << "\n";
    for (const auto& c : r.checks) out << (c.pass ? "ok    " : "FAIL  ") << c.name << "\n";
    return out.str();
}

}  // namespace evictlab
