#include "evictlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "evictlab/graph_io.hpp"

namespace evictlab {

namespace {

constexpr int canon_cap = 8;

void check_cap(const Graph& g) {
    if (g.size() > canon_cap)
        throw CapacityError("canonical form: brute-force permutation search capped at 8 vertices");
}

// Code of the relabeling in which new vertex a is old vertex perm[a].
std::uint64_t code_under(const Graph& g, const std::array<int, canon_cap>& perm) {
    std::uint64_t code = 0;
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            code = code << 1 | (g.adjacent(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]) ? 1 : 0);
    return code;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    check_cap(g);
    std::uint64_t code = 0;
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b) code = code << 1 | (g.adjacent(a, b) ? 1 : 0);
    return code;
}

bool is_canonical_labeling(const Graph& g) {
    check_cap(g);
    int n = g.size();
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    std::uint64_t own = adjacency_code(g);
    std::array<int, canon_cap> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        // compare bit by bit with early exit
        std::uint64_t code = 0;
        long bit = pairs;
        bool smaller = false, decided = false;
        for (int a = 0; a < n && !decided; ++a) {
            for (int b = a + 1; b < n && !decided; ++b) {
                --bit;
                bool edge = g.adjacent(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
                bool own_edge = (own >> bit) & 1;
                if (edge != own_edge) {
                    smaller = !edge;  // 0 beats 1 at the first difference
                    decided = true;
                }
                code = code << 1 | (edge ? 1 : 0);
            }
        }
        if (decided && smaller) return false;
    }
    return true;
}

Graph canonical_form(const Graph& g) {
    check_cap(g);
    int n = g.size();
    std::array<int, canon_cap> perm{}, best_perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    best_perm = perm;
    std::uint64_t best = code_under(g, perm);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        std::uint64_t code = code_under(g, perm);
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    }
    Graph h(n, g.name());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.adjacent(best_perm[static_cast<size_t>(a)], best_perm[static_cast<size_t>(b)])) h.add_edge(a, b);
    return h;
}

std::string canonical_graph6(const Graph& g) {
    return emit_graph6(canonical_form(g));
}

void enumerate_nonisomorphic(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw CapacityError("enumerate_nonisomorphic: supported for 1..7 vertices");
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        long bit = pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (mask >> --bit & 1) g.add_edge(u, v);
        if (connected_only && !is_connected(g)) continue;
        if (!is_canonical_labeling(g)) continue;
        fn(g);
    }
}

}  // namespace evictlab
