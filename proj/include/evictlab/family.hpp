#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evictlab/graph.hpp"

namespace evictlab {

/// A named graph family with parameters, composable with join, disjoint
/// union and k-fold copies. Text syntax (used by the CLI):
///
///   path:7  cycle:7  complete:4  empty:5  kbip:3,4  star:3  spider:3
///   gk:2    g2       g2prime
///   join(complete:2,empty:4)    union(complete:1,path:3)    3*cycle:7
struct FamilySpec {
    enum class Kind {
        path,
        cycle,
        complete,
        empty,
        complete_bipartite,
        star,
        spider,
        gk,
        g2,
        g2prime,
        join,
        disjoint_union,
        copies,
    };

    Kind kind;
    std::vector<long> params;
    std::vector<FamilySpec> children;

    static FamilySpec parse(std::string_view text);
    std::string describe() const;
};

/// Builds the named graph. Throws CapacityError when the result would
/// exceed 64 vertices, ContractError on bad parameters.
Graph generate(const FamilySpec& spec);

inline Graph generate(std::string_view text) { return generate(FamilySpec::parse(text)); }

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);
Graph make_complete_bipartite(int m, int n);
/// K_{1,k}: center 0, leaves 1..k.
Graph make_star(int k);
/// Star K_{1,k} with every edge subdivided once: center 0, middle vertices
/// 1..k, leaf i+k attached to middle i. 2k+1 vertices.
Graph make_spider(int k);
/// k disjoint 7-cycles, a vertex v adjacent to all of them, and a pendant w
/// on v. Vertices: cycles 0..7k-1, v = 7k, w = 7k+1.
Graph make_gk(int k);
Graph make_join(const Graph& a, const Graph& b);
Graph make_disjoint_union(const Graph& a, const Graph& b);

/// The two fixed 9-vertex anomaly constants. Labels:
///   0 v0 | 1 v1, 3 v1', 5 v1'', 7 v1''' | 2 v2, 4 v2', 6 v2'', 8 v2'''
/// Each side induces K4 minus an edge (missing v''-v'''), v0 hangs off v2,
/// and v2'-v1' bridges the sides. figure_g2_prime adds the edge v0-v1.
Graph figure_g2();
Graph figure_g2_prime();

}  // namespace evictlab
