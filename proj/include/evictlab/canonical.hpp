#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "evictlab/graph.hpp"

namespace evictlab {

/// Upper-triangle adjacency bits in row-major pair order; usable for graphs
/// up to 8 vertices (28 bits).
std::uint64_t adjacency_code(const Graph& g);

/// Brute-force canonical form: relabeling minimizing adjacency_code over all
/// n! permutations. Capped at 8 vertices.
Graph canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

/// True when no relabeling has a strictly smaller code, i.e. g is the
/// canonical representative of its isomorphism class.
bool is_canonical_labeling(const Graph& g);

/// Calls fn once per isomorphism class of graphs on exactly n vertices
/// (n <= 7), in increasing order of canonical code.
void enumerate_nonisomorphic(int n, bool connected_only, const std::function<void(const Graph&)>& fn);

}  // namespace evictlab
