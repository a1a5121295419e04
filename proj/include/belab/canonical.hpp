#pragma once

#include <cstdint>
#include <vector>

#include "belab/graph.hpp"

namespace belab {

/// Canonically relabeled copy of g: isomorphic graphs map to equal results.
/// Refinement-based search, adequate for n <= 16.
Graph canonical_form(const Graph& g);

/// 64-bit hash of the canonical form (FNV-1a over n and the edge list).
uint64_t canonical_hash(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Relabel by a permutation: vertex v becomes perm[v-1].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace belab
