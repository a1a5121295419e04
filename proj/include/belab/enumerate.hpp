#pragma once

#include <vector>

#include "belab/graph.hpp"

namespace belab {

/// All unicyclic graphs with n <= max_n and girth in [girth_lo, girth_hi],
/// one representative per isomorphism class.  Built constructively as a cycle
/// plus rooted trees, deduplicated under the dihedral action, so no canonical
/// labeling pass is needed.
std::vector<Graph> enumerate_unicyclic(int max_n, int girth_lo = 3, int girth_hi = 1 << 20);

/// All whisker patterns (r_1..r_k) with sum r_i == total, one per
/// dihedral-symmetry class, materialized as graphs.
std::vector<Graph> enumerate_whiskered_cycles(int k, int total);

/// The whisker tuples themselves (for reporting).
std::vector<std::vector<int>> whisker_classes(int k, int total);

}  // namespace belab
