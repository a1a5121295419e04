#pragma once

#include <optional>
#include <string>
#include <vector>

#include "belab/graph_invariants.hpp"

namespace belab {

enum class FamilyTag {
    cycle,
    block_graph,
    generalized_block_graph,
    whiskered_cycle,
    whiskered_cycle_with_clique,
    cycle_clique_forest,
    general_unicyclic,
    decomposable,
    unrecognized,
};

std::string family_tag_name(FamilyTag tag);

/// Recognized structure of a connected graph.  For cycle-based families the
/// cycle order, the clique edge e (when m >= 3), the attachment set A, and
/// per-slot whisker counts are filled in.
struct FamilyDescriptor {
    FamilyTag tag = FamilyTag::unrecognized;
    int k = 0;                                  // cycle length
    int m = 2;                                  // clique size glued along e (2 = none)
    std::pair<int, int> e{0, 0};                // clique edge (vertices of the cycle)
    std::vector<int> cycle;                     // cyclic vertex order
    std::vector<int> a_set;                     // cycle vertices with trees attached
    std::vector<int> whiskers;                  // r_i per cycle slot (whisker families)
    bool trees_off_cycle = false;               // trees attached to clique-only vertices
    std::vector<FamilyDescriptor> parts;        // decomposable
    std::vector<Graph> part_graphs;

    std::string to_string() const;
};

struct ValueRange {
    int lo = 0, hi = 0;
    bool exact() const { return lo == hi; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    static ValueRange of(int v) { return {v, v}; }
    bool operator==(const ValueRange& o) const { return lo == o.lo && hi == o.hi; }
};

struct ExtremalPosition {
    int i = 0, j = 0;  // beta_{i,j}, j = internal degree
    bool certain = false;
    bool operator==(const ExtremalPosition& o) const { return i == o.i && j == o.j && certain == o.certain; }
};

enum class Uniqueness { unique, non_unique, undetermined };
std::string uniqueness_name(Uniqueness u);

struct Prediction {
    ValueRange depth;
    ValueRange reg;
    std::vector<ExtremalPosition> extremal;
    Uniqueness uniqueness = Uniqueness::undetermined;
    std::vector<std::string> provenance;

    std::string to_json() const;
};

FamilyDescriptor recognize_family(const Graph& g);

ValueRange predict_depth(const Graph& g, const FamilyDescriptor& fam, std::vector<std::string>* provenance = nullptr);
ValueRange predict_regularity(const Graph& g, const FamilyDescriptor& fam,
                              std::vector<std::string>* provenance = nullptr);
void predict_extremal_betti(const Graph& g, const FamilyDescriptor& fam, Prediction& pred);

/// (l(G), n-1): induced-path lower and vertex-count upper bound for reg.
std::pair<int, int> matsuda_murai_bounds(const Graph& g);

/// Product rule for graphs decomposable at simplicial cut vertices: pd and
/// reg add, extremal positions add componentwise, uniqueness holds iff it
/// holds for every part.
Prediction combine_decomposable(const std::vector<Prediction>& parts, const std::vector<int>& part_sizes,
                                int total_n);

/// recognize + depth + reg + extremal in one shot.
Prediction predict(const Graph& g, FamilyDescriptor* fam_out = nullptr);

}  // namespace belab
