#pragma once

#include <optional>
#include <vector>

#include "belab/graph.hpp"

namespace belab {

/// The unique cycle of a unicyclic graph, in cyclic order, plus the roots of
/// the trees hanging off it.  attachment_sets[i] lists the non-cycle
/// neighbors of cycle[i].
struct CycleStructure {
    std::vector<int> cycle;
    std::vector<std::vector<int>> attachment_sets;

    int length() const { return static_cast<int>(cycle.size()); }
    /// A = cycle vertices with at least one tree incident on them.
    std::vector<int> attachment_vertices() const;
};

/// Bundle of the combinatorial invariants the predictors consume.
struct GraphInvariants {
    int iv = 0;                              // internal vertex count
    std::optional<int> girth;                // absent for forests
    int ell = 0;                             // longest induced path length
    bool is_block_graph = false;
    bool is_generalized_block_graph = false;
};
GraphInvariants compute_invariants(const Graph& g, int ell_cap = 16);

/// Girth (length of a shortest cycle); empty for forests.
std::optional<int> girth(const Graph& g);

/// Connected with exactly one cycle, i.e. connected and |E| = |V|.
bool is_unicyclic(const Graph& g);

/// The unique cycle and its attachments; throws if g is not unicyclic.
CycleStructure cycle_structure(const Graph& g);

/// Blocks (biconnected components, as vertex sets) and cut vertices.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
};
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// All maximal cliques, Bron-Kerbosch with pivoting.  Intended for n <= 16.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Vertices contained in at least two maximal cliques.
int internal_vertex_count(const Graph& g);
std::vector<int> internal_vertices(const Graph& g);
bool is_simplicial(const Graph& g, int v);

bool is_chordal(const Graph& g);

/// Connected and every block is a complete graph.
bool is_block_graph(const Graph& g);

/// Connected chordal graph in which any three maximal cliques with a common
/// vertex have pairwise equal intersections.
bool is_generalized_block_graph(const Graph& g);

/// Length (edge count) of a longest induced path, by exhaustive search.
/// Throws if num_vertices exceeds the cap.
int longest_induced_path_length(const Graph& g, int cap = 16);

/// True iff some cyclic window of `run` consecutive cycle vertices lies
/// entirely inside the attachment set A.
bool consecutive_run_check(const CycleStructure& cs, const std::vector<int>& a_set, int run);

/// One step or full decomposition at simplicial cut vertices.  Each part is
/// returned with its original vertex labels; glue vertices appear in every
/// part they join.
struct Decomposition {
    std::vector<Graph> parts;
    std::vector<std::vector<int>> part_vertices;  // original labels per part
    std::vector<int> glue_vertices;               // original labels
    bool decomposed() const { return parts.size() > 1; }
};
Decomposition decompose_at_simplicial_cut_vertices(const Graph& g);

}  // namespace belab
