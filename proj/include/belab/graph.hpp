#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace belab {

/// Simple undirected graph on vertices 1..n, immutable after construction.
///
/// Vertex labels are 1-based throughout; adjacency is kept both as a sorted
/// edge list and as per-vertex neighbor lists.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return check_vertex(v), adj_[v]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    bool is_connected() const;
    int num_components() const;
    /// Component count of the induced subgraph on `keep` (1-based flags).
    int num_components_induced(const std::vector<bool>& keep) const;

    /// Induced subgraph on the given vertices; `old_of_new[i]` maps the new
    /// label i+1 back to the original label.
    Graph induced(const std::vector<int>& vertices, std::vector<int>* old_of_new = nullptr) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

    std::string to_json() const;
    static Graph from_json(const std::string& text);

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;       // each (u,v) with u < v, sorted
    std::vector<std::vector<int>> adj_;            // 1-based; adj_[0] unused
};

// --- family constructors -----------------------------------------------------

/// Cycle on vertices 1..k with edges {i,i+1} and {1,k}.  Requires k >= 3.
Graph build_cycle(int k);

/// Complete graph on m vertices.
Graph build_complete(int m);

/// Path on n vertices (n-1 edges).
Graph build_path(int n);

/// Attach r pendant vertices to v; r = 0 returns G unchanged.
Graph add_whiskers(const Graph& g, int v, int r);

/// Cycle 1..k with r[i] whiskers attached at cycle vertex i+1.
Graph build_whiskered_cycle(int k, const std::vector<int>& whiskers);

/// Glue g2 onto g1 along a shared complete subgraph.  `identified` maps a
/// vertex of g2 to the vertex of g1 it lands on; unmapped g2 vertices get
/// fresh labels.  The identified set must induce the same complete graph on
/// both sides.
Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& identified);

/// Complete the neighborhood of v into a clique (all pairs within N(v) added).
Graph neighborhood_completion(const Graph& g, int v);

/// Remove v and relabel the remaining vertices 1..n-1 (order preserved).
Graph delete_vertex(const Graph& g, int v);

}  // namespace belab
