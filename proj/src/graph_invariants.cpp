#include "belab/graph_invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace belab {

GraphInvariants compute_invariants(const Graph& g, int ell_cap) {
    GraphInvariants inv;
    inv.iv = internal_vertex_count(g);
    inv.girth = girth(g);
    inv.ell = longest_induced_path_length(g, ell_cap);
    inv.is_block_graph = is_block_graph(g);
    inv.is_generalized_block_graph = is_generalized_block_graph(g);
    return inv;
}

std::vector<int> CycleStructure::attachment_vertices() const {
    std::vector<int> a;
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!attachment_sets[i].empty()) a.push_back(cycle[i]);
    return a;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through edge {u,v} = 1 + shortest u-v path avoiding the edge.
    int best = -1;
    int n = g.num_vertices();
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(n + 1, -1);
        std::deque<int> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (int x : g.neighbors(w)) {
                if ((w == u && x == v) || (w == v && x == u)) continue;
                if (dist[x] == -1) {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        if (dist[v] >= 0 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

bool is_unicyclic(const Graph& g) {
    return g.num_vertices() > 0 && g.is_connected() && g.num_edges() == g.num_vertices();
}

CycleStructure cycle_structure(const Graph& g) {
    if (!is_unicyclic(g)) throw std::invalid_argument("cycle_structure: graph is not unicyclic");
    int n = g.num_vertices();
    std::vector<bool> alive(n + 1, true);
    std::vector<int> deg(n + 1, 0);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    std::deque<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        alive[v] = false;
        for (int u : g.neighbors(v))
            if (alive[u] && --deg[u] == 1) leaves.push_back(u);
    }
    std::vector<int> on_cycle;
    for (int v = 1; v <= n; ++v)
        if (alive[v]) on_cycle.push_back(v);

    CycleStructure cs;
    int start = on_cycle.front();
    int prev = 0, cur = start;
    do {
        cs.cycle.push_back(cur);
        int next = -1;
        for (int u : g.neighbors(cur))
            if (alive[u] && u != prev) {
                next = u;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);
    cs.attachment_sets.resize(cs.cycle.size());
    for (size_t i = 0; i < cs.cycle.size(); ++i)
        for (int u : g.neighbors(cs.cycle[i]))
            if (!alive[u]) cs.attachment_sets[i].push_back(u);
    return cs;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::set<int> cuts;
    int timer = 0;

    explicit BlockFinder(const Graph& graph) : g(graph) {
        disc.assign(g.num_vertices() + 1, 0);
        low.assign(g.num_vertices() + 1, 0);
    }

    void pop_block(std::pair<int, int> until) {
        std::set<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.push_back(std::vector<int>(verts.begin(), verts.end()));
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        bool skipped_parent_edge = false;
        for (int u : g.neighbors(v)) {
            if (u == parent && !skipped_parent_edge) {
                skipped_parent_edge = true;
                continue;
            }
            if (!disc[u]) {
                ++children;
                edge_stack.push_back({v, u});
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if ((parent == 0 && children > 1) || (parent != 0 && low[u] >= disc[v])) cuts.insert(v);
                if (low[u] >= disc[v]) pop_block({v, u});
            } else if (disc[u] < disc[v]) {
                edge_stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (!finder.disc[v]) finder.dfs(v, 0);
    BlockDecomposition d;
    d.blocks = finder.blocks;
    d.cut_vertices.assign(finder.cuts.begin(), finder.cuts.end());
    // isolated vertices form trivial blocks
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (g.degree(v) == 0) d.blocks.push_back({v});
    return d;
}

namespace {

uint64_t neighbor_mask(const Graph& g, int v) {
    uint64_t m = 0;
    for (int u : g.neighbors(v)) m |= uint64_t(1) << (u - 1);
    return m;
}

void bron_kerbosch(const Graph& g, const std::vector<uint64_t>& nb, uint64_t r, uint64_t p, uint64_t x,
                   std::vector<std::vector<int>>& out) {
    if (p == 0 && x == 0) {
        std::vector<int> clique;
        for (int v = 1; v <= g.num_vertices(); ++v)
            if (r & (uint64_t(1) << (v - 1))) clique.push_back(v);
        out.push_back(clique);
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (px & (uint64_t(1) << (v - 1))) {
            int cnt = __builtin_popcountll(p & nb[v]);
            if (cnt > best) best = cnt, pivot = v;
        }
    uint64_t candidates = p & ~nb[pivot];
    for (int v = 1; v <= g.num_vertices(); ++v) {
        uint64_t bit = uint64_t(1) << (v - 1);
        if (!(candidates & bit)) continue;
        bron_kerbosch(g, nb, r | bit, p & nb[v], x & nb[v], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    int n = g.num_vertices();
    if (n > 64) throw std::invalid_argument("maximal_cliques: vertex cap exceeded");
    std::vector<uint64_t> nb(n + 1, 0);
    for (int v = 1; v <= n; ++v) nb[v] = neighbor_mask(g, v);
    std::vector<std::vector<int>> out;
    uint64_t all = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    bron_kerbosch(g, nb, 0, all, 0, out);
    return out;
}

std::vector<int> internal_vertices(const Graph& g) {
    auto cliques = maximal_cliques(g);
    std::vector<int> count(g.num_vertices() + 1, 0);
    for (const auto& c : cliques)
        for (int v : c) ++count[v];
    std::vector<int> internal;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (count[v] >= 2) internal.push_back(v);
    return internal;
}

int internal_vertex_count(const Graph& g) { return static_cast<int>(internal_vertices(g).size()); }

bool is_simplicial(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b)
            if (!g.has_edge(nb[a], nb[b])) return false;
    return true;
}

bool is_chordal(const Graph& g) {
    // Repeatedly remove a simplicial vertex; stalling means a chordless cycle.
    int n = g.num_vertices();
    std::vector<bool> alive(n + 1, true);
    std::vector<std::set<int>> nb(n + 1);
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v)) nb[v].insert(u);
    auto simplicial = [&](int v) {
        for (auto a = nb[v].begin(); a != nb[v].end(); ++a) {
            auto b = a;
            for (++b; b != nb[v].end(); ++b)
                if (!nb[*a].count(*b)) return false;
        }
        return true;
    };
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 1; v <= n && pick == -1; ++v)
            if (alive[v] && simplicial(v)) pick = v;
        if (pick == -1) return false;
        alive[pick] = false;
        for (int u : nb[pick]) nb[u].erase(pick);
        nb[pick].clear();
    }
    return true;
}

bool is_block_graph(const Graph& g) {
    if (g.num_vertices() == 0 || !g.is_connected()) return false;
    for (const auto& block : blocks_and_cut_vertices(g).blocks) {
        for (size_t a = 0; a < block.size(); ++a)
            for (size_t b = a + 1; b < block.size(); ++b)
                if (!g.has_edge(block[a], block[b])) return false;
    }
    return true;
}

bool is_generalized_block_graph(const Graph& g) {
    if (g.num_vertices() == 0 || !g.is_connected() || !is_chordal(g)) return false;
    auto cliques = maximal_cliques(g);
    size_t m = cliques.size();
    std::vector<std::set<int>> cs;
    cs.reserve(m);
    for (auto& c : cliques) cs.emplace_back(c.begin(), c.end());
    auto meet = [](const std::set<int>& a, const std::set<int>& b) {
        std::set<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.begin()));
        return r;
    };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                auto ij = meet(cs[i], cs[j]);
                if (ij.empty()) continue;
                auto common = meet(ij, cs[k]);
                if (common.empty()) continue;
                if (ij != meet(cs[i], cs[k]) || ij != meet(cs[j], cs[k])) return false;
            }
    return true;
}

int longest_induced_path_length(const Graph& g, int cap) {
    int n = g.num_vertices();
    if (n > cap) throw std::invalid_argument("longest_induced_path_length: vertex cap exceeded");
    if (n == 0) return 0;
    std::vector<uint64_t> nb(n + 1, 0);
    for (int v = 1; v <= n; ++v) nb[v] = neighbor_mask(g, v);
    int best = 0;
    // Extend from each start; the next vertex must be adjacent to the tip and
    // to no earlier path vertex.
    std::function<void(int, uint64_t, uint64_t, int)> extend = [&](int tip, uint64_t used, uint64_t forbidden,
                                                                   int len) {
        best = std::max(best, len);
        uint64_t options = nb[tip] & ~used & ~forbidden;
        for (int v = 1; v <= n; ++v) {
            uint64_t bit = uint64_t(1) << (v - 1);
            if (!(options & bit)) continue;
            extend(v, used | bit, forbidden | (nb[tip] & ~bit), len + 1);
        }
    };
    for (int s = 1; s <= n; ++s) extend(s, uint64_t(1) << (s - 1), 0, 0);
    return best;
}

bool consecutive_run_check(const CycleStructure& cs, const std::vector<int>& a_set, int run) {
    int k = cs.length();
    if (run <= 0) return true;
    std::set<int> a(a_set.begin(), a_set.end());
    for (int v : a)
        if (std::find(cs.cycle.begin(), cs.cycle.end(), v) == cs.cycle.end())
            throw std::invalid_argument("consecutive_run_check: A must consist of cycle vertices");
    if (static_cast<int>(a.size()) < run) return false;
    for (int start = 0; start < k; ++start) {
        bool ok = true;
        for (int off = 0; off < run && ok; ++off)
            if (!a.count(cs.cycle[(start + off) % k])) ok = false;
        if (ok) return true;
    }
    return false;
}

namespace {

// A split at cut vertex v is valid when G - v has exactly two components and
// the neighbors of v inside each component form a clique.
bool split_at(const Graph& g, const std::vector<int>& vertices, int v, std::vector<int>& side1,
              std::vector<int>& side2) {
    std::set<int> in_part(vertices.begin(), vertices.end());
    std::set<int> rest = in_part;
    rest.erase(v);
    if (rest.empty()) return false;
    // components of the induced graph minus v
    std::map<int, int> comp;
    int num = 0;
    for (int s : rest) {
        if (comp.count(s)) continue;
        ++num;
        std::vector<int> stack{s};
        comp[s] = num;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (rest.count(w) && !comp.count(w)) {
                    comp[w] = num;
                    stack.push_back(w);
                }
        }
    }
    if (num != 2) return false;
    for (int side = 1; side <= 2; ++side) {
        std::vector<int> nbside;
        for (int u : g.neighbors(v))
            if (comp.count(u) && comp[u] == side) nbside.push_back(u);
        for (size_t a = 0; a < nbside.size(); ++a)
            for (size_t b = a + 1; b < nbside.size(); ++b)
                if (!g.has_edge(nbside[a], nbside[b])) return false;
    }
    side1.clear();
    side2.clear();
    for (auto [u, c] : comp) (c == 1 ? side1 : side2).push_back(u);
    side1.push_back(v);
    side2.push_back(v);
    return true;
}

void decompose_rec(const Graph& g, std::vector<int> vertices, Decomposition& out) {
    std::sort(vertices.begin(), vertices.end());
    for (int v : vertices) {
        std::vector<int> side1, side2;
        if (split_at(g, vertices, v, side1, side2)) {
            out.glue_vertices.push_back(v);
            decompose_rec(g, side1, out);
            decompose_rec(g, side2, out);
            return;
        }
    }
    out.part_vertices.push_back(vertices);
    out.parts.push_back(g.induced(vertices));
}

}  // namespace

Decomposition decompose_at_simplicial_cut_vertices(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("decompose: graph must be connected");
    Decomposition out;
    std::vector<int> all;
    for (int v = 1; v <= g.num_vertices(); ++v) all.push_back(v);
    decompose_rec(g, all, out);
    std::sort(out.glue_vertices.begin(), out.glue_vertices.end());
    out.glue_vertices.erase(std::unique(out.glue_vertices.begin(), out.glue_vertices.end()),
                            out.glue_vertices.end());
    return out;
}

}  // namespace belab
