#include "belab/canonical.hpp"

#include <algorithm>
#include <map>

namespace belab {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.num_vertices())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.push_back({perm[u - 1], perm[v - 1]});
    return Graph(g.num_vertices(), es);
}

namespace {

// Iterated refinement by (color, sorted multiset of neighbor colors); the
// resulting colors are isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n + 1, 0);
    for (int v = 1; v <= n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
        for (int v = 1; v <= n; ++v) {
            std::vector<int> sig;
            for (int u : g.neighbors(v)) sig.push_back(color[u]);
            std::sort(sig.begin(), sig.end());
            buckets[{color[v], sig}].push_back(v);
        }
        std::vector<int> next(n + 1, 0);
        int c = 0;
        for (auto& [key, verts] : buckets) {
            for (int v : verts) next[v] = c;
            ++c;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    std::vector<int> color;
    std::vector<uint64_t> nb;
    int n;
    std::vector<std::vector<uint8_t>> best;  // best[i] = adjacency of position i to 0..i-1
    std::vector<std::vector<uint8_t>> cur;
    std::vector<int> order, best_order;
    std::vector<bool> used;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.num_vertices()) {
        color = refine_colors(g);
        used.assign(n + 1, false);
        nb.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            for (int u : g.neighbors(v)) nb[v] |= uint64_t(1) << (u - 1);
    }

    void run() {
        cur.assign(n, {});
        best.assign(n, {});  // empty rows compare below every real row
        order.assign(n, 0);
        dfs(0);
    }

    // swapping twins is an automorphism that fixes all other vertices, so one
    // branch per twin class suffices
    static bool twins(const std::vector<uint64_t>& nb, int u, int v) {
        uint64_t pair = (uint64_t(1) << (u - 1)) | (uint64_t(1) << (v - 1));
        return (nb[u] & ~pair) == (nb[v] & ~pair);
    }

    // Invariant: cur[0..pos-1] == best[0..pos-1].  A strictly larger row
    // raises best at this position and resets everything below it, so the
    // maximum-string search keeps pruning right after an improvement.
    void dfs(int pos) {
        if (pos == n) {
            best_order = order;
            return;
        }
        int min_color = -1;
        for (int v = 1; v <= n; ++v)
            if (!used[v] && (min_color == -1 || color[v] < min_color)) min_color = color[v];
        // best-first: visit candidates by descending row so the maximal
        // branch is expanded before its siblings get pruned against it
        std::vector<std::pair<std::vector<uint8_t>, int>> candidates;
        for (int v = 1; v <= n; ++v) {
            if (used[v] || color[v] != min_color) continue;
            std::vector<uint8_t> row(pos);
            for (int i = 0; i < pos; ++i) row[i] = g.has_edge(v, order[i]) ? 1 : 0;
            candidates.push_back({std::move(row), v});
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
        std::vector<int> explored;
        for (auto& [row, v] : candidates) {
            if (row < best[pos]) break;  // canonical string is the maximum
            bool redundant = false;
            for (int u : explored)
                if (twins(nb, u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            explored.push_back(v);
            if (row > best[pos]) {
                best[pos] = row;
                for (int p = pos + 1; p < n; ++p) best[p].clear();
            }
            used[v] = true;
            order[pos] = v;
            cur[pos] = row;
            dfs(pos + 1);
            used[v] = false;
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.num_vertices() == 0) return g;
    if (g.num_vertices() > 16) throw std::invalid_argument("canonical_form: vertex cap (16) exceeded");
    CanonSearch search(g);
    search.run();
    if (search.best_order.empty()) throw std::logic_error("canonical_form: search found no ordering");
    std::vector<int> perm(g.num_vertices());
    for (int pos = 0; pos < g.num_vertices(); ++pos) perm[search.best_order[pos] - 1] = pos + 1;
    return relabel(g, perm);
}

uint64_t canonical_hash(const Graph& g) {
    Graph c = canonical_form(g);
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(c.num_vertices()));
    for (auto [u, v] : c.edges()) mix((static_cast<uint64_t>(u) << 32) | static_cast<uint64_t>(v));
    return h;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace belab
