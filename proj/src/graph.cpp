#include "belab/graph.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace belab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n_ + 1, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::num_components() const {
    std::vector<bool> keep(n_ + 1, true);
    return num_components_induced(keep);
}

bool Graph::is_connected() const { return n_ == 0 || num_components() == 1; }

int Graph::num_components_induced(const std::vector<bool>& keep) const {
    std::vector<bool> visited(n_ + 1, false);
    int count = 0;
    std::vector<int> stack;
    for (int s = 1; s <= n_; ++s) {
        if (!keep[s] || visited[s]) continue;
        ++count;
        stack.push_back(s);
        visited[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[u])
                if (keep[w] && !visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

Graph Graph::induced(const std::vector<int>& vertices, std::vector<int>* old_of_new) const {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> new_of_old;
    for (size_t i = 0; i < sorted.size(); ++i) new_of_old[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_) {
        auto iu = new_of_old.find(u), iv = new_of_old.find(v);
        if (iu != new_of_old.end() && iv != new_of_old.end()) es.push_back({iu->second, iv->second});
    }
    if (old_of_new) *old_of_new = sorted;
    return Graph(static_cast<int>(sorted.size()), es);
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (auto [u, v] : edges_) arr.push_back({u, v});
    j["edges"] = arr;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        throw std::invalid_argument("graph json: expected {\"n\": int, \"edges\": [[u,v],...]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("graph json: malformed edge");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, edges);
}

Graph build_cycle(int k) {
    if (k < 3) throw std::invalid_argument("build_cycle: need k >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < k; ++i) es.push_back({i, i + 1});
    es.push_back({1, k});
    return Graph(k, es);
}

Graph build_complete(int m) {
    if (m < 1) throw std::invalid_argument("build_complete: need m >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) es.push_back({i, j});
    return Graph(m, es);
}

Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("build_path: need n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph add_whiskers(const Graph& g, int v, int r) {
    if (!g.has_vertex(v)) throw std::invalid_argument("add_whiskers: invalid vertex");
    if (r < 0) throw std::invalid_argument("add_whiskers: negative whisker count");
    if (r == 0) return g;
    auto es = g.edges();
    int n = g.num_vertices();
    for (int i = 1; i <= r; ++i) es.push_back({v, n + i});
    return Graph(n + r, es);
}

Graph build_whiskered_cycle(int k, const std::vector<int>& whiskers) {
    if (static_cast<int>(whiskers.size()) != k)
        throw std::invalid_argument("build_whiskered_cycle: whisker vector must have length k");
    Graph g = build_cycle(k);
    for (int i = 0; i < k; ++i) g = add_whiskers(g, i + 1, whiskers[i]);
    return g;
}

Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& identified) {
    // identified: (vertex of g2) -> (vertex of g1)
    std::map<int, int> to_g1;
    std::set<int> g1_targets;
    for (auto [v2, v1] : identified) {
        if (!g2.has_vertex(v2) || !g1.has_vertex(v1))
            throw std::invalid_argument("clique_sum: identified vertex out of range");
        if (!to_g1.insert({v2, v1}).second || !g1_targets.insert(v1).second)
            throw std::invalid_argument("clique_sum: identification not injective");
    }
    // Both sides must induce the same complete graph on the identified set.
    std::vector<int> side2, side1;
    for (auto [v2, v1] : to_g1) side2.push_back(v2), side1.push_back(v1);
    for (size_t a = 0; a < side2.size(); ++a)
        for (size_t b = a + 1; b < side2.size(); ++b) {
            if (!g2.has_edge(side2[a], side2[b]) || !g1.has_edge(to_g1[side2[a]], to_g1[side2[b]]))
                throw std::invalid_argument("clique_sum: identified set is not a clique in both inputs");
        }
    int n = g1.num_vertices();
    std::map<int, int> label;  // g2 vertex -> merged label
    for (int v = 1; v <= g2.num_vertices(); ++v) {
        auto it = to_g1.find(v);
        label[v] = (it != to_g1.end()) ? it->second : ++n;
    }
    std::set<std::pair<int, int>> es(g1.edges().begin(), g1.edges().end());
    for (auto [u, v] : g2.edges()) {
        int a = label[u], b = label[v];
        if (a > b) std::swap(a, b);
        es.insert({a, b});
    }
    return Graph(n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

Graph neighborhood_completion(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("neighborhood_completion: invalid vertex");
    std::set<std::pair<int, int>> es(g.edges().begin(), g.edges().end());
    const auto& nb = g.neighbors(v);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) es.insert({nb[a], nb[b]});
    return Graph(g.num_vertices(), std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: invalid vertex");
    std::vector<int> keep;
    for (int u = 1; u <= g.num_vertices(); ++u)
        if (u != v) keep.push_back(u);
    return g.induced(keep);
}

}  // namespace belab
