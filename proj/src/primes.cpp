#include "belab/primes.hpp"

#include <algorithm>

#include "json.hpp"

namespace belab {

namespace {

// components of G[keep] as vertex lists
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<bool>& keep) {
    int n = g.num_vertices();
    std::vector<bool> visited(n + 1, false);
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= n; ++s) {
        if (!keep[s] || visited[s]) continue;
        std::vector<int> comp, stack{s};
        visited[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (keep[w] && !visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool has_cutpoint_property(const Graph& g, const std::vector<bool>& in_t, int n) {
    std::vector<bool> keep(n + 1);
    for (int v = 1; v <= n; ++v) keep[v] = !in_t[v];
    int c_t = g.num_components_induced(keep);
    for (int i = 1; i <= n; ++i) {
        if (!in_t[i]) continue;
        keep[i] = true;  // G[complement + i]
        int c_with = g.num_components_induced(keep);
        keep[i] = false;
        if (c_with >= c_t) return false;  // i must be a cut vertex there: c(T \ i) < c(T)
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> cutsets_with_cutpoint_property(const Graph& g, int cap) {
    int n = g.num_vertices();
    if (n > cap) throw std::invalid_argument("cutsets: vertex cap exceeded");
    if (!g.is_connected()) throw std::invalid_argument("cutsets: graph must be connected");
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) >= n) continue;  // T is a proper subset
        std::vector<bool> in_t(n + 1, false);
        for (int v = 1; v <= n; ++v)
            if (mask & (uint32_t(1) << (v - 1))) in_t[v] = true;
        if (has_cutpoint_property(g, in_t, n)) {
            std::vector<int> t;
            for (int v = 1; v <= n; ++v)
                if (in_t[v]) t.push_back(v);
            out.push_back(t);
        }
    }
    return out;
}

std::vector<PrimeComponent> minimal_primes(const Graph& g, int cap) {
    std::vector<PrimeComponent> primes;
    int n = g.num_vertices();
    for (auto& t : cutsets_with_cutpoint_property(g, cap)) {
        PrimeComponent pc;
        pc.t = t;
        std::vector<bool> keep(n + 1, true);
        for (int v : t) keep[v] = false;
        pc.components = components_of(g, keep);
        primes.push_back(std::move(pc));
    }
    return primes;
}

int krull_dimension(const Graph& g, int cap) {
    int n = g.num_vertices();
    int best = 0;
    for (const auto& p : minimal_primes(g, cap)) best = std::max(best, p.dim_contribution(n));
    return best;
}

std::string primes_report_json(const Graph& g, const std::vector<PrimeComponent>& primes) {
    nlohmann::json arr = nlohmann::json::array();
    int n = g.num_vertices();
    for (const auto& p : primes) {
        nlohmann::json item;
        item["T"] = p.t;
        item["components"] = p.components;
        item["dim_contribution"] = p.dim_contribution(n);
        arr.push_back(item);
    }
    return arr.dump();
}

}  // namespace belab
