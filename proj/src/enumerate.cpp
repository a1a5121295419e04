#include "belab/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace belab {

namespace {

// Rooted trees up to isomorphism, encoded as nested parens with sorted
// children; catalog[s] lists all trees on s vertices.
struct RootedTree {
    std::vector<int> children;  // indices into the flat catalog
    int size = 1;
    std::string code;
};

struct TreeCatalog {
    std::vector<RootedTree> trees;          // flat, trees[0] = single vertex
    std::vector<std::vector<int>> by_size;  // by_size[s] = indices of size-s trees

    explicit TreeCatalog(int max_size) {
        trees.push_back({{}, 1, "()"});
        by_size.assign(max_size + 1, {});
        if (max_size >= 1) by_size[1] = {0};
        for (int s = 2; s <= max_size; ++s) {
            // children multisets: non-increasing (size, index) sequences totaling s-1
            std::vector<std::vector<int>> combos;
            std::vector<int> current;
            build_multisets(s - 1, flat_count() - 1, current, combos);
            for (auto& combo : combos) {
                RootedTree t;
                t.children = combo;
                t.size = s;
                std::vector<std::string> codes;
                for (int c : combo) codes.push_back(trees[c].code);
                std::sort(codes.begin(), codes.end());
                t.code = "(";
                for (auto& c : codes) t.code += c;
                t.code += ")";
                trees.push_back(t);
                by_size[s].push_back(flat_count() - 1);
            }
        }
    }

    int flat_count() const { return static_cast<int>(trees.size()); }

    void build_multisets(int remaining, int max_index, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int idx = max_index; idx >= 0; --idx) {
            if (trees[idx].size > remaining) continue;
            current.push_back(idx);
            build_multisets(remaining - trees[idx].size, idx, current, out);
            current.pop_back();
        }
    }

    // Attach tree `idx` with its root identified to `root` in an edge list.
    void materialize(int idx, int root, int& next_label, std::vector<std::pair<int, int>>& edges) const {
        for (int child : trees[idx].children) {
            int label = next_label++;
            edges.push_back({root, label});
            materialize(child, label, next_label, edges);
        }
    }
};

template <typename T>
std::vector<T> dihedral_min(const std::vector<T>& tuple) {
    int k = static_cast<int>(tuple.size());
    std::vector<T> best = tuple;
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<T> base = tuple;
        if (flip) std::reverse(base.begin(), base.end());
        for (int rot = 0; rot < k; ++rot) {
            std::vector<T> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = base[(i + rot) % k];
            if (cand < best) best = cand;
        }
    }
    return best;
}

void tuples_with_total(int slots, int total, const std::vector<std::vector<int>>& options_by_weight,
                       std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == slots) {
        if (total == 0) out.push_back(current);
        return;
    }
    int slots_left = slots - static_cast<int>(current.size());
    int max_weight = static_cast<int>(options_by_weight.size()) - 1;
    for (int w = 0; w <= std::min(max_weight, total); ++w) {
        if (total - w > max_weight * (slots_left - 1)) continue;
        for (int opt : options_by_weight[w]) {
            current.push_back(opt);
            tuples_with_total(slots, total - w, options_by_weight, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

std::vector<Graph> enumerate_unicyclic(int max_n, int girth_lo, int girth_hi) {
    if (max_n > 16) throw std::invalid_argument("enumerate_unicyclic: max_n cap (16) exceeded");
    std::vector<Graph> out;
    girth_lo = std::max(girth_lo, 3);
    TreeCatalog catalog(std::max(1, max_n - 2));
    for (int n = 3; n <= max_n; ++n) {
        for (int k = girth_lo; k <= std::min(n, girth_hi); ++k) {
            int extra = n - k;
            // options grouped by extra vertex count (tree size - 1)
            std::vector<std::vector<int>> options(extra + 1);
            for (int s = 1; s <= extra + 1 && s < static_cast<int>(catalog.by_size.size()); ++s)
                options[s - 1] = catalog.by_size[s];
            std::vector<std::vector<int>> tuples;
            std::vector<int> current;
            tuples_with_total(k, extra, options, current, tuples);

            std::set<std::vector<int>> seen;
            for (auto& tuple : tuples) seen.insert(dihedral_min(tuple));
            for (auto& canon : seen) {
                std::vector<std::pair<int, int>> edges;
                for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
                edges.push_back({1, k});
                int next_label = k + 1;
                for (int i = 0; i < k; ++i) catalog.materialize(canon[i], i + 1, next_label, edges);
                out.push_back(Graph(n, edges));
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> whisker_classes(int k, int total) {
    if (k < 3) throw std::invalid_argument("whisker_classes: need k >= 3");
    std::set<std::vector<int>> seen;
    std::vector<int> tuple(k, 0);
    // enumerate all compositions of `total` into k parts, keep dihedral minima
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == k) {
            if (remaining == 0) seen.insert(dihedral_min(tuple));
            return;
        }
        for (int r = 0; r <= remaining; ++r) {
            tuple[pos] = r;
            rec(pos + 1, remaining - r);
        }
        tuple[pos] = 0;
    };
    rec(0, total);
    return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

std::vector<Graph> enumerate_whiskered_cycles(int k, int total) {
    std::vector<Graph> out;
    for (const auto& tuple : whisker_classes(k, total)) out.push_back(build_whiskered_cycle(k, tuple));
    return out;
}

}  // namespace belab
