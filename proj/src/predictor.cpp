#include "belab/predictor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "json.hpp"

namespace belab {

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::cycle: return "cycle";
        case FamilyTag::block_graph: return "block-graph";
        case FamilyTag::generalized_block_graph: return "generalized-block-graph";
        case FamilyTag::whiskered_cycle: return "whiskered-cycle";
        case FamilyTag::whiskered_cycle_with_clique: return "whiskered-cycle-with-clique";
        case FamilyTag::cycle_clique_forest: return "cycle-clique-forest";
        case FamilyTag::general_unicyclic: return "general-unicyclic";
        case FamilyTag::decomposable: return "decomposable";
        case FamilyTag::unrecognized: return "unrecognized";
    }
    return "?";
}

std::string uniqueness_name(Uniqueness u) {
    switch (u) {
        case Uniqueness::unique: return "unique";
        case Uniqueness::non_unique: return "non_unique";
        case Uniqueness::undetermined: return "undetermined";
    }
    return "?";
}

std::string FamilyDescriptor::to_string() const {
    std::string s = family_tag_name(tag);
    if (tag == FamilyTag::decomposable) {
        s += "[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ", ";
            s += parts[i].to_string();
        }
        s += "]";
        return s;
    }
    if (k > 0) {
        s += "(k=" + std::to_string(k);
        if (m >= 3) s += ", m=" + std::to_string(m);
        if (!whiskers.empty()) {
            s += ", r=[";
            for (size_t i = 0; i < whiskers.size(); ++i) s += (i ? "," : "") + std::to_string(whiskers[i]);
            s += "]";
        } else if (!a_set.empty()) {
            s += ", |A|=" + std::to_string(a_set.size());
        }
        s += ")";
    }
    return s;
}

std::string Prediction::to_json() const {
    nlohmann::json j;
    auto range = [](const ValueRange& v) -> nlohmann::json {
        if (v.exact()) return v.lo;
        return nlohmann::json::array({v.lo, v.hi});
    };
    j["depth"] = range(depth);
    j["reg"] = range(reg);
    auto arr = nlohmann::json::array();
    for (const auto& e : extremal) arr.push_back({{"i", e.i}, {"j", e.j}, {"certain", e.certain}});
    j["extremal"] = arr;
    j["uniqueness"] = uniqueness_name(uniqueness);
    j["provenance"] = provenance;
    return j.dump();
}

// ---- recognition ------------------------------------------------------------

namespace {

struct CycleCliqueShape {
    int k = 0, m = 0;
    std::pair<int, int> e{0, 0};
    std::vector<int> cycle;          // cyclic order, original labels
    std::vector<int> a_set;          // cycle vertices with trees
    std::vector<int> whiskers;       // per cycle slot (valid if whiskers_only)
    bool whiskers_only = false;      // all attachments pendant, all on the cycle
    bool trees_off_cycle = false;    // attachments on clique-only vertices
};

// Strips leaves to the 2-core and tests for "cycle glued to one clique along
// an edge, plus trees".
std::optional<CycleCliqueShape> recognize_cycle_clique(const Graph& g) {
    int n = g.num_vertices();
    if (g.num_edges() <= n) return std::nullopt;
    std::vector<bool> core(n + 1, true);
    std::vector<int> deg(n + 1, 0);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= n; ++v)
            if (core[v] && deg[v] <= 1) {
                core[v] = false;
                changed = true;
                for (int u : g.neighbors(v))
                    if (core[u]) --deg[u];
            }
    }
    std::vector<int> core_vertices;
    for (int v = 1; v <= n; ++v)
        if (core[v]) core_vertices.push_back(v);
    std::vector<int> old_of_new;
    Graph h = g.induced(core_vertices, &old_of_new);
    if (!h.is_connected()) return std::nullopt;

    auto cliques = maximal_cliques(h);
    std::vector<std::vector<int>> big;
    for (auto& c : cliques)
        if (c.size() >= 3) big.push_back(c);

    CycleCliqueShape shape;
    std::set<int> clique_only;  // new labels of the clique vertices off e
    std::vector<int> cycle_new;  // cycle in new labels

    if (big.size() == 1) {
        const auto& q = big[0];
        shape.m = static_cast<int>(q.size());
        std::vector<int> e_candidates, inner;
        for (int v : q)
            (h.degree(v) > shape.m - 1 ? e_candidates : inner).push_back(v);
        if (e_candidates.size() != 2) return std::nullopt;
        for (int v : inner)
            if (h.degree(v) != shape.m - 1) return std::nullopt;
        if (!h.has_edge(e_candidates[0], e_candidates[1])) return std::nullopt;
        // the rest must be a cycle through the edge
        std::vector<int> rest;
        std::set<int> inner_set(inner.begin(), inner.end());
        for (int v = 1; v <= h.num_vertices(); ++v)
            if (!inner_set.count(v)) rest.push_back(v);
        shape.k = static_cast<int>(rest.size());
        if (shape.k < 4) return std::nullopt;  // a triangle here means two big cliques
        if (h.num_edges() != shape.k + shape.m * (shape.m - 1) / 2 - 1) return std::nullopt;
        // walk the cycle starting along e
        std::set<int> rest_set(rest.begin(), rest.end());
        int a = e_candidates[0], b = e_candidates[1];
        cycle_new = {a, b};
        int prev = a, cur = b;
        while (static_cast<int>(cycle_new.size()) < shape.k) {
            int next = -1;
            for (int u : h.neighbors(cur)) {
                if (u == prev || !rest_set.count(u)) continue;
                if (inner_set.count(u)) continue;
                if (u == a && static_cast<int>(cycle_new.size()) < shape.k - 1) continue;
                // only cycle edges: u must have exactly two rest-neighbors
                next = u;
                break;
            }
            if (next == -1) return std::nullopt;
            cycle_new.push_back(next);
            prev = cur;
            cur = next;
        }
        // validate: consecutive adjacency and closure, and rest degrees
        for (int i = 0; i < shape.k; ++i)
            if (!h.has_edge(cycle_new[i], cycle_new[(i + 1) % shape.k])) return std::nullopt;
        for (int v : rest)
            if (v != a && v != b && h.degree(v) != 2) return std::nullopt;
        shape.e = {old_of_new[a - 1], old_of_new[b - 1]};
        for (int v : inner) clique_only.insert(v);
    } else if (big.size() == 2 && (big[0].size() == 3 || big[1].size() == 3)) {
        // triangle sharing an edge with one clique
        std::vector<int> tri = big[0].size() == 3 ? big[0] : big[1];
        std::vector<int> q = big[0].size() == 3 ? big[1] : big[0];
        std::vector<int> shared;
        std::set_intersection(tri.begin(), tri.end(), q.begin(), q.end(), std::back_inserter(shared));
        if (shared.size() != 2) return std::nullopt;
        shape.k = 3;
        shape.m = static_cast<int>(q.size());
        std::set<int> all(tri.begin(), tri.end());
        all.insert(q.begin(), q.end());
        if (static_cast<int>(all.size()) != h.num_vertices()) return std::nullopt;
        if (h.num_edges() != 3 + shape.m * (shape.m - 1) / 2 - 1) return std::nullopt;
        shape.e = {old_of_new[shared[0] - 1], old_of_new[shared[1] - 1]};
        int apex = 0;
        for (int v : tri)
            if (v != shared[0] && v != shared[1]) apex = v;
        cycle_new = {shared[0], shared[1], apex};
        for (int v : q)
            if (v != shared[0] && v != shared[1]) clique_only.insert(v);
    } else {
        return std::nullopt;
    }

    for (int v : cycle_new) shape.cycle.push_back(old_of_new[v - 1]);

    // trees: each non-core component hangs on exactly one core vertex
    std::set<int> core_set(core_vertices.begin(), core_vertices.end());
    std::map<int, std::vector<std::vector<int>>> trees_by_host;
    std::vector<bool> seen(n + 1, false);
    for (int s = 1; s <= n; ++s) {
        if (core_set.count(s) || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        std::set<int> hosts;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (core_set.count(w)) {
                    hosts.insert(w);
                } else if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        if (hosts.size() != 1) return std::nullopt;
        trees_by_host[*hosts.begin()].push_back(comp);
    }

    std::set<int> cycle_set(shape.cycle.begin(), shape.cycle.end());
    shape.whiskers.assign(shape.k, 0);
    shape.whiskers_only = true;
    for (const auto& [host, comps] : trees_by_host) {
        if (!cycle_set.count(host)) {
            shape.trees_off_cycle = true;
            shape.whiskers_only = false;
            continue;
        }
        shape.a_set.push_back(host);
        int slot = static_cast<int>(std::find(shape.cycle.begin(), shape.cycle.end(), host) -
                                    shape.cycle.begin());
        for (const auto& comp : comps) {
            if (comp.size() == 1)
                ++shape.whiskers[slot];
            else
                shape.whiskers_only = false;
        }
    }
    std::sort(shape.a_set.begin(), shape.a_set.end());
    return shape;
}

}  // namespace

FamilyDescriptor recognize_family(const Graph& g) {
    FamilyDescriptor fam;
    if (g.num_vertices() == 0 || !g.is_connected()) return fam;

    std::optional<CycleStructure> cs;
    if (is_unicyclic(g)) {
        cs = cycle_structure(g);
        if (g.num_vertices() == cs->length() && cs->length() >= 4) {
            fam.tag = FamilyTag::cycle;
            fam.k = cs->length();
            fam.cycle = cs->cycle;
            return fam;
        }
    }
    if (is_block_graph(g)) {
        fam.tag = FamilyTag::block_graph;
        return fam;
    }

    auto dec = decompose_at_simplicial_cut_vertices(g);
    if (dec.decomposed()) {
        std::vector<FamilyDescriptor> parts;
        bool all_recognized = true;
        for (const auto& part : dec.parts) {
            parts.push_back(recognize_family(part));
            if (parts.back().tag == FamilyTag::unrecognized) all_recognized = false;
        }
        if (all_recognized) {
            fam.tag = FamilyTag::decomposable;
            fam.parts = std::move(parts);
            fam.part_graphs = dec.parts;
            return fam;
        }
    }

    // the clique shape first: pure C_k u_e K_m is also a generalized block
    // graph for k = 3 but has sharper rules of its own
    std::optional<FamilyDescriptor> clique_shape;
    if (auto shape = recognize_cycle_clique(g)) {
        FamilyDescriptor cf;
        cf.k = shape->k;
        cf.m = shape->m;
        cf.e = shape->e;
        cf.cycle = shape->cycle;
        cf.a_set = shape->a_set;
        if (shape->whiskers_only) {
            cf.tag = FamilyTag::whiskered_cycle_with_clique;
            cf.whiskers = shape->whiskers;
        } else {
            cf.tag = FamilyTag::cycle_clique_forest;
            cf.trees_off_cycle = shape->trees_off_cycle;
        }
        std::set<int> a(cf.a_set.begin(), cf.a_set.end());
        bool touches_e = a.count(cf.e.first) || a.count(cf.e.second);
        // k = 3 with trees away from e stays in the generalized-block family
        if (cf.k >= 4 || cf.a_set.empty() || touches_e) clique_shape = cf;
    }
    if (clique_shape) return *clique_shape;

    if (is_generalized_block_graph(g)) {
        fam.tag = FamilyTag::generalized_block_graph;
        return fam;
    }

    if (cs) {
        fam.k = cs->length();
        fam.cycle = cs->cycle;
        fam.a_set = cs->attachment_vertices();
        if (fam.k >= 4) {
            bool whiskers_only = true;
            fam.whiskers.assign(fam.k, 0);
            for (int i = 0; i < fam.k; ++i) {
                for (int u : cs->attachment_sets[i]) {
                    if (g.degree(u) == 1)
                        ++fam.whiskers[i];
                    else
                        whiskers_only = false;
                }
            }
            fam.tag = whiskers_only ? FamilyTag::whiskered_cycle : FamilyTag::general_unicyclic;
            if (!whiskers_only) fam.whiskers.clear();
            return fam;
        }
        fam = FamilyDescriptor{};  // girth-3 unicyclic non-block cannot happen
        return fam;
    }

    return fam;
}

// ---- prediction rules --------------------------------------------------------

namespace {

struct ArcInfo {
    bool connected = false;  // A is a single cyclic run (or all of the cycle)
    std::vector<int> arc;    // cycle slots of A in consecutive order (when connected, |A| < k)
};

ArcInfo arc_info(const FamilyDescriptor& fam) {
    ArcInfo info;
    int k = fam.k;
    std::vector<bool> in_a(k, false);
    std::set<int> a(fam.a_set.begin(), fam.a_set.end());
    for (int i = 0; i < k; ++i) in_a[i] = a.count(fam.cycle[i]) > 0;
    int blocks = 0, start = -1;
    for (int i = 0; i < k; ++i)
        if (in_a[i] && !in_a[(i + k - 1) % k]) {
            ++blocks;
            start = i;
        }
    if (static_cast<int>(a.size()) == k) {
        info.connected = true;
        return info;
    }
    info.connected = (blocks == 1);
    if (info.connected)
        for (int i = start; in_a[i % k]; ++i) info.arc.push_back(i % k);
    return info;
}

bool run_check(const FamilyDescriptor& fam) {
    if (fam.k <= 0) return false;
    CycleStructure cs;
    cs.cycle = fam.cycle;
    cs.attachment_sets.resize(fam.cycle.size());
    return consecutive_run_check(cs, fam.a_set, fam.k - 2);
}

void note(std::vector<std::string>& prov, const std::string& tag) {
    if (std::find(prov.begin(), prov.end(), tag) == prov.end()) prov.push_back(tag);
}

Prediction predict_with(const Graph& g, const FamilyDescriptor& fam);

Prediction combine_parts(const FamilyDescriptor& fam) {
    std::vector<Prediction> parts;
    std::vector<int> sizes;
    int total = 0;
    for (size_t i = 0; i < fam.parts.size(); ++i) {
        parts.push_back(predict_with(fam.part_graphs[i], fam.parts[i]));
        sizes.push_back(fam.part_graphs[i].num_vertices());
        total += fam.part_graphs[i].num_vertices();
    }
    // glue vertices are shared pairwise along the decomposition tree
    int n = total - static_cast<int>(fam.parts.size()) + 1;
    return combine_decomposable(parts, sizes, n);
}

Prediction predict_with(const Graph& g, const FamilyDescriptor& fam) {
    Prediction p;
    int n = g.num_vertices();

    if (g.num_edges() == 0) {  // S itself
        p.depth = ValueRange::of(2 * n);
        p.reg = ValueRange::of(0);
        p.extremal = {{0, 0, true}};
        p.uniqueness = Uniqueness::unique;
        note(p.provenance, "zero-ideal");
        return p;
    }

    switch (fam.tag) {
        case FamilyTag::decomposable:
            return combine_parts(fam);

        case FamilyTag::cycle: {
            int k = fam.k;
            p.depth = ValueRange::of(n);
            p.reg = ValueRange::of(k - 2);
            p.extremal = {{k, 2 * k - 2, true}};
            p.uniqueness = Uniqueness::unique;
            note(p.provenance, "depth/cycle");
            note(p.provenance, "reg/cycle");
            note(p.provenance, "extremal/cycle");
            return p;
        }

        case FamilyTag::block_graph: {
            int iv = internal_vertex_count(g);
            p.depth = ValueRange::of(n + 1);
            p.reg = ValueRange::of(iv + 1);
            p.extremal = {{n - 1, n + iv, true}};
            p.uniqueness = Uniqueness::unique;
            note(p.provenance, "depth/block-graph");
            note(p.provenance, "reg/block-graph");
            note(p.provenance, "extremal/block-graph");
            return p;
        }

        case FamilyTag::generalized_block_graph: {
            int iv = internal_vertex_count(g);
            int ell = longest_induced_path_length(g);
            p.depth = ValueRange::of(n);
            p.reg = {std::max(ell, iv), n - 1};
            p.extremal = {{n, n + iv, true}};
            p.uniqueness = Uniqueness::undetermined;
            note(p.provenance, "depth/generalized-block-graph");
            note(p.provenance, "extremal/generalized-block-graph");
            note(p.provenance, "bounds/induced-path");
            return p;
        }

        case FamilyTag::whiskered_cycle: {
            int k = fam.k;
            int asize = static_cast<int>(fam.a_set.size());
            ArcInfo arc = arc_info(fam);
            bool consecutive = run_check(fam);
            p.depth = ValueRange::of(consecutive ? n + 1 : n);
            note(p.provenance, "depth/unicyclic-dichotomy");
            int pd = 2 * n - p.depth.lo;

            bool adjacent_pair = asize == 2 && arc.connected;
            if (asize == k) {
                p.reg = ValueRange::of(k + 1);
                p.extremal = {{n - 1, n + k, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "reg/whisker-all");
                note(p.provenance, "extremal/whisker-all");
            } else if (asize == 1 || adjacent_pair) {
                p.reg = ValueRange::of(k - 1);
                p.extremal = {{pd, pd + k - 1, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "reg/whisker-few-adjacent");
                note(p.provenance, "extremal/whisker-few-adjacent");
            } else {
                p.reg = ValueRange::of(k);
                note(p.provenance, "reg/whisker-nonadjacent-pair");
                if (!arc.connected) {
                    p.extremal = {{n, n + k, true}};
                    p.uniqueness = Uniqueness::unique;
                    note(p.provenance, "extremal/whisker-disconnected");
                } else if (asize <= k - 3) {
                    p.extremal = {{n, n + k - 1, true}};
                    p.uniqueness = Uniqueness::non_unique;
                    note(p.provenance, "extremal/whisker-run-short");
                } else if (asize == k - 2) {
                    // interior slots of the run, endpoints excluded
                    bool has_interior_one = false;
                    for (size_t idx = 1; idx + 1 < arc.arc.size(); ++idx)
                        if (fam.whiskers[arc.arc[idx]] == 1) has_interior_one = true;
                    if (has_interior_one) {
                        p.extremal = {{n - 1, n - 1 + k, true}};
                        p.uniqueness = Uniqueness::unique;
                        note(p.provenance, "extremal/whisker-interior-single");
                    } else {
                        p.extremal = {{n - 1, n - 2 + k, true}};
                        p.uniqueness = Uniqueness::non_unique;
                        note(p.provenance, "extremal/whisker-interior-doubled");
                    }
                } else {  // asize == k - 1
                    p.extremal = {{n - 1, n - 1 + k, true}};
                    p.uniqueness = Uniqueness::unique;
                    note(p.provenance, "extremal/whisker-almost-all");
                }
            }
            return p;
        }

        case FamilyTag::whiskered_cycle_with_clique: {
            int k = fam.k;
            int asize = static_cast<int>(fam.a_set.size());
            std::set<int> a(fam.a_set.begin(), fam.a_set.end());
            int on_e = a.count(fam.e.first) + a.count(fam.e.second);
            ArcInfo arc = arc_info(fam);
            bool deep = on_e >= 1 && run_check(fam);
            p.depth = ValueRange::of(deep ? n + 1 : n);
            note(p.provenance, "depth/cycle-clique-forest");
            int pd = 2 * n - p.depth.lo;
            int iv = internal_vertex_count(g);

            auto fallback = [&]() {
                int reg_hi = (on_e == 2) ? k + 1 : k;
                if (k == 3 && on_e == 2) {
                    // trees at both edge vertices pin the corner one step higher
                    p.reg = {std::max(k - 1, iv + 1), reg_hi};
                    p.extremal = {{pd, pd + iv + 1, true}};
                    note(p.provenance, "extremal/girth3-edge-trees");
                } else {
                    p.reg = {k - 1, reg_hi};
                    p.extremal = {{pd, pd + k - 1, false}, {pd, pd + k, false}};
                    note(p.provenance, "extremal/pd-corner-pair");
                }
                p.uniqueness = Uniqueness::undetermined;
                note(p.provenance, "reg/whisker-clique-range");
            };

            if (asize == 0) {
                p.reg = ValueRange::of(k - 1);
                p.extremal = {{n, n + k - 1, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "reg/cycle-clique");
                note(p.provenance, "extremal/cycle-clique");
            } else if (asize == k) {
                p.reg = ValueRange::of(k + 1);
                p.extremal = {{n - 1, n + k, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "extremal/whisker-all");
            } else if (asize == 1 && on_e == 1) {
                p.reg = ValueRange::of(k - 1);
                p.extremal = {{pd, pd + k - 1, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "reg/whisker-clique-single-on-edge");
            } else if (asize == 1 && on_e == 0 && k >= 4) {
                p.reg = ValueRange::of(k);
                p.extremal = {{n, n + k, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "extremal/clique-whisker-off-edge");
            } else if (asize == 2 && on_e == 1 && !arc.connected && k >= 4) {
                p.reg = ValueRange::of(k);
                p.extremal = {{n, n + k, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "extremal/clique-two-whiskers-split");
            } else if (arc.connected && on_e == 1 && asize >= 2 && asize <= k - 3 && k >= 5) {
                p.reg = {k - 1, k};
                p.extremal = {{n, n + k - 1, true}};
                p.uniqueness = Uniqueness::undetermined;
                note(p.provenance, "extremal/clique-run-short");
            } else if (arc.connected && on_e == 1 && asize == k - 2 && k >= 4) {
                // e joins one end of the run to its outside neighbor
                int e_slot = -1;
                for (size_t idx = 0; idx < arc.arc.size(); ++idx) {
                    int v = fam.cycle[arc.arc[idx]];
                    if (v == fam.e.first || v == fam.e.second) e_slot = static_cast<int>(idx);
                }
                if (e_slot == 0 || e_slot == static_cast<int>(arc.arc.size()) - 1) {
                    if (e_slot != 0) std::reverse(arc.arc.begin(), arc.arc.end());
                    bool has_single = false;
                    for (size_t idx = 0; idx + 1 < arc.arc.size(); ++idx)  // run slots 1..k-3
                        if (fam.whiskers[arc.arc[idx]] == 1) has_single = true;
                    if (has_single) {
                        p.reg = ValueRange::of(k);
                        p.extremal = {{n - 1, n - 1 + k, true}};
                        p.uniqueness = Uniqueness::unique;
                        note(p.provenance, "extremal/clique-interior-single");
                    } else {
                        p.reg = {k - 1, k};
                        p.extremal = {{n - 1, n - 2 + k, true}};
                        p.uniqueness = Uniqueness::undetermined;
                        note(p.provenance, "extremal/clique-interior-doubled");
                    }
                } else {
                    fallback();
                }
            } else if (asize == k - 1 && on_e == 1) {
                p.reg = ValueRange::of(k);
                p.extremal = {{n - 1, n - 1 + k, true}};
                p.uniqueness = Uniqueness::unique;
                note(p.provenance, "extremal/clique-almost-all");
            } else {
                fallback();
            }
            return p;
        }

        case FamilyTag::cycle_clique_forest:
        case FamilyTag::general_unicyclic: {
            int k = fam.k;
            std::set<int> a(fam.a_set.begin(), fam.a_set.end());
            bool with_clique = fam.tag == FamilyTag::cycle_clique_forest;
            int on_e = with_clique ? a.count(fam.e.first) + a.count(fam.e.second) : 0;
            bool consecutive = run_check(fam);
            bool deep = with_clique ? (on_e >= 1 && consecutive) : consecutive;
            p.depth = ValueRange::of(deep ? n + 1 : n);
            note(p.provenance, with_clique ? "depth/cycle-clique-forest" : "depth/unicyclic-dichotomy");
            int pd = 2 * n - p.depth.lo;
            int iv = internal_vertex_count(g);
            int ell = longest_induced_path_length(g);
            bool all_cycle = static_cast<int>(a.size()) == k;
            if (with_clique && k == 3) {
                // chordal shapes: the corner is pinned by how many edge
                // vertices carry trees (none: generalized-block behavior)
                int corner_j = (on_e == 2) ? iv + 1 : iv;
                p.extremal = {{pd, pd + corner_j, true}};
                p.reg = {std::max(ell, corner_j), n - 1};
                note(p.provenance, on_e ? "extremal/girth3-edge-trees"
                                        : "extremal/generalized-block-graph");
            } else if (all_cycle) {
                p.extremal = {{pd, pd + iv + 1, true}};
                p.reg = {std::max(ell, iv + 1), n - 1};
                note(p.provenance, "extremal/unicyclic-all-attached");
            } else {
                p.extremal = {{pd, pd + iv - 1, false}, {pd, pd + iv, false}};
                p.reg = {std::max(ell, iv - 1), n - 1};
                note(p.provenance, "extremal/pd-corner-pair");
            }
            note(p.provenance, "bounds/induced-path");
            p.uniqueness = Uniqueness::undetermined;
            return p;
        }

        case FamilyTag::unrecognized: {
            int ell = longest_induced_path_length(g);
            p.depth = {1, n + 1};
            p.reg = {std::max(ell, 1), n - 1};
            p.uniqueness = Uniqueness::undetermined;
            note(p.provenance, "bounds/depth-connected");
            note(p.provenance, "bounds/induced-path");
            return p;
        }
    }
    return p;
}

}  // namespace

ValueRange predict_depth(const Graph& g, const FamilyDescriptor& fam, std::vector<std::string>* provenance) {
    Prediction p = predict_with(g, fam);
    if (provenance) *provenance = p.provenance;
    return p.depth;
}

ValueRange predict_regularity(const Graph& g, const FamilyDescriptor& fam,
                              std::vector<std::string>* provenance) {
    Prediction p = predict_with(g, fam);
    if (provenance) *provenance = p.provenance;
    return p.reg;
}

void predict_extremal_betti(const Graph& g, const FamilyDescriptor& fam, Prediction& pred) {
    Prediction p = predict_with(g, fam);
    pred.extremal = p.extremal;
    pred.uniqueness = p.uniqueness;
    for (const auto& tag : p.provenance)
        if (std::find(pred.provenance.begin(), pred.provenance.end(), tag) == pred.provenance.end())
            pred.provenance.push_back(tag);
}

std::pair<int, int> matsuda_murai_bounds(const Graph& g) {
    return {longest_induced_path_length(g), g.num_vertices() - 1};
}

Prediction combine_decomposable(const std::vector<Prediction>& parts, const std::vector<int>& part_sizes,
                                int total_n) {
    if (parts.empty()) throw std::invalid_argument("combine_decomposable: no parts");
    if (parts.size() == 1) return parts.front();
    Prediction out;
    note(out.provenance, "combine/betti-product");
    int pd = 0, reg = 0;
    bool exact = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].depth.exact() || !parts[i].reg.exact()) {
            exact = false;
            break;
        }
        pd += 2 * part_sizes[i] - parts[i].depth.lo;
        reg += parts[i].reg.lo;
    }
    if (!exact) {
        // keep combined bounds only
        int depth_lo = 1, depth_hi = total_n + 1, reg_lo = 0, reg_hi = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            reg_lo += parts[i].reg.lo;
            reg_hi += parts[i].reg.hi;
        }
        out.depth = {depth_lo, depth_hi};
        out.reg = {reg_lo, reg_hi};
        out.uniqueness = Uniqueness::undetermined;
        return out;
    }
    out.depth = ValueRange::of(2 * total_n - pd);
    out.reg = ValueRange::of(reg);

    // extremal positions: componentwise sums of the parts' candidate sets
    std::vector<ExtremalPosition> acc = {{0, 0, true}};
    for (const auto& part : parts) {
        if (part.extremal.empty()) {
            acc.clear();
            break;
        }
        std::vector<ExtremalPosition> next;
        for (const auto& base : acc)
            for (const auto& e : part.extremal)
                next.push_back({base.i + e.i, base.j + e.j, base.certain && e.certain});
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), [](const ExtremalPosition& a, const ExtremalPosition& b) {
        return std::tie(a.i, a.j, a.certain) < std::tie(b.i, b.j, b.certain);
    });
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    out.extremal = acc;

    bool any_non_unique = false, all_unique = true;
    for (const auto& part : parts) {
        if (part.uniqueness == Uniqueness::non_unique) any_non_unique = true;
        if (part.uniqueness != Uniqueness::unique) all_unique = false;
    }
    out.uniqueness = all_unique ? Uniqueness::unique
                                : (any_non_unique ? Uniqueness::non_unique : Uniqueness::undetermined);
    return out;
}

Prediction predict(const Graph& g, FamilyDescriptor* fam_out) {
    if (!g.is_connected()) throw std::invalid_argument("predict: graph must be connected");
    FamilyDescriptor fam = recognize_family(g);
    if (fam_out) *fam_out = fam;
    return predict_with(g, fam);
}

}  // namespace belab
