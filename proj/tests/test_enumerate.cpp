#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "belab/canonical.hpp"
#include "belab/enumerate.hpp"
#include "belab/graph_invariants.hpp"

using namespace belab;

TEST_CASE("small unicyclic counts") {
    CHECK(enumerate_unicyclic(3).size() == 1);   // C_3 only
    CHECK(enumerate_unicyclic(4).size() == 3);   // C_3, C_4, C_3 + whisker
    CHECK(enumerate_unicyclic(5).size() == 8);
    CHECK(enumerate_unicyclic(6).size() == 21);
    CHECK(enumerate_unicyclic(7).size() == 54);
    CHECK(enumerate_unicyclic(7, 4).size() == 24);
    CHECK(enumerate_unicyclic(5, 5, 5).size() == 1);  // exactly C_5
}

TEST_CASE("brute-force isomorphism filter agrees for n <= 5") {
    // all labeled graphs, filtered to unicyclic, deduplicated by canonical form
    std::set<uint64_t> classes;
    for (int n = 3; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
        for (uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t b = 0; b < all.size(); ++b)
                if (mask & (1u << b)) edges.push_back(all[b]);
            Graph g(n, edges);
            if (is_unicyclic(g)) classes.insert(canonical_hash(g));
        }
    }
    CHECK(classes.size() == enumerate_unicyclic(5).size());
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic and in range") {
    auto graphs = enumerate_unicyclic(7, 4);
    std::set<uint64_t> hashes;
    for (const auto& g : graphs) {
        CHECK(is_unicyclic(g));
        CHECK(girth(g).value() >= 4);
        CHECK(g.num_vertices() <= 7);
        CHECK(hashes.insert(canonical_hash(g)).second);
    }
}

TEST_CASE("whisker classes") {
    CHECK(whisker_classes(4, 1).size() == 1);
    auto w42 = whisker_classes(4, 2);
    CHECK(w42.size() == 3);
    std::set<std::vector<int>> expected = {{0, 0, 0, 2}, {0, 0, 1, 1}, {0, 1, 0, 1}};
    CHECK(std::set<std::vector<int>>(w42.begin(), w42.end()) == expected);
    CHECK(whisker_classes(4, 3).size() == 4);
    CHECK(whisker_classes(4, 4).size() == 8);
    CHECK(whisker_classes(5, 3).size() == 5);

    // the all-ones tuple shows up at total = k
    auto w55 = whisker_classes(5, 5);
    CHECK(std::find(w55.begin(), w55.end(), std::vector<int>{1, 1, 1, 1, 1}) != w55.end());
}

TEST_CASE("dihedral deduplication is exact") {
    // every tuple with the right total is isomorphic to exactly one representative
    std::mt19937 rng(41);
    auto reps = enumerate_whiskered_cycles(5, 3);
    std::set<uint64_t> rep_hashes;
    for (const auto& g : reps) rep_hashes.insert(canonical_hash(g));
    CHECK(rep_hashes.size() == reps.size());
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> r(5, 0);
        int left = 3;
        while (left > 0) {
            ++r[rng() % 5];
            --left;
        }
        uint64_t h = canonical_hash(build_whiskered_cycle(5, r));
        CHECK(rep_hashes.count(h) == 1);
    }
}

TEST_CASE("orbit count under the dihedral group, counted directly") {
    // Burnside on D_4 acting on compositions of 2 over 4 slots
    std::set<std::vector<int>> orbits;
    std::vector<std::vector<int>> tuples;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2 - a; ++b)
            for (int c = 0; c <= 2 - a - b; ++c) tuples.push_back({a, b, c, 2 - a - b - c});
    auto canon = [](std::vector<int> t) {
        std::vector<int> best = t;
        for (int flip = 0; flip < 2; ++flip) {
            if (flip) std::reverse(t.begin(), t.end());
            for (int rot = 0; rot < 4; ++rot) {
                std::vector<int> cand(4);
                for (int i = 0; i < 4; ++i) cand[i] = t[(i + rot) % 4];
                best = std::min(best, cand);
            }
        }
        return best;
    };
    for (auto& t : tuples) orbits.insert(canon(t));
    CHECK(orbits.size() == whisker_classes(4, 2).size());
}
