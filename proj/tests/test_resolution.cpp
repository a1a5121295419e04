#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "belab/resolution.hpp"

using namespace belab;

namespace {

PolyRing ring_for(int n, MonomialOrder order = MonomialOrder::degrevlex) {
    PolyRing r;
    r.n = n;
    r.order = order;
    return r;
}

MinimizeResult resolve(const Graph& g, MonomialOrder order = MonomialOrder::degrevlex) {
    Ideal ideal = binomial_edge_ideal(g, ring_for(g.num_vertices(), order));
    Resolution res = free_resolution(ideal);
    return minimize(res);
}

uint64_t rank_mod_p(std::vector<std::vector<uint32_t>> m, uint32_t p) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    auto inv = [&](uint32_t a) {
        uint32_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = uint64_t(r) * b % p;
            b = uint64_t(b) * b % p;
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        uint32_t scale = inv(m[rank][c]);
        for (size_t j = c; j < cols; ++j) m[rank][j] = uint64_t(m[rank][j]) * scale % p;
        for (size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank || m[r2][c] == 0) continue;
            uint64_t factor = m[r2][c];
            for (size_t j = c; j < cols; ++j)
                m[r2][j] = (m[r2][j] + (p - factor) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Independent Betti oracle: homology ranks of the constant strands of a
// (possibly non-minimal) resolution, no cancellation involved.
std::map<std::pair<int, int>, int64_t> strand_betti(const Resolution& res) {
    uint32_t p = res.ring.characteristic;
    int length = res.length();
    std::vector<std::vector<int>> twists(length + 1);
    twists[0] = {0};
    for (int s = 0; s < length; ++s) twists[s + 1] = res.diffs[s].source.twists;

    auto const_block = [&](int s, int j) {  // d_s restricted to twist j
        std::vector<int> rows, cols;
        for (int r = 0; r < static_cast<int>(twists[s - 1].size()); ++r)
            if (twists[s - 1][r] == j) rows.push_back(r);
        for (int c = 0; c < static_cast<int>(twists[s].size()); ++c)
            if (twists[s][c] == j) cols.push_back(c);
        std::vector<std::vector<uint32_t>> m(rows.size(), std::vector<uint32_t>(cols.size(), 0));
        for (size_t ci = 0; ci < cols.size(); ++ci)
            for (const auto& [r, poly] : res.diffs[s - 1].cols[cols[ci]]) {
                if (poly.is_zero() || !poly.lead().mono.is_one()) continue;
                auto it = std::find(rows.begin(), rows.end(), r);
                if (it != rows.end()) m[it - rows.begin()][ci] = poly.lead().coeff;
            }
        return m;
    };

    std::map<std::pair<int, int>, int64_t> betti;
    for (int s = 0; s <= length; ++s) {
        std::map<int, int> count;
        for (int j : twists[s]) ++count[j];
        for (auto [j, total] : count) {
            int64_t b = total;
            if (s >= 1) b -= static_cast<int64_t>(rank_mod_p(const_block(s, j), p));
            if (s + 1 <= length) b -= static_cast<int64_t>(rank_mod_p(const_block(s + 1, j), p));
            if (b != 0) betti[{s, j}] = b;
        }
    }
    return betti;
}

}  // namespace

TEST_CASE("hypersurface") {
    auto r = resolve(build_complete(2));
    CHECK(r.resolution.length() == 1);
    CHECK(r.betti.entries == std::map<std::pair<int, int>, int64_t>{{{0, 0}, 1}, {{1, 2}, 1}});
    auto inv = derived_invariants(r.betti, ring_for(2), 3);
    CHECK(inv.pd == 1);
    CHECK(inv.reg == 1);
    CHECK(inv.depth == 3);
    CHECK(inv.unique_extremal);
    CHECK(inv.extremal == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("Koszul complex of the path on three vertices") {
    auto r = resolve(build_path(3));
    CHECK(r.betti.entries ==
          std::map<std::pair<int, int>, int64_t>{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
    // its Betti polynomial is the square of the edge polynomial
    BiPoly edge = {{{0, 0}, 1}, {{1, 2}, 1}};
    CHECK(betti_polynomial(r.betti) == bipoly_mul(edge, edge));
}

TEST_CASE("determinantal table for complete graphs") {
    auto binom = [](int a, int b) {
        int64_t r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int m : {3, 4, 5}) {
        auto r = resolve(build_complete(m));
        std::map<std::pair<int, int>, int64_t> expected{{{0, 0}, 1}};
        for (int i = 1; i <= m - 1; ++i) expected[{i, i + 1}] = i * binom(m, i + 1);
        CHECK(r.betti.entries == expected);
        auto inv = derived_invariants(r.betti, ring_for(m), m + 1);
        CHECK(inv.reg == 1);
        CHECK(inv.depth == m + 1);
    }
}

TEST_CASE("four-cycle") {
    auto r = resolve(build_cycle(4));
    auto inv = derived_invariants(r.betti, ring_for(4), 5);
    CHECK(inv.pd == 4);
    CHECK(inv.reg == 2);
    CHECK(inv.depth == 4);
    CHECK(inv.unique_extremal);
    CHECK(r.betti.beta(4, 6) == 2);
    CHECK(inv.extremal == std::vector<std::pair<int, int>>{{4, 6}});
    CHECK(check_complex(r.resolution));
    CHECK(check_minimality(r.resolution));
    CHECK(check_graded(r.resolution));
}

TEST_CASE("schreyer stages") {
    // a single generator has no syzygies
    Ideal k2 = binomial_edge_ideal(build_complete(2), ring_for(2));
    SyzygyStage s0 = stage_from_ring_gb(k2.ring, buchberger(k2));
    CHECK(schreyer_syzygies(k2.ring, s0).basis.empty());

    // two coprime generators: exactly the Koszul syzygy
    Ideal p3 = binomial_edge_ideal(build_path(3), ring_for(3));
    SyzygyStage p0 = stage_from_ring_gb(p3.ring, buchberger(p3));
    SyzygyStage p1 = schreyer_syzygies(p3.ring, p0);
    REQUIRE(p1.basis.size() == 1);
    CHECK(p1.basis[0].terms.size() == 4);  // u e_1 - u' e_2 with binomial coefficients

    // three 2x2 minors: two linear syzygies
    Ideal k3 = binomial_edge_ideal(build_complete(3), ring_for(3));
    SyzygyStage q0 = stage_from_ring_gb(k3.ring, buchberger(k3));
    SyzygyStage q1 = schreyer_syzygies(k3.ring, q0);
    CHECK(q1.basis.size() == 2);
    for (const auto& syz : q1.basis) CHECK(syz.lead().mono.degree == 1);

    // every syzygy annihilates the basis it came from
    for (const auto& syz : q1.basis) {
        Polynomial acc;
        for (const auto& t : syz.terms) {
            Polynomial g;
            for (const auto& bt : q0.basis[t.comp].terms) g.terms.push_back({bt.coeff, bt.mono});
            acc = add(k3.ring, acc, mul_term(k3.ring, g, t.coeff, t.mono));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("non-minimal strands agree with the minimized table") {
    for (const Graph& g : {build_cycle(4), build_cycle(5), add_whiskers(build_cycle(4), 1, 1),
                           build_complete(4), build_whiskered_cycle(4, {1, 1, 0, 0})}) {
        Ideal ideal = binomial_edge_ideal(g, ring_for(g.num_vertices()));
        Resolution res = free_resolution(ideal);
        CHECK(check_complex(res));
        CHECK(check_graded(res));
        auto minimized = minimize(res);
        CHECK(strand_betti(res) == minimized.betti.entries);
    }
}

TEST_CASE("hilbert consistency") {
    for (const Graph& g : {build_complete(2), build_path(3), build_cycle(4), build_cycle(5)}) {
        Ideal ideal = binomial_edge_ideal(g, ring_for(g.num_vertices()));
        auto r = resolve(g);
        CHECK(hilbert_consistency_check(r.betti, ideal));
        // a corrupted table must fail
        BettiTable bad = r.betti;
        bad.entries[{1, 2}] += 1;
        CHECK(!hilbert_consistency_check(bad, ideal));
    }
}

TEST_CASE("betti polynomial multiplication") {
    BiPoly a = {{{0, 0}, 1}, {{1, 2}, 1}};
    BiPoly sq = bipoly_mul(a, a);
    CHECK(sq == BiPoly{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
    CHECK(bipoly_to_string(a) == "1 + 1*s^1*t^2");
    auto k3 = resolve(build_complete(3));
    CHECK(bipoly_to_string(betti_polynomial(k3.betti)) == "1 + 3*s^1*t^2 + 2*s^2*t^3");
}

TEST_CASE("betti numbers are order independent") {
    for (const Graph& g : {build_cycle(4), build_path(4), add_whiskers(build_cycle(4), 1, 1)}) {
        auto drl = resolve(g, MonomialOrder::degrevlex);
        auto lex = resolve(g, MonomialOrder::lex);
        CHECK(drl.betti.entries == lex.betti.entries);
    }
}

TEST_CASE("resolution length cap raises") {
    Ideal c4 = binomial_edge_ideal(build_cycle(4), ring_for(4));
    CHECK_THROWS_AS(free_resolution(c4, 2), BudgetExceeded);
}

TEST_CASE("betti table display") {
    auto r = resolve(build_complete(3));
    CHECK(r.betti.to_display_string() ==
          "     0 1 2\n"
          "  0: 1 . .\n"
          "  1: . 3 2\n");
}

TEST_CASE("betti table json round trip") {
    auto r = resolve(build_cycle(4));
    BettiTable back = BettiTable::from_json(r.betti.to_json());
    CHECK(back.entries == r.betti.entries);
    CHECK(back.n == r.betti.n);
    CHECK(back.characteristic == r.betti.characteristic);
}
