#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "belab/groebner.hpp"

using namespace belab;

namespace {

PolyRing ring_for(int n, MonomialOrder order = MonomialOrder::degrevlex) {
    PolyRing r;
    r.n = n;
    r.order = order;
    return r;
}

}  // namespace

TEST_CASE("single generator is its own basis") {
    PolyRing r = ring_for(2);
    Ideal k2 = binomial_edge_ideal(build_complete(2), r);
    const auto& gb = buchberger(k2);
    REQUIRE(gb.size() == 1);
    CHECK(equal(gb[0], monic(r, k2.generators[0])));
    CHECK(normal_form(r, k2.generators[0], gb).is_zero());
}

TEST_CASE("paths give coprime lead terms") {
    for (int n : {3, 5, 7}) {
        PolyRing r = ring_for(n);
        Ideal p = binomial_edge_ideal(build_path(n), r);
        const auto& gb = buchberger(p);
        REQUIRE(static_cast<int>(gb.size()) == n - 1);
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j)
                CHECK(coprime(gb[i].lead().mono, gb[j].lead().mono));
    }
    // the S-polynomial of the two path generators reduces to zero already
    PolyRing r3 = ring_for(3);
    Ideal p3 = binomial_edge_ideal(build_path(3), r3);
    Polynomial s = s_polynomial(r3, p3.generators[0], p3.generators[1]);
    CHECK(normal_form(r3, s, p3.generators).is_zero());
}

TEST_CASE("C_4 needs extra basis elements") {
    Ideal lex_ideal = binomial_edge_ideal(build_cycle(4), ring_for(4, MonomialOrder::lex));
    CHECK(buchberger(lex_ideal).size() > 4);
    Ideal drl_ideal = binomial_edge_ideal(build_cycle(4), ring_for(4));
    CHECK(buchberger(drl_ideal).size() == 6);
}

TEST_CASE("reduced basis invariants") {
    for (auto order : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
        Ideal ideal = binomial_edge_ideal(build_whiskered_cycle(4, {1, 0, 1, 0}), ring_for(6, order));
        const auto& gb = buchberger(ideal);
        for (size_t i = 0; i < gb.size(); ++i) {
            CHECK(gb[i].lead().coeff == 1);  // monic
            CHECK(gb[i].is_homogeneous());
            // no term of any element divisible by another lead
            for (size_t j = 0; j < gb.size(); ++j) {
                if (i == j) continue;
                for (const auto& t : gb[i].terms) CHECK(!divides(gb[j].lead().mono, t.mono));
            }
        }
        CHECK(groebner_self_check(ideal.ring, gb));
        for (const auto& g : ideal.generators) CHECK(normal_form(ideal.ring, g, gb).is_zero());
    }
}

TEST_CASE("full Buchberger self-check across small graphs") {
    std::vector<Graph> graphs = {build_cycle(5), build_complete(4), build_path(5),
                                 add_whiskers(build_cycle(4), 1, 2),
                                 clique_sum(build_cycle(4), build_complete(3), {{1, 1}, {2, 2}})};
    for (const auto& g : graphs) {
        Ideal ideal = binomial_edge_ideal(g, ring_for(g.num_vertices()));
        const auto& gb = buchberger(ideal);
        CHECK(groebner_self_check(ideal.ring, gb));
    }
}

TEST_CASE("normal form is idempotent and linear over remainders") {
    PolyRing r = ring_for(4);
    Ideal ideal = binomial_edge_ideal(build_cycle(4), r);
    const auto& gb = buchberger(ideal);
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Term> ts;
        for (int t = 0; t < 5; ++t) {
            Monomial m;
            for (int v = 0; v < r.nvars(); ++v) m.bump(v, static_cast<int>(rng() % 2));
            ts.push_back({static_cast<uint32_t>(1 + rng() % 100), m});
        }
        Polynomial f = poly_from_terms(r, ts);
        Polynomial nf = normal_form(r, f, gb);
        CHECK(equal(normal_form(r, nf, gb), nf));
        // f - NF(f) lies in the ideal
        CHECK(normal_form(r, sub(r, f, nf), gb).is_zero());
        for (const auto& t : nf.terms)
            for (const auto& g : gb) CHECK(!divides(g.lead().mono, t.mono));
    }
}

TEST_CASE("cross-order membership of basis elements") {
    // every degrevlex basis element lies in the ideal as certified by the lex basis
    for (const Graph& g : {build_cycle(4), build_path(4), build_complete(4)}) {
        Ideal drl = binomial_edge_ideal(g, ring_for(g.num_vertices()));
        Ideal lex = binomial_edge_ideal(g, ring_for(g.num_vertices(), MonomialOrder::lex));
        const auto& gb_drl = buchberger(drl);
        const auto& gb_lex = buchberger(lex);
        for (const auto& f : gb_drl) {
            Polynomial resorted = poly_from_terms(lex.ring, f.terms);
            CHECK(normal_form(lex.ring, resorted, gb_lex).is_zero());
        }
        for (const auto& f : gb_lex) {
            Polynomial resorted = poly_from_terms(drl.ring, f.terms);
            CHECK(normal_form(drl.ring, resorted, gb_drl).is_zero());
        }
    }
}

TEST_CASE("work budget is enforced") {
    Ideal ideal = binomial_edge_ideal(build_cycle(5), ring_for(5));
    WorkBudget budget{3, 0};
    CHECK_THROWS_AS(buchberger(ideal, &budget), BudgetExceeded);
}

TEST_CASE("rejects inhomogeneous input") {
    PolyRing r = ring_for(2);
    Ideal bad;
    bad.ring = r;
    Monomial x1 = Monomial::variable(0);
    Monomial quad = mul(x1, x1);
    bad.generators.push_back(poly_from_terms(r, {{1, quad}, {1, x1}}));
    CHECK_THROWS_AS(buchberger(bad), std::invalid_argument);
}
