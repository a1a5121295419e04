#include "belab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace belab {

uint64_t default_budget() {
    if (const char* env = std::getenv("BELAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& basis,
                       WorkBudget* budget) {
    Polynomial remainder;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lead = work.lead();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& lm = g.lead().mono;
            if ((lm.support & ~lead.mono.support) == 0 && divides(lm, lead.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            if (budget) budget->tick();
            uint32_t c = ring.mul(lead.coeff, ring.inv(reducer->lead().coeff));
            Monomial shift = div(lead.mono, reducer->lead().mono);
            work = sub(ring, work, mul_term(ring, *reducer, c, shift));
        } else {
            remainder.terms.push_back(lead);
            work.terms.erase(work.terms.begin());
        }
    }
    return remainder;
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
    Monomial l = lcm(f.lead().mono, g.lead().mono);
    Polynomial a = mul_term(ring, f, ring.inv(f.lead().coeff), div(l, f.lead().mono));
    Polynomial b = mul_term(ring, g, ring.inv(g.lead().coeff), div(l, g.lead().mono));
    return sub(ring, a, b);
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm_mono;
};

struct PairCmp {
    const PolyRing* ring;
    // min-heap by (degree, order) of the lcm: normal selection strategy
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm_mono.degree != b.lcm_mono.degree) return a.lcm_mono.degree > b.lcm_mono.degree;
        return cmp(a.lcm_mono, b.lcm_mono, ring->nvars(), ring->order) > 0;
    }
};

std::vector<Polynomial> interreduce(const PolyRing& ring, std::vector<Polynomial> basis) {
    // drop elements whose lead is divisible by another lead, then tail-reduce
    std::vector<Polynomial> minimal;
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp(a.lead().mono, b.lead().mono, ring.nvars(), ring.order) < 0;
    });
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead().mono, basis[i].lead().mono)) {
                if (!(basis[i].lead().mono == basis[j].lead().mono) || j < i) redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(ring, minimal[i], others);
        if (!r.is_zero()) reduced.push_back(monic(ring, r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp(a.lead().mono, b.lead().mono, ring.nvars(), ring.order) < 0;
    });
    return reduced;
}

}  // namespace

const std::vector<Polynomial>& buchberger(Ideal& ideal, WorkBudget* budget) {
    if (ideal.reduced_gb) return *ideal.reduced_gb;
    const PolyRing& ring = ideal.ring;
    for (const auto& g : ideal.generators)
        if (!g.is_homogeneous()) throw std::invalid_argument("buchberger: generators must be homogeneous");

    std::vector<Polynomial> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(monic(ring, g));

    std::priority_queue<Pair, std::vector<Pair>, PairCmp> pairs(PairCmp{&ring});
    auto push_pairs = [&](int t) {
        for (int i = 0; i < t; ++i)
            pairs.push({i, t, lcm(basis[i].lead().mono, basis[t].lead().mono)});
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!pairs.empty()) {
        Pair pr = pairs.top();
        pairs.pop();
        const Polynomial &f = basis[pr.i], &g = basis[pr.j];
        if (coprime(f.lead().mono, g.lead().mono)) continue;  // first criterion
        // chain criterion: some other basis lead divides the lcm and both
        // sub-lcms are proper divisors
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const Monomial& lk = basis[k].lead().mono;
            if (!divides(lk, pr.lcm_mono)) continue;
            Monomial lik = lcm(f.lead().mono, lk), ljk = lcm(g.lead().mono, lk);
            if (!(lik == pr.lcm_mono) && !(ljk == pr.lcm_mono)) skip = true;
        }
        if (skip) continue;
        Polynomial s = s_polynomial(ring, f, g);
        Polynomial r = normal_form(ring, s, basis, budget);
        if (!r.is_zero()) {
            basis.push_back(monic(ring, r));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    auto reduced = interreduce(ring, basis);
    // membership guard: original generators must reduce to zero
    for (const auto& g : ideal.generators)
        if (!normal_form(ring, g, reduced).is_zero())
            throw std::logic_error("buchberger: generator fails membership re-check");
    ideal.reduced_gb = std::move(reduced);
    return *ideal.reduced_gb;
}

bool groebner_self_check(const PolyRing& ring, const std::vector<Polynomial>& gb, WorkBudget* budget) {
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            Polynomial s = s_polynomial(ring, gb[i], gb[j]);
            if (!normal_form(ring, s, gb, budget).is_zero()) return false;
        }
    return true;
}

}  // namespace belab
