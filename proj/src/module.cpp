#include "belab/module.hpp"

#include <algorithm>

namespace belab {

FreeModuleOrder FreeModuleOrder::ring_module() {
    FreeModuleOrder fm;
    fm.weight.push_back(Monomial::one());
    fm.twist.push_back(0);
    fm.gene.push_back({0});
    return fm;
}

int mod_cmp(const PolyRing& ring, const FreeModuleOrder& fm, const ModTerm& a, const ModTerm& b) {
    int c = cmp(a.wmono, b.wmono, ring.nvars(), ring.order);
    if (c != 0) return c;
    const auto& ga = fm.gene[a.comp];
    const auto& gb = fm.gene[b.comp];
    size_t len = std::min(ga.size(), gb.size());
    for (size_t i = 0; i < len; ++i)
        if (ga[i] != gb[i]) return ga[i] < gb[i] ? 1 : -1;  // smaller chain entry = larger term
    if (ga.size() != gb.size()) return ga.size() < gb.size() ? 1 : -1;
    return 0;
}

ModTerm make_term(const FreeModuleOrder& fm, uint32_t coeff, uint32_t comp, const Monomial& mono) {
    return ModTerm{coeff, comp, mono, mul(mono, fm.weight[comp])};
}

int internal_degree(const FreeModuleOrder& fm, const ModTerm& t) {
    return t.mono.degree + fm.twist[t.comp];
}

ModElement mod_from_terms(const PolyRing& ring, const FreeModuleOrder& fm, std::vector<ModTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm& a, const ModTerm& b) { return mod_cmp(ring, fm, a, b) > 0; });
    ModElement e;
    for (auto& t : terms) {
        uint32_t c = t.coeff % ring.characteristic;
        if (!c) continue;
        if (!e.terms.empty() && e.terms.back().comp == t.comp && e.terms.back().mono == t.mono) {
            e.terms.back().coeff = ring.add(e.terms.back().coeff, c);
            if (!e.terms.back().coeff) e.terms.pop_back();
        } else {
            t.coeff = c;
            e.terms.push_back(t);
        }
    }
    return e;
}

ModElement mod_submul(const PolyRing& ring, const FreeModuleOrder& fm, const ModElement& a, uint32_t c,
                      const Monomial& m, const ModElement& b) {
    ModElement r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    uint32_t neg = ring.neg(c);
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            r.terms.push_back(a.terms[i++]);
            continue;
        }
        ModTerm bt = b.terms[j];
        bt.coeff = ring.mul(bt.coeff, neg);
        bt.mono = mul(bt.mono, m);
        bt.wmono = mul(bt.wmono, m);
        if (i == a.terms.size()) {
            if (bt.coeff) r.terms.push_back(bt);
            ++j;
            continue;
        }
        int cc = mod_cmp(ring, fm, a.terms[i], bt);
        if (cc > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (cc < 0) {
            if (bt.coeff) r.terms.push_back(bt);
            ++j;
        } else {
            uint32_t s = ring.add(a.terms[i].coeff, bt.coeff);
            if (s) {
                ModTerm t = a.terms[i];
                t.coeff = s;
                r.terms.push_back(t);
            }
            ++i;
            ++j;
        }
    }
    return r;
}

ModElement mod_normal_form(const PolyRing& ring, const FreeModuleOrder& fm, ModElement h,
                           const std::vector<ModElement>& basis, std::vector<Polynomial>* quotients,
                           WorkBudget* budget) {
    // per-component reducer index
    std::vector<std::vector<int>> by_comp(fm.rank());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        if (!basis[i].is_zero()) by_comp[basis[i].lead().comp].push_back(i);

    ModElement remainder;
    while (!h.is_zero()) {
        const ModTerm& lead = h.lead();
        int reducer = -1;
        for (int idx : by_comp[lead.comp]) {
            const Monomial& lm = basis[idx].lead().mono;
            if ((lm.support & ~lead.mono.support) == 0 && divides(lm, lead.mono)) {
                reducer = idx;
                break;
            }
        }
        if (reducer >= 0) {
            if (budget) budget->tick();
            const ModElement& g = basis[reducer];
            uint32_t c = ring.mul(lead.coeff, ring.inv(g.lead().coeff));
            Monomial shift = div(lead.mono, g.lead().mono);
            if (quotients)
                (*quotients)[reducer] =
                    add(ring, (*quotients)[reducer], poly_from_terms(ring, {{c, shift}}));
            h = mod_submul(ring, fm, h, c, shift, g);
        } else {
            remainder.terms.push_back(lead);
            h.terms.erase(h.terms.begin());
        }
    }
    return remainder;
}

}  // namespace belab
