#include "belab/monomial_ideal.hpp"

#include <algorithm>
#include <string>

namespace belab {

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    intpoly_trim(r);
    return r;
}

IntPoly intpoly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    intpoly_trim(r);
    return r;
}

IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    intpoly_trim(r);
    return r;
}

void intpoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::string intpoly_to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        if (!s.empty()) s += p[d] > 0 ? " + " : " - ";
        else if (p[d] < 0) s += "-";
        int64_t c = p[d] < 0 ? -p[d] : p[d];
        if (c != 1 || d == 0) s += std::to_string(c);
        if (d > 0) {
            if (c != 1) s += "*";
            s += "t";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

std::vector<Monomial> initial_ideal(Ideal& ideal, WorkBudget* budget) {
    const auto& gb = buchberger(ideal, budget);
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(g.lead().mono);
    return leads;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (divides(kept, m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
    std::vector<Monomial> min_gens = minimalize(gens);
    if (min_gens.empty()) return {1};
    if (!min_gens.front().degree) return {};  // contains a unit: S/I = 0
    // split off the last generator m:  K(I) = K(I') - t^deg(m) * K(I' : m)
    Monomial m = min_gens.back();
    min_gens.pop_back();
    IntPoly head = hilbert_numerator(min_gens, nvars);
    std::vector<Monomial> colon;
    colon.reserve(min_gens.size());
    for (const auto& g : min_gens) colon.push_back(div(lcm(g, m), m));
    IntPoly tail = hilbert_numerator(colon, nvars);
    IntPoly shift(m.degree + 1, 0);
    shift[m.degree] = 1;
    return intpoly_sub(head, intpoly_mul(shift, tail));
}

namespace {

// exact minimum transversal of the support sets, branch and bound
void min_cover(const std::vector<uint32_t>& supports, uint32_t covered_mask, size_t index, int chosen,
               int& best) {
    if (chosen >= best) return;
    while (index < supports.size() && (supports[index] & covered_mask)) ++index;
    if (index == supports.size()) {
        best = chosen;
        return;
    }
    uint32_t support = supports[index];
    for (int v = 0; v < kMaxVars; ++v)
        if (support & (uint32_t(1) << v))
            min_cover(supports, covered_mask | (uint32_t(1) << v), index + 1, chosen + 1, best);
}

}  // namespace

int krull_dim_monomial(const std::vector<Monomial>& gens, int nvars) {
    std::vector<Monomial> min_gens = minimalize(gens);
    if (min_gens.empty()) return nvars;
    std::vector<uint32_t> supports;
    supports.reserve(min_gens.size());
    for (const auto& m : min_gens) {
        if (m.is_one()) return -1;  // unit ideal: empty variety
        supports.push_back(m.support);
    }
    // order by support size so branching stays narrow
    std::sort(supports.begin(), supports.end(),
              [](uint32_t a, uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    int best = nvars + 1;
    min_cover(supports, 0, 0, 0, best);
    return nvars - best;
}

}  // namespace belab
