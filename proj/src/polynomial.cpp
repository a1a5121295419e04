#include "belab/polynomial.hpp"

#include <algorithm>

namespace belab {

uint32_t PolyRing::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("field: division by zero");
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = characteristic, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += characteristic;
    return static_cast<uint32_t>(t);
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms)
        if (t.mono.degree != terms.front().mono.degree) return false;
    return true;
}

Polynomial poly_from_terms(const PolyRing& ring, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return cmp(a.mono, b.mono, ring.nvars(), ring.order) > 0;
    });
    Polynomial p;
    for (auto& t : ts) {
        uint32_t c = t.coeff % ring.characteristic;
        if (c == 0) continue;
        if (!p.terms.empty() && p.terms.back().mono == t.mono) {
            p.terms.back().coeff = ring.add(p.terms.back().coeff, c);
            if (p.terms.back().coeff == 0) p.terms.pop_back();
        } else {
            p.terms.push_back({c, t.mono});
        }
    }
    return p;
}

namespace {

// merge a and (c,m)-scaled b; b_scale applied to coefficients, b_shift to monomials
Polynomial merge(const PolyRing& ring, const Polynomial& a, const Polynomial& b, uint32_t b_scale,
                 const Monomial* b_shift) {
    Polynomial r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    int nv = ring.nvars();
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            r.terms.push_back(a.terms[i++]);
            continue;
        }
        Term bt = b.terms[j];
        bt.coeff = ring.mul(bt.coeff, b_scale);
        if (b_shift) bt.mono = mul(bt.mono, *b_shift);
        if (i == a.terms.size()) {
            if (bt.coeff) r.terms.push_back(bt);
            ++j;
            continue;
        }
        int c = cmp(a.terms[i].mono, bt.mono, nv, ring.order);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            if (bt.coeff) r.terms.push_back(bt);
            ++j;
        } else {
            uint32_t s = ring.add(a.terms[i].coeff, bt.coeff);
            if (s) r.terms.push_back({s, a.terms[i].mono});
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

Polynomial add(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    return merge(ring, a, b, 1, nullptr);
}

Polynomial sub(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    return merge(ring, a, b, ring.characteristic - 1, nullptr);
}

Polynomial scale(const PolyRing& ring, const Polynomial& a, uint32_t c) {
    c %= ring.characteristic;
    Polynomial r;
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({ring.mul(t.coeff, c), t.mono});
    return r;
}

Polynomial mul_term(const PolyRing& ring, const Polynomial& a, uint32_t c, const Monomial& m) {
    c %= ring.characteristic;
    Polynomial r;
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({ring.mul(t.coeff, c), mul(t.mono, m)});
    return r;
}

Polynomial mul(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& t : a.terms) r = merge(ring, r, b, t.coeff, &t.mono);
    return r;
}

Polynomial monic(const PolyRing& ring, const Polynomial& a) {
    if (a.is_zero()) return a;
    return scale(ring, a, ring.inv(a.lead().coeff));
}

bool equal(const Polynomial& a, const Polynomial& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].coeff != b.terms[i].coeff || !(a.terms[i].mono == b.terms[i].mono)) return false;
    return true;
}

std::string poly_to_string(const PolyRing& ring, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.terms) {
        if (!s.empty()) s += " + ";
        s += std::to_string(t.coeff);
        if (!t.mono.is_one()) s += "*" + monomial_to_string(t.mono, ring.n);
    }
    return s;
}

}  // namespace belab
