#include "belab/monomial.hpp"

namespace belab {

Monomial Monomial::variable(int index) {
    Monomial m;
    m.bump(index, 1);
    return m;
}

void Monomial::bump(int index, int amount) {
    if (index < 0 || index >= kMaxVars) throw std::invalid_argument("monomial: variable index out of range");
    int next = exp[index] + amount;
    if (next < 0 || next > 255) throw std::overflow_error("monomial: exponent out of range");
    exp[index] = static_cast<uint8_t>(next);
    degree = static_cast<uint16_t>(degree + amount);
    if (next > 0)
        support |= uint32_t(1) << index;
    else
        support &= ~(uint32_t(1) << index);
}

Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < kMaxVars; ++i) {
        int s = r.exp[i] + b.exp[i];
        if (s > 255) throw std::overflow_error("monomial: exponent overflow in mul");
        r.exp[i] = static_cast<uint8_t>(s);
    }
    r.degree = static_cast<uint16_t>(a.degree + b.degree);
    r.support = a.support | b.support;
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    if (a.support & ~b.support) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial div(const Monomial& b, const Monomial& a) {
    Monomial r;
    uint32_t support = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (a.exp[i] > b.exp[i]) throw std::domain_error("monomial: division not exact");
        r.exp[i] = static_cast<uint8_t>(b.exp[i] - a.exp[i]);
        if (r.exp[i]) support |= uint32_t(1) << i;
    }
    r.degree = static_cast<uint16_t>(b.degree - a.degree);
    r.support = support;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
        deg += r.exp[i];
    }
    r.degree = static_cast<uint16_t>(deg);
    r.support = a.support | b.support;
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.support & b.support) == 0; }

int cmp_degrevlex(const Monomial& a, const Monomial& b, int nvars) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;  // smaller last exponent wins
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
}

int cmp(const Monomial& a, const Monomial& b, int nvars, MonomialOrder order) {
    return order == MonomialOrder::degrevlex ? cmp_degrevlex(a, b, nvars) : cmp_lex(a, b, nvars);
}

std::string monomial_to_string(const Monomial& m, int n) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < 2 * n; ++i) {
        if (!m.exp[i]) continue;
        if (!s.empty()) s += "*";
        s += (i < n) ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - n + 1);
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

}  // namespace belab
