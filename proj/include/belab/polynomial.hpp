#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "belab/monomial.hpp"

namespace belab {

/// Ring descriptor for S = F_p[x_1..x_n, y_1..y_n].
struct PolyRing {
    int n = 0;  // vertex count; nvars = 2n
    uint32_t characteristic = 32003;
    MonomialOrder order = MonomialOrder::degrevlex;

    int nvars() const { return 2 * n; }
    int var_x(int i) const { return i - 1; }      // 1-based vertex -> variable index
    int var_y(int i) const { return n + i - 1; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= characteristic ? s - characteristic : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + characteristic - b; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % characteristic);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : characteristic - a; }
    uint32_t inv(uint32_t a) const;
    bool operator==(const PolyRing& o) const {
        return n == o.n && characteristic == o.characteristic && order == o.order;
    }
};

struct Term {
    uint32_t coeff = 0;
    Monomial mono;
};

/// Sparse polynomial: terms strictly descending in the ring's monomial order,
/// no zero coefficients.
struct Polynomial {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    int degree() const { return is_zero() ? -1 : terms.front().mono.degree; }
    bool is_homogeneous() const;
    size_t size() const { return terms.size(); }
};

Polynomial poly_from_terms(const PolyRing& ring, std::vector<Term> terms);  // sorts and combines
Polynomial add(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial scale(const PolyRing& ring, const Polynomial& a, uint32_t c);
/// a * (c * m)
Polynomial mul_term(const PolyRing& ring, const Polynomial& a, uint32_t c, const Monomial& m);
Polynomial mul(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial monic(const PolyRing& ring, const Polynomial& a);
bool equal(const Polynomial& a, const Polynomial& b);

std::string poly_to_string(const PolyRing& ring, const Polynomial& p);

}  // namespace belab
