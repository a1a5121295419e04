#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace belab {

constexpr int kMaxVars = 32;

enum class MonomialOrder { degrevlex, lex };

/// Exponent vector with cached total degree and support mask.  Variable i
/// (0-based) is x_{i+1} for i < n and y_{i-n+1} for i >= n.
struct Monomial {
    std::array<uint8_t, kMaxVars> exp{};
    uint16_t degree = 0;
    uint32_t support = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial variable(int index);

    bool is_one() const { return degree == 0; }
    void bump(int index, int amount);

    bool operator==(const Monomial& other) const {
        return degree == other.degree && support == other.support && exp == other.exp;
    }
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// cmp_* return <0, 0, >0 in the sense of (a < b), (a == b), (a > b).
int cmp_degrevlex(const Monomial& a, const Monomial& b, int nvars);
int cmp_lex(const Monomial& a, const Monomial& b, int nvars);
int cmp(const Monomial& a, const Monomial& b, int nvars, MonomialOrder order);

/// Rendered with the x/y split convention of a 2n-variable ring, e.g.
/// "x1^2*y3"; n is the underlying vertex count (nvars = 2n).
std::string monomial_to_string(const Monomial& m, int n);

}  // namespace belab
