#pragma once

#include <cstdint>
#include <vector>

#include "belab/groebner.hpp"

namespace belab {

/// Univariate integer polynomial, coefficient of t^d at index d.
using IntPoly = std::vector<int64_t>;

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly intpoly_add(const IntPoly& a, const IntPoly& b);
IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b);
void intpoly_trim(IntPoly& p);
std::string intpoly_to_string(const IntPoly& p);

/// Lead monomials of the reduced Groebner basis (computes the basis if needed).
std::vector<Monomial> initial_ideal(Ideal& ideal, WorkBudget* budget = nullptr);

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^nvars of S/I for a
/// monomial ideal I.
IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Krull dimension of S/I for a monomial ideal I: nvars minus the minimum
/// vertex cover of the support hypergraph.
int krull_dim_monomial(const std::vector<Monomial>& gens, int nvars);

}  // namespace belab
