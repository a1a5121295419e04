#pragma once

#include <vector>

#include "belab/groebner.hpp"

namespace belab {

/// Free module basis data for one homological stage.  Each basis element
/// carries the composite weight monomial of its Schreyer order (the product
/// of lead monomials down the tower), the internal degree twist, and the
/// genealogy chain used to break weight ties (lead components bottom-up,
/// ending in the element's own index).
struct FreeModuleOrder {
    std::vector<Monomial> weight;           // per basis element
    std::vector<int> twist;                 // internal degree of each generator
    std::vector<std::vector<int>> gene;     // tie-break chains
    int rank() const { return static_cast<int>(weight.size()); }

    static FreeModuleOrder ring_module();   // F_0 = S: weight 1, twist 0
};

struct ModTerm {
    uint32_t coeff = 0;
    uint32_t comp = 0;      // basis index in the current free module
    Monomial mono;          // ring monomial
    Monomial wmono;         // mono * weight[comp], cached for comparisons
};

/// Sparse module element, terms strictly descending in the Schreyer order.
struct ModElement {
    std::vector<ModTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const { return terms.front(); }
    size_t size() const { return terms.size(); }
};

/// cmp > 0 iff a > b under the induced order: weighted monomial first, then
/// genealogy (smaller chain entry = larger term).
int mod_cmp(const PolyRing& ring, const FreeModuleOrder& fm, const ModTerm& a, const ModTerm& b);

ModTerm make_term(const FreeModuleOrder& fm, uint32_t coeff, uint32_t comp, const Monomial& mono);
ModElement mod_from_terms(const PolyRing& ring, const FreeModuleOrder& fm, std::vector<ModTerm> terms);
/// a - c * m * b
ModElement mod_submul(const PolyRing& ring, const FreeModuleOrder& fm, const ModElement& a, uint32_t c,
                      const Monomial& m, const ModElement& b);
int internal_degree(const FreeModuleOrder& fm, const ModTerm& t);

/// Full reduction of h by basis elements with matching lead component;
/// quotients[i] accumulates the coefficient polynomial of basis[i].
ModElement mod_normal_form(const PolyRing& ring, const FreeModuleOrder& fm, ModElement h,
                           const std::vector<ModElement>& basis, std::vector<Polynomial>* quotients,
                           WorkBudget* budget);

}  // namespace belab
