#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "belab/ideal.hpp"

namespace belab {

/// Raised when a computation exceeds its configured work budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Shared work meter: every top-reduction step ticks it once.
struct WorkBudget {
    uint64_t limit = 0;  // 0 = unlimited
    uint64_t used = 0;

    void tick(uint64_t amount = 1) {
        used += amount;
        if (limit && used > limit) throw BudgetExceeded("work budget exceeded");
    }
};

/// Budget from the BELAB_BUDGET environment variable (0 = unlimited).
uint64_t default_budget();

/// Remainder of f under full division by `basis`; no term of the result is
/// divisible by any basis lead monomial.
Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& basis,
                       WorkBudget* budget = nullptr);

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g);

/// Computes and caches the reduced Groebner basis (monic, interreduced,
/// sorted by lead monomial ascending).  Membership of every original
/// generator is re-verified before returning.
const std::vector<Polynomial>& buchberger(Ideal& ideal, WorkBudget* budget = nullptr);

/// Full post-hoc Buchberger criterion: every S-polynomial reduces to zero.
bool groebner_self_check(const PolyRing& ring, const std::vector<Polynomial>& gb, WorkBudget* budget = nullptr);

}  // namespace belab
