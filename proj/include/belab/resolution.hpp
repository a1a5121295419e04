#pragma once

#include <map>
#include <string>
#include <vector>

#include "belab/module.hpp"
#include "belab/monomial_ideal.hpp"

namespace belab {

struct FreeModule {
    int rank = 0;
    std::vector<int> twists;  // internal degree of each basis element
};

/// Sparse graded matrix; cols[c] maps row index -> homogeneous entry of
/// degree source.twists[c] - target.twists[r].
struct GradedMatrix {
    FreeModule source, target;
    std::vector<std::map<int, Polynomial>> cols;
};

/// Free resolution of S/I: F_0 = S <- F_1 <- ... ; diffs[s] is d_{s+1}.
struct Resolution {
    PolyRing ring;
    std::vector<GradedMatrix> diffs;
    bool minimal = false;

    int length() const { return static_cast<int>(diffs.size()); }
};

struct BettiTable {
    int n = 0;
    uint32_t characteristic = 0;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::map<std::pair<int, int>, int64_t> entries;  // (i, internal degree j) -> beta

    int64_t beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    std::string to_json() const;
    static BettiTable from_json(const std::string& text);
    /// Rows indexed by j - i, columns by i (the usual display convention).
    std::string to_display_string() const;
};

struct DerivedInvariants {
    int pd = 0;
    int reg = 0;
    int depth = 0;
    int dim = 0;  // supplied by the caller (prime decomposition)
    std::vector<std::pair<int, int>> extremal;        // (i, internal j), staircase corners
    std::pair<int, int> corner_pd{0, 0};              // distinguished corner at i = pd
    std::pair<int, int> corner_reg{0, 0};             // distinguished corner at j - i = reg
    bool unique_extremal = false;
};

/// One Schreyer stage: basis of the syzygy module (a Groebner basis under the
/// induced order) together with the order data of its ambient free module.
struct SyzygyStage {
    FreeModuleOrder fm;
    std::vector<ModElement> basis;
};

/// Wraps a ring-level reduced Groebner basis as stage data for the tower.
SyzygyStage stage_from_ring_gb(const PolyRing& ring, const std::vector<Polynomial>& gb);

/// Generators of the syzygy module of `stage.basis`, themselves a Groebner
/// basis under the Schreyer order; lead-redundant syzygies are pruned.
SyzygyStage schreyer_syzygies(const PolyRing& ring, const SyzygyStage& stage, WorkBudget* budget = nullptr);

/// Iterated Schreyer resolution of S/I (typically non-minimal).  Computes the
/// reduced Groebner basis of I if not already cached.
Resolution free_resolution(Ideal& ideal, int max_length = -1, WorkBudget* budget = nullptr);

struct MinimizeResult {
    Resolution resolution;
    BettiTable betti;
};

/// Cancels all unit entries (graded Gaussian elimination); the result is a
/// minimal resolution whose ranks are the graded Betti numbers.
MinimizeResult minimize(const Resolution& res);

bool check_complex(const Resolution& res);             // d_i . d_{i+1} == 0, entry-exact
bool check_minimality(const Resolution& res);          // no nonzero degree-0 entries
bool check_graded(const Resolution& res);              // entries homogeneous of the right degree

DerivedInvariants derived_invariants(const BettiTable& bt, const PolyRing& ring, int dim);

/// Bivariate Betti polynomial sum beta_{i,j} s^i t^j, exact integers.
using BiPoly = std::map<std::pair<int, int>, int64_t>;
BiPoly betti_polynomial(const BettiTable& bt);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);
std::string bipoly_to_string(const BiPoly& p);

/// Graded Euler characteristic cross-check: the alternating Betti sum must
/// equal the Hilbert numerator of the initial ideal.
bool hilbert_consistency_check(const BettiTable& bt, Ideal& ideal, WorkBudget* budget = nullptr);

}  // namespace belab
