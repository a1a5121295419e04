#pragma once

#include <optional>
#include <string>
#include <vector>

#include "belab/cache.hpp"
#include "belab/predictor.hpp"
#include "belab/primes.hpp"
#include "belab/resolution.hpp"

namespace belab {

/// Resolution-backed ground truth for one graph, with the soundness suite
/// (complex, minimality, grading, Hilbert consistency, bound checks) run as
/// part of the computation.
struct OracleResult {
    BettiTable betti;
    DerivedInvariants derived;
    bool from_cache = false;
};

/// Computes (or fetches) the Betti table of S/J_G and derives pd, reg, depth,
/// dim, extremal data.  Throws BudgetExceeded when over budget and
/// std::logic_error if any internal consistency check fails.
OracleResult run_oracle(const Graph& g, const PolyRing& ring, const BettiCache& cache,
                        WorkBudget* budget = nullptr);

enum class Verdict { match, prediction_refuted, prediction_refined, oracle_skipped };
std::string verdict_name(Verdict v);

struct VerificationRecord {
    std::string graph_id;
    std::string family;
    int n = 0;
    int k = 0;
    Graph graph;
    Prediction prediction;
    std::optional<DerivedInvariants> oracle;
    Verdict verdict = Verdict::oracle_skipped;
    double ms = 0.0;
    std::string detail;  // refutation reason or skip cause
};

/// Compares a prediction against oracle truth; refuted when any exact value
/// or certain position disagrees, refined when intervals or candidate sets
/// were narrowed, match when everything was exact and equal.
Verdict compare_prediction(const Prediction& pred, const DerivedInvariants& oracle, std::string* why);

struct VerifyConfig {
    std::string family = "unicyclic";  // or "whiskered-cycle"
    int max_n = 6;
    int girth_min = 3;
    int girth_max = 1 << 20;
    int k = 4;
    int budget_whiskers = 2;           // total whiskers 1..budget
    uint32_t characteristic = 32003;
    MonomialOrder order = MonomialOrder::degrevlex;
    int oracle_cap = 9;                // skip resolutions for n > cap
    bool force = false;
    int jobs = 0;                      // 0 = hardware default
    uint64_t work_budget = 0;          // 0 = env/unlimited
};

struct VerifyReport {
    std::vector<VerificationRecord> records;
    int refutations = 0;
    int soundness_failures = 0;

    std::string to_csv() const;
    std::string to_json() const;
};

VerificationRecord verify_one(const Graph& g, const VerifyConfig& config, const BettiCache& cache);
VerifyReport run_verify(const VerifyConfig& config, const BettiCache& cache);

}  // namespace belab
