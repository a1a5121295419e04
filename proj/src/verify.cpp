#include "belab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "belab/canonical.hpp"
#include "belab/enumerate.hpp"
#include "json.hpp"

namespace belab {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::prediction_refuted: return "prediction_refuted";
        case Verdict::prediction_refined: return "prediction_refined";
        case Verdict::oracle_skipped: return "oracle_skipped";
    }
    return "?";
}

OracleResult run_oracle(const Graph& g, const PolyRing& ring_template, const BettiCache& cache,
                        WorkBudget* budget) {
    PolyRing ring = ring_template;
    ring.n = g.num_vertices();
    OracleResult result;

    Ideal ideal = binomial_edge_ideal(g, ring);
    if (auto cached = cache.get(g, ring)) {
        result.betti = *cached;
        result.from_cache = true;
    } else {
        Resolution res = free_resolution(ideal, -1, budget);
        MinimizeResult min = minimize(res);  // re-verifies d.d = 0 and minimality
        result.betti = min.betti;
        cache.put(g, ring, result.betti);
    }

    if (!hilbert_consistency_check(result.betti, ideal, budget))
        throw std::logic_error("oracle: Betti table fails Hilbert consistency");

    int dim = krull_dimension(g);
    result.derived = derived_invariants(result.betti, ring, dim);

    // bound checks from the soundness suite
    int n = g.num_vertices();
    if (result.derived.pd > 2 * n) throw std::logic_error("oracle: pd exceeds variable count");
    if (result.derived.depth + result.derived.pd != 2 * n)
        throw std::logic_error("oracle: depth + pd mismatch");
    if (result.derived.depth > result.derived.dim) throw std::logic_error("oracle: depth exceeds dim");
    if (g.is_connected() && g.num_edges() > 0) {
        int ell = longest_induced_path_length(g);
        if (result.derived.reg < ell || result.derived.reg > n - 1)
            throw std::logic_error("oracle: reg outside induced-path bounds");
        if (result.derived.depth > n + 1) throw std::logic_error("oracle: depth above n+1");
    }
    return result;
}

Verdict compare_prediction(const Prediction& pred, const DerivedInvariants& oracle, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return Verdict::prediction_refuted;
    };
    if (!pred.depth.contains(oracle.depth))
        return fail("depth: predicted " + std::to_string(pred.depth.lo) + ".." +
                    std::to_string(pred.depth.hi) + " oracle " + std::to_string(oracle.depth));
    if (!pred.reg.contains(oracle.reg))
        return fail("reg: predicted " + std::to_string(pred.reg.lo) + ".." + std::to_string(pred.reg.hi) +
                    " oracle " + std::to_string(oracle.reg));

    auto is_oracle_extremal = [&](int i, int j) {
        return std::find(oracle.extremal.begin(), oracle.extremal.end(), std::make_pair(i, j)) !=
               oracle.extremal.end();
    };
    bool has_candidates = false;
    for (const auto& pos : pred.extremal) {
        if (pos.certain) {
            if (!is_oracle_extremal(pos.i, pos.j))
                return fail("extremal: (" + std::to_string(pos.i) + "," + std::to_string(pos.j) +
                            ") not extremal in oracle");
        } else {
            has_candidates = true;
        }
    }
    if (!pred.extremal.empty()) {
        // the distinguished pd-corner must be one of the predicted positions
        bool found = false;
        for (const auto& pos : pred.extremal)
            if (pos.i == oracle.corner_pd.first && pos.j == oracle.corner_pd.second) found = true;
        if (!found)
            return fail("extremal: oracle pd-corner (" + std::to_string(oracle.corner_pd.first) + "," +
                        std::to_string(oracle.corner_pd.second) + ") outside predicted set");
    }
    if (pred.uniqueness == Uniqueness::unique && !oracle.unique_extremal)
        return fail("uniqueness: predicted unique, oracle found several extremal positions");
    if (pred.uniqueness == Uniqueness::non_unique && oracle.unique_extremal)
        return fail("uniqueness: predicted non_unique, oracle extremal position is unique");

    bool refined = !pred.depth.exact() || !pred.reg.exact() || has_candidates ||
                   pred.uniqueness == Uniqueness::undetermined || pred.extremal.empty();
    return refined ? Verdict::prediction_refined : Verdict::match;
}

namespace {

std::string graph_identifier(const Graph& g) {
    std::ostringstream s;
    s << "g" << std::hex << canonical_hash(g) << std::dec << "-n" << g.num_vertices();
    return s.str();
}

std::string range_str(const ValueRange& v) {
    if (v.exact()) return std::to_string(v.lo);
    return std::to_string(v.lo) + ".." + std::to_string(v.hi);
}

std::string positions_str(const std::vector<ExtremalPosition>& ps) {
    std::string s;
    for (const auto& p : ps) {
        if (!s.empty()) s += "|";
        s += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + (p.certain ? ")" : ")?");
    }
    return s.empty() ? "-" : s;
}

std::string oracle_positions_str(const DerivedInvariants& d) {
    std::string s;
    for (const auto& [i, j] : d.extremal) {
        if (!s.empty()) s += "|";
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s;
}

}  // namespace

VerificationRecord verify_one(const Graph& g, const VerifyConfig& config, const BettiCache& cache) {
    VerificationRecord rec;
    rec.graph = g;
    rec.n = g.num_vertices();
    rec.graph_id = graph_identifier(g);
    auto start = std::chrono::steady_clock::now();

    FamilyDescriptor fam;
    rec.prediction = predict(g, &fam);
    rec.family = fam.to_string();
    rec.k = fam.k;
    if (fam.k == 0 && is_unicyclic(g)) rec.k = cycle_structure(g).length();

    PolyRing ring;
    ring.n = g.num_vertices();
    ring.characteristic = config.characteristic;
    ring.order = config.order;

    if (rec.n > config.oracle_cap && !config.force) {
        rec.verdict = Verdict::oracle_skipped;
        rec.detail = "oracle budget: n > " + std::to_string(config.oracle_cap);
    } else {
        WorkBudget budget{config.work_budget ? config.work_budget : default_budget(), 0};
        try {
            OracleResult oracle = run_oracle(g, ring, cache, &budget);
            rec.oracle = oracle.derived;
            std::string why;
            rec.verdict = compare_prediction(rec.prediction, oracle.derived, &why);
            rec.detail = why;
        } catch (const BudgetExceeded& e) {
            rec.verdict = Verdict::oracle_skipped;
            rec.detail = e.what();
        }
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

VerifyReport run_verify(const VerifyConfig& config, const BettiCache& cache) {
    std::vector<Graph> graphs;
    if (config.family == "unicyclic") {
        graphs = enumerate_unicyclic(config.max_n, config.girth_min, config.girth_max);
    } else if (config.family == "whiskered-cycle") {
        for (int total = 1; total <= config.budget_whiskers; ++total)
            for (auto& g : enumerate_whiskered_cycles(config.k, total)) graphs.push_back(g);
    } else {
        throw std::invalid_argument("run_verify: unknown family " + config.family);
    }

    VerifyReport report;
    report.records.resize(graphs.size());
    std::atomic<size_t> next{0};
    std::atomic<int> soundness_failures{0};
    int jobs = config.jobs > 0 ? config.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= graphs.size()) break;
            try {
                report.records[idx] = verify_one(graphs[idx], config, cache);
            } catch (const std::exception& e) {
                VerificationRecord rec;
                rec.graph = graphs[idx];
                rec.n = graphs[idx].num_vertices();
                rec.graph_id = graph_identifier(graphs[idx]);
                rec.verdict = Verdict::prediction_refuted;
                rec.detail = std::string("internal soundness failure: ") + e.what();
                report.records[idx] = rec;
                soundness_failures.fetch_add(1);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         return std::tie(a.n, a.graph_id) < std::tie(b.n, b.graph_id);
                     });
    for (const auto& r : report.records)
        if (r.verdict == Verdict::prediction_refuted) ++report.refutations;
    report.soundness_failures = soundness_failures.load();
    return report;
}

std::string VerifyReport::to_csv() const {
    std::ostringstream out;
    out << "graph_id,family,n,k,depth_pred,depth_oracle,reg_pred,reg_oracle,extremal_pred,"
           "extremal_oracle,uniqueness_pred,uniqueness_oracle,verdict,ms\n";
    for (const auto& r : records) {
        out << r.graph_id << "," << '"' << r.family << '"' << "," << r.n << "," << r.k << ","
            << range_str(r.prediction.depth) << "," << (r.oracle ? std::to_string(r.oracle->depth) : "-")
            << "," << range_str(r.prediction.reg) << ","
            << (r.oracle ? std::to_string(r.oracle->reg) : "-") << ","
            << positions_str(r.prediction.extremal) << ","
            << (r.oracle ? oracle_positions_str(*r.oracle) : "-") << ","
            << uniqueness_name(r.prediction.uniqueness) << ","
            << (r.oracle ? (r.oracle->unique_extremal ? "unique" : "non_unique") : "-") << ","
            << verdict_name(r.verdict) << "," << static_cast<long long>(r.ms) << "\n";
    }
    return out.str();
}

std::string VerifyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json item;
        item["graph_id"] = r.graph_id;
        item["family"] = r.family;
        item["n"] = r.n;
        item["k"] = r.k;
        item["graph"] = nlohmann::json::parse(r.graph.to_json());
        item["prediction"] = nlohmann::json::parse(r.prediction.to_json());
        if (r.oracle) {
            nlohmann::json o;
            o["pd"] = r.oracle->pd;
            o["reg"] = r.oracle->reg;
            o["depth"] = r.oracle->depth;
            o["dim"] = r.oracle->dim;
            o["unique_extremal"] = r.oracle->unique_extremal;
            auto ext = nlohmann::json::array();
            for (auto [i, j] : r.oracle->extremal) ext.push_back({i, j});
            o["extremal"] = ext;
            item["oracle"] = o;
        }
        item["verdict"] = verdict_name(r.verdict);
        item["detail"] = r.detail;
        item["ms"] = r.ms;
        arr.push_back(item);
    }
    nlohmann::json top;
    top["records"] = arr;
    top["refutations"] = refutations;
    top["soundness_failures"] = soundness_failures;
    return top.dump(2);
}

}  // namespace belab
