#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "belab/canonical.hpp"
#include "belab/verify.hpp"

using namespace belab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("belab-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

PolyRing ring_for(int n) {
    PolyRing r;
    r.n = n;
    return r;
}

}  // namespace

TEST_CASE("cache round trip, isomorphism sharing, version policy") {
    TempDir tmp;
    BettiCache cache{tmp.path.string()};
    Graph g = add_whiskers(build_cycle(4), 1, 1);
    PolyRing ring = ring_for(5);

    CHECK(!cache.get(g, ring).has_value());
    WorkBudget budget{0, 0};
    OracleResult fresh = run_oracle(g, ring, cache, &budget);
    CHECK(!fresh.from_cache);

    auto cached = cache.get(g, ring);
    REQUIRE(cached.has_value());
    CHECK(cached->to_json() == fresh.betti.to_json());

    // an isomorphic relabeling hits the same entry
    std::vector<int> perm = {3, 1, 4, 5, 2};
    Graph shuffled = relabel(g, perm);
    CHECK(cache.key_for(shuffled, ring) == cache.key_for(g, ring));
    OracleResult second = run_oracle(shuffled, ring, cache, &budget);
    CHECK(second.from_cache);
    CHECK(second.betti.to_json() == fresh.betti.to_json());

    // different characteristic is a different key
    PolyRing ring2 = ring_for(5);
    ring2.characteristic = 3;
    CHECK(cache.key_for(g, ring2) != cache.key_for(g, ring));

    // stale tool version counts as a miss
    std::string key = cache.key_for(g, ring);
    auto file = tmp.path / (key + ".json");
    std::string contents;
    {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        contents = ss.str();
    }
    auto pos = contents.find("belab-");
    REQUIRE(pos != std::string::npos);
    contents.replace(pos, 11, "belab-0.0.0");
    std::ofstream(file) << contents;
    CHECK(!cache.get(g, ring).has_value());

    // corrupt entries are misses too
    std::ofstream(file) << "{not json";
    CHECK(!cache.get(g, ring).has_value());
}

TEST_CASE("oracle characteristic flag") {
    BettiCache off;
    Graph g = build_cycle(4);
    for (uint32_t p : {2u, 3u, 32003u}) {
        PolyRing ring = ring_for(4);
        ring.characteristic = p;
        OracleResult o = run_oracle(g, ring, off);
        CHECK(o.derived.reg == 2);
        CHECK(o.derived.depth == 4);
    }
}

TEST_CASE("verdict comparison") {
    DerivedInvariants oracle;
    oracle.pd = 5;
    oracle.reg = 3;
    oracle.depth = 5;
    oracle.dim = 6;
    oracle.extremal = {{5, 8}};
    oracle.corner_pd = {5, 8};
    oracle.corner_reg = {5, 8};
    oracle.unique_extremal = true;

    Prediction exact;
    exact.depth = ValueRange::of(5);
    exact.reg = ValueRange::of(3);
    exact.extremal = {{5, 8, true}};
    exact.uniqueness = Uniqueness::unique;
    std::string why;
    CHECK(compare_prediction(exact, oracle, &why) == Verdict::match);

    Prediction wrong_depth = exact;
    wrong_depth.depth = ValueRange::of(6);
    CHECK(compare_prediction(wrong_depth, oracle, &why) == Verdict::prediction_refuted);

    Prediction interval = exact;
    interval.reg = {2, 4};
    CHECK(compare_prediction(interval, oracle, &why) == Verdict::prediction_refined);

    Prediction candidates = exact;
    candidates.extremal = {{5, 7, false}, {5, 8, false}};
    CHECK(compare_prediction(candidates, oracle, &why) == Verdict::prediction_refined);

    Prediction miss = exact;
    miss.extremal = {{5, 7, false}, {5, 6, false}};
    CHECK(compare_prediction(miss, oracle, &why) == Verdict::prediction_refuted);

    Prediction bad_unique = exact;
    bad_unique.uniqueness = Uniqueness::non_unique;
    CHECK(compare_prediction(bad_unique, oracle, &why) == Verdict::prediction_refuted);

    Prediction undecided = exact;
    undecided.uniqueness = Uniqueness::undetermined;
    CHECK(compare_prediction(undecided, oracle, &why) == Verdict::prediction_refined);
}

TEST_CASE("verify a family end to end") {
    TempDir tmp;
    BettiCache cache{tmp.path.string()};
    VerifyConfig config;
    config.family = "unicyclic";
    config.max_n = 5;
    config.jobs = 2;
    VerifyReport report = run_verify(config, cache);
    CHECK(report.records.size() == 8);
    CHECK(report.refutations == 0);
    CHECK(report.soundness_failures == 0);
    for (const auto& r : report.records) {
        CHECK(r.oracle.has_value());
        CHECK((r.verdict == Verdict::match || r.verdict == Verdict::prediction_refined));
    }

    // deterministic rerun from a warm cache (timings excluded)
    VerifyReport again = run_verify(config, cache);
    auto strip_ms = [](const std::string& csv) {
        std::istringstream in(csv);
        std::string line, out;
        while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
        return out;
    };
    CHECK(strip_ms(again.to_csv()) == strip_ms(report.to_csv()));
    for (const auto& r : again.records)
        if (r.oracle) CHECK(r.ms < 1000.0);

    std::string csv = report.to_csv();
    CHECK(csv.rfind("graph_id,family,n,k,depth_pred,depth_oracle,reg_pred,reg_oracle,", 0) == 0);
    CHECK(report.to_json().find("\"refutations\": 0") != std::string::npos);
}

TEST_CASE("verify skips oversize graphs without force") {
    BettiCache off;
    VerifyConfig config;
    config.family = "whiskered-cycle";
    config.k = 4;
    config.budget_whiskers = 1;
    config.oracle_cap = 4;  // n = 5 here, so the oracle is skipped
    VerifyReport report = run_verify(config, off);
    REQUIRE(report.records.size() == 1);
    CHECK(report.records[0].verdict == Verdict::oracle_skipped);
    CHECK(!report.records[0].oracle.has_value());
    CHECK(report.refutations == 0);
}

TEST_CASE("csv timing column is numeric") {
    BettiCache off;
    VerifyConfig config;
    config.family = "unicyclic";
    config.max_n = 4;
    VerifyReport report = run_verify(config, off);
    std::istringstream csv(report.to_csv());
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        auto last_comma = line.rfind(',');
        REQUIRE(last_comma != std::string::npos);
        std::string ms = line.substr(last_comma + 1);
        CHECK(!ms.empty());
        CHECK(ms.find_first_not_of("0123456789") == std::string::npos);
    }
}
