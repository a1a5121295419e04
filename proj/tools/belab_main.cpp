// belab: predict and verify homological invariants of binomial edge ideals.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "belab/enumerate.hpp"
#include "belab/verify.hpp"

namespace {

belab::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return belab::Graph::from_json(buffer.str());
}

belab::MonomialOrder parse_order(const std::string& name) {
    if (name == "degrevlex") return belab::MonomialOrder::degrevlex;
    if (name == "lex") return belab::MonomialOrder::lex;
    throw CLI::ValidationError("--order must be degrevlex or lex");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"belab: binomial edge ideal laboratory"};
    app.require_subcommand(1);

    std::string graph_path, order_name = "degrevlex", out_path, json_path, family = "unicyclic";
    uint32_t characteristic = 32003;
    bool force = false;
    int max_n = 6, girth_min = 3, girth_max = 1 << 20, k = 4, budget = 2, jobs = 0, oracle_cap = 9;

    auto* cmd_predict = app.add_subcommand("predict", "family recognition + theorem-based prediction");
    cmd_predict->add_option("--graph", graph_path, "graph JSON file")->required();

    auto* cmd_betti = app.add_subcommand("betti", "resolution oracle: Betti table and invariants");
    cmd_betti->add_option("--graph", graph_path, "graph JSON file")->required();
    cmd_betti->add_option("--char", characteristic, "field characteristic (prime)");
    cmd_betti->add_option("--order", order_name, "degrevlex|lex");
    cmd_betti->add_flag("--force", force, "ignore the size cap");

    auto* cmd_primes = app.add_subcommand("primes", "minimal primes via cut sets");
    cmd_primes->add_option("--graph", graph_path, "graph JSON file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "predictor vs oracle over a graph family");
    cmd_verify->add_option("--family", family, "unicyclic|whiskered-cycle");
    cmd_verify->add_option("--max-n", max_n, "vertex cap (unicyclic family)");
    cmd_verify->add_option("--girth-min", girth_min);
    cmd_verify->add_option("--girth-max", girth_max);
    cmd_verify->add_option("--k", k, "cycle length (whiskered-cycle family)");
    cmd_verify->add_option("--budget", budget, "max total whiskers (whiskered-cycle family)");
    cmd_verify->add_option("--char", characteristic, "field characteristic (prime)");
    cmd_verify->add_option("--order", order_name, "degrevlex|lex");
    cmd_verify->add_option("--out", out_path, "CSV report path");
    cmd_verify->add_option("--json", json_path, "JSON report path");
    cmd_verify->add_option("--jobs", jobs, "worker threads (0 = auto)");
    cmd_verify->add_option("--oracle-cap", oracle_cap, "skip resolutions for n above this");
    cmd_verify->add_flag("--force", force, "run the oracle regardless of size");

    auto* cmd_enum = app.add_subcommand("enumerate", "list family members as graph JSON");
    cmd_enum->add_option("--family", family, "unicyclic|whiskered-cycle");
    cmd_enum->add_option("--max-n", max_n);
    cmd_enum->add_option("--girth-min", girth_min);
    cmd_enum->add_option("--girth-max", girth_max);
    cmd_enum->add_option("--k", k);
    cmd_enum->add_option("--budget", budget, "total whiskers (exact)");

    CLI11_PARSE(app, argc, argv);

    try {
        belab::BettiCache cache = belab::BettiCache::from_env();

        if (cmd_predict->parsed()) {
            belab::Graph g = load_graph(graph_path);
            belab::FamilyDescriptor fam;
            belab::Prediction pred = belab::predict(g, &fam);
            std::cout << "family: " << fam.to_string() << "\n" << pred.to_json() << "\n";
            auto [lo, hi] = belab::matsuda_murai_bounds(g);
            std::cout << "reg bounds (induced path / vertex count): [" << lo << ", " << hi << "]\n";
            return 0;
        }
        if (cmd_betti->parsed()) {
            belab::Graph g = load_graph(graph_path);
            belab::PolyRing ring;
            ring.n = g.num_vertices();
            ring.characteristic = characteristic;
            ring.order = parse_order(order_name);
            if (g.num_vertices() > 9 && !force) {
                std::cerr << "n = " << g.num_vertices() << " exceeds the default oracle cap; use --force\n";
                return 2;
            }
            belab::WorkBudget work{belab::default_budget(), 0};
            belab::OracleResult oracle = belab::run_oracle(g, ring, cache, &work);
            std::cout << oracle.betti.to_json() << "\n";
            std::cout << oracle.betti.to_display_string();
            std::cout << "pd=" << oracle.derived.pd << " reg=" << oracle.derived.reg
                      << " depth=" << oracle.derived.depth << " dim=" << oracle.derived.dim
                      << " unique_extremal=" << (oracle.derived.unique_extremal ? "yes" : "no") << "\n";
            return 0;
        }
        if (cmd_primes->parsed()) {
            belab::Graph g = load_graph(graph_path);
            auto primes = belab::minimal_primes(g);
            std::cout << belab::primes_report_json(g, primes) << "\n";
            std::cout << "dim=" << belab::krull_dimension(g) << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            belab::VerifyConfig config;
            config.family = family;
            config.max_n = max_n;
            config.girth_min = girth_min;
            config.girth_max = girth_max;
            config.k = k;
            config.budget_whiskers = budget;
            config.characteristic = characteristic;
            config.order = parse_order(order_name);
            config.jobs = jobs;
            config.oracle_cap = oracle_cap;
            config.force = force;
            belab::VerifyReport report = belab::run_verify(config, cache);
            if (!out_path.empty()) std::ofstream(out_path) << report.to_csv();
            if (!json_path.empty()) std::ofstream(json_path) << report.to_json();
            if (out_path.empty() && json_path.empty()) std::cout << report.to_csv();
            std::cerr << report.records.size() << " graphs, " << report.refutations << " refutations, "
                      << report.soundness_failures << " soundness failures\n";
            return (report.refutations || report.soundness_failures) ? 1 : 0;
        }
        if (cmd_enum->parsed()) {
            std::vector<belab::Graph> graphs;
            if (family == "unicyclic")
                graphs = belab::enumerate_unicyclic(max_n, girth_min, girth_max);
            else if (family == "whiskered-cycle")
                graphs = belab::enumerate_whiskered_cycles(k, budget);
            else
                throw std::runtime_error("unknown family: " + family);
            for (const auto& g : graphs) std::cout << g.to_json() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
