// Command-line front end: decide Hamilton-generation, classify graphs
// against the lemma shapes, sweep random families, and expose the
// path/matching/forest utilities. Machine-parsable status goes to stdout,
// human detail to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamgen/harness.hpp"

namespace {

using namespace hamgen;

constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct GraphSourceOpts {
    std::string file;
    std::string construction;  // a1|a2|a3
    int k = 2;
    int complete_n = 0;
    int cycle_n = 0;
    int random_n = 0;
    std::uint64_t seed = 1;
    std::uint64_t p_ppm = 550000;
    int attempts = 200;
};

void add_graph_source(CLI::App* cmd, GraphSourceOpts& o) {
    auto* file = cmd->add_option("--file", o.file, "edge-list file ('n <count>' header, 'u v' lines)");
    auto* cons = cmd->add_option("--construction", o.construction, "a1|a2|a3 tight family")
                     ->check(CLI::IsMember({"a1", "a2", "a3"}));
    cmd->add_option("--k", o.k, "construction parameter k (n = 4k+1)");
    auto* comp = cmd->add_option("--complete", o.complete_n, "complete graph K_n");
    auto* cyc = cmd->add_option("--cycle", o.cycle_n, "cycle C_n");
    auto* rnd = cmd->add_option("--random-n", o.random_n, "sampled graph with degree/connectivity acceptance");
    cmd->add_option("--seed", o.seed, "sampler seed");
    cmd->add_option("--p-ppm", o.p_ppm, "edge probability in parts per million");
    cmd->add_option("--attempts", o.attempts, "sampler attempt cap");
    file->excludes(cons)->excludes(comp)->excludes(cyc)->excludes(rnd);
    cons->excludes(comp)->excludes(cyc)->excludes(rnd);
    comp->excludes(cyc)->excludes(rnd);
    cyc->excludes(rnd);
}

struct LoadedGraph {
    Graph graph;
    std::optional<LabeledConstruction> labeled;
};

json source_json(const GraphSourceOpts& o) {
    json j;
    if (!o.file.empty()) j["file"] = o.file;
    if (!o.construction.empty()) {
        j["construction"] = o.construction;
        j["k"] = o.k;
    }
    if (o.complete_n > 0) j["complete"] = o.complete_n;
    if (o.cycle_n > 0) j["cycle"] = o.cycle_n;
    if (o.random_n > 0) {
        j["random_n"] = o.random_n;
        j["seed"] = o.seed;
        j["p_ppm"] = o.p_ppm;
        j["attempts"] = o.attempts;
    }
    return j;
}

LoadedGraph load_graph(const GraphSourceOpts& o) {
    LoadedGraph out;
    int sources = !o.file.empty() + !o.construction.empty() + (o.complete_n > 0) + (o.cycle_n > 0) + (o.random_n > 0);
    if (sources != 1) fail(ErrorCode::ParseError, "exactly one graph source required");
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) fail(ErrorCode::IoError, "cannot open " + o.file);
        out.graph = read_edge_list(in);
    } else if (!o.construction.empty()) {
        int variant = o.construction[1] - '0';
        out.labeled = construction_a(o.k, variant);
        out.graph = out.labeled->graph;
    } else if (o.complete_n > 0) {
        out.graph = complete_graph(o.complete_n);
    } else if (o.cycle_n > 0) {
        out.graph = cycle_graph(o.cycle_n);
    } else {
        auto g = random_dirac_hc_graph(o.random_n, o.seed, o.attempts, o.p_ppm);
        if (!g) fail(ErrorCode::TooSmall, "sampler exhausted its attempt cap");
        out.graph = *g;
    }
    return out;
}

void add_params(CLI::App* cmd, ThresholdParams& p) {
    auto rat_opt = [cmd](const char* name, Rat& slot, const char* help) {
        cmd->add_option_function<std::string>(
            name,
            [&slot](const std::string& s) {
                auto slash = s.find('/');
                if (slash == std::string::npos)
                    slot = Rat(std::stoll(s));
                else
                    slot = Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
            },
            help);
    };
    rat_opt("--alpha", p.alpha, "alpha as p/q (default 1/10)");
    rat_opt("--beta", p.beta, "beta as p/q (default 1/50)");
    rat_opt("--eta", p.eta, "eta as p/q (default 1/4)");
    rat_opt("--sigma", p.sigma, "sigma as p/q (default 1/40)");
    rat_opt("--gamma", p.gamma, "gamma as p/q (default 1/20)");
}

void write_report(const std::string& path, const json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << report.dump(2) << "\n";
}

std::vector<VertexPair> parse_pairs(const std::string& s) {
    std::vector<VertexPair> pairs;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) fail(ErrorCode::ParseError, "pair must look like u-v");
        pairs.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
    }
    return pairs;
}

VertexSet parse_set(const std::string& s) {
    VertexSet out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.add(std::stoi(tok));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"verification toolkit for Hamilton-cycle generated cycle spaces"};
    app.set_config("--config", "", "flat key=value config file");
    app.require_subcommand(1);

    SearchBudget budget = SearchBudget::defaults();
    std::uint64_t budget_nodes = 0;
    app.add_option("--budget-nodes", budget_nodes, "search node cap (overrides HAMGEN_BUDGET_NODES)");

    // check
    auto* check = app.add_subcommand("check", "decide whether every cycle is a sum of Hamilton cycles");
    GraphSourceOpts check_src;
    add_graph_source(check, check_src);
    std::string check_out;
    bool no_certs = false, no_r = false;
    check->add_option("--out", check_out, "write a JSON report here");
    check->add_flag("--no-certs", no_certs, "skip certificate search");
    check->add_flag("--no-r", no_r, "skip the R-subgraph search");

    // classify
    auto* classify = app.add_subcommand("classify", "evaluate the lemma-shape hypothesis ledgers");
    GraphSourceOpts classify_src;
    add_graph_source(classify, classify_src);
    ThresholdParams params;
    add_params(classify, params);
    std::string classify_out;
    classify->add_option("--out", classify_out, "write a JSON report here");

    // survey
    auto* survey = app.add_subcommand("survey", "sweep seeded random graphs and check consistency");
    std::string survey_ns = "7,9";
    int survey_trials = 10;
    std::uint64_t survey_seed = 1;
    std::uint64_t survey_ppm = 550000;
    std::string survey_csv, survey_out;
    unsigned survey_threads = 0;
    survey->add_option("--n", survey_ns, "comma-separated odd orders");
    survey->add_option("--trials", survey_trials, "trials per order");
    survey->add_option("--seed", survey_seed, "base seed; trial t uses seed+t");
    survey->add_option("--p-ppm", survey_ppm, "edge probability in parts per million");
    survey->add_option("--csv", survey_csv, "write rows as CSV here");
    survey->add_option("--out", survey_out, "write a JSON report here");
    survey->add_option("--threads", survey_threads, "worker threads (0 = auto)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit an edge-list file");
    GraphSourceOpts construct_src;
    add_graph_source(construct, construct_src);
    std::string construct_out;
    construct->add_option("--out", construct_out, "output path (default stdout)");

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "route disjoint short paths greedily");
    GraphSourceOpts paths_src;
    add_graph_source(paths_cmd, paths_src);
    std::string pairs_arg;
    int paths_m = 1, paths_d = 2;
    paths_cmd->add_option("--pairs", pairs_arg, "comma-separated u-v pairs")->required();
    paths_cmd->add_option("--m", paths_m, "deletion resilience m");
    paths_cmd->add_option("--d", paths_d, "diameter bound d");

    // matching
    auto* matching_cmd = app.add_subcommand("matching", "maximum bipartite matching with a cover certificate");
    GraphSourceOpts matching_src;
    add_graph_source(matching_cmd, matching_src);
    std::string left_arg;
    matching_cmd->add_option("--left", left_arg, "comma-separated left side X (Y = rest)")->required();

    // forest
    auto* forest_cmd = app.add_subcommand("forest", "maximum linear forest (max UDP edge count)");
    GraphSourceOpts forest_src;
    add_graph_source(forest_cmd, forest_src);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (budget_nodes > 0) budget.max_nodes = budget_nodes;

    if (check->parsed()) {
        LoadedGraph lg = load_graph(check_src);
        CheckOptions opt;
        opt.budget = budget;
        opt.with_certificates = !no_certs;
        opt.with_r = !no_r;
        CheckOutcome res = run_check(lg.graph, opt);
        std::cout << res.status_line << "\n";
        std::cerr << "graph " << hash_hex(lg.graph) << ": n=" << lg.graph.vertex_count()
                  << " m=" << lg.graph.edge_count() << ", " << res.status.kind_name() << " ("
                  << res.certificates.size() << " certificates)\n";
        if (!check_out.empty()) {
            json config{{"command", "check"}, {"source", source_json(check_src)}};
            if (budget.max_nodes) config["budget_nodes"] = *budget.max_nodes;
            json report = report_shell(config);
            report["graphs"].push_back(res.record);
            report["summary"] = json{{"status", res.status.kind_name()}};
            write_report(check_out, report);
        }
        return res.exit_code;
    }
    if (classify->parsed()) {
        LoadedGraph lg = load_graph(classify_src);
        ClassifyOutcome res = run_classify(lg.graph, lg.labeled, params, budget);
        std::cout << res.status_line << "\n";
        for (const auto& e : res.witness.ledger)
            std::cerr << e.name << ": " << e.lhs.str() << " " << e.relation << " " << e.rhs.str() << " -> "
                      << (e.pass ? "pass" : "FAIL") << "\n";
        for (const auto& e : res.report)
            std::cerr << e.name << ": " << e.lhs.str() << " " << e.relation << " " << e.rhs.str() << " -> "
                      << (e.pass ? "pass" : "FAIL") << (e.note.empty() ? "" : " [" + e.note + "]") << "\n";
        if (!classify_out.empty()) {
            json config{{"command", "classify"}, {"source", source_json(classify_src)}};
            json report = report_shell(config);
            report["graphs"].push_back(res.record);
            report["summary"] = json{{"case", res.witness.tag_name()}};
            write_report(classify_out, report);
        }
        return res.exit_code;
    }
    if (survey->parsed()) {
        SurveyConfig cfg;
        std::istringstream in(survey_ns);
        std::string tok;
        while (std::getline(in, tok, ',')) cfg.ns.push_back(std::stoi(tok));
        for (int n : cfg.ns)
            if (n % 2 == 0 || n < 5) fail(ErrorCode::ParseError, "survey orders must be odd and >= 5");
        cfg.trials = survey_trials;
        cfg.seed = survey_seed;
        cfg.budget = budget;
        cfg.p_ppm = survey_ppm;
        cfg.threads = survey_threads;
        SurveyOutcome res = run_survey(cfg);
        std::cout << "rows=" << res.rows.size() << " exit=" << res.exit_code << "\n";
        std::cerr << res.report["summary"].dump() << "\n";
        if (!survey_csv.empty()) {
            std::ofstream out(survey_csv);
            if (!out) fail(ErrorCode::IoError, "cannot write " + survey_csv);
            out << res.csv;
        }
        write_report(survey_out, res.report);
        return res.exit_code;
    }
    if (construct->parsed()) {
        LoadedGraph lg = load_graph(construct_src);
        if (construct_out.empty()) {
            write_edge_list(std::cout, lg.graph);
        } else {
            std::ofstream out(construct_out);
            if (!out) fail(ErrorCode::IoError, "cannot write " + construct_out);
            write_edge_list(out, lg.graph);
        }
        return 0;
    }
    if (paths_cmd->parsed()) {
        LoadedGraph lg = load_graph(paths_src);
        auto pairs = parse_pairs(pairs_arg);
        DisjointPathsResult res = disjoint_paths(lg.graph, pairs, paths_m, paths_d);
        if (!res.hypothesis_satisfied)
            std::cerr << "warning: " << pairs.size() << " pairs exceed ceil(m/(d+1))\n";
        if (!res.paths) {
            std::cout << "paths=none\n";
            return 1;
        }
        std::cout << "paths=" << res.paths->size() << "\n";
        for (const auto& p : *res.paths) {
            for (std::size_t i = 0; i < p.size(); ++i) std::cerr << (i ? "-" : "") << p[i];
            std::cerr << "\n";
        }
        return 0;
    }
    if (matching_cmd->parsed()) {
        LoadedGraph lg = load_graph(matching_src);
        VertexSet left = parse_set(left_arg);
        VertexSet right = lg.graph.all_vertices().minus(left);
        MatchingResult res = bipartite_matching(lg.graph, left, right);
        std::cout << "matching=" << res.size() << " cover=" << res.cover.count() << "\n";
        for (auto [u, v] : res.matching) std::cerr << u << "-" << v << "\n";
        return 0;
    }
    if (forest_cmd->parsed()) {
        LoadedGraph lg = load_graph(forest_src);
        auto [value, witness] = max_linear_forest(lg.graph);
        std::cout << "f=" << value << " paths=" << witness.path_count() << "\n";
        for (const auto& p : witness.paths) {
            for (std::size_t i = 0; i < p.size(); ++i) std::cerr << (i ? "-" : "") << p[i];
            std::cerr << "\n";
        }
        return 0;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hamgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == hamgen::ErrorCode::IoError) return kExitIo;
        if (e.code() == hamgen::ErrorCode::ParseError) return kExitUsage;
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
