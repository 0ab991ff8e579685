#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hamgen/classification.hpp"
#include "hamgen/constructions.hpp"
#include "hamgen/graph.hpp"
#include "hamgen/hamgen.hpp"
#include "hamgen/hamilton.hpp"
#include "hamgen/rng.hpp"

namespace hamgen {

constexpr const char* kToolName = "hamgen";
constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kReportSchema = "1";

using json = nlohmann::json;

inline std::string hash_hex(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(g.hash()));
    return buf;
}

inline json edges_json(const Graph& g, const EdgeVector& v) {
    json arr = json::array();
    for (auto [a, b] : v.support_edges(g)) arr.push_back(json::array({a, b}));
    return arr;
}

inline json ledger_json(const Ledger& l) {
    json arr = json::array();
    for (const auto& e : l) {
        json o{{"name", e.name}, {"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}, {"relation", e.relation}, {"pass", e.pass}};
        if (!e.note.empty()) o["note"] = e.note;
        arr.push_back(std::move(o));
    }
    return arr;
}

inline json certificate_json(const Graph& g, const Certificate& c) {
    json o;
    if (c.kind == Certificate::Kind::ForbiddenEdge) {
        o["kind"] = "forbidden-edge";
        o["edge"] = json::array({c.edge.first, c.edge.second});
    } else {
        o["kind"] = "parity-class";
        o["parity_set"] = edges_json(g, c.parity_set);
        o["cycles_checked"] = c.cycles_checked;
        o["enumeration_exhausted"] = c.enumeration_exhausted;
    }
    o["witness_cycle"] = edges_json(g, c.witness_cycle);
    return o;
}

inline json status_json(const Graph& g, const HamGenStatus& st) {
    json o{{"status", st.kind_name()},
           {"rank", st.rank},
           {"dim", st.dim},
           {"cycles", st.cycles_consumed},
           {"nodes", st.nodes},
           {"enumeration", st.enumeration == SearchOutcome::Exhausted ? "exhausted" : "capped"}};
    if (st.witness) o["witness"] = edges_json(g, *st.witness);
    return o;
}

inline json report_shell(const json& config) {
    return json{{"schema", kReportSchema},
                {"tool", json{{"name", kToolName}, {"version", kToolVersion}, {"rng", SplitMix64::kAlgorithm}}},
                {"config", config},
                {"graphs", json::array()},
                {"summary", json::object()}};
}

struct CheckOptions {
    SearchBudget budget = SearchBudget::defaults();
    bool with_certificates = true;
    bool with_r = true;
    std::uint64_t r_candidates = 1ULL << 20;
};

struct CheckOutcome {
    HamGenStatus status;
    std::vector<Certificate> certificates;
    std::optional<FindRResult> r;
    double runtime_ms = 0;
    json record;
    std::string status_line;
    int exit_code = 2;
};

inline CheckOutcome run_check(const Graph& g, const CheckOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome out;
    out.status = is_hamilton_generated(g, opt.budget);
    if (out.status.kind == HamGenStatus::Kind::NotGenerated) {
        if (opt.with_certificates) out.certificates = non_generation_certificates(g);
        if (opt.with_r && g.vertex_count() % 2 == 1 && g.vertex_count() <= 24)
            out.r = find_R(g, opt.budget, opt.r_candidates);
    }
    out.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    out.record = json{{"hash", hash_hex(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
    out.record.update(status_json(g, out.status));
    if (!out.certificates.empty()) {
        json cs = json::array();
        for (const auto& c : out.certificates) cs.push_back(certificate_json(g, c));
        out.record["certificates"] = std::move(cs);
    }
    if (out.r) {
        json r{{"complement_dim", out.r->complement_dim}, {"candidates_tried", out.r->candidates_tried}};
        switch (out.r->kind) {
            case FindRResult::Kind::Found:
                r["found"] = true;
                r["edges"] = edges_json(g, out.r->r->edges);
                r["validated"] = out.r->r->validated();
                break;
            case FindRResult::Kind::NoneExists:
                r["found"] = false;
                break;
            case FindRResult::Kind::Inconclusive:
                r["found"] = "inconclusive";
                break;
        }
        out.record["r_subgraph"] = std::move(r);
    }
    out.record["runtime_ms"] = out.runtime_ms;

    std::ostringstream line;
    line << "status=" << out.status.kind_name() << " rank=" << out.status.rank << " dim=" << out.status.dim
         << " cycles=" << out.status.cycles_consumed;
    out.status_line = line.str();
    switch (out.status.kind) {
        case HamGenStatus::Kind::Generated: out.exit_code = 0; break;
        case HamGenStatus::Kind::NotGenerated: out.exit_code = 1; break;
        case HamGenStatus::Kind::Inconclusive: out.exit_code = 2; break;
    }
    return out;
}

struct ClassifyOutcome {
    PartitionWitness witness;
    Ledger report;
    json record;
    std::string status_line;
    int exit_code = 2;
};

// Construction inputs use their canonical lemma shape; generic graphs go
// through the sparse-pair / refine / build pipeline.
inline ClassifyOutcome run_classify(const Graph& g, const std::optional<LabeledConstruction>& labeled,
                                    const ThresholdParams& p, const SearchBudget& budget) {
    ClassifyOutcome out;
    if (labeled) {
        out.witness = canonical_shape(*labeled);
    } else {
        auto pair = find_sparse_pair(g, p);
        if (!pair) {
            out.witness.tag = PartitionWitness::Case::Case1;
        } else {
            PartitionWitness refined = refine_partition(g, pair->first, pair->second, p);
            if (refined.tag == PartitionWitness::Case::Case2)
                out.witness = build_case2_partition(g, *refined.a, p);
            else if (refined.tag == PartitionWitness::Case::Case3)
                out.witness = build_case3_partition(g, *refined.a, p);
            else
                out.witness = refined;
        }
    }
    bool inconclusive = false;
    if (out.witness.tag != PartitionWitness::Case::Unrefinable) {
        out.report = lemma_hypothesis_report(g, out.witness, p, budget);
        for (const auto& e : out.report)
            if (!e.note.empty()) inconclusive = true;
    }

    out.record = json{{"hash", hash_hex(g)},
                      {"n", g.vertex_count()},
                      {"m", g.edge_count()},
                      {"case", out.witness.tag_name()},
                      {"params", json{{"alpha", p.alpha.str()},
                                      {"beta", p.beta.str()},
                                      {"eta", p.eta.str()},
                                      {"sigma", p.sigma.str()},
                                      {"gamma", p.gamma.str()}}},
                      {"witness_ledger", ledger_json(out.witness.ledger)},
                      {"report", ledger_json(out.report)}};
    if (out.witness.x) out.record["X"] = out.witness.x->to_vector();
    if (out.witness.y) out.record["Y"] = out.witness.y->to_vector();
    if (out.witness.z) out.record["Z"] = out.witness.z->to_vector();

    bool clean = ledger_clean(out.report);
    if (out.witness.tag == PartitionWitness::Case::Unrefinable || inconclusive)
        out.exit_code = 2;
    else
        out.exit_code = clean ? 0 : 1;
    std::ostringstream line;
    line << "case=" << out.witness.tag_name() << " clean=" << (clean ? 1 : 0);
    out.status_line = line.str();
    return out;
}

struct SurveyConfig {
    std::vector<int> ns;
    int trials = 0;
    std::uint64_t seed = 0;
    SearchBudget budget = SearchBudget::defaults();
    std::uint64_t p_ppm = 550000;
    int attempts = 200;
    std::uint64_t r_candidates = 1ULL << 20;
    unsigned threads = 0;  // 0 = hardware default
};

struct SurveyRow {
    int n = 0;
    std::uint64_t seed = 0;
    int trial = 0;
    std::string hash;  // empty when the sampler failed
    int m = 0;
    int delta = 0;
    bool ham_connected = false;
    std::string status = "NoSample";
    int rank = 0;
    int dim = 0;
    std::string r_found;  // yes | no | inconclusive | empty
    int r_dim_complement = -1;
    double runtime_ms = 0;
    bool violation = false;
};

struct SurveyOutcome {
    std::vector<SurveyRow> rows;
    std::string csv;
    json report;
    int exit_code = 0;
};

// Trials run on a worker pool with per-trial seeds seed + trial index;
// assembly is ordered by (n, trial), so concurrency never changes output.
inline SurveyOutcome run_survey(const SurveyConfig& cfg) {
    SurveyOutcome out;
    struct Task {
        int n;
        int trial;
    };
    std::vector<Task> tasks;
    for (int n : cfg.ns)
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back({n, t});
    out.rows.assign(tasks.size(), SurveyRow{});

    auto work = [&](std::size_t idx) {
        const Task& task = tasks[idx];
        SurveyRow row;
        row.n = task.n;
        row.trial = task.trial;
        row.seed = cfg.seed + static_cast<std::uint64_t>(task.trial);
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto sample = random_dirac_hc_graph(task.n, row.seed, cfg.attempts, cfg.p_ppm);
            if (sample) {
                const Graph& g = *sample;
                row.hash = hash_hex(g);
                row.m = g.edge_count();
                row.delta = g.min_degree();
                row.ham_connected = true;  // enforced by the sampler
                HamGenStatus st = is_hamilton_generated(g, cfg.budget);
                row.status = st.kind_name();
                row.rank = st.rank;
                row.dim = st.dim;
                if (st.kind == HamGenStatus::Kind::NotGenerated) {
                    FindRResult r = find_R(g, cfg.budget, cfg.r_candidates);
                    row.r_dim_complement = r.complement_dim;
                    switch (r.kind) {
                        case FindRResult::Kind::Found:
                            row.r_found = "yes";
                            break;
                        case FindRResult::Kind::NoneExists:
                            row.r_found = "no";
                            row.violation = true;  // contradicts the R existence lemma
                            break;
                        case FindRResult::Kind::Inconclusive:
                            row.r_found = "inconclusive";
                            break;
                    }
                }
            }
        } catch (const std::exception&) {
            row.status = "Error";
        }
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.rows[idx] = std::move(row);
    };

    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 8);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && w < tasks.size(); ++w)
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "n,seed,trial,m,delta,ham_connected,status,rank,dim,r_found,r_dim_complement,runtime_ms\n";
    bool any_violation = false;
    int generated = 0, not_generated = 0, inconclusive = 0, no_sample = 0;
    for (const auto& r : out.rows) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.runtime_ms);
        csv << r.n << ',' << r.seed << ',' << r.trial << ',' << r.m << ',' << r.delta << ','
            << (r.ham_connected ? 1 : 0) << ',' << r.status << ',' << r.rank << ',' << r.dim << ',' << r.r_found
            << ',' << (r.r_dim_complement < 0 ? "" : std::to_string(r.r_dim_complement)) << ',' << ms << "\n";
        any_violation |= r.violation;
        if (r.status == "Generated") ++generated;
        else if (r.status == "NotGenerated") ++not_generated;
        else if (r.status == "Inconclusive") ++inconclusive;
        else ++no_sample;
    }
    out.csv = csv.str();

    json rows = json::array();
    for (const auto& r : out.rows)
        rows.push_back(json{{"n", r.n},
                            {"seed", r.seed},
                            {"trial", r.trial},
                            {"hash", r.hash},
                            {"m", r.m},
                            {"delta", r.delta},
                            {"ham_connected", r.ham_connected},
                            {"status", r.status},
                            {"rank", r.rank},
                            {"dim", r.dim},
                            {"r_found", r.r_found},
                            {"r_dim_complement", r.r_dim_complement},
                            {"violation", r.violation},
                            {"runtime_ms", r.runtime_ms}});
    json config{{"ns", cfg.ns}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"p_ppm", cfg.p_ppm}};
    out.report = report_shell(config);
    out.report["graphs"] = std::move(rows);
    out.report["summary"] = json{{"generated", generated},
                                 {"not_generated", not_generated},
                                 {"inconclusive", inconclusive},
                                 {"no_sample", no_sample},
                                 {"violations", any_violation}};
    out.exit_code = any_violation ? 3 : 0;
    return out;
}

}  // namespace hamgen
