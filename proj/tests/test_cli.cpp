#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HAMGEN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

fs::path temp_dir() {
    fs::path d = fs::temp_directory_path() / "hamgen_cli_test";
    fs::create_directories(d);
    return d;
}

std::string strip_runtime(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(','));
        out += '\n';
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("construct then check a cycle graph") {
    fs::path dir = temp_dir();
    fs::path c5 = dir / "c5.edges";
    RunResult gen = run_cli("construct --cycle 5 --out " + c5.string());
    CHECK(gen.exit_code == 0);
    CHECK(slurp(c5).rfind("n 5\n", 0) == 0);

    RunResult check = run_cli("check --file " + c5.string());
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("status=Generated") == 0);
}

TEST_CASE("check exit codes follow the status") {
    RunResult k5 = run_cli("check --complete 5");
    CHECK(k5.exit_code == 0);

    RunResult g1 = run_cli("check --construction a1 --k 2");
    CHECK(g1.exit_code == 1);
    CHECK(g1.out.find("status=NotGenerated") == 0);

    RunResult capped = run_cli("--budget-nodes 2 check --complete 9 --no-certs --no-r");
    CHECK(capped.exit_code == 2);
}

TEST_CASE("environment variable overrides the node budget") {
    std::string cmd = "HAMGEN_BUDGET_NODES=2 " + std::string(HAMGEN_CLI_PATH) +
                      " check --complete 9 --no-certs --no-r 2>/dev/null";
    std::array<char, 256> buf{};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    CHECK(WEXITSTATUS(pclose(p)) == 2);
    CHECK(out.find("status=Inconclusive") == 0);
}

TEST_CASE("usage and io errors") {
    CHECK(run_cli("check --file /nonexistent/g.edges").exit_code == 74);
    CHECK(run_cli("check --no-such-flag").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("check --complete 5 --cycle 5").exit_code == 64);
}

TEST_CASE("classify reports ledger failures through the exit code") {
    RunResult g3 = run_cli("classify --construction a3 --k 2");
    CHECK(g3.exit_code == 1);
    CHECK(g3.out.find("case=Case2") == 0);
}

TEST_CASE("check writes a JSON report") {
    fs::path dir = temp_dir();
    fs::path report = dir / "report.json";
    RunResult res = run_cli("check --construction a1 --k 2 --out " + report.string());
    CHECK(res.exit_code == 1);
    std::string body = slurp(report);
    CHECK(body.find("\"schema\": \"1\"") != std::string::npos);
    CHECK(body.find("forbidden-edge") != std::string::npos);
}

TEST_CASE("survey CSV is deterministic modulo the runtime column") {
    fs::path dir = temp_dir();
    fs::path csv1 = dir / "s1.csv", csv2 = dir / "s2.csv";
    RunResult a = run_cli("survey --n 7 --trials 3 --seed 7 --csv " + csv1.string());
    RunResult b = run_cli("survey --n 7 --trials 3 --seed 7 --csv " + csv2.string());
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(strip_runtime(slurp(csv1)) == strip_runtime(slurp(csv2)));

    RunResult empty = run_cli("survey --n 7 --trials 0 --csv " + (dir / "s0.csv").string());
    CHECK(empty.exit_code == 0);

    CHECK(run_cli("survey --n 6 --trials 1").exit_code == 64);
}

TEST_CASE("config file supplies the same keys as flags") {
    fs::path dir = temp_dir();
    fs::path conf = dir / "check.conf";
    {
        std::ofstream out(conf);
        out << "check.complete=5\n";
    }
    RunResult res = run_cli("--config " + conf.string() + " check");
    CHECK(res.exit_code == 0);
}

TEST_CASE("utility subcommands") {
    RunResult forest = run_cli("forest --complete 4");
    CHECK(forest.exit_code == 0);
    CHECK(forest.out.find("f=3") == 0);

    RunResult matching = run_cli("matching --construction a3 --k 2 --left 0,1,2,3,4");
    CHECK(matching.exit_code == 65);  // inside-clique edges are not bipartite input

    fs::path dir = temp_dir();
    fs::path k33 = dir / "k33.edges";
    {
        std::ofstream out(k33);
        out << "n 6\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
    }
    RunResult m2 = run_cli("matching --file " + k33.string() + " --left 0,1,2");
    CHECK(m2.exit_code == 0);
    CHECK(m2.out.find("matching=3") == 0);

    RunResult paths = run_cli("paths --complete 6 --pairs 0-1,2-3 --m 5 --d 1");
    CHECK(paths.exit_code == 0);
    CHECK(paths.out.find("paths=2") == 0);

    RunResult nopath = run_cli("paths --cycle 6 --pairs 0-3 --m 4 --d 2");
    CHECK(nopath.exit_code == 1);
}
