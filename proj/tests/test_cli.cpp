// End-to-end checks of the command line tool: the binary path comes from
// the FTSDEPTH_CLI environment variable set by ctest.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using std::string;

namespace {

string cli_path() {
    const char* p = std::getenv("FTSDEPTH_CLI");
    return p == nullptr ? string{} : string{p};
}

struct RunOutcome {
    int exit_code = -1;
    string stderr_text;
};

RunOutcome run_cli(const string& args) {
    const string err_file = "cli_stderr.txt";
    const string cmd = cli_path() + " " + args + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    RunOutcome outcome;
    outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    std::ostringstream buf;
    buf << err.rdbuf();
    outcome.stderr_text = buf.str();
    std::remove(err_file.c_str());
    return outcome;
}

string slurp(const string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool file_exists(const string& path) { return std::ifstream(path).good(); }

} // namespace

TEST_CASE("simulate then depth produces values in range") {
    REQUIRE_FALSE(cli_path().empty());

    auto sim = run_cli("simulate --model wiener --n 50 --grid 120 --seed 7 --out cli_w.csv");
    REQUIRE(sim.exit_code == 0);
    REQUIRE(file_exists("cli_w.csv"));
    REQUIRE(file_exists("cli_w.csv.manifest.json"));

    auto depth = run_cli("depth --in cli_w.csv --beta 1 --out cli_d.csv");
    REQUIRE(depth.exit_code == 0);

    std::ifstream in("cli_d.csv");
    string header;
    std::getline(in, header);
    CHECK(header == "index,value");
    int rows = 0;
    string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        REQUIRE(comma != string::npos);
        const double v = std::stod(line.substr(comma + 1));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        ++rows;
    }
    CHECK(rows == 50);
}

TEST_CASE("testing a sample against itself gives the full-tie statistic") {
    REQUIRE_FALSE(cli_path().empty());
    std::ofstream csv("cli_same.csv");
    csv << "t,0,0.5,1\n";
    for (int i = 0; i < 3; ++i) csv << "c," << 0.2 << "," << 0.2 << "," << 0.2 << "\n";
    csv.close();

    auto r = run_cli("test --first cli_same.csv --second cli_same.csv --beta 1 --out cli_t.json");
    REQUIRE(r.exit_code == 0);
    const string j = slurp("cli_t.json");
    CHECK(j.find("\"statistic\":18.0") != string::npos);
    CHECK(j.find("\"n_first\":3") != string::npos);
}

TEST_CASE("manifest reruns reproduce outputs byte for byte") {
    REQUIRE_FALSE(cli_path().empty());
    REQUIRE(run_cli("simulate --model mixture --n 20 --grid 120 --p 0.1 --seed 11 "
                    "--out cli_m1.csv")
                .exit_code == 0);
    REQUIRE(run_cli("simulate --model mixture --n 20 --grid 120 --p 0.1 --seed 11 "
                    "--out cli_m2.csv")
                .exit_code == 0);
    CHECK(slurp("cli_m1.csv") == slurp("cli_m2.csv"));
    CHECK(!slurp("cli_m1.csv").empty());
}

TEST_CASE("stochastic commands demand a seed") {
    REQUIRE_FALSE(cli_path().empty());
    auto r = run_cli("simulate --model wiener --n 5 --grid 120 --out cli_x.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.stderr_text.rfind("error: validation:", 0) == 0);

    auto t = run_cli("test --first cli_w.csv --second cli_w.csv --beta 1 --bootstrap 100 "
                     "--out cli_y.json");
    CHECK(t.exit_code == 2);
}

TEST_CASE("validation failures exit with code 2 and one diagnostic line") {
    REQUIRE_FALSE(cli_path().empty());
    auto missing = run_cli("depth --in does_not_exist.csv --beta 1 --out cli_z.csv");
    CHECK(missing.exit_code == 2);
    CHECK(missing.stderr_text.rfind("error: validation:", 0) == 0);
    CHECK(std::count(missing.stderr_text.begin(), missing.stderr_text.end(), '\n') == 1);

    auto bad_flag = run_cli("depth --in cli_w.csv --beta 1 --frobnicate --out cli_z.csv");
    CHECK(bad_flag.exit_code == 2);

    auto bad_beta = run_cli("depth --in cli_w.csv --beta 7 --out cli_z.csv");
    CHECK(bad_beta.exit_code == 2);
}

TEST_CASE("detect writes a trace and a report") {
    REQUIRE_FALSE(cli_path().empty());
    REQUIRE(run_cli("simulate --model wiener --n 10 --grid 120 --seed 21 --out cli_ref.csv")
                .exit_code == 0);
    REQUIRE(run_cli("simulate --model wiener --n 30 --grid 120 --seed 22 --out cli_stream.csv")
                .exit_code == 0);

    auto r = run_cli("detect --ref cli_ref.csv --stream cli_stream.csv --window 10 --step 10 "
                     "--beta 1 --alpha 0.05 --consec 2 --bootstrap 100 --seed 5 "
                     "--out-trace cli_trace.csv --out-report cli_report.json");
    REQUIRE(r.exit_code == 0);
    const string trace = slurp("cli_trace.csv");
    CHECK(trace.rfind("k,statistic,p_value\n", 0) == 0);
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 4); // header + 3 windows
    const string report = slurp("cli_report.json");
    CHECK(report.find("\"flagged\"") != string::npos);
    CHECK(file_exists("cli_trace.csv.manifest.json"));
    CHECK(file_exists("cli_report.json.manifest.json"));

    // Without bootstrap a report cannot be produced.
    auto bare = run_cli("detect --ref cli_ref.csv --stream cli_stream.csv --window 10 "
                        "--out-trace cli_trace2.csv");
    CHECK(bare.exit_code == 2);
    auto bare_ok = run_cli("detect --ref cli_ref.csv --stream cli_stream.csv --window 10 "
                           "--no-report --out-trace cli_trace2.csv");
    CHECK(bare_ok.exit_code == 0);
}

TEST_CASE("smooth and boxplot round trip through the cli") {
    REQUIRE_FALSE(cli_path().empty());
    auto s = run_cli("smooth --in cli_w.csv --nbasis 5 --out cli_s.csv");
    CHECK(s.exit_code == 0);
    auto even = run_cli("smooth --in cli_w.csv --nbasis 4 --out cli_s2.csv");
    CHECK(even.exit_code == 2);

    auto b = run_cli("boxplot --in cli_w.csv --out-summary cli_b.csv --out-outliers cli_o.json");
    CHECK(b.exit_code == 0);
    CHECK(slurp("cli_b.csv").rfind("t,median,", 0) == 0);
    CHECK(slurp("cli_o.json").find("\"median_index\"") != string::npos);
}
