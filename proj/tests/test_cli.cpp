// End-to-end tests of the command line interface: every invocation spawns
// the real binary (path from WRIGHT_CLI_PATH) and inspects stdout plus the
// exit code.

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("WRIGHT_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "WRIGHT_CLI_PATH must point at the built binary");
    return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// parsed CSV: header names -> column values
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int col(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            csv.header = cells;
            first = false;
        } else {
            std::vector<double> row;
            for (const auto& c : cells) row.push_back(std::stod(c));
            csv.rows.push_back(row);
        }
    }
    return csv;
}

}  // namespace

TEST_CASE("eval sweep hits the gaussian closed form") {
    RunResult r = run("eval --lambda -0.5 --mu 0.5 --t 1 --x 0:0.5:5 --format csv");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    CHECK(csv.header.size() == 9);
    CHECK(csv.header[0] == "lambda");
    REQUIRE(csv.rows.size() == 11);
    int cx = csv.col("x"), cre = csv.col("re"), cim = csv.col("im");
    bool found = false;
    for (const auto& row : csv.rows) {
        if (row[size_t(cx)] == 2.0) {
            CHECK(std::fabs(row[size_t(cre)] - 0.2075537487102974) < 1e-7);
            CHECK(row[size_t(cim)] == 0.0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("eval x = 0 short circuit") {
    RunResult r = run("eval --lambda -0.5 --mu 1 --t 1 --x 0");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][size_t(csv.col("re"))] == 1.0);
    CHECK(csv.rows[0][size_t(csv.col("n_nodes"))] == 15.0);
}

TEST_CASE("eval agrees with the oracle subcommand") {
    RunResult e = run("eval --lambda -0.3 --mu 2.5 --t 1 --x 1");
    REQUIRE(e.exit_code == 0);
    Csv csv = parse_csv(e.out);
    double quad = csv.rows.at(0)[size_t(csv.col("re"))];

    RunResult o = run("oracle --lambda -0.3 --mu 2.5 --z-re=-1");
    REQUIRE(o.exit_code == 0);
    auto json = nlohmann::json::parse(o.out);
    CHECK(std::fabs(quad - json["re"].get<double>()) < 1e-9);
    CHECK(json["converged"].get<bool>());
}

TEST_CASE("oracle json fields and defaults") {
    RunResult r = run("oracle --lambda -0.5 --mu 1 --z-re 0");
    REQUIRE(r.exit_code == 0);
    auto json = nlohmann::json::parse(r.out);
    CHECK(json["re"].get<double>() == 1.0);
    CHECK(json["im"].get<double>() == 0.0);
    CHECK(json["terms_used"].get<int>() == 1);
    CHECK(json["tail_bound"].get<double>() >= 0.0);
}

TEST_CASE("oracle reports non-convergence via exit code 4") {
    RunResult r = run("oracle --lambda -0.9 --mu 0.5 --z-re=-5");
    CHECK(r.exit_code == 4);
    auto json = nlohmann::json::parse(r.out);
    CHECK_FALSE(json["converged"].get<bool>());
}

TEST_CASE("exit codes: parse and domain errors") {
    CHECK(run("eval --lambda -0.5 --mu 1 --no-such-flag 3").exit_code == 3);
    CHECK(run("eval --lambda -0.5 --mu 1 --t=-1 --x 1").exit_code == 2);
    CHECK(run("eval --lambda 0.5 --mu 1 --t 1 --x 1").exit_code == 2);
    CHECK(run("validate --suite no-such-suite").exit_code == 3);
    CHECK(run("demo --problem no-such-problem").exit_code == 3);
    CHECK(run("demo --problem cauchy --nu 0.8").exit_code == 2);
}

TEST_CASE("byte-identical reruns") {
    const std::string cmd = "eval --lambda -0.4 --mu 1.2 --t 0.7 --x 0:0.25:3 --format csv";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("csv and json encode identical values") {
    RunResult c = run("eval --lambda -0.6 --mu 0.8 --t 1.3 --x 0:1:4 --format csv");
    RunResult j = run("eval --lambda -0.6 --mu 0.8 --t 1.3 --x 0:1:4 --format json");
    REQUIRE(c.exit_code == 0);
    REQUIRE(j.exit_code == 0);
    Csv csv = parse_csv(c.out);
    auto json = nlohmann::json::parse(j.out);
    REQUIRE(json.size() == csv.rows.size());
    for (size_t i = 0; i < csv.rows.size(); ++i) {
        for (size_t col = 0; col < csv.header.size(); ++col) {
            double via_json = json[i][csv.header[col]].get<double>();
            CHECK(via_json == csv.rows[i][col]);
        }
    }
}

TEST_CASE("validate params table pins N = 15 at Re(mu) = 0.5") {
    RunResult r = run("validate --suite params --format csv");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    int cm = csv.col("mu_re"), cn = csv.col("n_nodes");
    bool found = false;
    for (const auto& row : csv.rows) {
        if (row[size_t(cm)] == 0.5) {
            CHECK(row[size_t(cn)] == 15.0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("validate closed-forms passes") {
    CHECK(run("validate --suite closed-forms").exit_code == 0);
}

TEST_CASE("demo cauchy square pulse at the origin") {
    RunResult r = run("demo --problem cauchy --nu 0.5 --t 1");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 256);
    int cx = csv.col("x");
    int cu = csv.col("u_nu0.5");
    REQUIRE(cu >= 0);
    for (const auto& row : csv.rows) {
        if (row[size_t(cx)] == 0.0) {
            // erf(1/2), up to the sampled-pulse discretization floor of the
            // fixed 256-cell window
            CHECK(std::fabs(row[size_t(cu)] - 0.5204998778130465) < 3e-3);
        }
    }
}

TEST_CASE("demo tworod emits one shared contact point") {
    RunResult r = run("demo --problem tworod");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    int cx = csv.col("x");
    int count_zero = 0;
    for (const auto& row : csv.rows)
        if (row[size_t(cx)] == 0.0) ++count_zero;
    CHECK(count_zero == 1);
    CHECK(csv.col("T_alpha1") >= 0);
}

TEST_CASE("demo signalling step response matches erfc") {
    RunResult r = run("demo --problem signalling --nu 0.5 --x 1 --t-grid 0.5:0.5:2");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    int ct = csv.col("t"), cu = csv.col("u");
    for (const auto& row : csv.rows) {
        double want = std::erfc(1.0 / (2.0 * std::sqrt(row[size_t(ct)])));
        CHECK(std::fabs(row[size_t(cu)] - want) < 1e-5);
    }
}
