#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string bin() {
    const char* b = std::getenv("CPQ_BIN");
    REQUIRE(b != nullptr);
    return b;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("spectrum csv: CP^1 values at q = 0.5") {
    auto r = run("spectrum --ell 1 --N 0 --q 0.5 --levels 10 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "degree,level,weight,eigenvalue_sq,eigenvalue,multiplicity");
    // [1][2] at q=0.5 is 2.5; the degree-0 line at level 1 carries +sqrt(2.5), mult 3
    bool found_plus = false, found_minus = false, found_kernel = false;
    while (std::getline(is, line)) {
        if (line.find("2.5,1.58113883008419,3") != std::string::npos) found_plus = true;
        if (line.find("2.5,-1.58113883008419,3") != std::string::npos) found_minus = true;
        if (line.find(",0,0,1") != std::string::npos) found_kernel = true;
    }
    CHECK(found_plus);
    CHECK(found_minus);
    CHECK(found_kernel);
}

TEST_CASE("spectrum json envelope") {
    auto r = run("spectrum --ell 1 --N 0 --q symbolic --levels 3 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["params"]["ell"] == 1);
    CHECK(j["params"]["N"] == 0);
    CHECK(j["params"]["q"] == "symbolic");
    CHECK(j["params"]["r"] == 4);
    CHECK(j["lines"].is_array());
    // two degrees with levels 0..3, plus the partner completing the last
    // chain across the level cutoff
    CHECK(j["lines"].size() == 9);
}

TEST_CASE("classical json") {
    auto r = run("classical --ell 3 --N 2 --levels 5 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lines"].is_array());
    CHECK(j["lines"].size() > 0);
}

TEST_CASE("deterministic output") {
    auto a = run("spectrum --ell 2 --N 1 --q 0.73 --levels 6 --format csv");
    auto b = run("spectrum --ell 2 --N 1 --q 0.73 --levels 6 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("invalid input gives exit 2") {
    CHECK(run("spectrum --ell 0 --N 0").exit_code == 2);
    CHECK(run("spectrum --ell 1 --q 1.5").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("casimir --ell 2 --weight 1,2,3").exit_code == 2);
}

TEST_CASE("verify subcommand: quick suites pass with machine-readable output") {
    auto r = run("verify scalar --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

    CHECK(run("verify sphere --ell 2").exit_code == 0);
    CHECK(run("verify bogus").exit_code == 2);
}

TEST_CASE("qdim and casimir commands") {
    // csv/json carry the canonical t-form ([2] = t^6 + t^-6 at r = 6)
    auto r = run("qdim --ell 2 --q symbolic --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("t^6 + t^-6") != std::string::npos);
    // the human-oriented format shows q-powers
    auto p = run("qdim --ell 2 --q symbolic --format pretty");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("q + q^(-1)") != std::string::npos);

    auto c = run("casimir --ell 2 --weight 0,1 --q symbolic --format json");
    CHECK(c.exit_code == 0);
    json j = json::parse(c.out);
    CHECK(j["lines"].size() == 1);
    CHECK(j["lines"][0]["multiplicity"] == "3");
}

TEST_CASE("atomic file output") {
    std::string path = "cpq_test_out.csv";
    std::remove(path.c_str());
    auto r = run("decompose --ell 2 --N 0 --k 1 --levels 2 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "degree,level,weight,eigenvalue_sq,eigenvalue,multiplicity");
    std::remove(path.c_str());
}
