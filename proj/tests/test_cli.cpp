// End-to-end checks of the CLI surface: exit codes, JSON shapes, and digest
// determinism. The binary path comes from CMake via UTURAN_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef UTURAN_CLI_PATH
#error "UTURAN_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(UTURAN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

} // namespace

TEST_CASE("check-vanishing exit codes") {
    write("cli_single.hg", "3 1\n0 1 2\n");
    auto ok = run("check-vanishing cli_single.hg");
    CHECK(ok.exit_code == 0);
    auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["vanishing"] == true);
    CHECK(doc.contains("manifest"));

    auto ex9 = run("examples --which example9 --output cli_ex9");
    REQUIRE(ex9.exit_code == 0);
    auto refuted = run("check-vanishing cli_ex9.hg");
    CHECK(refuted.exit_code == 1);
    auto rdoc = nlohmann::json::parse(refuted.out);
    CHECK(rdoc["vanishing"] == false);
    CHECK_FALSE(rdoc["refutation"].is_null());

    write("cli_bad.hg", "3 1\n0 1 1\n");
    CHECK(run("check-vanishing cli_bad.hg").exit_code == 2);
    CHECK(run("check-vanishing cli_missing.hg").exit_code == 2);
}

TEST_CASE("certify exit codes and replay") {
    auto certified = run("certify cli_ex9.hg");
    CHECK(certified.exit_code == 0);
    auto doc = nlohmann::json::parse(certified.out);
    CHECK(doc["certified"] == true);

    write("cli_k4.hg", "4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(run("certify cli_k4.hg").exit_code == 1);

    write("cli_big.hg", "11 1\n0 1 2\n");
    CHECK(run("certify cli_big.hg").exit_code == 3);

    // Replay of the emitted certificate verifies.
    CHECK(run("verify cli_ex9.hg --certificate cli_ex9.certificate.json").exit_code == 0);
    // A certificate against the wrong graph is rejected.
    write("cli_tc6.hg", "6 6\n0 1 2\n1 2 3\n2 3 4\n3 4 5\n0 4 5\n0 1 5\n");
    CHECK(run("verify cli_tc6.hg --certificate cli_ex9.certificate.json").exit_code == 1);
}

TEST_CASE("embed-palette") {
    CHECK(run("embed-palette cli_single.hg --palette four27_a").exit_code == 0);
    CHECK(run("embed-palette cli_k4.hg --palette vanishing").exit_code == 1);
    CHECK(run("embed-palette cli_single.hg --palette no_such").exit_code == 2);
}

TEST_CASE("sample determinism and density report") {
    auto a = run("sample --n 60 --palette vanishing --seed 7");
    auto b = run("sample --n 60 --palette vanishing --seed 7");
    REQUIRE(a.exit_code == 0);
    auto da = nlohmann::json::parse(a.out), db = nlohmann::json::parse(b.out);
    CHECK(da["manifest"]["digest"] == db["manifest"]["digest"]);
    CHECK(da["hypergraph"] == db["hypergraph"]);
    CHECK(run("sample --n 10 --palette nope --seed 1").exit_code == 2);

    auto c = run("sample --n 60 --palette four27_a --seed 9");
    auto dc = nlohmann::json::parse(c.out);
    CHECK(dc["palette_density"] == "4/27");
}

TEST_CASE("measure on a sampled host") {
    REQUIRE(run("sample --n 60 --palette vanishing --seed 3 --output cli_host").exit_code == 0);
    auto m = run("measure cli_host.hg --d 1/100 --eps 1/100 --mode sampled --trials 500 --seed 4");
    REQUIRE(m.exit_code == 0);
    auto doc = nlohmann::json::parse(m.out);
    CHECK(doc["d_eps_dense"]["violated"] == false);
    CHECK(doc["epsilon_linear_density"]["exact"] == false);

    // Exact mode on a small graph.
    auto e = run("measure cli_single.hg --eps 1 --mode exact");
    auto edoc = nlohmann::json::parse(e.out);
    CHECK(edoc["epsilon_linear_density"]["value"] == "1");
}

TEST_CASE("census at n=4 via the CLI") {
    auto r = run("census --vertices 4 --jobs 1 --output cli_census4");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["summary"]["total"] == 1);
    std::ifstream txt("cli_census4.catalog.txt");
    CHECK(txt.good());
    std::ifstream side("cli_census4.catalog.json");
    CHECK(side.good());
    // Re-running produces the identical catalog digest.
    auto r2 = run("census --vertices 4 --jobs 2 --output cli_census4b");
    auto doc2 = nlohmann::json::parse(r2.out);
    CHECK(doc["catalog_digest"] == doc2["catalog_digest"]);
}

TEST_CASE("census --max-edges caps the exploration") {
    // Minimal non-vanishing graphs need at least 3 edges, so a 2-edge cap
    // finds none.
    auto r = run("census --vertices 5 --max-edges 2 --jobs 1");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["summary"]["total"] == 0);
}

TEST_CASE("example8 emission") {
    auto r = run("examples --which example8 --k 2");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 11);
    CHECK(doc["edges"] == 12);
    CHECK(run("examples --which nope").exit_code == 2);
}
