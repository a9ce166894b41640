#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef CHROM_CLI_PATH
#define CHROM_CLI_PATH "./chrom"
#endif
#ifndef CHROM_DATA_DIR
#define CHROM_DATA_DIR "./data"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CHROM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return std::string(CHROM_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("chromatic subcommand, text output") {
    RunResult r = run_cli("chromatic " + data("symblock4_3x3.tensor") + " --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m: 1 2 2 1") != std::string::npos);
    CHECK(r.out.find("seed: 5") != std::string::npos);
}

TEST_CASE("chromatic subcommand, json output") {
    RunResult r = run_cli("chromatic " + data("identity3.tensor") + " --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["m"] == nlohmann::json::array({1}));
    CHECK(j["result"]["d"] == 0);
}

TEST_CASE("charnum subcommand") {
    RunResult r = run_cli("charnum " + data("concentration5_3x3.tensor") + " --b 4,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value: 1") != std::string::npos);
}

TEST_CASE("graph subcommands") {
    RunResult oracle = run_cli("graph " + data("k3.graph") + " --oracle-only");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out.find("reduced-chromatic: 1 2") != std::string::npos);

    RunResult verify = run_cli("graph " + data("k3.graph"));
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("verdict: match") != std::string::npos);
}

TEST_CASE("euler subcommand") {
    RunResult r = run_cli("euler " + data("symblock4_3x3.tensor"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("complement-euler: 0") != std::string::npos);
    CHECK(r.out.find("hypersurface-euler: 4") != std::string::npos);
}

TEST_CASE("exit codes and machine-readable errors") {
    RunResult missing = run_cli("chromatic /nonexistent.tensor");
    CHECK(missing.exit_code == 2);
    CHECK(nlohmann::json::parse(missing.out)["error"]["type"] == "parse");

    RunResult loop = run_cli("graph " + data("loop.graph"));
    CHECK(loop.exit_code == 3);
    CHECK(nlohmann::json::parse(loop.out)["error"]["type"] == "precondition");

    RunResult bad_b = run_cli("charnum " + data("identity3.tensor") + " --b 1,1");
    CHECK(bad_b.exit_code == 3);

    RunResult limit = run_cli("chromatic " + data("quadrics8_4x4.tensor") + " --limit-d 3");
    CHECK(limit.exit_code == 4);
    CHECK(nlohmann::json::parse(limit.out)["error"]["type"] == "limit");

    RunResult usage = run_cli("chromatic");
    CHECK(usage.exit_code == 2);
}
