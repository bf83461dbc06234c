#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gorbetti/cli.hpp"
#include "schema_check.hpp"

using namespace gorbetti;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(GORBETTI_SOURCE_DIR "/docs/schemas/") + name + ".schema.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

void check_against_schema(const std::string& schema_name, const std::vector<std::string>& args) {
    auto res = run(args);
    CAPTURE(schema_name);
    CAPTURE(res.err);
    REQUIRE(res.code == 0);
    auto value = nlohmann::json::parse(res.out);
    std::string why;
    bool ok = schema::validate(load_schema(schema_name), value, why);
    CAPTURE(why);
    CHECK(ok);
}

} // namespace

TEST_CASE("golden one-line outputs") {
    auto res = run({"gorenstein", "nu0", "4", "4"});
    CHECK(res.code == 0);
    CHECK(res.out == "25\n");

    res = run({"macaulay", "bound", "3", "5"});
    CHECK(res.code == 0);
    CHECK(res.out == "3\n");

    res = run({"macaulay", "bound", "15", "4"});
    CHECK(res.out == "21\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);                                    // no subcommand
    CHECK(run({"macaulay"}).code == 2);                          // no verb
    CHECK(run({"macaulay", "bound", "15"}).code == 2);           // missing J
    CHECK(run({"gorenstein", "nu0", "2", "4"}).code == 2);       // g < 3
    CHECK(run({"ideal", "hf", "/nonexistent.ideal"}).code == 2); // bad file
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"paper", "example1"}).code == 0);

    auto res = run({"gorenstein", "nu0", "2", "4"});
    CHECK(res.err.find("error[E_INPUT]") != std::string::npos);

    res = run({"gorenstein", "enumerate", "4", "2", "8", "--node-limit", "2"});
    CHECK(res.code == 2);
    CHECK(res.err.find("error[E_LIMIT]") != std::string::npos);
}

TEST_CASE("osequence check inline and from file") {
    auto res = run({"osequence", "check", "1", "4", "9", "13", "13", "9", "4", "1"});
    CHECK(res.code == 0);
    CHECK(res.out == "true\n");

    res = run({"osequence", "check", "1", "3", "15"});
    CHECK(res.code == 0);
    CHECK(res.out.substr(0, 5) == "false");

    const char* path = "/tmp/gorbetti_oseq_test.txt";
    {
        std::ofstream f(path);
        f << "1 3 6\n10 12\n";
    }
    res = run({"osequence", "check", "--file", path});
    CHECK(res.out == "true\n");
    std::remove(path);
}

TEST_CASE("field override agrees with the file header on the bundled example") {
    auto rational = run({"ideal", "hf", "example1"});
    auto modular = run({"ideal", "hf", "example1", "--char", "32003"});
    CHECK(rational.code == 0);
    CHECK(modular.code == 0);
    CHECK(rational.out == modular.out);
}

TEST_CASE("deterministic output") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"pfaffian", "experiment", "--trials", "6", "--seed", "9"},
          std::vector<std::string>{"gorenstein", "enumerate", "3", "2", "6"},
          std::vector<std::string>{"ideal", "betti", "example1", "--char", "32003"},
          std::vector<std::string>{"pfaffian", "demo", "5", "--seed", "3"}}) {
        auto a = run(args);
        auto b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("paper example1 output") {
    auto res = run({"paper", "example1"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("h-vector: 1 4 9 13 13 9 4 1\n") != std::string::npos);
    CHECK(res.out.find("multiplicity: 54\n") != std::string::npos);
    CHECK(res.out.find("betti totals: 1 10 18 10 1\n") != std::string::npos);
    CHECK(res.out.find("golden reproduction: PASS\n") != std::string::npos);
    const std::string diagram = "1  -  -  -  -\n"
                                "-  1  -  -  -\n"
                                "-  3  4  1  -\n"
                                "-  4  5  1  -\n"
                                "-  1  5  4  -\n"
                                "-  1  4  3  -\n"
                                "-  -  -  1  -\n"
                                "-  -  -  -  1\n";
    CHECK(res.out.find(diagram) != std::string::npos);

    // the prime-field run reproduces the same goldens
    auto modular = run({"paper", "example1", "--char", "32003"});
    CHECK(modular.code == 0);
    CHECK(modular.out.find("golden reproduction: PASS\n") != std::string::npos);
}

TEST_CASE("json outputs validate against the published schemas") {
    check_against_schema("macaulay-rep", {"--json", "macaulay", "rep", "13", "4"});
    check_against_schema("macaulay-bound", {"--json", "macaulay", "bound", "15", "4"});
    check_against_schema("osequence-check", {"--json", "osequence", "check", "1", "3", "15"});
    check_against_schema("osequence-check",
                         {"--json", "osequence", "check", "1", "4", "9", "13"});
    check_against_schema("gorenstein-nu0", {"--json", "gorenstein", "nu0", "4", "4"});
    check_against_schema("gorenstein-extremal", {"--json", "gorenstein", "extremal", "4", "2"});
    check_against_schema("gorenstein-forbidden", {"--json", "gorenstein", "forbidden", "4", "4"});
    check_against_schema("gorenstein-enumerate",
                         {"--json", "gorenstein", "enumerate", "3", "2", "6"});
    check_against_schema("gorenstein-certificate",
                         {"--json", "gorenstein", "certificate", "4", "4", "4", "13"});
    check_against_schema("gorenstein-certificate",
                         {"--json", "gorenstein", "certificate", "4", "4", "5", "3"});
    check_against_schema("gorenstein-monotonic",
                         {"--json", "gorenstein", "monotonic", "60", "2", "12"});
    check_against_schema("ideal-hf", {"--json", "ideal", "hf", "example1"});
    check_against_schema("ideal-betti", {"--json", "ideal", "betti", "example1", "--char", "32003"});
    check_against_schema("ideal-mingens",
                         {"--json", "ideal", "mingens", "example1", "--char", "32003"});
    check_against_schema("ideal-colon", {"--json", "ideal", "colon", "example1", "--by",
                                         "x1*x2 - x3*x4", "--dmax", "3", "--char", "32003"});
    check_against_schema("pfaffian-demo", {"--json", "pfaffian", "demo", "5", "--seed", "3"});
    check_against_schema("pfaffian-experiment",
                         {"--json", "pfaffian", "experiment", "--trials", "6", "--seed", "9"});
    check_against_schema("paper-example1", {"--json", "paper", "example1", "--char", "32003"});
}

TEST_CASE("certificate output shape") {
    auto res = run({"gorenstein", "certificate", "5", "3", "3", "5"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("F: 3/2 1/3\n") != std::string::npos);
    CHECK(res.out.find("verdict: true\n") != std::string::npos);

    res = run({"gorenstein", "certificate", "4", "4", "5", "3"});
    CHECK(res.out.find("trivial") != std::string::npos);
    CHECK(res.out.find("verdict: true\n") != std::string::npos);
}

TEST_CASE("environment variable sets the default modulus") {
    setenv("GORBETTI_MODULUS", "101", 1);
    auto res = run({"--json", "ideal", "hf", "example1"});
    unsetenv("GORBETTI_MODULUS");
    REQUIRE(res.code == 0);
    auto value = nlohmann::json::parse(res.out);
    CHECK(value["char"] == 101);
}
