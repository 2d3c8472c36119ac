#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "symrep/json_io.hpp"

namespace fs = std::filesystem;
using symrep::Json;

namespace {

const std::string kCli = SYMREP_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path temp_file(const std::string& stem) {
    return fs::temp_directory_path() / ("symrep_cli_test_" + stem);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    fs::path out = temp_file("stdout.txt"), err = temp_file("stderr.txt");
    std::string cmd = kCli + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

}  // namespace

TEST_CASE("certify happy path, text and json") {
    RunResult text = run("certify --poly \"-1,-1,1\"");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("matrix size = 6") != std::string::npos);
    CHECK(text.out.find("M =") != std::string::npos);
    CHECK(text.err.find("bits") != std::string::npos);  // stderr carries size diagnostics

    RunResult json = run("certify --poly \"-1,-1,1\" --json");
    CHECK(json.exit_code == 0);
    Json j = Json::parse(json.out);
    CHECK(j["f"] == "-1,-1,1");
    CHECK(j["size"] == 6);
}

TEST_CASE("certify exit codes") {
    CHECK(run("certify --poly \"1,0,1\"").exit_code == 3);       // X^2 + 1: not real-rooted
    CHECK(run("certify --poly \"0,1,2\"").exit_code == 2);       // not monic
    CHECK(run("certify --poly \"abc\"").exit_code == 2);         // unparseable
    CHECK(run("certify --poly \"5\"").exit_code == 2);           // constant
    CHECK(run("certify").exit_code == 2);                        // missing required option
    CHECK(run("frobnicate").exit_code == 2);                     // unknown subcommand
    CHECK(run("certify --poly \"4,0,-4,0,1\"").exit_code == 4);  // repeated roots, no flag
    CHECK(run("certify --poly \"4,0,-4,0,1\" --allow-multiplicities").exit_code == 0);

    RunResult not_real = run("certify --poly \"1,0,1\"");
    CHECK(not_real.err.find("0 distinct real roots") != std::string::npos);
    CHECK(not_real.err.find("2 required") != std::string::npos);
}

TEST_CASE("certify then check round trip over the corpus") {
    const char* corpus[] = {"-3,1",        "-2,0,1",     "-3,0,1",        "-1,-1,1",
                            "-1,-3,0,1",   "1,-2,-1,1",  "2,0,-4,0,1"};
    fs::path bundle = temp_file("bundle.json");
    for (int rep = 0; rep < 3; ++rep) {
        for (const char* poly : corpus) {
            RunResult c =
                run("certify --poly \"" + std::string(poly) + "\" --json --output " + bundle.string());
            CAPTURE(poly);
            CHECK(c.exit_code == 0);
            RunResult v = run("check --input " + bundle.string());
            CHECK(v.exit_code == 0);
            CHECK(v.out.find("certificate verified") != std::string::npos);
        }
    }
}

TEST_CASE("check rejects corrupted and malformed bundles") {
    fs::path bundle = temp_file("corrupt.json");
    RunResult c = run("certify --poly \"-2,0,1\" --json --output " + bundle.string());
    REQUIRE(c.exit_code == 0);

    Json j = Json::parse(slurp(bundle));
    j["M"][0][1] = "999";  // break symmetry
    write_file(bundle, j.dump());
    RunResult broken = run("check --input " + bundle.string() + " --json");
    CHECK(broken.exit_code == 1);
    Json report = Json::parse(broken.out);
    CHECK(report["passed"] == false);
    bool symmetric_failed = false;
    for (const auto& finding : report["findings"])
        if (finding["name"] == "symmetric" && finding["pass"] == false) symmetric_failed = true;
    CHECK(symmetric_failed);

    fs::path empty = temp_file("empty.json");
    write_file(empty, "");
    CHECK(run("check --input " + empty.string()).exit_code == 2);

    fs::path junk = temp_file("junk.json");
    write_file(junk, "{\"not\": \"a bundle\"}");
    CHECK(run("check --input " + junk.string()).exit_code == 2);

    CHECK(run("check --input /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("oracle subcommand") {
    RunResult hit = run("oracle --poly \"-2,0,1\" --max-size 2 --max-entry 1 --json");
    CHECK(hit.exit_code == 0);
    Json j = Json::parse(hit.out);
    CHECK(j["min_size_found"] == 2);
    CHECK(j["witness"][0] == Json::array({"1", "1"}));
    CHECK(j["witness"][1] == Json::array({"1", "-1"}));

    RunResult miss = run("oracle --poly \"1,0,1\" --max-size 3 --max-entry 2");
    CHECK(miss.exit_code == 0);  // "none" is an answer
    CHECK(miss.out.find("no symmetric matrix") != std::string::npos);

    CHECK(run("oracle --poly \"-2,0,1\" --max-size 6 --max-entry 9").exit_code == 5);
    CHECK(run("oracle --poly \"0,1,2\" --max-size 2 --max-entry 1").exit_code == 2);

    // help text documents the default budget
    RunResult help = run("oracle --help");
    CHECK(help.out.find("10000000") != std::string::npos);
}
