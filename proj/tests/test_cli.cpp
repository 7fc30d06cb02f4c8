#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef DVBLAB_TOOL_PATH
#error "DVBLAB_TOOL_PATH must point at the built tool"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "dvblab_cli_tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

RunResult run(const std::string& args) {
    const std::string out_file = temp_path("stdout.txt");
    const std::string cmd = std::string(DVBLAB_TOOL_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("gen writes deterministic instances") {
    const std::string f1 = temp_path("gen1.json"), f2 = temp_path("gen2.json");
    REQUIRE(run("gen --dims 2,3,1 --seed 7 --out " + f1).exit_code == 0);
    REQUIRE(run("gen --dims 2,3,1 --seed 7 --out " + f2).exit_code == 0);
    const std::string a = slurp(f1), b = slurp(f2);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["kind"] == "seq");
    CHECK(j["e"].size() == 7); // dim Omega = 2*3 + 1
    // a different seed gives a different instance
    const std::string f3 = temp_path("gen3.json");
    REQUIRE(run("gen --dims 2,3,1 --seed 8 --out " + f3).exit_code == 0);
    CHECK(slurp(f3) != a);
    // degenerate dimensions are valid
    CHECK(run("gen --dims 0,0,0 --seed 1 --out " + temp_path("gen0.json")).exit_code == 0);
    // malformed dimensions are a usage error
    CHECK(run("gen --dims 2,3 --seed 1").exit_code == 2);
    CHECK(run("gen --dims a,b,c --seed 1").exit_code == 2);
}

TEST_CASE("roundtrip accepts generated instances and rejects junk") {
    const std::string f = temp_path("rt.json");
    REQUIRE(run("gen --dims 2,2,1 --seed 3 --out " + f).exit_code == 0);
    CHECK(run("roundtrip " + f).exit_code == 0);

    // truncated JSON is an input error
    const std::string broken = temp_path("broken.json");
    spit(broken, slurp(f).substr(0, 25));
    CHECK(run("roundtrip " + broken).exit_code == 2);
    CHECK(run("roundtrip does_not_exist.json").exit_code == 2);

    // a trivial double roundtrips through the unit
    const std::string fdvb = temp_path("rt_dvb.json");
    REQUIRE(run("gen --dims 2,1,2 --kind dvb --seed 3 --out " + fdvb).exit_code == 0);
    CHECK(run("roundtrip " + fdvb).exit_code == 0);
}

TEST_CASE("verify honours the exit-code contract") {
    CHECK(run("verify --trials 1 --max-dim 1 --seed 5").exit_code == 0);

    // a hand-corrupted instance fails with a counterexample
    const std::string f = temp_path("verify_seq.json");
    REQUIRE(run("gen --dims 1,1,1 --seed 9 --out " + f).exit_code == 0);
    auto j = nlohmann::json::parse(slurp(f));
    j["p"][0][0] = "1";
    j["p"][0][1] = "0"; // now p o e != 0 against e's first column
    j["e"][0][0] = "1";
    j["e"][1][0] = "0";
    spit(f, j.dump());
    const RunResult r = run("verify --instance " + f);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("counterexample") != std::string::npos);

    // unreadable input
    CHECK(run("verify --instance nope.json").exit_code == 2);
    // bad flag values
    CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("verify reports are deterministic modulo timing") {
    const std::string f1 = temp_path("rep1.json"), f2 = temp_path("rep2.json");
    REQUIRE(run("verify --suite interchange --trials 3 --max-dim 2 --seed 11 --out " + f1).exit_code == 0);
    REQUIRE(run("verify --suite interchange --trials 3 --max-dim 2 --seed 11 --out " + f2).exit_code == 0);
    auto a = nlohmann::json::parse(slurp(f1));
    auto b = nlohmann::json::parse(slurp(f2));
    for (auto& c : a["checks"]) c.erase("elapsedMs");
    for (auto& c : b["checks"]) c.erase("elapsedMs");
    CHECK(a == b);
}

TEST_CASE("examples print their dimension counts") {
    const RunResult jet = run("example jet --dim-t 2 --dim-e 3");
    CHECK(jet.exit_code == 0);
    CHECK(jet.out.find("dim J = 9") != std::string::npos);
    const RunResult atiyah = run("example atiyah --dim-t 2 --dim-e 3");
    CHECK(atiyah.exit_code == 0);
    CHECK(atiyah.out.find("dim D = 11") != std::string::npos);
    const RunResult square = run("example square --dim-t 1 --dim-e 1");
    CHECK(square.exit_code == 0);
    CHECK(square.out.find("FAIL") == std::string::npos);
    CHECK(run("example wedge").exit_code == 2);
}

TEST_CASE("the environment seed is honoured") {
    const std::string f1 = temp_path("env1.json"), f2 = temp_path("env2.json");
    REQUIRE(std::system((std::string("DVBLAB_SEED=21 ") + DVBLAB_TOOL_PATH + " gen --dims 1,1,1 --out " + f1).c_str()) == 0);
    REQUIRE(run("gen --dims 1,1,1 --seed 21 --out " + f2).exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));
}
