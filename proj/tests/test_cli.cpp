#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CUBEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify 129 emits the proof") {
    RunResult r = run_cli("classify 129");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["outcome"] == "ProvablyNonCubeSum");
    CHECK(j["family"] == "3l");
    CHECK(j["necessary_condition"] == "h3(516)=1: fail");
    CHECK(j["schema"] == "v1");
}

TEST_CASE("classify 13 reports the witness") {
    json j = json::parse(run_cli("classify 13").out);
    CHECK(j["outcome"] == "CubeSum");
    CHECK(j["witness"]["x"] == "7/3");
    CHECK(j["witness"]["y"] == "2/3");
}

TEST_CASE("classify 183 passes the necessary condition") {
    json j = json::parse(run_cli("classify 183").out);
    CHECK(j["h3"]["value"] == 2);
    CHECK(j["necessary_condition"] == "h3(732)=2: pass");
}

TEST_CASE("classify rejects non-cube-free input with exit 2") {
    CHECK(run_cli("classify 16").exit_code == 2);
    CHECK(run_cli("classify -- -5").exit_code == 2);
}

TEST_CASE("h3 command") {
    json j = json::parse(run_cli("h3 732").out);
    CHECK(j["h3"] == 2);
    CHECK(j["rank"] == 0);
    CHECK(run_cli("h3 19").exit_code == 2);
    CHECK(run_cli("h3 50").exit_code == 2);
}

TEST_CASE("symbol command labels the conjugate choice") {
    json j = json::parse(run_cli("symbol 2 109").out);
    CHECK(j["trivial"] == true);
    CHECK(j["exponent"] == 0);
    json k = json::parse(run_cli("symbol 3 43").out);
    CHECK(k["trivial"] == false);
    CHECK((k["exponent"] == 1 || k["exponent"] == 2));
    CHECK(k["conjugate_exponent"] != k["exponent"]);
}

TEST_CASE("rootnumber and model commands") {
    json r = json::parse(run_cli("rootnumber 7").out);
    CHECK(r["w"] == -1);
    json m = json::parse(run_cli("model 18").out);
    CHECK(m["model_case"] == "III");
    CHECK(m["equation"] == "y^2 = x^3 - 3");
    CHECK(m["discriminant"] == "-3888");
}

TEST_CASE("selmer-bound command") {
    json j = json::parse(run_cli("selmer-bound 183 --h2 0").out);
    CHECK(j["bound"] == 1);
    CHECK(j["cf_4n"] == "732");
}

TEST_CASE("eliminate command with trace") {
    json j = json::parse(run_cli("eliminate 3l 43 --trace").out);
    CHECK(j["dim_upper_bound"] == 2);
    CHECK(j["conclusive"] == true);
    CHECK(j["eliminations"].size() == 12);
    CHECK(j["survivors"].size() == 1);
    CHECK(run_cli("eliminate 2l 19").exit_code == 2);
    CHECK(run_cli("eliminate 3l 41").exit_code == 2);
}

TEST_CASE("bqf command") {
    json j = json::parse(run_cli("bqf 4 -- -2 7 19").out);
    CHECK(j["represents"] == true);
    json k = json::parse(run_cli("bqf 1 1 61 5").out);
    CHECK(k["represents"] == false);
    CHECK(run_cli("bqf 1 0 -- -1 5").exit_code == 2);
}

TEST_CASE("scan emits one record per line plus a summary") {
    RunResult r = run_cli("scan --family 2l --limit 300");
    CHECK(r.exit_code == 0);
    std::vector<json> lines;
    size_t start = 0;
    while (start < r.out.size()) {
        size_t end = r.out.find('\n', start);
        if (end == std::string::npos) break;
        lines.push_back(json::parse(r.out.substr(start, end - start)));
        start = end + 1;
    }
    REQUIRE(lines.size() >= 2);
    CHECK(lines.back()["type"] == "summary");
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        CHECK(lines[i]["type"] == "record");
        CHECK(lines[i]["root_number"] == 1);
    }
}

TEST_CASE("scan --csv produces a parsable table") {
    RunResult r = run_cli("scan --family 3l --limit 300 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("family,ell,h3,", 0) == 0);
}

TEST_CASE("table1 succeeds end to end") {
    RunResult r = run_cli("table1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    RunResult c = run_cli("table1 --csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out.rfind("family,ell,r_al,", 0) == 0);
}

TEST_CASE("bad flags exit with code 2") {
    CHECK(run_cli("scan --family 5l --limit 10").exit_code == 2);
    CHECK(run_cli("scan --family l --class 2 --limit 10").exit_code == 2);
}

}  // TEST_SUITE
