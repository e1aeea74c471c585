#include "bcv/errors.hpp"
#include "bcv/report.hpp"

#include "json.hpp"

#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const bcv::RunConfig& config) {
    std::ostringstream out, err;
    const int code = bcv::run(config, out, err);
    return {code, out.str(), err.str()};
}

bcv::RunConfig config(bcv::Command command) {
    bcv::RunConfig c;
    c.command = command;
    return c;
}

std::string fixture(const std::string& name) { return std::string(BCV_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs the CLI with stderr discarded; returns exit code and stdout.
std::pair<int, std::string> cli(const std::string& args) {
    const std::string cmd = std::string(BCV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t line_count(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("format names") {
    CHECK(bcv::parse_format("csv") == bcv::OutputFormat::Csv);
    CHECK(bcv::parse_format("md") == bcv::OutputFormat::Markdown);
    CHECK_THROWS_AS(bcv::parse_format("xml"), bcv::DomainError);
}

TEST_CASE("config validation") {
    auto c = config(bcv::Command::Tables);
    CHECK_NOTHROW(c.validate());
    c.range = {0, 0};
    CHECK_THROWS_AS(c.validate(), bcv::DomainError);
    c.range = {1, 10001};
    CHECK_THROWS_AS(c.validate(), bcv::DomainError);
}

TEST_CASE("tables: one N, four-option scale") {
    auto c = config(bcv::Command::Tables);
    c.scale = bcv::Scale::four_option();
    c.range = {20, 20};
    const auto r = run(c);
    CHECK(r.code == bcv::kExitOk);
    CHECK(r.out == "N,lambda,p,n_critical,attainable\n20,1/20,1/4,9,true\n20,1/100,1/4,10,true\n");
}

TEST_CASE("tables match the golden files") {
    for (const auto& [scale, file] : {std::pair{bcv::Scale::three_option(), "tables_s3_1_150.csv"},
                                      std::pair{bcv::Scale::four_option(), "tables_s4_1_150.csv"}}) {
        auto c = config(bcv::Command::Tables);
        c.scale = scale;
        c.range = {1, 150};
        CHECK(run(c).out == slurp(std::string(BCV_GOLDEN_DIR) + "/" + file));
    }
    auto c = config(bcv::Command::Compare);
    c.range = {5, 60};
    CHECK(run(c).out == slurp(std::string(BCV_GOLDEN_DIR) + "/compare_5_60.csv"));
}

TEST_CASE("tables with reference check") {
    auto c = config(bcv::Command::Tables);
    c.verify = true;
    c.format = bcv::OutputFormat::Json;
    const auto r = run(c);
    REQUIRE(r.code == bcv::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 192);
    int mismatches = 0;
    for (const auto& row : j["rows"]) mismatches += row["matches_reference"] == false;
    CHECK(mismatches == 2);
    CHECK_FALSE(j["notes"].empty());
}

TEST_CASE("classify the twenty-rater fixture") {
    auto c = config(bcv::Command::Classify);
    c.input_path = fixture("panel20.csv");
    c.format = bcv::OutputFormat::Json;
    const auto r = run(c);
    REQUIRE(r.code == bcv::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 4);
    const auto& q1 = j["rows"][0];
    CHECK(q1["item_id"] == "q1");
    CHECK(q1["N"] == 20);
    CHECK(q1["status"] == "A");
    CHECK(q1["recommendation"] == "retain");
    CHECK(q1["prob_E"] == "0.00924873");
    CHECK(q1["prob_E_exact"] == "10749440/1162261467");
    CHECK(q1["cvr_exact"] == "1/5");
    CHECK(j["rows"][1]["status"] == "C");
    CHECK(j["rows"][2]["status"] == "D");
    CHECK(j["rows"][3]["prob_E"] == "0.0246633");
}

TEST_CASE("classify the hundred-rater fixture") {
    auto c = config(bcv::Command::Classify);
    c.input_path = fixture("panel100.csv");
    c.format = bcv::OutputFormat::Json;
    const auto j = nlohmann::json::parse(run(c).out);
    const auto& x1 = j["rows"][0];
    CHECK(x1["status"] == "B");
    CHECK(x1["essential_validated"] == true);
    CHECK(x1["unnecessary_validated"] == true);
}

TEST_CASE("classify on the four-option scale excludes NA") {
    auto c = config(bcv::Command::Classify);
    c.input_path = fixture("s4_na.csv");
    c.scale = bcv::Scale::four_option();
    c.format = bcv::OutputFormat::Json;
    const auto j = nlohmann::json::parse(run(c).out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["N"] == 2);
    CHECK(j["rows"][0]["n_NA"] == 2);
    CHECK(j["rows"][1]["status"] == "none");
    CHECK(j["rows"][1]["prob_E"].is_null());

    c.scale = bcv::Scale::three_option();
    CHECK(run(c).code == bcv::kExitParse);
}

TEST_CASE("classify error codes") {
    auto c = config(bcv::Command::Classify);
    c.input_path = fixture("empty.csv");
    const auto empty = run(c);
    CHECK(empty.code == bcv::kExitOk);
    CHECK(line_count(empty.out) == 1);

    c.input_path = fixture("bad_token.csv");
    const auto bad = run(c);
    CHECK(bad.code == bcv::kExitParse);
    CHECK(bad.err.find("line 3") != std::string::npos);

    c.input_path = fixture("does_not_exist.csv");
    CHECK(run(c).code == bcv::kExitIo);
}

TEST_CASE("compare rows") {
    auto c = config(bcv::Command::Compare);
    c.range = {20, 20};
    CHECK(run(c).out.ends_with("\n20,11,12,9,10,14,15\n"));

    c.range = {5, 40};
    c.verify = true;
    c.format = bcv::OutputFormat::Json;
    const auto j = nlohmann::json::parse(run(c).out);
    CHECK(j["rows"].size() == 36);

    c = config(bcv::Command::Compare);
    c.range = {5, 5};
    c.legacy_alpha = bcv::ExactProbability(1, 100);
    CHECK(run(c).out.ends_with("\n5,4,5,4,5,5,\n"));

    c.range = {4, 10};
    CHECK(run(c).code == bcv::kExitDomain);
}

TEST_CASE("distribution") {
    auto c = config(bcv::Command::Distribution);
    c.range = {20, 20};
    c.format = bcv::OutputFormat::Json;
    const auto j = nlohmann::json::parse(run(c).out);
    REQUIRE(j["rows"].size() == 21);
    CHECK(j["rows"][11]["probability"] == "0.0246633");
    CHECK(j["rows"][11]["probability_exact"] == "85995520/3486784401");

    c = config(bcv::Command::Distribution);
    c.range = {1, 1};
    c.p_override = bcv::ExactProbability(1, 2);
    CHECK(run(c).out == "n,probability,probability_exact\n0,0.5,1/2\n1,0.5,1/2\n");

    c.range = {1, 2};
    CHECK(run(c).code != bcv::kExitOk);
}

TEST_CASE("formats carry the same values") {
    auto c = config(bcv::Command::Classify);
    c.input_path = fixture("panel20.csv");
    const auto csv = run(c).out;
    c.format = bcv::OutputFormat::Markdown;
    const auto md = run(c).out;
    c.format = bcv::OutputFormat::Json;
    const auto j = nlohmann::json::parse(run(c).out);
    for (const auto& row : j["rows"]) {
        for (const char* key : {"prob_E", "prob_U", "cvr"}) {
            const std::string v = row[key];
            CHECK(csv.find("," + v + ",") != std::string::npos);
            CHECK(md.find("| " + v + " |") != std::string::npos);
        }
    }
    CHECK(md.find("| n/a |") != std::string::npos);
}

TEST_CASE("output is byte-stable across runs and thread counts") {
    auto c = config(bcv::Command::Tables);
    c.range = {1, 300};
    c.threads = 1;
    const auto a = run(c).out;
    c.threads = 3;
    CHECK(run(c).out == a);
    CHECK(run(c).out == a);
}

TEST_CASE("command line") {
    const auto [code, out] = cli("tables --scale 4 --range 20:20");
    CHECK(code == 0);
    CHECK(out == "N,lambda,p,n_critical,attainable\n20,1/20,1/4,9,true\n20,1/100,1/4,10,true\n");

    CHECK(cli("tables --range 5:100 --lambda 0.05 --lambda 1/100").first == 0);
    CHECK(line_count(cli("tables --scale 3 --range 5:100 --format csv").second) == 193);
    CHECK(cli("tables --range 0:0").first == bcv::kExitUsage);
    CHECK(cli("tables --lambda 0").first == bcv::kExitUsage);
    CHECK(cli("tables --format xml").first == bcv::kExitUsage);
    CHECK(cli("no-such-command").first == bcv::kExitUsage);
    CHECK(cli("").first == bcv::kExitUsage);
    CHECK(cli("--help").first == 0);
    CHECK(cli("classify --input " + fixture("bad_token.csv")).first == bcv::kExitParse);
    CHECK(cli("classify --input " + fixture("panel20.csv") + " --format json").first == 0);
    CHECK(cli("compare --range 20:20").second.ends_with("\n20,11,12,9,10,14,15\n"));
    CHECK(cli("distribution --range 1 --p 1/2").second == "n,probability,probability_exact\n0,0.5,1/2\n1,0.5,1/2\n");
}

} // TEST_SUITE
