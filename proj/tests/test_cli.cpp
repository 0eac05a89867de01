#include "affsub/cli.hpp"
#include "affsub/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace affsub;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AFFSUB_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("affsub_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("phi command") {
    auto r = cli({"phi", "--input", data("square.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "-1 1\n");

    r = cli({"phi", "--input", temp_file("repeat.json", R"({"d": 3, "points": [["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"],["1","0","0"]]})")});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0 0\n");

    r = cli({"phi", "--input", data("collinear_prefix.json")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "degenerate configuration"));
}

TEST_CASE("malformed input names the offending field") {
    auto r = cli({"phi", "--input", temp_file("bad_entry.json", R"({"d": 2, "points": [["1","0"],["0","1"],["x","0"],["0","-1"]]})")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "points[2][0]"));

    r = cli({"phi", "--input", temp_file("no_d.json", R"({"points": []})")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "d: missing field"));

    r = cli({"phi", "--input", temp_file("count.json", R"({"d": 2, "points": [["1","0"]]})")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "points: expected d+2"));

    r = cli({"phi", "--input", temp_file("sphere.json", R"({"d": 2, "spherical": true, "points": [["1","0"],["0","1"],["-1","0"],["0","2"]]})")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "points[3]: squared norm"));

    r = cli({"phi", "--input", temp_file("json.json", "{not json")});
    CHECK(r.code == 2);
    r = cli({"phi", "--input", "/nonexistent.json"});
    CHECK(r.code == 2);
    r = cli({"check", "--input", data("square.json"), "--group", "dihedral:4"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "unknown group spec"));
    r = cli({"frobnicate"});
    CHECK(r.code == 2);
}

TEST_CASE("check command") {
    auto r = cli({"check", "--input", data("square.json"), "--group", "c4:rotation2d", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "tuples examined: 64"));
    CHECK(contains(r.out, "witnesses: "));
    CHECK(contains(r.out, "tuple #27 elements (1 2 3)"));  // (R90, R180, R270)

    r = cli({"check", "--input", data("square.json"), "--group", "cyclic:1:regular"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "none found"));

    r = cli({"check", "--input", data("generic_circle.json"), "--group", "c4:rotation2d"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "none found"));

    r = cli({"check", "--input", data("square.json"), "--group", "explicit:" + data("square_symmetries.txt"), "--first"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witnesses: 1"));

    r = cli({"check", "--input", data("square.json"), "--group", "cayley:" + data("z4.cayley"), "--sample", "50", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "tuples examined: 50"));

    r = cli({"check", "--input", data("octahedron_subset.json"), "--group", "hyperoctahedral:3", "--tuple-cap", "1000"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "tuple space too large"));

    r = cli({"check", "--input", data("octahedron_subset.json"), "--group", "hyperoctahedral:3", "--first", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["witnesses"].size() == 1);
    CHECK(verify_report(j).ok());
}

TEST_CASE("certify command") {
    auto r = cli({"certify", "--group", "c4:rotation2d", "--d", "2", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "passed: 64/64"));
    CHECK(contains(r.out, "alpha* = (1/4 1/4)"));

    r = cli({"certify", "--group", "symmetric:3:natural", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "passed: 216/216"));

    r = cli({"certify", "--group", "cyclic:1:regular", "--d", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "passed: 1/1"));

    r = cli({"certify", "--group", "hyperoctahedral:3", "--d", "3", "--sample", "200", "--seed", "9", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == 200);
    CHECK(j["failed"] == 0);

    r = cli({"certify", "--group", "hyperoctahedral:3", "--d", "4"});
    CHECK(r.code == 3);
    r = cli({"certify", "--group", "c4:rotation2d", "--d", "2", "--exhaustive", "--sample", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("montecarlo command, csv output and report replay") {
    const auto csv = (std::filesystem::temp_directory_path() / "affsub_cli_mc.csv").string();
    const std::vector<std::string> args{"montecarlo", "--d", "2", "--trials", "5", "--seed", "11", "--denom-bound", "30",
                                        "--group", "c4:rotation2d", "--group", "cyclic:4:regular", "--json", "--csv", csv};
    auto a = cli(args);
    REQUIRE(a.code == 0);
    auto b = cli(args);
    const auto ja = nlohmann::json::parse(a.out);
    const auto jb = nlohmann::json::parse(b.out);
    CHECK(strip_timing(ja).dump() == strip_timing(jb).dump());
    CHECK(ja["aggregate"]["trials"] == 5);
    CHECK(ja["plan"]["groups"].size() == 2);

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "trial,group,witnesses,degenerate,millis");

    const auto report_path = temp_file("mc.json", a.out);
    auto r = cli({"--verify-report", report_path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witnesses re-verified: 0/0"));

    auto text = cli({"montecarlo", "--d", "2", "--trials", "2", "--seed", "1", "--denom-bound", "10", "--group", "c4:rotation2d"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "total trials: 2"));

    r = cli({"montecarlo", "--d", "1", "--trials", "2", "--seed", "1", "--denom-bound", "10", "--group", "c4:rotation2d"});
    CHECK(r.code == 2);
    r = cli({"montecarlo", "--d", "3", "--trials", "2", "--seed", "1", "--denom-bound", "10", "--group", "hyperoctahedral:3",
             "--tuple-cap", "100"});
    CHECK(r.code == 3);
}

TEST_CASE("verify-report replays check witnesses") {
    auto r = cli({"check", "--input", data("square.json"), "--group", "c4:rotation2d", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    const auto good = temp_file("check.json", j.dump());
    r = cli({"--verify-report", good});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witnesses re-verified: 8/8"));

    j["witnesses"][0]["A"][0][0] = "5";
    r = cli({"--verify-report", temp_file("check_bad.json", j.dump())});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "FAILED witnesses[0]"));
}

TEST_CASE("groups list and help") {
    auto r = cli({"groups", "list"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "hyperoctahedral:<m>"));
    CHECK(contains(r.out, "cayley:<path>"));
    r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "montecarlo"));
}
