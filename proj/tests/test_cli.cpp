#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "floercone/cli.hpp"
#include "helpers.hpp"

using namespace floercone;
using nlohmann::json;

namespace {

json result_of(const CliResult& r) {
    REQUIRE(!r.out.empty());
    const json doc = json::parse(r.out);
    REQUIRE(doc.contains("result"));
    return doc["result"];
}

} // namespace

TEST_CASE("cli: hfk --n 2 trefoil.json") {
    const CliResult r = run_cli({"hfk", "--n", "2", testutil::fixture_path("trefoil.json")});
    CHECK(r.exit_code == 0);
    CHECK(result_of(r) == json{{"0", 1}, {"1", 0}, {"2", 0}, {"3", 1}});
}

TEST_CASE("cli: hf --n 2 trefoil.json") {
    const CliResult r = run_cli({"hf", "--n", "2", testutil::fixture_path("trefoil.json")});
    CHECK(r.exit_code == 0);
    CHECK(result_of(r) == json{{"0", 1}, {"1", 1}});
}

TEST_CASE("cli: simple --n 1 trefoil.json") {
    const CliResult r =
        run_cli({"simple", "--n", "1", testutil::fixture_path("trefoil.json")});
    CHECK(r.exit_code == 0);
    CHECK(result_of(r) == json{{"simple", false},
                               {"witness_levels", json::array({1})},
                               {"hfk_total", 3},
                               {"hf_total", 1}});
}

TEST_CASE("cli: homology, genus, d-invariant, alexander") {
    const std::string trefoil = testutil::fixture_path("trefoil.json");

    CHECK(result_of(run_cli({"homology", trefoil})) ==
          json{{"by_degree", {{"0", 1}}}, {"total", 1}});
    CHECK(result_of(run_cli({"genus", trefoil})) == json{{"genus", 1}});
    CHECK(result_of(run_cli({"d-invariant", trefoil})) == json{{"d", 0}});
    CHECK(result_of(run_cli({"alexander", trefoil})) ==
          json{{"coeffs", {{"-1", 1}, {"0", -1}, {"1", 1}}}});
}

TEST_CASE("cli: staircase make emits the complex file, check recognizes it") {
    const CliResult made = run_cli({"staircase", "make", "--steps", "1", "--d", "0"});
    CHECK(made.exit_code == 0);
    const json file = json::parse(made.out);
    CHECK(file["generators"].size() == 3);
    CHECK(file["differential"] == json{{"x-1", json::array({"x0"})}});

    // pipe it back through `staircase check` via a temp file
    const std::string path = "staircase_roundtrip_tmp.json";
    {
        std::ofstream out(path);
        out << made.out;
    }
    const CliResult checked = run_cli({"staircase", "check", path});
    CHECK(checked.exit_code == 0);
    CHECK(result_of(checked) ==
          json{{"staircase", true}, {"steps", json::array({1})}, {"d_top", 0}});
    std::remove(path.c_str());

    // non-staircase input reports the reason
    const CliResult no = run_cli({"staircase", "check", testutil::fixture_path("rank3.json")});
    CHECK(no.exit_code == 0);
    CHECK(result_of(no)["staircase"] == false);
}

TEST_CASE("cli: validate") {
    const CliResult ok = run_cli({"validate", testutil::fixture_path("trefoil.json")});
    CHECK(ok.exit_code == 0);
    CHECK(result_of(ok)["ok"] == true);

    const CliResult bad =
        run_cli({"validate", testutil::fixture_path("invalid_dsquared.json")});
    CHECK(bad.exit_code == 1);
    const json doc = json::parse(bad.out);
    CHECK(doc["result"]["ok"] == false);
    REQUIRE(doc["result"]["violations"].size() == 1);
    const std::string v = doc["result"]["violations"][0].get<std::string>();
    CHECK(v.find("d^2('x')") != std::string::npos);
    CHECK(doc["error"]["kind"] == "ValidationError");
}

TEST_CASE("cli: epsilon") {
    const CliResult r = run_cli({"epsilon", "--s", "1", testutil::fixture_path("trefoil.json")});
    CHECK(r.exit_code == 0);
    const json res = result_of(r);
    CHECK(res["zero"] == true);
    CHECK(res["rank_h_lt_s"] == 0);
    CHECK(res["rank_h_le_neg_s"] == 1);

    const CliResult out_of_range =
        run_cli({"epsilon", "--s", "0", testutil::fixture_path("unknot.json")});
    CHECK(out_of_range.exit_code == 1);
    CHECK(json::parse(out_of_range.out)["error"]["kind"] == "OutOfRange");
}

TEST_CASE("cli: domain errors produce structured reports and exit 1") {
    const CliResult missing = run_cli({"genus", "no_such_file.json"});
    CHECK(missing.exit_code == 1);
    CHECK(json::parse(missing.out)["error"]["kind"] == "IoError");

    const CliResult rank3 = run_cli({"d-invariant", testutil::fixture_path("rank3.json")});
    CHECK(rank3.exit_code == 1);
    CHECK(json::parse(rank3.out)["error"]["kind"] == "NotRankOne");

    const CliResult invalid =
        run_cli({"genus", testutil::fixture_path("invalid_level.json")});
    CHECK(invalid.exit_code == 1);
    CHECK(json::parse(invalid.out)["error"]["kind"] == "ValidationError");
}

TEST_CASE("cli: usage errors exit 2 with nothing on stdout") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"hfk", testutil::fixture_path("trefoil.json")}).exit_code == 2);
    CHECK(run_cli({"hfk", "--n", "0", testutil::fixture_path("trefoil.json")}).exit_code == 2);
    CHECK(run_cli({"staircase", "make", "--steps", "2,1"}).exit_code == 2);
    CHECK(run_cli({"staircase", "make", "--steps", "a,b"}).exit_code == 2);
    CHECK(run_cli({"verify", "--suite", "bogus"}).exit_code == 2);
    CHECK(run_cli({}).out.empty());
}

TEST_CASE("cli: help exits 0") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("cli: identical bytes in, identical bytes out") {
    const std::vector<std::string> cmd{"hf", "--n", "3",
                                       testutil::fixture_path("trefoil.json")};
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);

    const std::vector<std::string> ver{"verify", "--suite", "converse", "--max-genus", "1",
                                       "--max-n", "3"};
    CHECK(run_cli(ver).out == run_cli(ver).out); // timing goes to stderr only
}

TEST_CASE("cli: verify reports counts and passes") {
    const CliResult r = run_cli({"verify", "--suite", "small-surgery", "--max-genus", "2",
                                 "--max-n", "3"});
    CHECK(r.exit_code == 0);
    const json res = result_of(r);
    CHECK(res["passed"] == true);
    CHECK(res["instances"] == 3);
    CHECK(res["checks"] == 7);
    CHECK(res["failures"] == json::array());
    CHECK(r.err.find("suite small-surgery") != std::string::npos);
}
