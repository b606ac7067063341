#include "cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gapbal::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const Result r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("seeds") {
    const auto j = run_json({"seeds", "--k", "9"});
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "seeds");
    CHECK(j["context"]["k"] == "9");
    const auto& classes = j["payload"]["classes"];
    REQUIRE(classes.size() == 4);
    CHECK(classes[0]["seed"] == nlohmann::json{"0", "17"});
    CHECK(classes[0]["conjugate"] == 3);
    CHECK(classes[1]["conjugate"] == 2);

    const auto five = run_json({"seeds", "--k", "5"});
    REQUIRE(five["payload"]["classes"].size() == 3);
    CHECK(five["payload"]["classes"][1]["ambiguous"] == true);

    const auto zero = run_json({"seeds", "--k", "0"});
    REQUIRE(zero["payload"]["classes"].size() == 1);
    CHECK(zero["payload"]["classes"][0]["seed"].is_null());
    CHECK(zero["payload"]["classes"][0]["initial_pair"] == nlohmann::json{"0", "1"});
    CHECK(run({"seeds", "--k", "0"}).out.find("single class") != std::string::npos);
}

TEST_CASE("class") {
    const auto j = run_json({"class", "--k", "9", "--index", "0", "--terms", "3", "--fields", "B,C,m,r,rhat"});
    const auto& c = j["payload"]["columns"];
    CHECK(c["B"] == nlohmann::json{"9", "38", "203"});
    CHECK(c["C"] == nlohmann::json{"19", "97", "563"});
    CHECK(c["m"] == nlohmann::json{"9", "48", "281"});
    CHECK(c["r"] == nlohmann::json{"0", "10", "78"});
    CHECK(c["rhat"] == nlohmann::json{"1", "39", "233"});
    CHECK(run_json({"class", "--k", "1", "--index", "0", "--terms", "4", "--fields", "B"})["payload"]["columns"]["B"] ==
          nlohmann::json{"1", "6", "35", "204"});
    CHECK(run_json({"class", "--k", "0", "--index", "0", "--terms", "4", "--fields", "B"})["payload"]["columns"]["B"] ==
          nlohmann::json{"0", "2", "14", "84"});
    CHECK(run({"--format", "csv", "class", "--k", "0", "--index", "0", "--terms", "2", "--fields", "B,r"}).out ==
          "i,B,r\n0,0,0\n1,2,1\n");
}

TEST_CASE("table2") {
    const Result text = run({"table2"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("f9") != std::string::npos);
    const auto j = run_json({"table2"});
    const auto& rows = j["payload"]["rows"];
    CHECK(rows["t1"][1]["value"].is_null());
    CHECK(rows["t1"][1]["reason"] == "non-integral");
    CHECK(rows["t1"][0] == "14");
    CHECK(rows["t4"][11] == "1164");
    CHECK(rows["f9"][11] == "5780");
    CHECK_FALSE(rows.contains("t3"));
}

TEST_CASE("transition") {
    const Result r = run({"transition", "--k", "9", "--from", "0", "--to", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("(27x + 5y - 16)/23") != std::string::npos);
    CHECK(r.out.find("(40x + 27y - 160)/23") != std::string::npos);
    CHECK(r.out.find("(27x + 5y + 18)/23") != std::string::npos);
    CHECK(r.out.find("(40x + 27y + 180)/23") != std::string::npos);
    CHECK(run({"transition", "--k", "9", "--from", "0", "--to", "7"}).code == 2);
}

TEST_CASE("genfun") {
    const auto j = run_json({"genfun", "--k", "9", "--class", "2", "--terms", "3"});
    CHECK(j["payload"]["numerator"] == nlohmann::json{"20", "-41", "5"});
    CHECK(j["payload"]["series"] == nlohmann::json{"20", "99", "558"});
    const auto g = run_json({"genfun", "--k", "9", "--terms", "6"});
    CHECK(g["payload"]["series"] == nlohmann::json{"9", "14", "20", "33", "38", "65"});
    CHECK(g["context"]["class"].is_null());
}

TEST_CASE("verify") {
    const Result ok = run({"verify", "--k", "9", "--terms", "25"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all identities hold") != std::string::npos);
    const auto j = run_json({"verify", "--k", "2", "--terms", "20"});
    CHECK(j["payload"]["passed"] == true);
    CHECK(run({"verify", "--k", "9", "--terms", "20", "--precision", "20"}).code == 2);
    CHECK(run({"verify", "--k", "9", "--terms", "1"}).code == 2);
}

TEST_CASE("conjecture and table1") {
    const Result c = run({"conjecture", "--k-min", "0", "--k-max", "300"});
    CHECK(c.code == 0);
    CHECK(c.out.find("0 mismatches") != std::string::npos);
    const auto t = run_json({"table1", "--k-max", "10"});
    CHECK(t["payload"]["observed_counts"] == nlohmann::json{1, 2, 3, 4});
    CHECK(run({"--format", "csv", "table1", "--k-max", "10", "--jobs", "2"}).out == "n,k\n1,0\n2,2\n3,5\n4,9\n");
}

TEST_CASE("oeis-check") {
    const Result r = run({"oeis-check", "--fixtures", GAPBAL_FIXTURE_DIR});
    CHECK(r.code == 0);
    const auto j = run_json({"oeis-check", "--id", "A077443", "--fixtures", GAPBAL_FIXTURE_DIR});
    CHECK(j["payload"]["checks"][0]["offset"] == 1);
    CHECK(run({"oeis-check", "--id", "A999999", "--fixtures", GAPBAL_FIXTURE_DIR}).code == 2);
}

TEST_CASE("usage errors and exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"seeds"}).code == 2);
    CHECK(run({"seeds", "--k", "-3"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--format", "yaml", "seeds", "--k", "1"}).code == 2);
    CHECK(run({"class", "--k", "9", "--index", "4", "--terms", "2"}).code == 2);
    CHECK(run({"class", "--k", "9", "--index", "0", "--terms", "2", "--fields", "B,z"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"table2"}).out == run({"table2"}).out);
    CHECK(run({"--format", "json", "conjecture", "--k-max", "200", "--jobs", "1"}).out ==
          run({"--format", "json", "conjecture", "--k-max", "200", "--jobs", "4"}).out);
}

TEST_CASE("environment fallbacks, flags win") {
    ::setenv("GAPBAL_FIXTURES", "/nonexistent/gapbal", 1);
    CHECK(run({"oeis-check"}).code == 2);
    CHECK(run({"oeis-check", "--fixtures", GAPBAL_FIXTURE_DIR}).code == 0);
    ::unsetenv("GAPBAL_FIXTURES");

    ::setenv("GAPBAL_PRECISION", "20", 1);
    CHECK(run({"verify", "--k", "1", "--terms", "20"}).code == 2);
    CHECK(run({"verify", "--k", "1", "--terms", "20", "--precision", "60"}).code == 0);
    ::unsetenv("GAPBAL_PRECISION");

    ::setenv("GAPBAL_JOBS", "many", 1);
    CHECK(run({"table1", "--k-max", "5"}).code == 2);
    ::unsetenv("GAPBAL_JOBS");

    ::setenv("GAPBAL_OEIS_URL", "http://127.0.0.1:1/{id}.txt", 1);
    ::setenv("GAPBAL_OEIS_TIMEOUT", "1", 1);
    const Result r = run({"--format", "json", "oeis-refresh", "--id", "A001109", "--fixtures", GAPBAL_FIXTURE_DIR});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["context"]["url"] == "http://127.0.0.1:1/A001109.txt");
    CHECK(j["payload"]["fetched"] == false);
    CHECK(j["payload"]["terms"] == 30);
    ::unsetenv("GAPBAL_OEIS_URL");
    ::unsetenv("GAPBAL_OEIS_TIMEOUT");
}
