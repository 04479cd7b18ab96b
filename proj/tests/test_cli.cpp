#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cpconv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

} // namespace

TEST_CASE("conv example") {
    const auto o = run({"conv", "--r", "1", "--s", "1", "--n", "3", "--set", "B"});
    REQUIRE(o.code == 0);
    const auto j = json_of(o);
    CHECK(j["command"] == "conv");
    CHECK(j["result"] == "6");
}

TEST_CASE("conv closed method agrees with brute force") {
    for (const char* set : {"B", "Bprime"}) {
        const auto brute = run({"conv", "--r", "1", "--s", "3", "--range", "2..20", "--set", set});
        const auto closed = run({"conv", "--r", "1", "--s", "3", "--range", "2..20", "--set", set,
                                 "--method", "closed"});
        REQUIRE(brute.code == 0);
        REQUIRE(closed.code == 0);
        CHECK(json_of(brute)["result"] == json_of(closed)["result"]);
    }
}

TEST_CASE("powersum example") {
    for (const char* method : {"direct", "moebius", "closed"}) {
        const auto o = run({"powersum", "--k", "2", "--n", "3", "--method", method});
        REQUIRE(o.code == 0);
        CHECK(json_of(o)["result"] == "5");
    }
}

TEST_CASE("psi rational output") {
    const auto o = run({"psi", "--s", "-1", "--n", "6"});
    REQUIRE(o.code == 0);
    const auto v = json_of(o)["result"];
    CHECK(v["num"] == "1");
    CHECK(v["den"] == "3");
}

TEST_CASE("verify exit codes") {
    const auto bad = run({"verify", "--theorem", "t13:printed", "--range", "2..10"});
    CHECK(bad.code == 1);
    const auto j = json_of(bad);
    CHECK(j["verdict"] == "failed");
    CHECK(j.contains("erratum_notes"));
    CHECK(run({"verify", "--theorem", "t13", "--range", "2..10"}).code == 0);
    CHECK(run({"verify", "--theorem", "t15", "--range", "2..30", "--jobs", "3"}).code == 0);
}

TEST_CASE("check-main") {
    CHECK(run({"check-main", "--poly", "x^2 y^2", "--n", "5"}).code == 0);
    CHECK(run({"check-main", "--poly", "a", "--n", "5"}).code == 2);
}

TEST_CASE("count") {
    const auto o = run({"count", "--which", "Mp", "--r", "3", "--s", "3", "--n", "3"});
    REQUIRE(o.code == 0);
    CHECK(json_of(o)["result"] == "18");
    CHECK(run({"count", "--which", "M", "--r", "1", "--s", "1", "--n", "3", "--raw"}).code == 0);
    CHECK(run({"count", "--which", "L", "--r", "3", "--s", "3", "--n", "40", "--raw", "--budget",
               "1000"}).code == 3);
    CHECK(run({"count", "--r", "1", "--s", "1", "--range", "2..8"}).code == 0);
}

TEST_CASE("fit and probe") {
    CHECK(run({"fit", "--r", "1", "--s", "5", "--train", "2,3,4,5,7,9", "--test", "11,13,16"}).code ==
          0);
    CHECK(run({"fit", "--r", "1", "--s", "5", "--train", "2,3,4,5", "--test", "11"}).code == 2);
    CHECK(run({"fit", "--r", "1", "--s", "5", "--train", "2,3,4,5,7,9", "--test", "9"}).code == 2);
    const auto p = run({"probe10", "--pair", "5,5"});
    CHECK(p.code == 0);
    CHECK(p.out.find("numerical evidence") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"psi", "--s", "0", "--n", "5"}).code == 2);
    CHECK(run({"psi", "--s", "1"}).code == 2);
    CHECK(run({"powersum", "--k", "13", "--n", "5", "--method", "closed"}).code == 2);
    CHECK(run({"powersum", "--k", "1", "--n", "1"}).code == 2);
    CHECK(run({"verify", "--theorem", "t99", "--range", "2..5"}).code == 2);
    CHECK(run({"verify", "--theorem", "t11", "--range", "5..2"}).code == 2);
    CHECK(run({"conv", "--r", "1", "--s", "1", "--n", "3", "--set", "C"}).code == 2);
    const auto o = run({"psi", "--s", "x", "--n", "3"});
    CHECK(o.code == 2);
    CHECK_FALSE(o.err.empty());
}

TEST_CASE("help") {
    const auto o = run({"--help"});
    CHECK(o.code == 0);
    CHECK(o.out.find("verify") != std::string::npos);
}

TEST_CASE("csv output") {
    const auto o = run({"--csv", "verify", "--theorem", "t11", "--range", "2..5"});
    REQUIRE(o.code == 0);
    CHECK(o.out.rfind("n,", 0) == 0);
    std::size_t lines = 0;
    for (char c : o.out) lines += c == '\n';
    CHECK(lines == 5);
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"verify", "--theorem", "t35", "--range", "2..25", "--jobs",
                                        "4"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out == run({"verify", "--theorem", "t35", "--range", "2..25"}).out);
}
