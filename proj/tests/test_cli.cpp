#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hexq/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hexq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand p") {
    const auto r = run({"expand", "p", "--order", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,coefficient\n", 0) == 0);
    CHECK(r.out.ends_with("5,7\n"));
    const auto text = run({"expand", "p", "--order", "5"});
    CHECK(text.out.ends_with("7\n"));
}

TEST_CASE("expand R at order zero") {
    const auto r = run({"expand", "R", "--s", "2", "--order", "0", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,coefficient\n0,1\n");
}

TEST_CASE("expand regime3 matches Rgf route") {
    const auto sum = run({"expand", "regime3", "--s", "4", "-N", "20", "--format", "csv"});
    const auto dp = run({"expand", "R", "--s", "4", "-N", "20", "--format", "csv"});
    CHECK(sum.code == 0);
    CHECK(sum.out == dp.out);
}

TEST_CASE("expand validates s") {
    CHECK(run({"expand", "R"}).code == 2);
    CHECK(run({"expand", "R", "--s", "1"}).code == 2);
    CHECK(run({"expand", "Rstar", "--s", "2"}).code == 2);
    CHECK(run({"expand", "nonsense"}).code == 2);
    CHECK(run({"expand", "indicator", "--s", "3", "-N", "10"}).code == 0);
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "theorem1", "--s", "2", "--order", "2000"}).code == 0);
    CHECK(run({"verify", "theorem1", "--s", "5"}).code == 2);
    CHECK(run({"verify", "theorem1", "--s", "2", "--part", "2"}).code == 2);
    CHECK(run({"verify", "id1", "--s", "4", "--k", "3", "--order", "200"}).code == 0);
    CHECK(run({"verify", "eq42-literal", "-N", "100"}).code == 1);
    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({"verify", "rogers", "--s", "2"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
}

TEST_CASE("conjecture exit codes") {
    CHECK(run({"conjecture", "1", "--part", "1", "--s", "2", "--k", "1..4", "--order", "500"})
              .code == 0);
    CHECK(run({"conjecture", "2", "--part", "2", "--s", "3", "--k", "0"}).code == 2);
    CHECK(run({"conjecture", "2", "--k", "3..1"}).code == 2);
    CHECK(run({"conjecture", "s-pairs", "--order", "500"}).code == 0);
    CHECK(run({"conjecture", "s-pairs", "--pairs", "7:9", "-N", "100"}).code == 1);
    CHECK(run({"conjecture", "s-pairs", "--pairs", "7-9"}).code == 2);
    CHECK(run({"conjecture", "1", "--pairs", "6:8"}).code == 2);
}

TEST_CASE("json document shape and round trip") {
    const auto r = run({"conjecture", "s-pairs", "--pairs", "6:8,7:9", "-N", "60", "--format",
                        "json"});
    CHECK(r.code == 1);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["version"] == "1.0.0");
    CHECK(doc["command"] == "conjecture s-pairs --pairs 6:8,7:9 -N 60 --format json");
    REQUIRE(doc["reports"].size() == 2);
    const auto& bad = doc["reports"][1];
    CHECK(bad["check_id"] == "s-pair");
    CHECK(bad["status"] == "EMPIRICAL_COUNTEREXAMPLE");
    CHECK(bad["params"]["a"] == 7);
    REQUIRE(!bad["violations"].empty());
    CHECK(bad["violations"][0]["lhs"].is_string());
    CHECK(bad["violations"][0].contains("n"));
    CHECK(bad.contains("elapsed_ms"));
    CHECK(doc.contains("total_elapsed_ms"));
}

TEST_CASE("json coefficients are decimal strings") {
    const auto r = run({"expand", "p", "-N", "300", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    const auto& coeffs = doc["table"]["coefficients"];
    REQUIRE(coeffs.size() == 301);
    CHECK(coeffs[300]["coefficient"] == "9253082936723602");
    CHECK(coeffs[300]["n"] == 300);
}

TEST_CASE("fast parity path gives the same statuses and violations") {
    auto strip = [](nlohmann::json doc) {
        for (auto& rep : doc["reports"]) {
            rep.erase("elapsed_ms");
            rep["params"].erase("variant");
        }
        return doc["reports"];
    };
    const auto slow = run({"verify", "theorem1", "-N", "1500", "--format", "json"});
    const auto fast =
        run({"verify", "theorem1", "-N", "1500", "--fast-parity", "--format", "json"});
    CHECK(slow.code == fast.code);
    CHECK(strip(nlohmann::json::parse(slow.out)) == strip(nlohmann::json::parse(fast.out)));
}

TEST_CASE("conjecture 2 reports both readings by default") {
    const auto r = run({"conjecture", "2", "--s", "2", "--k", "2", "-N", "200", "--format",
                        "json"});
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["params"]["variant"] != doc["reports"][1]["params"]["variant"]);
}

TEST_CASE("text output truncates violations unless asked") {
    const auto args = std::vector<std::string>{"verify", "eq42-literal", "-N", "300"};
    const auto brief = run(args);
    auto all_args = args;
    all_args.push_back("--all-violations");
    const auto full = run(all_args);
    CHECK(brief.out.find("more (use --all-violations") != std::string::npos);
    CHECK(full.out.find("more (use --all-violations") == std::string::npos);
    CHECK(full.out.size() > brief.out.size());
}
