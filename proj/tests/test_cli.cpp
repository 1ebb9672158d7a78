#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tubealg/cli.hpp"
#include "tubealg/io.hpp"

using namespace tubealg;

namespace {

struct Run {
    int code;
    Json report;
    std::string out, err;
};

std::string data(const std::string& name) { return std::string(TUBEALG_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tubealg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    Json j;
    if (!out.str().empty()) j = Json::parse(out.str());
    return {code, j, out.str(), err.str()};
}

const Json* find_check(const Json& report, const std::string& name) {
    for (const auto& c : report["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("verify-group") {
    auto ok = run({"verify-group", "--group", data("s3.json")});
    CHECK(ok.code == 0);
    CHECK(ok.report["passed"] == true);
    CHECK(ok.report["result"]["order"] == 6);
    CHECK(ok.report["inputs"]["group"]["fnv1a"].get<std::string>().size() == 16);

    auto bad = run({"verify-group", "--group", data("nonassoc.json")});
    CHECK(bad.code == 1);
    CHECK(bad.report["passed"] == false);
    const auto& c = bad.report["checks"][0];
    CHECK(c["relation"] == "associativity");
    CHECK(c["witness"].size() == 3);
}

TEST_CASE("verify-cocycle") {
    auto ok = run({"verify-cocycle", "--group", data("z2.json"), "--cocycle", data("semion.json")});
    CHECK(ok.code == 0);
    CHECK(ok.report["result"]["normalized"] == true);

    auto bad = run({"verify-cocycle", "--group", data("z2.json"), "--cocycle", data("perturbed_semion.json")});
    CHECK(bad.code == 1);
    const auto* c = find_check(bad.report, "cocycle");
    REQUIRE(c);
    CHECK((*c)["passed"] == false);
    CHECK((*c)["witness"].size() == 4);
}

TEST_CASE("input errors exit 2") {
    auto missing = run({"verify-group", "--group", data("no_such_file.json")});
    CHECK(missing.code == 2);
    CHECK(missing.report["error"]["kind"] == "input");

    auto wrong_size = run({"verify-cocycle", "--group", data("s3.json"), "--cocycle", data("semion.json")});
    CHECK(wrong_size.code == 2);

    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"tube", "simples"}).code == 2);
}

TEST_CASE("normalize and gauge-fix") {
    auto n = run({"normalize", "--group", data("z4.json"), "--cocycle", data("z4_standard.json")});
    CHECK(n.code == 0);
    CHECK(n.report["passed"] == true);

    auto g = run({"gauge-fix", "--bh", data("bh_v4.json")});
    CHECK(g.code == 0);
    CHECK(g.report["passed"] == true);
    for (const auto& c : g.report["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("tube commands") {
    auto s = run({"tube", "simples", "--group", data("s3.json"), "--cocycle", data("trivial6.json"), "--seed", "3"});
    CHECK(s.code == 0);
    CHECK(s.report["result"]["total"] == 8);
    CHECK(s.report["seed"] == 3);

    auto c = run({"tube", "check", "--group", data("z2.json"), "--cocycle", data("semion.json")});
    CHECK(c.code == 0);
    CHECK(c.report["passed"] == true);

    auto b = run({"tube", "build", "--group", data("z2.json"), "--cocycle", data("semion.json")});
    CHECK(b.code == 0);
    CHECK(b.report["result"]["dimension"] == 4);
}

TEST_CASE("reports are reproducible apart from timing") {
    const std::vector<std::string> args{"tube", "simples", "--group", data("z4.json"), "--cocycle",
                                        data("z4_standard.json"), "--seed", "11"};
    auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    a.report.erase("elapsed_ms");
    b.report.erase("elapsed_ms");
    CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("bh commands") {
    auto c = run({"bh", "check", "--bh", data("bh_s3.json")});
    CHECK(c.code == 0);
    CHECK(c.report["passed"] == true);

    auto s = run({"bh", "simples", "--bh", data("bh_s3.json"), "--seed", "1"});
    CHECK(s.code == 0);
    CHECK(s.report["result"]["dimension"] == 144);
    CHECK(s.report["result"]["total"] == 8);

    auto v = run({"bh", "simples", "--bh", data("bh_v4.json"), "--seed", "1"});
    CHECK(v.code == 0);
    CHECK(v.report["result"]["gauge_fixed"] == true);
    CHECK(v.report["result"]["total"] == 16);
}

TEST_CASE("rep commands") {
    // semion, class of the generator: [1] -> i satisfies [1][1] = -[0]
    const auto path = std::filesystem::temp_directory_path() / "tubealg_test_rep.json";
    {
        std::ofstream f(path);
        f << R"({"dimension": 1, "matrices": {"[0]": [[1, 0]], "[1]": [[0, 1]]}})";
    }
    auto ind = run({"rep", "induce", "--group", data("z2.json"), "--cocycle", data("semion.json"), "--class", "1",
                    "--rep", path.string()});
    CHECK(ind.code == 0);
    CHECK(ind.report["result"]["representation"]["dimension"] == 1);

    // [1] -> 1 is not a representation of the twisted algebra
    {
        std::ofstream f(path);
        f << R"({"dimension": 1, "matrices": {"[0]": [[1, 0]], "[1]": [[1, 0]]}})";
    }
    auto bad = run({"rep", "induce", "--group", data("z2.json"), "--cocycle", data("semion.json"), "--class", "1",
                    "--rep", path.string()});
    CHECK(bad.code == 1);

    auto dec = run({"rep", "decompose", "--group", data("z2.json"), "--cocycle", data("semion.json"), "--seed", "2"});
    CHECK(dec.code == 0);
    CHECK(dec.report["result"]["blocks"].size() == 4);
    std::filesystem::remove(path);
}
