#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using testutil::run_command;

namespace {

const std::string cli = CELLSYM_CLI_PATH;

std::string tmp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(P_tmpdir) + "/cellsym_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("enum") {
    auto res = run_command(cli + " enum --type b --n 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "(0,1,1)\n(1)\n");

    res = run_command(cli + " enum --type d --n 2 --kind doubleprime");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "(1,1)\n");

    res = run_command(cli + " enum --type b --n 9999");
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("ResourceLimit") != std::string::npos);

    // identical invocations are byte-identical
    CHECK(run_command(cli + " enum --type b --n 6").out ==
          run_command(cli + " enum --type b --n 6").out);
}

TEST_CASE("enum respects the environment override") {
    auto res = run_command("CELLSYM_MAX_N=15 " + cli + " enum --type b --n 14");
    CHECK(res.exit_code == 0);
    res = run_command("CELLSYM_MAX_N=5 " + cli + " enum --type b --n 14");
    CHECK(res.exit_code == 2);
}

TEST_CASE("families JSON report") {
    auto res = run_command(cli + " families --type b --n 2 --json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["n"] == 2);
    REQUIRE(j["families"].size() == 3);
    // sorted by key; antispecial counts 1, 2, 1
    CHECK(j["families"][0]["key"] == nlohmann::json::array({0, 1, 1, 2, 2}));
    CHECK(j["families"][0]["antispecial"].size() == 1);
    CHECK(j["families"][1]["key"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["families"][1]["special"] == "(0,1,2)");
    CHECK(j["families"][1]["antispecial"].size() == 2);
    CHECK(j["families"][2]["key"] == nlohmann::json::array({2}));
    CHECK(j["families"][2]["antispecial"].size() == 1);
}

TEST_CASE("families key filter") {
    auto res = run_command(cli + " families --type b --n 6 --key 0,1,2,3,4 --json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["families"].size() == 1);
    CHECK(j["families"][0]["members"].size() == 10);
    CHECK(j["families"][0]["antispecial"].size() == 5);
}

TEST_CASE("type D families include the forced-top permutation family") {
    auto res = run_command(cli + " families --type d --n 4 --json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["type"] == "D");
    CHECK(j["kind"] == "prime");
    bool found = false;
    for (const auto& f : j["families"])
        if (f["key"] == nlohmann::json::array({0, 1, 2, 3})) {
            found = true;
            for (const auto& m : f["members"]) {
                const std::string s = m.get<std::string>();
                CHECK(s.substr(s.size() - 3) == ",3)");
            }
        }
    CHECK(found);
}

TEST_CASE("graph solve") {
    auto res = run_command(cli + " graph solve --builtin 17");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "S_2×S_2 1092\nS_2×S_3 1596\nS_2 70\nS_3 378\nS_4 756\nS_5 420\nΔ_8 168\n");
}

TEST_CASE("graph dot") {
    auto res = run_command(cli + " graph dot --builtin 5");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"S_3\" -> \"S_2\";") != std::string::npos);
    CHECK(res.out.find("digraph cell {") == 0);
}

TEST_CASE("graph validate") {
    const auto cyclic = tmp_file("cyclic.json", R"({
      "vertices": [{"id": "a"}, {"id": "b"}],
      "arrows": [["a", "b"], ["b", "a"]]
    })");
    auto res = run_command(cli + " graph validate --input " + cyclic);
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("CycleDetected") != std::string::npos);
    std::remove(cyclic.c_str());

    res = run_command(cli + " graph validate --builtin bp3");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "ok\n");

    res = run_command(cli + " graph validate --input /no/such/file.json");
    CHECK(res.exit_code == 2);
}

TEST_CASE("graph solve on user input") {
    const auto file = tmp_file("two.json", R"({
      "vertices": [{"id": "a", "dim": 5}, {"id": "b", "dim": 3}],
      "arrows": [["b", "a"]]
    })");
    auto res = run_command(cli + " graph solve --input " + file);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "a 2\nb 3\n");
    std::remove(file.c_str());
}

TEST_CASE("lift report lines") {
    auto res = run_command(cli + " lift --p 1 --r 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "(0,1,1) -> (0,1,2) | (0,2,1) (|S|: 0 -> 0, 1)\n");

    res = run_command(cli + " lift --p 1 --r 0");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("(0,1,1) valid rank 1") != std::string::npos);
    CHECK(res.out.find("(1,0,1) invalid[RowNotIncreasing]") != std::string::npos);

    res = run_command(cli + " lift --p 2 --r 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ambiguous") != std::string::npos);  // the misaligned source
}

TEST_CASE("apas and lattice") {
    auto res = run_command(cli + " apas --p 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "p=3 antispecial=14\n");

    res = run_command(cli + " apas --p 1 --list");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("(1,0,2)") != std::string::npos);
    CHECK(res.out.find("(0,2,1)") != std::string::npos);

    res = run_command(cli + " lattice --p 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("entries=42") != std::string::npos);
    CHECK(res.out.find("distinct=41") != std::string::npos);
    CHECK(res.out.find("DuplicateEntry") != std::string::npos);

    res = run_command(cli + " lattice --p 2 --json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["entries"].size() == 5);
    CHECK(j["anomalies"].empty());
}

TEST_CASE("exceptional record dump") {
    auto res = run_command(cli + " exceptional --size 17");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["size"] == 17);
    CHECK(j["as_labels"].size() == 7);
    CHECK(j["cal_c"][6] == "Δ_8");
    CHECK(j["expected_counts"]["2688"] == 1092);
    CHECK(j["counts_derived"] == false);
    CHECK(j["gamma"]["448"] == "A_5+A_2");
    CHECK(j["graph"]["arrows"].size() == 6);

    res = run_command(cli + " exceptional --size 11");
    REQUIRE(res.exit_code == 0);
    CHECK(nlohmann::json::parse(res.out)["counts_derived"] == true);

    CHECK(run_command(cli + " exceptional --size 6").exit_code == 2);
}

TEST_CASE("verify suites") {
    for (const std::string suite : {"catalan", "lattice", "dtype"}) {
        auto res = run_command(cli + " verify --suite " + suite);
        INFO(res.out);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("verify full suite") {
    auto res = run_command(cli + " verify --suite all");
    INFO(res.out);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_command(cli + " enum --type x --n 1").exit_code == 1);
    CHECK(run_command(cli + " nonsense").exit_code == 1);
    CHECK(run_command(cli + " enum").exit_code == 1);
    CHECK(run_command(cli + " --help").exit_code == 0);
}
