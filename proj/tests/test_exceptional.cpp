#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "cellsym/cell_graph.hpp"
#include "cellsym/exceptional.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cellsym;
using testutil::thrown_code;

TEST_CASE("size table") {
    const std::vector<std::pair<unsigned, std::size_t>> table = {
        {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {11, 5}, {17, 7}};
    for (const auto& [size, expect] : table)
        CHECK(lookup_family(size).as_labels.size() == expect);
    CHECK(thrown_code([] { lookup_family(6); }) == "UnknownSize");
}

TEST_CASE("the seven-member record") {
    const auto& f = lookup_family(17);
    CHECK(f.as_labels == std::vector<std::string>{"2688", "2016", "448", "1134", "1344", "420",
                                                  "168"});
    CHECK(f.cal_c == std::vector<std::string>{"S_2×S_2", "S_2×S_3", "S_2", "S_3", "S_4", "S_5",
                                              "Δ_8"});
    CHECK(f.indexing[0] == "(g'_2,ε'')");
    CHECK(f.graph.arrows.size() == 6);
    CHECK_FALSE(f.counts_derived);

    const auto sol = solve_left_cell_counts(f.graph);
    for (std::size_t i = 0; i < f.as_labels.size(); ++i)
        CHECK(sol.counts[i].second == f.expected_counts.at(f.as_labels[i]));

    std::int64_t total = 0;
    for (const auto& [id, n] : sol.counts) total += n;
    CHECK(total == 4480);
}

TEST_CASE("the five-member record") {
    const auto& f = lookup_family(11);
    CHECK(f.as_labels == std::vector<std::string>{"4_4", "6_1", "4_3", "4_1", "1_2"});
    CHECK(f.cal_c == std::vector<std::string>{"S_2", "S_3", "S_4", "S_2×S_2", "Δ_8"});
    REQUIRE(f.graph.vertices.size() == 5);
    const std::vector<std::int64_t> dims = {4, 6, 4, 4, 1};
    for (std::size_t i = 0; i < 5; ++i) CHECK(*f.graph.vertices[i].dim == dims[i]);
    CHECK(f.graph.arrows.size() == 3);
    CHECK(f.counts_derived);

    // goldens frozen from hand back-substitution:
    //   N(Δ_8)=1, N(S_4)=4-1=3, N(S_3)=6-3=3, N(S_2)=4-3=1, N(S_2×S_2)=4
    const auto sol = solve_left_cell_counts(f.graph);
    CHECK(sol.count_for("S_2") == 1);
    CHECK(sol.count_for("S_3") == 3);
    CHECK(sol.count_for("S_4") == 3);
    CHECK(sol.count_for("S_2×S_2") == 4);
    CHECK(sol.count_for("Δ_8") == 1);
    CHECK_FALSE(sol.nonpositive_warning);

    // S_2×S_2 is isolated
    for (const auto& [from, to] : f.graph.arrows) {
        CHECK(from != "S_2×S_2");
        CHECK(to != "S_2×S_2");
    }
}

TEST_CASE("the three-member record") {
    const auto& f = lookup_family(5);
    CHECK(f.as_labels == std::vector<std::string>{"(1,ε)", "(g_2,1)", "(g_3,1)"});
    CHECK(f.cal_c == std::vector<std::string>{"S_1", "S_2", "S_3"});
    REQUIRE(f.graph.arrows.size() == 1);
    CHECK(f.graph.arrows[0] == std::pair<std::string, std::string>{"S_3", "S_2"});
    for (const auto& [from, to] : f.graph.arrows) {
        CHECK(from != "S_1");
        CHECK(to != "S_1");
    }
}

TEST_CASE("the two-member record with subgroups") {
    const auto& f = lookup_family(4);
    REQUIRE(f.graph.arrows.size() == 1);
    CHECK(f.graph.arrows[0] == std::pair<std::string, std::string>{"S_3", "S_2"});
    CHECK_FALSE(f.graph.vertices[0].dim.has_value());  // member/subgroup pairing unresolved
}

TEST_CASE("unipotent-class table") {
    const auto& f = lookup_family(17);
    REQUIRE(f.gamma.size() == 7);
    std::set<std::string> targets;
    for (const auto& [label, cls] : f.gamma) targets.insert(cls);
    CHECK(targets.size() == 7);
    CHECK(f.gamma[0] == std::pair<std::string, std::string>{"448", "A_5+A_2"});
    CHECK(f.gamma[1] == std::pair<std::string, std::string>{"2688", "D_6(a_2)"});
    CHECK(f.gamma[6] == std::pair<std::string, std::string>{"168", "D_4+A_2"});
}

TEST_CASE("all graphs are simple DAGs with matching labels") {
    for (unsigned size : exceptional_sizes()) {
        const auto& f = lookup_family(size);
        CHECK(validate_graph(f.graph).ok());
        REQUIRE(f.graph.vertices.size() == f.as_labels.size());
        for (std::size_t i = 0; i < f.as_labels.size(); ++i)
            CHECK(f.graph.vertices[i].label == f.as_labels[i]);
    }
}

TEST_CASE("validate_all passes") {
    for (const auto& check : validate_all()) {
        INFO(check.name, " ", check.detail);
        CHECK(check.pass);
    }
}
