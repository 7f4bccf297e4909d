#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "cellsym/lifting.hpp"
#include "cellsym/tableaux.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cellsym;
using testutil::thrown_code;

TEST_CASE("catalan numbers against the Dyck-path oracle") {
    for (unsigned t = 0; t <= 15; ++t) CHECK(catalan(t) == testutil::catalan_oracle(t));
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
    CHECK(catalan(30) == 3814986502092304ull);
    CHECK(thrown_code([] { catalan(31); }) == "Overflow");
}

TEST_CASE("binomials") {
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == testutil::binomial_oracle(n, k));
    CHECK(thrown_code([] { binomial(200, 100); }) == "Overflow");
}

TEST_CASE("tableau enumeration basics") {
    const auto one = enumerate_tableaux({0, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].top == std::vector<std::uint32_t>{0});
    CHECK(one[0].bottom == std::vector<std::uint32_t>{1});

    CHECK(enumerate_tableaux({0, 1, 2, 3}).size() == 2);
    CHECK(enumerate_tableaux({}).size() == 1);
    CHECK(thrown_code([] { enumerate_tableaux({0, 1, 2}); }) == "OddGround");
}

TEST_CASE("tableau counts equal Catalan numbers, contiguous ground or not") {
    for (unsigned t = 0; t <= 5; ++t) {
        std::vector<std::uint32_t> ground(2 * t);
        for (unsigned i = 0; i < 2 * t; ++i) ground[i] = i;
        CHECK(enumerate_tableaux(ground).size() == testutil::catalan_oracle(t));
    }
    CHECK(enumerate_tableaux({0, 2, 5, 9}).size() == 2);  // only relative order matters
    CHECK(enumerate_tableaux({3, 7, 11, 20, 21, 40}).size() == 5);
}

TEST_CASE("column condition is enforced") {
    for (const auto& tab : enumerate_tableaux({0, 1, 2, 3, 4, 5}))
        for (std::size_t k = 0; k < tab.top.size(); ++k) CHECK(tab.top[k] < tab.bottom[k]);
}

TEST_CASE("antispecial construction examples") {
    TwoRowTableau t1{{0}, {1}};
    CHECK(build_antispecial(t1, 1, TwoRowTableau{}, 1).str() == "(1,0,2)");

    TwoRowTableau t2{{1}, {2}};
    CHECK(build_antispecial(TwoRowTableau{}, 0, t2, 1).str() == "(0,2,1)");

    CHECK(build_antispecial(TwoRowTableau{}, 0, TwoRowTableau{}, 0).str() == "(0)");

    CHECK(thrown_code([&] { build_antispecial(t2, 1, TwoRowTableau{}, 1); }) ==
          "GroundMismatch");
    CHECK(thrown_code([&] { build_antispecial(t1, 1, t1, 2); }) == "GroundMismatch");
}

TEST_CASE("constructed symbols have the forced descent set") {
    for (unsigned p = 0; p <= 5; ++p)
        for (unsigned t = 0; t <= p; ++t) {
            std::vector<std::uint32_t> g1(2 * t), g2;
            for (unsigned i = 0; i < 2 * t; ++i) g1[i] = i;
            for (unsigned v = 2 * t + 1; v <= 2 * p; ++v) g2.push_back(v);
            std::vector<unsigned> expected;
            for (unsigned j = 1; j < 2 * t; j += 2) expected.push_back(j);
            for (unsigned j = 2 * t + 2; j <= 2 * p; j += 2) expected.push_back(j);
            for (const auto& a : enumerate_tableaux(g1))
                for (const auto& b : enumerate_tableaux(g2)) {
                    const auto sym = build_antispecial(a, t, b, p);
                    const auto d = descent_data(sym);
                    CHECK(d.descents == expected);
                    CHECK(d.descents.size() == p);
                }
        }
}

TEST_CASE("tableau route equals the descent route") {
    CHECK(antispecial_via_tableaux(1).size() == 2);
    {
        std::set<std::string> got;
        for (const auto& s : antispecial_via_tableaux(1)) got.insert(s.str());
        CHECK(got == std::set<std::string>{"(1,0,2)", "(0,2,1)"});
    }
    for (unsigned p = 0; p <= 5; ++p) {
        const auto via_tabs = antispecial_via_tableaux(p);
        CHECK(via_tabs.size() == testutil::catalan_oracle(p + 1));
        std::set<std::string> lhs, rhs;
        for (const auto& s : via_tabs) lhs.insert(s.str());
        for (const auto& s : permutation_family(p))
            if (descent_data(s).descents.size() == p) rhs.insert(s.str());
        CHECK(lhs == rhs);
    }
    CHECK(thrown_code([] { antispecial_via_tableaux(50); }) == "ResourceLimit");
}

TEST_CASE("Segner identity") {
    CHECK(segner_identity_holds(0));
    CHECK(segner_identity_holds(3));
    for (unsigned p = 0; p <= 10; ++p) CHECK(segner_identity_holds(p));
}
