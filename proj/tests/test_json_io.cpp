#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/json_io.hpp"
#include "minop/verify.hpp"

using namespace minop;

TEST_CASE("tree json round-trip") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n))
            CHECK(tree_from_json(tree_to_json(t)) == t);
}

TEST_CASE("tree json uses null for non-labeled vertices") {
    json j = tree_to_json(decode("*(1,2)"));
    CHECK(j.at("label").is_null());
    CHECK(j.at("children").size() == 2);
    CHECK(j.at("children")[0].at("label") == 1);
}

TEST_CASE("malformed tree json is rejected") {
    CHECK_THROWS(tree_from_json(json::array()));
    CHECK_THROWS(tree_from_json(json{{"children", json::array()}}));
}

TEST_CASE("chain element json carries rational coefficients") {
    MChainElement d = differential(decode("1(2)"));
    json j = chain_to_json(d);
    REQUIRE(j.size() == 2);
    CHECK(chain_from_json(j) == d);
    // Coefficients serialize as strings.
    CHECK(j[0].at("coeff").is_string());
}

TEST_CASE("rational string round-trip") {
    for (const char* s : {"1", "-1", "2/3", "-7/4", "0"})
        CHECK(rational_to_string(rational_from_string(s)) == s);
}

TEST_CASE("graded space json round-trip") {
    GradedSpace s = make_space({0, -1, -2});
    GradedSpace back = space_from_json(space_to_json(s));
    CHECK(back.names == s.names);
    CHECK(back.degrees == s.degrees);
}

TEST_CASE("cochain json round-trip") {
    auto alg = algebra_kx3(4);
    json j = cochain_to_json(alg.mc, alg.space);
    Cochain back = cochain_from_json(j, alg.space);
    CHECK(back.total_degree == alg.mc.total_degree);
    CHECK(back.cap == alg.mc.cap);
    CHECK(back.tables == alg.mc.tables);
}

TEST_CASE("cochain json rejects unknown basis names and arity mismatch") {
    auto alg = algebra_kx3(4);
    json j = cochain_to_json(alg.mc, alg.space);
    json bad = j;
    bad["entries"][0]["output"] = "nope";
    CHECK_THROWS(cochain_from_json(bad, alg.space));
    bad = j;
    bad["entries"][0]["arity"] = 7;
    CHECK_THROWS(cochain_from_json(bad, alg.space));
}

TEST_CASE("meta-tree json round-trip") {
    for (auto [r, n] : {std::pair{BaseOperad::As, 3}, {BaseOperad::M, 3}})
        for (const auto& mt : basis_P(r, n)) {
            MetaTree back = meta_tree_from_json(meta_tree_to_json(mt));
            CHECK(back == mt);
        }
}

TEST_CASE("meta-tree json carries marks and inscriptions") {
    for (const auto& mt : basis_P(BaseOperad::M, 2)) {
        json j = meta_tree_to_json(mt);
        CHECK(j.at("base_operad") == "M");
        CHECK(j.contains("inscription"));
    }
}
