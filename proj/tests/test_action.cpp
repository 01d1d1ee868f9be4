#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/verify.hpp"

using namespace minop;

TEST_CASE("unit tree acts as the identity") {
    for (const TestAlgebra& alg : {algebra_kx3(4), algebra_m3(4)}) {
        auto gs = detail::standard_gammas(alg.space, 1, 4);
        REQUIRE(!gs.empty());
        Cochain u = act(alg.space, unit_tree(), {gs[0]}, alg.mc);
        CHECK(cochain_equal_up_to(u, gs[0], 4));
    }
}

TEST_CASE("the binary product vertex acts as the cup product") {
    auto alg = algebra_kx3(4);
    // gamma1 = the unit constant, gamma2 = identity-like arity-1 map: their
    // cup product under the plain product is again computable by hand.
    Cochain g1 = make_cochain(0, 4);
    cochain_set(g1, {}, 0, 1);  // the unit of the algebra, arity 0
    Cochain g2 = make_cochain(1, 4);
    cochain_set(g2, {0}, 0, 1);
    Cochain cup = act(alg.space, decode("*(1,2)"), {g1, g2}, alg.mc);
    CHECK(cup.total_degree == 1);
    // cup(e0) = m(g1, g2(e0)) = m(e0, e0) = e0 up to sign.
    bool found = false;
    for (const auto& [k, table] : cup.tables)
        for (const auto& [key, v] : table)
            if (key.first == std::vector<int>{0} && key.second == 0 && v != 0) found = true;
    CHECK(found);
}

TEST_CASE("action degree bookkeeping") {
    auto alg = algebra_kx3(4);
    auto gs = detail::standard_gammas(alg.space, 2, 4);
    REQUIRE(gs.size() == 2);
    PlanarTree t = decode("*(1,2)");
    Cochain r = act(alg.space, t, gs, alg.mc);
    // total(act(T, g1, g2)) = deg T + total(g1) + total(g2).
    CHECK(r.total_degree == degree(t) + gs[0].total_degree + gs[1].total_degree);
    CHECK(r.exact_up_to == 4 - max_valency(t));
}

TEST_CASE("action axiom across enumerated small cases") {
    for (const TestAlgebra& alg : {algebra_kx3(4), algebra_m3(4)}) {
        for (int n1 = 1; n1 <= 2; ++n1)
            for (int n2 = 1; n2 <= 3 - n1; ++n2)
                for (const auto& t1 : enumerate_admissible(n1))
                    for (const auto& t2 : enumerate_admissible(n2))
                        for (int v = 1; v <= n1; ++v) {
                            auto gs = detail::standard_gammas(alg.space, n1 + n2 - 1, 4);
                            if (gs.empty()) continue;
                            CHECK(check_action_axiom_case(alg.space, t1, v, t2, gs,
                                                          alg.mc, 2));
                        }
    }
}

TEST_CASE("dg compatibility through arity 2") {
    for (const TestAlgebra& alg : {algebra_kx3(4), algebra_m3(4)}) {
        for (int n = 1; n <= 2; ++n)
            for (const auto& t : enumerate_admissible(n)) {
                auto gs = detail::standard_gammas(alg.space, n, 4);
                REQUIRE(!gs.empty());
                CHECK(check_dg_compatibility(alg.space, t, gs, alg.mc, 2));
            }
    }
}

TEST_CASE("act validates its inputs") {
    auto alg = algebra_kx3(4);
    auto gs = detail::standard_gammas(alg.space, 2, 4);
    // Wrong number of cochains for the label count.
    CHECK_THROWS(act(alg.space, decode("*(1,2)"), {gs[0]}, alg.mc));
    // Cap mismatch between the cochains and the structure map.
    auto gs3 = detail::standard_gammas(alg.space, 2, 3);
    CHECK_THROWS(act(alg.space, decode("*(1,2)"), gs3, alg.mc));
}
