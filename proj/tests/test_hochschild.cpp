#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minop/verify.hpp"

using namespace minop;

TEST_CASE("hat and unhat are inverse table transforms") {
    auto alg = algebra_kx3(4);
    std::mt19937_64 rng(7);
    for (int tot = 0; tot <= 2; ++tot) {
        Cochain c = random_cochain(alg.space, tot, 3, rng);
        Cochain back = unhat_tables(alg.space, hat_tables(alg.space, c));
        CHECK(back.tables == c.tables);
        Cochain back2 = hat_tables(alg.space, unhat_tables(alg.space, c));
        CHECK(back2.tables == c.tables);
    }
}

TEST_CASE("maurer-cartan holds for the associative test algebras") {
    for (const TestAlgebra& alg : {algebra_kx3(5), algebra_kx2(5), algebra_m3(5)}) {
        auto v = is_maurer_cartan(alg.space, alg.mc);
        CHECK(v.holds);
        CHECK(v.verified_up_to == 5);
    }
}

TEST_CASE("maurer-cartan rejects the broken product") {
    auto broken = algebra_non_mc(5);
    CHECK_FALSE(is_maurer_cartan(broken.space, broken.mc).holds);
}

TEST_CASE("maurer-cartan requires total degree 2") {
    auto alg = algebra_kx3(4);
    Cochain wrong = alg.mc;
    wrong.total_degree = 1;
    CHECK_THROWS(is_maurer_cartan(alg.space, wrong));
}

TEST_CASE("bracket is graded antisymmetric") {
    auto alg = algebra_kx2(4);
    std::mt19937_64 rng(11);
    for (int s = 0; s < 10; ++s) {
        Cochain a = random_cochain(alg.space, s % 3, 4, rng);
        Cochain b = random_cochain(alg.space, (s + 1) % 3, 4, rng);
        Cochain ab = bracket(alg.space, a, b);
        Cochain ba = bracket(alg.space, b, a);
        int sg = (a.shifted_degree() * b.shifted_degree()) % 2 == 0 ? -1 : 1;
        Cochain sum = cochain_add(ab, ba, -sg);
        CHECK(cochain_is_zero(sum, std::min(ab.exact_up_to, ba.exact_up_to)));
    }
}

TEST_CASE("graded jacobi identity on sampled triples") {
    auto alg = algebra_kx2(4);
    std::mt19937_64 rng(13);
    for (int s = 0; s < 10; ++s) {
        Cochain a = random_cochain(alg.space, s % 3, 4, rng);
        Cochain b = random_cochain(alg.space, (s + 1) % 3, 4, rng);
        Cochain c = random_cochain(alg.space, (s + 2) % 3, 4, rng);
        Cochain lhs = bracket(alg.space, a, bracket(alg.space, b, c));
        Cochain r1 = bracket(alg.space, bracket(alg.space, a, b), c);
        Cochain r2 = bracket(alg.space, b, bracket(alg.space, a, c));
        int sg = (a.shifted_degree() * b.shifted_degree()) % 2 == 0 ? 1 : -1;
        Cochain diff = cochain_add(lhs, cochain_add(r1, r2, sg), -1);
        CHECK(cochain_is_zero(diff, std::min({lhs.exact_up_to, r1.exact_up_to,
                                              r2.exact_up_to})));
    }
}

TEST_CASE("hochschild differential squares to zero when MC holds") {
    auto alg = algebra_m3(4);
    std::mt19937_64 rng(17);
    for (int s = 0; s < 10; ++s) {
        Cochain a = random_cochain(alg.space, s % 3, 4, rng);
        Cochain d1 = hochschild_differential(alg.space, alg.mc, a);
        Cochain d2 = hochschild_differential(alg.space, alg.mc, d1);
        CHECK(cochain_is_zero(d2, d2.exact_up_to));
    }
}

TEST_CASE("circle truncation bound") {
    auto alg = algebra_kx3(4);
    std::mt19937_64 rng(19);
    // Both factors exact to the cap; min arity of the product is 2, so the
    // circle product is exact up to min(cap, 4 + 2 - 1) = cap.
    Cochain c = random_cochain(alg.space, 1, 4, rng);
    Cochain p = circle(alg.space, c, alg.mc);
    CHECK(p.exact_up_to == 4);
    CHECK(p.total_degree == c.total_degree + 1);
}

TEST_CASE("homogeneity check") {
    auto alg = algebra_kx3(4);
    CHECK(cochain_is_homogeneous(alg.space, alg.mc));
    Cochain mixed = alg.mc;
    cochain_set(mixed, {1, 1}, 0, 1);  // degree-breaking entry
    CHECK_FALSE(cochain_is_homogeneous(alg.space, mixed));
}
