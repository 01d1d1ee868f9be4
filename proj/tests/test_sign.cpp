#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/sign.hpp"

using namespace minop;

TEST_CASE("permutation parity") {
    CHECK(permutation_parity({0, 1, 2}) == 1);
    CHECK(permutation_parity({1, 0, 2}) == -1);
    CHECK(permutation_parity({2, 0, 1}) == 1);
    CHECK(permutation_parity({}) == 1);
}

TEST_CASE("koszul sign only sees odd factors") {
    OrientationWord w{{"a", 1}, {"b", 2}, {"c", 1}};  // odd, even, odd
    // Swapping the two odd factors across the even one: one odd transposition.
    CHECK(koszul_sign(w, {2, 1, 0}) == -1);
    // Moving only the even factor is free.
    CHECK(koszul_sign(w, {1, 0, 2}) == 1);
}

TEST_CASE("koszul sign is multiplicative") {
    OrientationWord w{{"a", 1}, {"b", 1}, {"c", -1}, {"d", 2}};
    std::vector<std::vector<int>> perms{
        {1, 0, 2, 3}, {0, 2, 1, 3}, {3, 1, 2, 0}, {2, 3, 0, 1}};
    for (const auto& p : perms)
        for (const auto& q : perms) {
            // Reorder by q, then reorder the result by p: the composite
            // permutation sends slot i to source q[p[i]].
            std::vector<int> qp(4);
            for (int i = 0; i < 4; ++i) qp[i] = q[p[i]];
            OrientationWord wq(4);
            for (int i = 0; i < 4; ++i) wq[i] = w[q[i]];
            CHECK(koszul_sign(w, qp) == koszul_sign(w, q) * koszul_sign(wq, p));
        }
}

TEST_CASE("total degree sums factor degrees") {
    OrientationWord w{{"a", 1}, {"b", -2}, {"c", 1}};
    CHECK(total_degree(w) == 0);
    CHECK(total_degree({}) == 0);
}

TEST_CASE("odd word reorder sign") {
    CHECK(odd_word_reorder_sign({10, 11}, {10, 11}) == 1);
    CHECK(odd_word_reorder_sign({10, 11}, {11, 10}) == -1);
    CHECK(odd_word_reorder_sign({1, 2, 3}, {3, 1, 2}) == 1);
    CHECK_THROWS(odd_word_reorder_sign({1, 2}, {1, 3}));
}

TEST_CASE("pairing contracts dual factors with the crossing sign") {
    OrientationWord w{{"a", 1}, {"b", 1}, {"a*", -1}};
    auto far = pair(w, 0, 2);
    CHECK(far.sign == -1);  // the dual crosses the odd factor b
    CHECK(far.contracted.size() == 1);
    CHECK(far.contracted[0].id == "b");

    OrientationWord w2{{"a", 1}, {"a*", -1}};
    CHECK(pair(w2, 0, 1).sign == 1);
    CHECK(pair(w2, 0, 1).contracted.empty());

    // Non-dual degrees are rejected.
    OrientationWord w3{{"a", 1}, {"b", 1}};
    CHECK_THROWS(pair(w3, 0, 1));
}
