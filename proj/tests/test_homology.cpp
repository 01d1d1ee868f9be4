#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/homology.hpp"

using namespace minop;

TEST_CASE("bareiss rank on small integer matrices") {
    using detail::bareiss_rank;
    CHECK(bareiss_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(bareiss_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(bareiss_rank({{2, 4, 6}, {1, 2, 3}, {0, 1, 1}}) == 2);
    // A case where naive integer elimination would overflow fixed width.
    std::vector<std::vector<Integer>> big(6, std::vector<Integer>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) big[i][j] = Integer(1) << (i + j);
    CHECK(bareiss_rank(big) == 1);
}

TEST_CASE("sparse rational rank clears denominators") {
    std::map<std::pair<int, int>, Rational> m;
    m[{0, 0}] = Rational(1, 2);
    m[{0, 1}] = Rational(1, 3);
    m[{1, 0}] = Rational(3, 2);
    m[{1, 1}] = Rational(1, 1);
    CHECK(detail::matrix_rank(m, 2, 2) == 1);
    m[{1, 1}] = Rational(2, 1);
    CHECK(detail::matrix_rank(m, 2, 2) == 2);
}

TEST_CASE("the M2 complex has the frozen betti numbers") {
    ChainComplexData cx = complex_M(2);
    verify_complex(cx);
    CHECK(betti(cx) == std::map<int, long>{{-1, 1}, {0, 1}});
    CHECK(euler_characteristic(cx) == 0);
}

TEST_CASE("the M3 complex has the frozen betti numbers") {
    ChainComplexData cx = complex_M(3);
    verify_complex(cx);
    CHECK(betti(cx) == std::map<int, long>{{-2, 2}, {-1, 3}, {0, 1}});
    CHECK(euler_characteristic(cx) == 0);
}

TEST_CASE("resolution complexes over As are acyclic resolutions") {
    ChainComplexData cx = complex_P(BaseOperad::As, 3);
    verify_complex(cx);
    std::map<int, long> b = betti(cx);
    for (const auto& [q, v] : b)
        if (q != 0) CHECK(v == 0);
    CHECK(b.at(0) == 6);
}

TEST_CASE("resolution complex over M matches the M homology") {
    ChainComplexData cx = complex_P(BaseOperad::M, 2);
    verify_complex(cx);
    CHECK(betti(cx) == std::map<int, long>{{-1, 1}, {0, 1}});
}

TEST_CASE("verify_complex flags a broken differential") {
    ChainComplexData cx;
    cx.basis[0] = {"a"};
    cx.basis[1] = {"b"};
    cx.basis[2] = {"c"};
    cx.diff[0][{0, 0}] = 1;  // d(a) = b
    cx.diff[1][{0, 0}] = 1;  // d(b) = c: now d(d(a)) = c != 0
    CHECK_THROWS(verify_complex(cx));
    cx.diff.erase(1);
    CHECK_NOTHROW(verify_complex(cx));
    CHECK(betti(cx) == std::map<int, long>{{0, 0}, {1, 0}, {2, 1}});
}

TEST_CASE("k4 cell counts match the associahedron") {
    CellCounts k4 = k4_cell_counts();
    CHECK(k4.by_finite_edges == std::vector<long>{11, 15, 5});
}
