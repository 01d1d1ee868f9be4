#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/minimal_operad.hpp"

using namespace minop;

namespace {

MChainElement elem(const std::string& s) { return {{decode(s), Rational(1)}}; }

void add_scaled_to(MChainElement& a, const MChainElement& b, const Rational& s) {
    for (const auto& [t, c] : b) {
        a[t] += s * c;
        if (a[t] == 0) a.erase(t);
    }
}

MChainElement chain_compose(const MChainElement& x, int v, const MChainElement& y) {
    MChainElement out;
    for (const auto& [t1, c1] : x)
        for (const auto& [t2, c2] : y) add_scaled_to(out, compose(t1, v, t2), c1 * c2);
    return out;
}

}  // namespace

TEST_CASE("differential of the nested two-label tree") {
    // d(1(2)) = -*(1,2) + *(2,1): the frozen sign convention everything else
    // is pinned against.
    MChainElement d = differential(decode("1(2)"));
    REQUIRE(d.size() == 2);
    CHECK(d.at(decode("*(1,2)")) == -1);
    CHECK(d.at(decode("*(2,1)")) == 1);
}

TEST_CASE("differential raises degree by one") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n))
            for (const auto& [u, c] : differential(t)) {
                CHECK(degree(u) == degree(t) + 1);
                CHECK(c != 0);
            }
}

TEST_CASE("d squared vanishes through arity 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n)) {
            MChainElement dd;
            for (const auto& [u, c] : differential(t)) add_scaled_to(dd, differential(u), c);
            CHECK(dd.empty());
        }
}

TEST_CASE("composition summand count is the multiset coefficient") {
    // Inserting T2 into a vertex with k children spreads them over the
    // angles of T2: C(#angles + k - 1, k) summands.
    PlanarTree t1 = decode("1(2)");        // vertex 1 has one child
    PlanarTree t2 = decode("*(3,4)");      // five angles (3 at the root, 1 per leaf)
    CHECK(angle_count(t2) == 5);
    CHECK(compose_summand_count(angle_count(t2), 1) == 5);
    CHECK(compose(t1, 1, t2).size() == 5);

    PlanarTree t3 = decode("3(4)");        // three angles
    CHECK(angle_count(t3) == 3);
    CHECK(compose_summand_count(angle_count(t3), 1) == 3);
    CHECK(compose(t1, 1, t3).size() == 3);

    // The multiset coefficient with two spread children.
    CHECK(compose_summand_count(3, 2) == 6);

    // Inserting at a childless vertex is a single graft.
    CHECK(compose_summand_count(angle_count(t2), 0) == 1);
    CHECK(compose(t1, 2, t2).size() == 1);
}

TEST_CASE("composition keeps total degree") {
    PlanarTree t1 = decode("1(2)");
    PlanarTree t2 = decode("3(4)");
    for (const auto& [t, c] : compose(t1, 1, t2))
        CHECK(degree(t) == degree(t1) + degree(t2));
}

TEST_CASE("composition rejects label collisions") {
    CHECK_THROWS(compose(decode("1(2)"), 1, decode("2(3)")));
}

TEST_CASE("unit tree is a two-sided unit") {
    PlanarTree t = decode("*(1,2)");
    {
        MChainElement got = compose(unit_tree(), 1, t);
        REQUIRE(got.size() == 1);
        CHECK(got.begin()->first == t);
        CHECK(got.begin()->second == 1);
    }
    {
        std::map<int, int> rl{{1, 3}};
        MChainElement got = compose(t, 1, relabel(unit_tree(), rl));
        REQUIRE(got.size() == 1);
        CHECK(got.begin()->first == relabel(t, std::map<int, int>{{1, 3}, {2, 2}}));
        CHECK(got.begin()->second == 1);
    }
}

TEST_CASE("leibniz rule on a nested pair") {
    PlanarTree t1 = decode("1(2)");
    PlanarTree t2 = decode("3(4)");
    for (int v : {1, 2}) {
        MChainElement lhs;
        for (const auto& [t, c] : chain_compose(elem("1(2)"), v, elem("3(4)")))
            add_scaled_to(lhs, differential(t), c);
        MChainElement rhs = chain_compose(differential(t1), v, elem("3(4)"));
        // deg(1(2)) = -1, so the second term carries a minus sign.
        add_scaled_to(rhs, chain_compose(elem("1(2)"), v, differential(t2)), -1);
        add_scaled_to(lhs, rhs, -1);
        CHECK(lhs.empty());
    }
}
