#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/orders.hpp"

using namespace minop;

TEST_CASE("tail orders on all generators through arity 3") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& g : generators(BaseOperad::M, n)) {
            OrderPair p = tail_orders(g);
            CHECK(is_complementary(p));
            CHECK(is_strict_partial_order(p.h));
            CHECK(is_strict_partial_order(p.v));
        }
}

TEST_CASE("combined orders are total and recover the pair") {
    for (const auto& g : generators(BaseOperad::M, 3)) {
        OrderPair p = tail_orders(g);
        CombinedOrders c = combined_orders(p);
        CHECK(c.plus.size() == 3);
        CHECK(c.minus.size() == 3);
        OrderPair q = reconstruct(c);
        CHECK(q.h == p.h);
        CHECK(q.v == p.v);
    }
}

TEST_CASE("the minimal element is the minimum of the plus order") {
    for (const auto& g : generators(BaseOperad::M, 3)) {
        OrderPair p = tail_orders(g);
        CHECK(minimal_element(p) == combined_orders(p).plus[0]);
    }
}

TEST_CASE("a two-tail generator sorts out to one of the base relations") {
    for (const auto& g : generators(BaseOperad::M, 2)) {
        OrderPair p = tail_orders(g);
        // Exactly one of the four relations 1<2, 2<1, horizontally or
        // vertically, for the single pair.
        int cnt = (p.lt_h(1, 2) ? 1 : 0) + (p.lt_h(2, 1) ? 1 : 0) +
                  (p.lt_v(1, 2) ? 1 : 0) + (p.lt_v(2, 1) ? 1 : 0);
        CHECK(cnt == 1);
    }
}

TEST_CASE("tail orders rejects non-generators") {
    // Any basis element with an infinite edge is not a generator.
    for (const auto& mt : basis_P(BaseOperad::M, 3)) {
        bool all_finite = true;
        for (const auto& [e, m] : mt.marks) all_finite = all_finite && m == Mark::finite;
        if (!all_finite) {
            CHECK_THROWS(tail_orders(mt));
            break;
        }
    }
}

TEST_CASE("meta-tree poset at arity 2") {
    MetaTreePoset p = meta_tree_poset(2, -10, 10);
    CHECK(p.elements.size() == 4);
    CHECK(p.covers.size() == 4);
    CHECK(p.closure.size() == 4);
    CHECK(p.count_by_degree == std::map<int, int>{{-1, 2}, {0, 2}});
    // Degree is monotone along the closure.
    for (const auto& [a, b] : p.closure)
        CHECK(degree(p.elements[a]) < degree(p.elements[b]));
}

TEST_CASE("degree window restricts the poset") {
    MetaTreePoset p = meta_tree_poset(2, 0, 0);
    CHECK(p.elements.size() == 2);
    CHECK(p.covers.empty());
}
