#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minop/resolution.hpp"

using namespace minop;

namespace {

void d_add(PChainElement& a, const PChainElement& b, const Rational& s) {
    for (const auto& [t, c] : b) {
        a[t] += s * c;
        if (a[t] == 0) a.erase(t);
    }
}

}  // namespace

TEST_CASE("basis sizes of the free resolutions") {
    CHECK(basis_P(BaseOperad::As, 2).size() == 2);
    CHECK(basis_P(BaseOperad::M, 2).size() == 4);
    CHECK(basis_P(BaseOperad::As, 3).size() == 30);
    CHECK(basis_P(BaseOperad::M, 3).size() == 144);
    CHECK(basis_P(BaseOperad::As, 4).size() == 744);
}

TEST_CASE("generator counts: all edges finite") {
    CHECK(generators(BaseOperad::M, 2).size() == 4);
    CHECK(generators(BaseOperad::M, 3).size() == 96);
    CHECK(generators(BaseOperad::M, 4).size() == 3840);
}

TEST_CASE("d_P raises degree by one and squares to zero") {
    for (auto [r, n] : {std::pair{BaseOperad::As, 2}, {BaseOperad::As, 3},
                        {BaseOperad::M, 2}, {BaseOperad::M, 3}}) {
        for (const auto& mt : basis_P(r, n)) {
            PChainElement dd;
            for (const auto& [u, c] : d_P(mt)) {
                CHECK(degree(u) == degree(mt) + 1);
                d_add(dd, d_P(u), c);
            }
            CHECK(dd.empty());
        }
    }
}

TEST_CASE("the two-vertex As meta-tree differential is the associativity relation") {
    // The single-finite-edge meta-tree with tails {1,2} below {.,3} maps to
    // the difference of the two infinite-edge meta-trees (the generator of
    // the relation) plus the composed one-vertex term.
    for (const auto& mt : basis_P(BaseOperad::As, 3)) {
        int nf = 0, edges = 0;
        for (const auto& [e, m] : mt.marks) {
            ++edges;
            if (m == Mark::finite) ++nf;
        }
        if (edges != 1 || nf != 1) continue;
        PChainElement d = d_P(mt);
        // Exactly two summands: the mark flip and the edge contraction.
        CHECK(d.size() == 2);
        bool has_contracted = false, has_infinite = false;
        for (const auto& [u, c] : d) {
            int ue = 0;
            for (const auto& [e, m] : u.marks) ++ue;
            if (ue == 0) {
                has_contracted = true;
                CHECK((c == 1 || c == -1));
            } else {
                has_infinite = true;
                CHECK(u.marks.begin()->second == Mark::infinite);
            }
        }
        CHECK(has_contracted);
        CHECK(has_infinite);
    }
}

TEST_CASE("phi vanishes on meta-trees with finite edges and inverts psi") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n)) {
            MChainElement back = phi(psi(BaseOperad::M, t));
            REQUIRE(back.size() == 1);
            CHECK(back.begin()->first == t);
            CHECK(back.begin()->second == 1);
        }
    for (const auto& g : generators(BaseOperad::M, 3)) {
        bool has_finite = false;
        for (const auto& [e, m] : g.marks) has_finite = has_finite || m == Mark::finite;
        if (has_finite) CHECK(phi(PChainElement{{g, 1}}).empty());
    }
}

TEST_CASE("phi is a chain map on small arities") {
    for (auto [r, n] : {std::pair{BaseOperad::As, 3}, {BaseOperad::M, 3}}) {
        for (const auto& mt : basis_P(r, n)) {
            if (r != BaseOperad::M) continue;  // phi lands in M chains
            MChainElement lhs = phi(d_P(mt));
            MChainElement rhs;
            for (const auto& [t, c] : phi(PChainElement{{mt, 1}}))
                for (const auto& [u, c2] : differential(t)) {
                    rhs[u] += c * c2;
                    if (rhs[u] == 0) rhs.erase(u);
                }
            for (const auto& [t, c] : rhs) {
                lhs[t] -= c;
                if (lhs[t] == 0) lhs.erase(t);
            }
            CHECK(lhs.empty());
        }
    }
}

TEST_CASE("planar tail order of As meta-trees") {
    // Every permutation of 1..3 appears as a planar tail order, and the
    // all-infinite one-vertex meta-trees realize them bijectively.
    std::set<std::vector<int>> orders;
    for (const auto& mt : basis_P(BaseOperad::As, 3)) orders.insert(planar_tail_order(mt));
    CHECK(orders.size() == 6);
}

TEST_CASE("filtration: d_P constituents of a generator are strictly lighter") {
    for (auto [r, n] : {std::pair{BaseOperad::As, 3}, {BaseOperad::M, 3}}) {
        for (const auto& g : generators(r, n)) {
            FiltrationWeight w = weight_of(g);
            for (const auto& [u, c] : d_P(g))
                for (const FiltrationWeight& cw : constituent_weights(u))
                    CHECK(cw < w);
        }
    }
}

TEST_CASE("meta-tree encode is injective on small bases") {
    for (auto [r, n] : {std::pair{BaseOperad::As, 3}, {BaseOperad::M, 3}}) {
        std::set<std::string> seen;
        for (const auto& mt : basis_P(r, n)) seen.insert(encode(mt));
        CHECK(seen.size() == basis_P(r, n).size());
    }
}
