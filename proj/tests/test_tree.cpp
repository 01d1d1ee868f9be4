#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "minop/tree.hpp"

using namespace minop;

TEST_CASE("admissible tree counts") {
    CHECK(enumerate_admissible(1).size() == 1);
    CHECK(enumerate_admissible(2).size() == 4);
    CHECK(enumerate_admissible(3).size() == 48);
    CHECK(enumerate_admissible(4).size() == 960);
}

TEST_CASE("degree distribution") {
    std::map<int, int> d3, d4;
    for (const auto& t : enumerate_admissible(3)) d3[degree(t)]++;
    CHECK(d3 == std::map<int, int>{{-2, 12}, {-1, 24}, {0, 12}});
    for (const auto& t : enumerate_admissible(4)) d4[degree(t)]++;
    CHECK(d4 == std::map<int, int>{{-3, 120}, {-2, 360}, {-1, 360}, {0, 120}});
}

TEST_CASE("encode/decode round-trip is canonical") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_admissible(n)) {
            CHECK(decode(encode(t)) == t);
        }
    CHECK(encode(decode("*(1,2)")) == "*(1,2)");
    CHECK(encode(decode("1(2)")) == "1(2)");
}

TEST_CASE("degrees of basic shapes") {
    CHECK(degree(decode("1")) == 0);          // unit corolla
    CHECK(degree(decode("*(1,2)")) == 0);     // binary product vertex
    CHECK(degree(decode("1(2)")) == -1);      // labeled vertex with one child
    CHECK(degree(decode("*(1,2,3)")) == -1);  // ternary product vertex
}

TEST_CASE("relabel demands a bijection on the label set") {
    PlanarTree t = decode("*(1,2)");
    std::map<int, int> good{{1, 2}, {2, 1}};
    CHECK(encode(relabel(t, good)) == "*(2,1)");
    std::map<int, int> collapse{{1, 5}, {2, 5}};
    CHECK_THROWS(relabel(t, collapse));
    std::map<int, int> partial{{1, 3}};
    CHECK_THROWS(relabel(t, partial));
}

TEST_CASE("relabel is a group action") {
    std::map<int, int> s{{1, 2}, {2, 3}, {3, 1}}, r{{1, 3}, {2, 1}, {3, 2}};
    for (const auto& t : enumerate_admissible(3)) {
        std::map<int, int> sr;
        for (const auto& [a, b] : r) sr[a] = s.at(b);
        CHECK(relabel(relabel(t, r), s) == relabel(t, sr));
    }
}

TEST_CASE("admissibility violations are rejected") {
    // Non-labeled vertex with fewer than two children.
    PlanarTree bad1{0, {PlanarTree{1, {}}}};
    CHECK_FALSE(is_admissible(bad1));
    // Tails never appear in basis trees.
    PlanarTree bad2{0, {PlanarTree{1, {}}, PlanarTree{-1, {}}}};
    CHECK_FALSE(is_admissible(bad2));
    CHECK(is_admissible(decode("*(1,2)")));
    CHECK(is_admissible(decode("1(2)")));
}

TEST_CASE("abstract tree validation reports violations") {
    // Vertex 0 is the root of the root edge; its unique child 1 is the
    // topmost branching vertex, with tails 2 and 3 above it.
    AbstractTree ok;
    ok.n_vertices = 4;
    ok.root = 0;
    ok.parent = {0, 0, 1, 1};
    ok.is_tail_v = {false, false, true, true};
    CHECK(validate(ok).ok);

    AbstractTree two_root_children = ok;
    two_root_children.parent = {0, 0, 0, 1};  // root edge no longer unique
    CHECK_FALSE(validate(two_root_children).ok);
    CHECK_FALSE(validate(two_root_children).violation.empty());

    AbstractTree cyc = ok;
    cyc.parent = {0, 3, 1, 2};  // 1 -> 3 -> 2 -> 1 never reaches the root
    CHECK_FALSE(validate(cyc).ok);

    AbstractTree tail_root = ok;
    tail_root.is_tail_v = {true, false, true, true};
    CHECK_FALSE(validate(tail_root).ok);

    AbstractTree tail_parent = ok;
    tail_parent.parent = {0, 0, 1, 2};  // vertex 3 sits above the tail 2
    CHECK_FALSE(validate(tail_parent).ok);
}

TEST_CASE("angles walk the planar boundary") {
    // Each internal vertex contributes |v| + 1 angles.
    CHECK(angle_count(decode("*(1,2)")) == 5);
    CHECK(angle_count(decode("1")) == 1);
    CHECK(angle_count(decode("1(2)")) == 3);
    CHECK(angles(decode("*(1,2)")).size() == 5);
}
