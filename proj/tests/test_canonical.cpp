#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "support/builders.hpp"
#include "support/enumerate.hpp"
#include "tap/canonical.hpp"

using namespace tap;

TEST_CASE("code of a bare root") {
    CHECK(canonical_code(singleton_tree(star_orient(0))) == "s0()");
    CHECK(canonical_code(singleton_tree(star_inf_cross())) == "sinfc()");
    CHECK(canonical_code(singleton_tree(star_cross(3))) == "sc3()");
}

TEST_CASE("children sort by code regardless of insertion order") {
    DecoratedTree t1 = singleton_tree(star_orient(0));
    t1.add_child(0, sym_o());
    t1.add_child(0, sym_theta());
    DecoratedTree t2 = singleton_tree(star_orient(0));
    t2.add_child(0, sym_theta());
    t2.add_child(0, sym_o());
    CHECK(canonical_code(t1) == "s0(o()t())");
    CHECK(canonical_code(t2) == "s0(o()t())");
}

TEST_CASE("chain of h-variants") {
    DecoratedTree t = singleton_tree(star_inf());
    std::uint32_t a = t.add_child(0, sym_oh());
    t.add_child(a, sym_theta_h());
    CHECK(canonical_code(t) == "sinf(oh(th()))");
}

TEST_CASE("isomorphism: reflexive, shuffle-invariant, counts O sons") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 50; ++round) {
        DecoratedTree t = testing::random_admissible_tree(rng, 10);
        CHECK(isomorphic(t, t));
        DecoratedTree shuffled = testing::shuffle_tree(t, rng);
        CHECK(isomorphic(t, shuffled));
        CHECK(canonical_code(t) == canonical_code(shuffled));
    }

    DecoratedTree one = singleton_tree(star_orient(0));
    one.add_child(0, sym_o());
    DecoratedTree two = singleton_tree(star_orient(0));
    two.add_child(0, sym_o());
    two.add_child(0, sym_o());
    CHECK_FALSE(isomorphic(one, two));
}

TEST_CASE("code length is linear in the vertex count") {
    // Every vertex contributes its token plus one pair of parentheses.
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        DecoratedTree t = testing::random_admissible_tree(rng, 12);
        std::size_t expected = 0;
        for (const auto& node : t.nodes) {
            expected += symbol_token(node.type).size() + 2;
        }
        CHECK(canonical_code(t).size() == expected);
    }
}

TEST_CASE("equal codes mean equal type multisets") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        DecoratedTree a = testing::random_admissible_tree(rng, 9);
        DecoratedTree b = testing::random_admissible_tree(rng, 9);
        if (canonical_code(a) != canonical_code(b)) {
            continue;
        }
        std::multiset<std::string> ta, tb;
        for (const auto& n : a.nodes) {
            ta.insert(symbol_token(n.type));
        }
        for (const auto& n : b.nodes) {
            tb.insert(symbol_token(n.type));
        }
        CHECK(ta == tb);
    }
}

TEST_CASE("codes separate the small loop-only trees exactly") {
    // Known counts of rooted unlabeled trees: 1, 2, 4, 9, 20, 48 for
    // 2..7 vertices.
    std::vector<std::size_t> expected = {1, 2, 4, 9, 20, 48};
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<DecoratedTree> trees = testing::loop_only_trees(n);
        CHECK(trees.size() == expected[n - 2]);
        std::set<std::string> codes;
        for (const DecoratedTree& t : trees) {
            codes.insert(canonical_code(t));
        }
        CHECK(codes.size() == trees.size()); // enumeration has no duplicates
    }
}
