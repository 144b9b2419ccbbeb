#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace slnweb;

TEST(CanonicalTableau, Sl2ArcsUseRungOne) {
    FProgram u{2, 4, 2, {{2, 1}, {3, 1}, {1, 1}, {2, 1}}};
    auto t = canonical_tableau(u);
    for (const auto& g : t.groups()) EXPECT_EQ(g.components(), ComponentSet{1});
    EXPECT_EQ(bkw_degree(t), 0);
}

TEST(CanonicalTableau, Sl4Web) {
    auto t = canonical_tableau(fixtures::sl4_web());
    EXPECT_EQ(t, fixtures::sl4_canonical_tableau());
    EXPECT_EQ(canonical_degree(fixtures::sl4_web()), -1);
}

TEST(CanonicalTableau, FullLeashMove) {
    auto t = canonical_tableau(FProgram{3, 2, 1, {{1, 3}}});
    EXPECT_EQ(t.shape(), MultiPartition(3, 1, {{1}, {1}, {1}}));
}

TEST(CanonicalTableau, GreedyStuck) {
    FProgram p{3, 4, 2, {{2, 2}, {3, 1}, {1, 2}, {2, 1}, {1, 1}}};
    apply_fstring(p);
    EXPECT_FALSE(ev(p).is_zero());
    try {
        canonical_tableau(p);
        FAIL() << "expected the greedy placement to get stuck";
    } catch (const GreedyStuck& e) {
        EXPECT_EQ(e.step(), 5u);
    }
}

TEST(CanonicalDegree, Examples) {
    EXPECT_EQ(canonical_degree(fixtures::cup()), 0);
    EXPECT_LT(canonical_degree(fixtures::circle(2, 1)), 0);
    EXPECT_LT(canonical_degree(fixtures::two_circles()), 0);
}

TEST(DualCanonical, Examples) {
    EXPECT_TRUE(is_dual_canonical(fixtures::cup()));
    FProgram cup_and_circle{2, 4, 2, {{2, 2}, {3, 1}, {1, 1}, {3, 1}}};
    EXPECT_FALSE(is_dual_canonical(cup_and_circle));
    EXPECT_FALSE(is_dual_canonical(fixtures::sl4_web()));
    EXPECT_TRUE(is_dual_canonical(FProgram{3, 3, 1, {}}));
}

TEST(CanonicalShape, IsDominanceMinimum) {
    auto p = fixtures::sl4_web();
    auto canon = canonical_tableau(p).shape();
    for (const auto& [shape, poly] : ev_by_shape(p)) {
        auto d = dominance_mp(canon, shape);
        EXPECT_TRUE(d == Dominance::LT || d == Dominance::EQ) << shape.render();
    }
}
