#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace slnweb;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}

TEST(EvByShape, EmptyProgram) {
    auto m = ev_by_shape(FProgram{3, 4, 2, {}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.begin()->first, MultiPartition(3, 2));
    EXPECT_EQ(m.begin()->second, LaurentPoly(1));
}

TEST(EvByShape, StackedCirclesEndStates) {
    auto m = ev_by_shape(fixtures::stacked_circles());
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.begin()->second, P("q + q^-1"));
}

TEST(Ev, Circles) {
    EXPECT_EQ(ev(fixtures::two_circles()), P("q^2 + 2 + q^-2"));
    EXPECT_EQ(ev(fixtures::two_circles_alt()), P("q^2 + 2 + q^-2"));
    EXPECT_EQ(ev(fixtures::stacked_circles()), P("q + q^-1"));
    EXPECT_EQ(ev(fixtures::circle(3, 1)), P("q^2 + 1 + q^-2"));
}

TEST(Ev, ThreeTwoCirclePresentationsAgree) {
    // Side by side, nested in a narrower strip, and with the second circle drawn from a shifted leash.
    FProgram third{2, 4, 1, {{1, 1}, {1, 1}, {2, 2}, {3, 1}, {3, 1}}};
    EXPECT_EQ(ev(third), ev(fixtures::two_circles()));
    EXPECT_EQ(ev(fixtures::two_circles_alt()), ev(fixtures::two_circles()));
}

TEST(Ev, CircleOfColorB) {
    for (int n = 2; n <= 5; ++n)
        for (int b = 1; b <= n; ++b) EXPECT_EQ(ev(fixtures::circle(n, b)), qbin(n, b)) << n << " " << b;
}

TEST(Ev, FrozenSl4Value) {
    // Frozen from tests/oracle/flow_oracle.py.
    EXPECT_EQ(ev(fixtures::sl4_web()),
              P("2*q^13 + 9*q^12 + 28*q^11 + 63*q^10 + 114*q^9 + 171*q^8 + 216*q^7 + 234*q^6 + 216*q^5 + "
                "171*q^4 + 114*q^3 + 63*q^2 + 28*q + 9 + 2*q^-1"));
}

TEST(EvOracle, Examples) {
    EXPECT_EQ(ev_oracle(FProgram{2, 3, 1, {}}), LaurentPoly(1));
    EXPECT_EQ(ev_oracle(fixtures::cup()), P("1 + q"));
    EXPECT_EQ(ev_oracle(fixtures::sl4_web()), ev(fixtures::sl4_web()));
}

TEST(Ev, ParallelMatchesSequential) {
    auto p = fixtures::sl4_web();
    EvalOptions par;
    par.jobs = 4;
    EXPECT_EQ(ev_by_shape(p, par), ev_by_shape(p));
}

TEST(Ev, ResourceGuard) {
    EvalOptions tight;
    tight.max_states = 3;
    EXPECT_THROW(ev(fixtures::sl4_web(), tight), ResourceError);
}

TEST(DShift, Examples) {
    EXPECT_EQ(d_shift({1, 1}, 2, 1), 1);
    EXPECT_EQ(d_shift({2, 0}, 2, 1), 0);
    EXPECT_EQ(d_shift({1, 1, 1}, 3, 1), 3);
    EXPECT_THROW(d_shift({3, 0}, 2, 1), SemanticError);
}

TEST(Kuperberg, CupWithItself) {
    auto r = kuperberg(fixtures::cup(), fixtures::cup());
    EXPECT_EQ(r.d, 1);
    EXPECT_EQ(r.ev_glued, P("q + q^-1"));
    EXPECT_EQ(r.ev_glued, ev(fixtures::circle(2, 1)));
    EXPECT_EQ(kuperberg_pair(fixtures::cup(), fixtures::cup()), P("q^2 + 1"));
}

TEST(Kuperberg, ClosedWebSquared) {
    auto p = fixtures::two_circles();
    EXPECT_EQ(kuperberg_pair(p, p), ev(p) * ev(p));
}

TEST(Kuperberg, BoundaryMismatch) {
    EXPECT_THROW(kuperberg(fixtures::cup(), FProgram{2, 2, 1, {}}), SemanticError);
    EXPECT_THROW(kuperberg(fixtures::cup(), FProgram{3, 2, 1, {{1, 1}}}), SemanticError);
}

TEST(Kuperberg, NonnegativeCoefficients) {
    // The two sl_2 webs on four points with boundary (1,1,1,1).
    FProgram u{2, 4, 2, {{2, 1}, {3, 1}, {1, 1}, {2, 1}}};
    FProgram v{2, 4, 2, {{2, 1}, {3, 1}, {2, 1}, {1, 1}}};
    for (const auto& a : {u, v})
        for (const auto& b : {u, v}) EXPECT_TRUE(kuperberg_pair(a, b).has_nonnegative_coefficients());
    EXPECT_EQ(kuperberg(u, u).ev_glued, ev(fixtures::two_circles()));
}
