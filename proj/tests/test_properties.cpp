#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace slnweb;

namespace {

constexpr int kCases = 1200;

std::vector<FProgram> corpus() {
    std::mt19937 rng(20261016);
    std::vector<FProgram> out;
    for (int i = 0; i < kCases; ++i) out.push_back(gen::random_program(rng, 4, 6, 8));
    return out;
}

const std::vector<FProgram>& programs() {
    static const std::vector<FProgram> c = corpus();
    return c;
}

}

TEST(Properties, GrowthMapsAreMutuallyInverse) {
    for (const auto& p : programs())
        for (const auto& f : enumerate_flows(p)) {
            MultiTableau t = flow_to_tableau(p, f);
            auto [q, g] = tableau_to_flow(t, p.m);
            ASSERT_EQ(q, p);
            ASSERT_EQ(g, f);
            ASSERT_EQ(flow_to_tableau(q, g), t);
        }
}

TEST(Properties, DistinctFlowsGiveDistinctTableaux) {
    for (const auto& p : programs()) {
        std::set<std::string> seen;
        auto flows = enumerate_flows(p);
        for (const auto& f : flows) seen.insert(flow_to_tableau(p, f).render());
        ASSERT_EQ(seen.size(), flows.size());
    }
}

TEST(Properties, FlowWeightIsBkwDegree) {
    for (const auto& p : programs())
        for (const auto& f : enumerate_flows(p)) ASSERT_EQ(flow_weight(p, f), bkw_degree(flow_to_tableau(p, f)));
}

TEST(Properties, DynamicProgramMatchesFlowEnumeration) {
    for (const auto& p : programs()) ASSERT_EQ(ev(p), ev_oracle(p)) << render_program(p);
}

TEST(Properties, EvaluationHasNonnegativeCoefficients) {
    for (const auto& p : programs()) ASSERT_TRUE(ev(p).has_nonnegative_coefficients());
}

TEST(Properties, StateStringMatchesFrontTracking) {
    for (const auto& p : programs())
        for (const auto& f : enumerate_flows(p))
            ASSERT_EQ(state_string_of_shape(flow_to_tableau(p, f).shape(), p.m), final_front(p, f));
}

TEST(Properties, TensorExpansionMatchesFlows) {
    for (const auto& p : programs()) {
        std::map<Front, LaurentPoly> by_flows;
        for (const auto& f : enumerate_flows(p)) {
            int w = flow_weight(p, f);
            by_flows[final_front(p, f)].add_term(w, w % 2 ? -1 : 1);
        }
        std::erase_if(by_flows, [](const auto& kv) { return kv.second.is_zero(); });
        auto dp = tensor_expansion(p);
        std::erase_if(dp, [](const auto& kv) { return kv.second.is_zero(); });
        ASSERT_EQ(dp, by_flows);
    }
}

TEST(Properties, CanonicalDegreeBoundsEvaluation) {
    int checked = 0;
    for (const auto& p : programs()) {
        MultiTableau t;
        try {
            t = canonical_tableau(p);
        } catch (const GreedyStuck&) {
            continue;
        }
        ++checked;
        int d = bkw_degree(t);
        LaurentPoly value = ev(p);
        ASSERT_LE(d, 0) << render_program(p);
        if (has_positive_exponent_property(value)) ASSERT_EQ(d, 0) << render_program(p);
        for (const auto& [shape, poly] : ev_by_shape(p)) {
            auto cmp = dominance_mp(t.shape(), shape);
            ASSERT_TRUE(cmp == Dominance::LT || cmp == Dominance::EQ) << render_program(p);
        }
    }
    EXPECT_GT(checked, kCases / 2);
}

TEST(Properties, IncrementalDegreeEqualsGlobal) {
    for (const auto& p : programs())
        for (const auto& f : enumerate_flows(p)) {
            MultiTableau t = flow_to_tableau(p, f);
            MultiPartition shape(t.n(), t.ell());
            int total = 0;
            for (const auto& g : t.groups()) {
                auto st = degree_increment(shape, g.residue, g.components());
                total += st.increment;
                shape = st.shape;
            }
            ASSERT_EQ(total, bkw_degree(t));
        }
}

TEST(Properties, Sl2ArcProgramsAreDualCanonicalIffCircleFree) {
    std::size_t count = 0, with_circle = 0;
    gen::for_each_sl2_program(7, [&](const gen::Sl2Case& c) {
        LaurentPoly value;
        for (const auto& [shape, poly] : c.shapes) value += poly;
        ASSERT_EQ(has_positive_exponent_property(value), !c.has_circle) << render_program(c.program);
        ++count;
        with_circle += c.has_circle;
    });
    EXPECT_GT(count, 1000u);
    EXPECT_GT(with_circle, 100u);
}
