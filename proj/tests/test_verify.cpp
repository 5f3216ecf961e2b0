#include <gtest/gtest.h>

#include "ksl/verify.hpp"

using namespace ksl;

TEST(Verify, BoundedDrawIsInRangeAndSeeded) {
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 1000; ++i) {
        const auto x = bounded_draw(a, 15);
        EXPECT_LT(x, 15u);
        EXPECT_EQ(x, bounded_draw(b, 15));
    }
}

TEST(Verify, SuitesCoverCriteria) {
    const auto& suites = suite_table();
    for (const char* name : {"bounds", "extremal-fields", "products", "pullback", "graphs", "counting", "matrix", "all"})
        EXPECT_TRUE(suites.count(name)) << name;
    EXPECT_EQ(suites.at("all").size(), 15u);
    EXPECT_THROW(run_suite("nope"), InvalidParameter);
}

TEST(Verify, SuitePassesIffEveryInstancePasses) {
    const auto s = run_suite("products");
    ASSERT_EQ(s.criteria.size(), 2u);
    EXPECT_EQ(s.criteria[0].instances.size(), 10u);
    EXPECT_TRUE(s.pass());
    auto broken = s;
    broken.criteria[1].instances[0].pass = false;
    EXPECT_FALSE(broken.pass());
}

TEST(Verify, SeedChangesDrawnPairsButNotVerdicts) {
    VerifyConfig a, b;
    b.seed = 7;
    const auto ra = run_criterion(5, a), rb = run_criterion(5, b);
    EXPECT_TRUE(ra.pass());
    EXPECT_TRUE(rb.pass());
    std::vector<std::string> ia, ib;
    for (const auto& r : ra.instances) ia.push_back(r.instance);
    for (const auto& r : rb.instances) ib.push_back(r.instance);
    EXPECT_NE(ia, ib);
}

TEST(Verify, JobsDoNotChangeValues) {
    VerifyConfig one, many;
    many.jobs = 8;
    for (int id : {2, 9, 10}) {
        const auto a = run_criterion(id, one), b = run_criterion(id, many);
        ASSERT_EQ(a.instances.size(), b.instances.size());
        for (std::size_t i = 0; i < a.instances.size(); ++i) {
            EXPECT_EQ(a.instances[i].pass, b.instances[i].pass);
            EXPECT_EQ(a.instances[i].values, b.instances[i].values);
        }
    }
}
