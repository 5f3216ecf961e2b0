#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ksl/extremal.hpp"

using namespace ksl;

TEST(Closure, Examples) {
    Ring f5("GF(5)");
    EXPECT_EQ(additive_closure(f5, {}).size(), 1u);
    EXPECT_EQ(additive_closure(f5, {{0, 0}, {1, 2}, {2, 1}, {3, 3}}).size(), 25u);

    Ring z8("Z/8");
    const auto diag = additive_closure(z8, {{0, 0}, {2, 2}, {4, 4}, {6, 6}});
    EXPECT_EQ(diag.members(), (std::vector<PairElem>{{0, 0}, {2, 2}, {4, 4}, {6, 6}}));
}

TEST(Closure, IsSubgroup) {
    for (const char* s : {"Z/8", "Z/9", "GF(4)", "Z/3 x GF(2)", "M2(GF(2))", "Z/12"}) {
        Ring r(s);
        const PairClosure c(r, shifted_hyperbola(r));
        const auto members = c.members();
        EXPECT_EQ(r.size() * r.size() % members.size(), 0u) << s;  // Lagrange
        for (const auto& [a, b] : members) {
            EXPECT_TRUE(c.contains(r.neg(a), r.neg(b))) << s;
            for (const auto& [x, y] : members) EXPECT_TRUE(c.contains(r.add(a, x), r.add(b, y))) << s;
        }
    }
}

TEST(Extremal, FieldClassification) {
    for (std::uint64_t q = 2; q <= 16; ++q) {
        if (!prime_power(q)) continue;
        EXPECT_EQ(is_extremal(Ring(galois(q))).extremal, q <= 4) << q;
    }
}

TEST(Extremal, OtherExamples) {
    EXPECT_TRUE(is_extremal(Ring("Z/3 x GF(2)")).extremal);
    EXPECT_TRUE(is_extremal(Ring("Z/8")).extremal);
    EXPECT_EQ(is_extremal(Ring("Z/8")).closure_size, 4u);
    EXPECT_FALSE(is_extremal(Ring("GF(5)")).extremal);
}

TEST(Extremal, AgreesWithC) {
    for (const char* s : {"GF(2)", "GF(3)", "GF(5)", "GF(9)", "Z/4", "Z/8", "Z/9", "Z/15", "Z/25", "Z/21",
                          "M2(GF(2))", "GF(4) x GF(5)", "Z/2 ^ 3", "GF(7) x GF(11)"}) {
        Ring r(s);
        const auto ks = kloosterman_salem(r);
        EXPECT_EQ(is_extremal(r).extremal, std::abs(ks.C - ks.sqrt_units()) < 1e-9) << s;
    }
}

TEST(Extremal, WitnessIsConstantOnHyperbola) {
    for (const char* s : {"GF(2)", "GF(3)", "GF(4)", "Z/8", "Z/9", "Z/6", "M2(GF(2))", "Z/4 x GF(2)"}) {
        Ring r(s);
        const auto cert = is_extremal(r);
        ASSERT_TRUE(cert.extremal) << s;
        ASSERT_TRUE(cert.witness) << s;
        const auto [m, n] = *cert.witness;
        EXPECT_FALSE(m == 0 && n == 0);
        std::set<std::uint32_t> phases;
        const auto& us = r.units();
        for (std::size_t i = 0; i < us.size(); ++i)
            phases.insert((r.pairing(m, us.units[i]) + r.pairing(n, us.inverse[i])) % r.character_modulus());
        EXPECT_EQ(phases.size(), 1u) << s;
    }
}

TEST(Extremal, BasisExpressionsReconstruct) {
    for (const char* s : {"GF(5)", "GF(9)", "Z/35", "M2(GF(3))"}) {
        Ring r(s);
        const auto cert = is_extremal(r);
        ASSERT_FALSE(cert.extremal) << s;
        ASSERT_FALSE(cert.basis_expressions.empty());
        for (const auto& e : cert.basis_expressions)
            EXPECT_TRUE(validate_unit_sum(r, e.units, e.target.first, e.target.second, UnitSumForm::Shifted)) << s;
    }
}

TEST(UnitSums, Solver) {
    Ring f5("GF(5)");
    const auto plain = sum_of_units_solver(f5, 0, 0, UnitSumForm::Plain);
    ASSERT_TRUE(plain);
    EXPECT_TRUE(validate_unit_sum(f5, *plain, 0, 0, UnitSumForm::Plain));
    const auto shifted = sum_of_units_solver(f5, 0, 0, UnitSumForm::Shifted);
    ASSERT_TRUE(shifted);
    EXPECT_FALSE(shifted->empty());

    for (Elem a = 0; a < 5; ++a)
        for (Elem b = 0; b < 5; ++b) {
            auto u = sum_of_units_solver(f5, a, b, UnitSumForm::Shifted);
            ASSERT_TRUE(u);
            EXPECT_TRUE(validate_unit_sum(f5, *u, a, b, UnitSumForm::Shifted));
        }

    EXPECT_FALSE(sum_of_units_solver(Ring("Z/8"), 1, 0, UnitSumForm::Shifted));
}

TEST(Scan, Laws) {
    std::vector<RingSpec> family;
    const char* pool[] = {"GF(2)", "GF(3)", "GF(5)", "Z/4", "GF(7)", "Z/9"};
    for (auto a : pool)
        for (auto b : pool) family.push_back(parse_ring_spec(std::string(a) + " x " + b));
    for (auto z : {"Z/4", "Z/8", "Z/9", "Z/25", "Z/27", "Z/49", "Z/12", "Z/18", "Z/50"}) family.push_back(parse_ring_spec(z));
    const auto scan = extremal_scan(family);
    EXPECT_TRUE(scan.all_pass());
    std::size_t product_laws = 0, radical_laws = 0;
    for (const auto& l : scan.laws) {
        product_laws += l.law == "product";
        radical_laws += l.law == "radical";
        EXPECT_TRUE(l.pass) << l.law << " " << l.ring << " " << l.detail;
    }
    EXPECT_EQ(product_laws, 36u);
    EXPECT_GT(radical_laws, 0u);
}

TEST(Scan, BooleanTwist) {
    std::vector<RingSpec> family;
    for (auto r : {"Z/3", "Z/5", "GF(4)", "Z/4", "GF(7)"}) family.push_back(parse_ring_spec(std::string(r) + " x GF(2)"));
    for (const auto& row : extremal_scan(family).rows) {
        EXPECT_TRUE(row.extremal) << row.ring;
        EXPECT_NEAR(row.C, row.sqrt_units, 1e-9) << row.ring;
    }
}
