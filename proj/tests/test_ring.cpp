#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ksl/ring.hpp"

using namespace ksl;

namespace {

const char* const kSmallRings[] = {"Z/2",       "Z/8",        "Z/9",          "Z/12",      "GF(4)",
                                   "GF(8)",     "GF(9)",      "M2(GF(2))",    "M2(GF(3))", "Z/3 x GF(4)",
                                   "GF(2)^3",   "Z/4 x Z/6",  "GF(8){1,0,1,1}"};

}  // namespace

TEST(Ring, ZmodArithmetic) {
    Ring r("Z/8");
    EXPECT_EQ(r.add(5, 7), 4u);
    EXPECT_EQ(r.mul(3, 3), 1u);
    EXPECT_EQ(r.neg(3), 5u);
    EXPECT_EQ(r.units().units, (std::vector<Elem>{1, 3, 5, 7}));
    EXPECT_EQ(r.units().inverse, (std::vector<Elem>{1, 3, 5, 7}));
}

TEST(Ring, GF4Multiplication) {
    Ring r("GF(4)");
    EXPECT_EQ(r.mul(2, 2), 3u);  // u^2 = u + 1
    EXPECT_EQ(r.one(), 1u);
}

TEST(Ring, MatrixInvolution) {
    Ring r("M2(GF(2))");
    const Leaf& leaf = r.leaves().front();
    const Elem a = leaf.encode_matrix({1, 1, 0, 1});
    EXPECT_EQ(r.mul(a, a), leaf.encode_matrix({1, 0, 0, 1}));
    EXPECT_EQ(r.one(), leaf.encode_matrix({1, 0, 0, 1}));
}

TEST(Ring, UnitCounts) {
    EXPECT_EQ(Ring("M2(GF(3))").unit_count(), 48u);
    EXPECT_EQ(Ring("GF(2) x GF(2)").unit_count(), 1u);
    Ring b("GF(2) x GF(2)");
    EXPECT_EQ(b.units().units.front(), b.one());
}

TEST(Ring, UnitCountAgreesWithStructure) {
    for (const char* s : kSmallRings) {
        Ring r(s);
        std::size_t brute = 0;
        for (Elem a = 0; a < r.size(); ++a)
            for (Elem b = 0; b < r.size(); ++b)
                if (r.mul(a, b) == r.one()) {
                    ++brute;
                    break;
                }
        EXPECT_EQ(brute, r.unit_count()) << s;
        EXPECT_EQ(structural_unit_count(r), r.unit_count()) << s;
    }
}

TEST(Ring, GLOrderMatchesDensity) {
    for (std::uint64_t q : {2, 3, 4, 5})
        for (unsigned n : {1u, 2u, 3u}) {
            const double expected = std::pow(double(q), n * n) * gl_density(n, double(q));
            EXPECT_NEAR(double(gl_order(n, q)), expected, 1e-6 * expected) << n << " " << q;
        }
}

TEST(Ring, LeftInverseIsTwoSided) {
    for (const char* s : kSmallRings) {
        Ring r(s);
        if (r.size() > 256) continue;
        for (Elem x = 0; x < r.size(); ++x)
            for (Elem y = 0; y < r.size(); ++y)
                if (r.mul(y, x) == r.one()) {
                    EXPECT_EQ(r.mul(x, y), r.one()) << s << " " << x;
                }
    }
}

TEST(Ring, CharacterOrthogonality) {
    for (const char* s : kSmallRings) {
        Ring r(s);
        if (r.size() > 256) continue;
        for (Elem m = 1; m < r.size(); ++m) {
            Complex sum{0, 0};
            for (Elem x = 0; x < r.size(); ++x) sum += r.character(m, x);
            EXPECT_LT(std::abs(sum), 1e-9) << s << " m=" << m;
        }
    }
}

TEST(Ring, CharactersAreDistinct) {
    for (const char* s : kSmallRings) {
        Ring r(s);
        if (r.size() > 256) continue;
        std::set<std::vector<std::uint32_t>> seen;
        for (Elem m = 0; m < r.size(); ++m) {
            std::vector<std::uint32_t> values(r.size());
            for (Elem x = 0; x < r.size(); ++x) values[x] = r.pairing(m, x);
            seen.insert(values);
        }
        EXPECT_EQ(seen.size(), r.size()) << s;
    }
}

TEST(Ring, CharacterExamples) {
    Ring z5("Z/5");
    const Complex expected = std::polar(1.0, 4 * std::numbers::pi / 5);
    EXPECT_LT(std::abs(z5.character(1, 2) - expected), 1e-12);
    Ring f4("GF(4)");
    EXPECT_LT(std::abs(f4.character(1, 2) - Complex(-1, 0)), 1e-12);
    for (Elem x = 0; x < f4.size(); ++x) EXPECT_LT(std::abs(f4.character(0, x) - Complex(1, 0)), 1e-12);
}

TEST(Ring, JacobsonRadical) {
    EXPECT_EQ(jacobson_radical(Ring("Z/9")).elements, (std::vector<Elem>{0, 3, 6}));
    EXPECT_EQ(jacobson_radical(Ring("GF(8)")).elements, (std::vector<Elem>{0}));
    EXPECT_EQ(jacobson_radical(Ring("Z/12")).elements, (std::vector<Elem>{0, 6}));
    EXPECT_EQ(semisimple_quotient_spec(parse_ring_spec("Z/12 x GF(4)")), parse_ring_spec("Z/6 x GF(4)"));
}

TEST(Ring, OnePlusRadicalIsUnit) {
    for (const char* s : {"Z/8", "Z/9", "Z/12", "Z/4 x Z/6", "Z/9 x GF(2)"}) {
        Ring r(s);
        for (Elem a : jacobson_radical(r).elements)
            for (Elem x = 0; x < r.size(); ++x) EXPECT_TRUE(r.is_unit(r.add(r.one(), r.mul(x, a)))) << s;
    }
}

TEST(Ring, PrincipalIdeals) {
    Ring m2("M2(GF(2))");
    const Leaf& leaf = m2.leaves().front();
    const auto I = principal_left_ideal(m2, leaf.encode_matrix({1, 0, 0, 0}));
    EXPECT_EQ(I.size(), 4u);
    for (Elem x : I.elements) {
        auto e = leaf.decode_matrix(x);
        EXPECT_EQ(e[1], 0u);
        EXPECT_EQ(e[3], 0u);
    }
    EXPECT_EQ(principal_left_ideal(Ring("Z/8"), 2).elements, (std::vector<Elem>{0, 2, 4, 6}));
    const auto field_ideals = principal_left_ideals(Ring("GF(7)"));
    ASSERT_EQ(field_ideals.size(), 2u);
    EXPECT_EQ(field_ideals[0].size(), 1u);
    EXPECT_EQ(field_ideals[1].size(), 7u);
}

TEST(Ring, Predicates) {
    EXPECT_TRUE(Ring("GF(9)").is_field());
    EXPECT_TRUE(Ring("Z/7").is_field());
    EXPECT_FALSE(Ring("Z/8").is_field());
    EXPECT_TRUE(Ring("Z/2 ^ 4").is_boolean());
    EXPECT_FALSE(Ring("Z/4").is_boolean());
    EXPECT_FALSE(Ring("M2(GF(2))").is_commutative());
}

TEST(Ring, GuardAndParameters) {
    EXPECT_THROW(Ring("M3(GF(4))"), GuardExceeded);
    EXPECT_NO_THROW(Ring(parse_ring_spec("GF(8192)"), RingOptions{8192}));
}

TEST(NumberTheory, PhiLowerBound) {
    for (double q : {2.0, 3.0, 4.0, 5.0})
        for (unsigned n = 1; n <= 20; ++n) EXPECT_GE(gl_density(n, q), 0.25);
}
