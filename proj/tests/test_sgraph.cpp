#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "ksl/sgraph.hpp"

using namespace ksl;

namespace {

std::map<long, int> multiset(const std::vector<double>& values) {
    std::map<long, int> out;
    for (double v : values) ++out[std::lround(v * 1e6)];
    return out;
}

}  // namespace

TEST(SGraph, Construction) {
    Ring f3("GF(3)");
    const auto g = hyperbola_graph(f3);
    EXPECT_EQ(g.vertex_count(), 9u);
    EXPECT_EQ(g.degree(), 2u);
    EXPECT_FALSE(g.has_loops());
    EXPECT_EQ(edge_count(g), 9u);

    const SGraph loops(f3, 2, {0});
    EXPECT_TRUE(loops.has_loops());
    EXPECT_EQ(edge_count(loops), 9u);
    for (Vertex v = 0; v < loops.vertex_count(); ++v) EXPECT_EQ(loops.neighbors(v), std::vector<Vertex>{v});
    EXPECT_EQ(spectrum(loops).components, 9u);
}

TEST(SGraph, RejectsAsymmetricSet) {
    Ring z5("Z/5");
    EXPECT_THROW(SGraph(z5, 1, {1}), InvalidParameter);
    EXPECT_NO_THROW(SGraph(z5, 1, {1, 4}));
    EXPECT_THROW(SGraph(Ring("GF(16)"), 6, {0}), GuardExceeded);
}

TEST(SGraph, SphereIsSymmetric) {
    Ring f5("GF(5)");
    const auto S = sphere_connection_set(f5, 2, 1);  // x^2 + y^2 = 1 over F_5 has 4 points
    EXPECT_EQ(S.size(), 4u);
    const SGraph g(f5, 2, S);
    const auto rep = spectrum(g);
    EXPECT_EQ(rep.degree, 4u);
    Ring f7("GF(7)");
    const SGraph g3(f7, 3, sphere_connection_set(f7, 3, 1));
    EXPECT_GT(g3.degree(), 0u);
    const auto r3 = spectrum(g3, 4);
    EXPECT_EQ(r3.components, traverse(g3).components);
}

TEST(Spectrum, SmallFields) {
    {
        Ring f3("GF(3)");
        const auto rep = spectrum(hyperbola_graph(f3));
        EXPECT_EQ(multiset(rep.eigenvalues), (std::map<long, int>{{2000000, 3}, {-1000000, 6}}));
        EXPECT_EQ(rep.components, 3u);
    }
    {
        Ring f2("GF(2)");
        const auto rep = spectrum(hyperbola_graph(f2));
        EXPECT_EQ(multiset(rep.eigenvalues), (std::map<long, int>{{1000000, 2}, {-1000000, 2}}));
        EXPECT_EQ(rep.components, 2u);
        EXPECT_TRUE(rep.bipartite);
    }
    {
        Ring f5("GF(5)");
        const auto rep = spectrum(hyperbola_graph(f5));
        EXPECT_EQ(rep.components, 1u);
        EXPECT_FALSE(rep.bipartite);
        EXPECT_NEAR(rep.lambda2, 1 + std::sqrt(5.0), 1e-9);
    }
}

TEST(Spectrum, EigenRelationOnSampledCharacters) {
    std::mt19937_64 rng(7);
    for (const char* s : {"GF(7)", "Z/12", "M2(GF(2))", "GF(8)", "Z/3 x GF(4)"}) {
        Ring r(s);
        const auto g = hyperbola_graph(r);
        ASSERT_LE(g.vertex_count(), 4096u);
        const auto rep = spectrum(g, 3);
        for (int i = 0; i < 16; ++i) {
            const Vertex m = static_cast<Vertex>(rng() % g.vertex_count());
            EXPECT_LT(eigen_residual(g, m, rep.eigenvalues[m]), 1e-8 * g.degree()) << s << " m=" << m;
        }
    }
}

TEST(Spectrum, TraceIdentities) {
    for (const char* s : {"GF(5)", "Z/8", "Z/9", "M2(GF(2))"}) {
        Ring r(s);
        const auto g = hyperbola_graph(r);
        const auto rep = spectrum(g);
        double sum = 0, sq = 0;
        for (double l : rep.eigenvalues) sum += l, sq += l * l;
        EXPECT_NEAR(sum, g.has_loops() ? g.vertex_count() : 0.0, 1e-8 * g.vertex_count()) << s;
        EXPECT_NEAR(sq, double(g.degree()) * g.vertex_count(), 1e-8 * g.vertex_count()) << s;
    }
    Ring z4("Z/4");
    const SGraph loops(z4, 1, {0, 1, 3});
    double sum = 0;
    for (double l : spectrum(loops).eigenvalues) sum += l;
    EXPECT_NEAR(sum, 4.0, 1e-9);
}

TEST(Spectrum, ProductSpectra) {
    Ring f2("GF(2)"), f3("GF(3)"), prod("GF(2) x GF(3)");
    const auto a = spectrum(hyperbola_graph(f2)).eigenvalues;
    const auto b = spectrum(hyperbola_graph(f3)).eigenvalues;
    std::vector<double> products;
    for (double x : a)
        for (double y : b) products.push_back(x * y);
    EXPECT_EQ(multiset(spectrum(hyperbola_graph(prod)).eigenvalues), multiset(products));
}

TEST(Connectivity, MatchesTraversal) {
    for (const char* s : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(9)", "Z/8", "Z/6", "Z/9", "Z/15", "M2(GF(2))"}) {
        Ring r(s);
        const auto g = hyperbola_graph(r);
        const auto c = connectivity_report(g);
        ASSERT_TRUE(c.traversal);
        EXPECT_TRUE(c.consistent) << s;
    }
    Ring f4("GF(4)");
    const auto g4 = hyperbola_graph(f4);
    EXPECT_EQ(connectivity_report(g4).components, 4u);
    for (Vertex v = 0; v < g4.vertex_count(); ++v)
        for (auto w : g4.neighbors(v))
            for (auto x : g4.neighbors(v))
                if (w != x) {
                    const auto nw = g4.neighbors(w);
                    EXPECT_NE(std::find(nw.begin(), nw.end(), x), nw.end());  // each component is K_4
                }
    Ring f7("GF(7)");
    const auto c7 = connectivity_report(hyperbola_graph(f7));
    EXPECT_TRUE(c7.connected);
    EXPECT_FALSE(c7.bipartite);
    Ring z8("Z/8");
    const auto c8 = connectivity_report(hyperbola_graph(z8));
    EXPECT_TRUE(!c8.connected || c8.bipartite);
}

TEST(Gap, FormulaAndFlags) {
    Ring f5("GF(5)");
    const auto g = hyperbola_graph(f5);
    const auto rep = spectrum(g);
    const double C = kloosterman_salem(f5).C;
    const auto gap = spectral_gap(g, rep, C, false);
    EXPECT_TRUE(gap.agrees);
    EXPECT_NEAR(gap.formula, 4 - 2 * C, 1e-12);

    for (const char* s : {"GF(2)^2", "GF(3)"}) {
        Ring r(s);
        const auto gr = hyperbola_graph(r);
        const auto flagged = spectral_gap(gr, spectrum(gr), kloosterman_salem(r).C, is_extremal(r).extremal);
        EXPECT_TRUE(flagged.extremal) << s;
        EXPECT_EQ(flagged.formula, 0.0);
    }
}

TEST(Walk, MixingBound) {
    Ring f5("GF(5)");
    const auto g = hyperbola_graph(f5);
    const double C = kloosterman_salem(f5).C;
    const auto rows = random_walk_check(g, 15, C, false, {0, 7, 24});
    EXPECT_NEAR(rows[0].deviation, 1 - 1.0 / 25, 1e-15);
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.t;

    Ring f7("GF(7)");
    const auto g7 = hyperbola_graph(f7);
    const auto long_rows = random_walk_check(g7, 200, kloosterman_salem(f7).C, false);
    EXPECT_LT(long_rows.back().deviation, 1e-12);

    Ring f3("GF(3)");
    EXPECT_THROW(random_walk_check(hyperbola_graph(f3), 3, std::sqrt(2.0), true), NotApplicable);
}

TEST(Expander, SmallFieldRamanujanStatus) {
    for (std::uint64_t q : {5, 7, 9, 11, 13}) {
        Ring r(galois(q));
        const auto g = hyperbola_graph(r);
        const auto rep = spectrum(g, 2);
        const double C = kloosterman_salem(r).C;
        const auto e = expander_and_ramanujan(g, C, false, &rep);
        // F_7 misses by a small margin: lambda2 = 4.494 > 2 sqrt(5) = 4.472.
        EXPECT_EQ(e.ramanujan, q != 7) << q;
        EXPECT_EQ(e.ramanujan, e.spectral_ramanujan) << q;
        EXPECT_NEAR(e.epsilon, rep.epsilon, 1e-9) << q;
    }
    Ring z15("Z/15");
    EXPECT_THROW(expander_and_ramanujan(hyperbola_graph(z15), 2.0, true), NotApplicable);
}

TEST(Counting, Identity) {
    std::mt19937_64 rng(11);
    for (const char* s : {"Z/3", "Z/5", "Z/4", "GF(4)"}) {
        Ring r(s);
        KloostermanEngine e(r);
        for (int t = 0; t < 100; ++t) {
            std::vector<PairElem> E;
            for (Elem a = 0; a < r.size(); ++a)
                for (Elem b = 0; b < r.size(); ++b)
                    if (rng() & 1) E.emplace_back(a, b);
            EXPECT_LT(count_pairs(e, E).residual, 1e-6) << s;
        }
    }
}

TEST(Counting, FullPlaneAndStrips) {
    for (const char* s : {"Z/3", "Z/8", "GF(4)"}) {
        Ring r(s);
        std::vector<PairElem> all;
        for (Elem a = 0; a < r.size(); ++a)
            for (Elem b = 0; b < r.size(); ++b) all.emplace_back(a, b);
        const auto c = count_pairs(r, all);
        EXPECT_EQ(c.n, std::uint64_t(r.size()) * r.size() * r.unit_count()) << s;
        EXPECT_NEAR(c.D, 0.0, 1e-6);
        for (const auto& I : principal_left_ideals(r))
            if (I.proper) {
                EXPECT_EQ(count_pairs(r, strip_set(r, I)).n, 0u) << s;
            }
    }
}

TEST(Ideals, Bound) {
    for (const char* s : {"Z/8", "Z/9", "Z/12", "M2(GF(2))", "GF(7)"}) {
        Ring r(s);
        for (const auto& row : ideal_bound_check(r, kloosterman_salem(r).C)) EXPECT_TRUE(row.pass) << s << row.label;
    }
    Ring f7("GF(7)");
    const auto rows = ideal_bound_check(f7, kloosterman_salem(f7).C);
    ASSERT_EQ(rows.size(), 2u);  // {0} and J = {0}
    EXPECT_EQ(rows[0].size, 1u);
}

TEST(Exact, IndependenceAndChromatic) {
    Ring f3("GF(3)");
    const auto r3 = independence_and_chromatic(hyperbola_graph(f3), std::sqrt(2.0));
    EXPECT_EQ(*r3.exact_indep, 3);
    EXPECT_EQ(*r3.exact_chrom, 3);

    Ring f5("GF(5)");
    const double C = kloosterman_salem(f5).C;
    const auto r5 = independence_and_chromatic(hyperbola_graph(f5), C);
    EXPECT_LE(*r5.exact_indep, C * 25 / 2);
    EXPECT_TRUE(r5.indep_ok && r5.chrom_ok);
    EXPECT_TRUE(*r5.field_chrom_ok);

    Ring f4("GF(4)");
    const auto g4 = hyperbola_graph(f4);
    EXPECT_EQ(independence_number(g4), 4);
    EXPECT_EQ(chromatic_number(g4), 4);
    Ring z6("Z/6");
    EXPECT_EQ(chromatic_number(hyperbola_graph(z6)), 2);  // bipartite
}

TEST(Export, EdgeList) {
    Ring f3("GF(3)");
    std::ostringstream os;
    write_edge_list(hyperbola_graph(f3), os);
    std::istringstream in(os.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# vertices=9 degree=2 ring=GF(3)");
    int lines = 0;
    Vertex u, v;
    while (in >> u >> v) {
        EXPECT_LT(u, v);
        ++lines;
    }
    EXPECT_EQ(lines, 9);

    Ring f5("GF(5)");
    EXPECT_EQ(edge_count(hyperbola_graph(f5)), 50u);
    std::ostringstream loops;
    write_edge_list(SGraph(f3, 1, {0}), loops);
    EXPECT_EQ(loops.str(), "# vertices=3 degree=1 ring=GF(3)\n0 0\n1 1\n2 2\n");
}
