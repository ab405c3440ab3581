#include <gtest/gtest.h>

#include "hgirth/error.hpp"
#include "hgirth/geometry.hpp"
#include "hgirth/girth.hpp"
#include "hgirth/text_format.hpp"
#include "hgirth/transforms.hpp"
#include "support/oracles.hpp"

using namespace hgirth;
using namespace hgirth::geometry;

TEST(PrimeField, AxiomsSpotCheck) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        const PrimeField f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            for (std::uint32_t b = 0; b < p; ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.sub(f.add(a, b), b), a);
                for (std::uint32_t c = 0; c < p; ++c)
                    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    EXPECT_THROW(PrimeField(4), PreconditionError);
    EXPECT_THROW(PrimeField(1), PreconditionError);
}

TEST(ProjectivePlane, OrderTwoIsHeawood) {
    const auto g = projective_plane(2);
    EXPECT_EQ(g.n_left(), 7u);
    EXPECT_EQ(g.n_right(), 7u);
    EXPECT_EQ(g.incidences().size(), 21u);
    EXPECT_EQ(oracle::brute_force_bipartite_girth(g, 14), 6u);
    EXPECT_EQ(girth_oracle(transforms::neighborhood_hypergraph(g), 6).girth, Girth::finite(3));
}

TEST(ProjectivePlane, OrdersThreeAndFive) {
    const auto g3 = projective_plane(3);
    EXPECT_EQ(g3.n_left(), 13u);
    EXPECT_EQ(g3.incidences().size(), 52u);
    EXPECT_EQ(g3.biregularity(), (std::pair<std::size_t, std::size_t>{4, 4}));
    const auto g5 = projective_plane(5);
    EXPECT_EQ(g5.n_left(), 31u);
    EXPECT_EQ(g5.n_right(), 31u);
    EXPECT_EQ(g5.incidences().size(), 186u);
    EXPECT_EQ(girth_bipartite(g5).girth, Girth::finite(6));
}

TEST(ProjectivePlane, RejectsBadOrders) {
    EXPECT_THROW(projective_plane(4), PreconditionError);
    EXPECT_THROW(projective_plane(17), PreconditionError);
}

TEST(SymplecticQuadrangle, OrderTwoIsTutteCoxeter) {
    const auto g = symplectic_quadrangle(2);
    EXPECT_EQ(g.n_left(), 15u);
    EXPECT_EQ(g.n_right(), 15u);
    EXPECT_EQ(g.incidences().size(), 45u);
    EXPECT_EQ(oracle::brute_force_bipartite_girth(g, 10), 8u);
    const auto h = transforms::neighborhood_hypergraph(g);
    EXPECT_EQ(girth_hypergraph(h).girth, Girth::finite(4));
    EXPECT_EQ(girth_oracle(h, 6).girth, Girth::finite(4));
}

TEST(SymplecticQuadrangle, OrderThree) {
    const auto g = symplectic_quadrangle(3);
    EXPECT_EQ(g.n_left(), 40u);
    EXPECT_EQ(g.incidences().size(), 160u);
    EXPECT_EQ(girth_bipartite(g).girth, Girth::finite(8));
    EXPECT_THROW(symplectic_quadrangle(11), PreconditionError);
}

TEST(SplitCayleyHexagon, OrderTwo) {
    const auto g = split_cayley_hexagon(2);
    EXPECT_EQ(g.n_left(), 63u);
    EXPECT_EQ(g.n_right(), 63u);
    EXPECT_EQ(g.incidences().size(), 189u);
    EXPECT_EQ(g.biregularity(), (std::pair<std::size_t, std::size_t>{3, 3}));
    EXPECT_EQ(girth_bipartite(g).girth, Girth::finite(12));
    const auto h = transforms::neighborhood_hypergraph(g);
    const auto s = validate(h);
    EXPECT_EQ(s.uniformity, 3u);
    EXPECT_EQ(s.regularity, 3u);
    EXPECT_EQ(girth_oracle(h, 6).girth, Girth::finite(6));
}

TEST(SplitCayleyHexagon, OrderThree) {
    const auto g = split_cayley_hexagon(3);
    EXPECT_EQ(g.n_left(), 364u);
    EXPECT_EQ(g.n_right(), 364u);
    EXPECT_EQ(g.incidences().size(), 1456u);
    EXPECT_EQ(g.biregularity(), (std::pair<std::size_t, std::size_t>{4, 4}));
    EXPECT_EQ(girth_bipartite(g).girth, Girth::finite(12));
}

TEST(Generators, AreDeterministic) {
    EXPECT_EQ(to_bgt(split_cayley_hexagon(2)), to_bgt(split_cayley_hexagon(2)));
    EXPECT_EQ(to_bgt(symplectic_quadrangle(3)), to_bgt(symplectic_quadrangle(3)));
    const GreedyParams p{30, 30, 3, 12, 1};
    EXPECT_EQ(to_bgt(greedy_high_girth_bipartite(p).graph), to_bgt(greedy_high_girth_bipartite(p).graph));
}

TEST(Greedy, ThirtyByThirtyGirthTwelve) {
    const auto [g, rep] = greedy_high_girth_bipartite({30, 30, 3, 12, 1});
    EXPECT_TRUE(girth_bipartite(g).girth.at_least(12));
    for (VertexId v = 0; v < g.n_right(); ++v) EXPECT_LE(g.right_degree(v), 3u);
    std::size_t total = 0;
    for (auto c : rep.right_degree_histogram) total += c;
    EXPECT_EQ(total, 30u);
    EXPECT_EQ(rep.accepted, g.incidences().size());
}

TEST(Greedy, RightDegreeOneIsAForest) {
    const auto [g, rep] = greedy_high_girth_bipartite({10, 12, 1, 4, 9});
    EXPECT_TRUE(girth_bipartite(g).girth.is_infinite());
    EXPECT_EQ(rep.shortfall, 0u);
}

TEST(Greedy, DenseRequestIsUnderFilled) {
    const auto [g, rep] = greedy_high_girth_bipartite({4, 4, 4, 6, 7});
    // K_{4,4} is the only 4-regular option and it has 4-cycles.
    EXPECT_GT(rep.shortfall, 0u);
    EXPECT_LT(rep.right_degree_histogram[4], 4u);
    EXPECT_TRUE(girth_bipartite(g).girth.at_least(6));
}

TEST(Greedy, GirthTargetHoldsAcrossSeeds) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t target = 4 + 2 * (seed % 7);
        const auto [g, rep] = greedy_high_girth_bipartite({25, 20, 4, target, seed});
        const auto girth = girth_bipartite(g).girth;
        ASSERT_TRUE(girth.at_least(target)) << "seed " << seed << " girth " << girth.to_string();
    }
}

TEST(Greedy, RejectsBadParameters) {
    EXPECT_THROW(greedy_high_girth_bipartite({0, 3, 2, 6, 1}), PreconditionError);
    EXPECT_THROW(greedy_high_girth_bipartite({3, 3, 2, 5, 1}), PreconditionError);
    EXPECT_THROW(greedy_high_girth_bipartite({3, 3, 2, 2, 1}), PreconditionError);
}

TEST(Generate, DispatchesByKind) {
    GeometrySpec spec;
    spec.kind = GeometryKind::greedy;
    spec.greedy = {10, 5, 2, 6, 3};
    const auto out = generate(spec);
    EXPECT_TRUE(out.greedy_report.has_value());
    spec.kind = GeometryKind::plane;
    spec.q = 3;
    EXPECT_FALSE(generate(spec).greedy_report.has_value());
    EXPECT_EQ(parse_geometry_kind("hexagon"), GeometryKind::hexagon);
    EXPECT_FALSE(parse_geometry_kind("octagon").has_value());
}
