#include <gtest/gtest.h>

#include "hgirth/error.hpp"
#include "hgirth/geometry.hpp"
#include "hgirth/girth.hpp"
#include "hgirth/transforms.hpp"
#include "support/oracles.hpp"

using namespace hgirth;

TEST(GirthBipartite, HeawoodIsSixAgreeingWithBruteForce) {
    const auto g = incidence_graph(oracle::fano());
    EXPECT_EQ(oracle::brute_force_bipartite_girth(g, 14), 6u);
    const auto rep = girth_bipartite(g);
    EXPECT_EQ(rep.girth, Girth::finite(6));
    EXPECT_EQ(rep.witness.size(), 6u);
    EXPECT_TRUE(is_valid_cycle(g, rep.witness));
}

TEST(GirthBipartite, SingleFourCycle) {
    const auto g = BipartiteGraph::from_incidences(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    EXPECT_EQ(girth_bipartite(g).girth, Girth::finite(4));
}

TEST(GirthBipartite, TreeIsInfinite) {
    // Star plus a pendant path.
    const auto g = BipartiteGraph::from_incidences(3, 2, {{0, 0}, {1, 0}, {2, 0}, {2, 1}});
    const auto rep = girth_bipartite(g);
    EXPECT_TRUE(rep.girth.is_infinite());
    EXPECT_TRUE(rep.witness.empty());
}

TEST(GirthBipartite, EvenAndMatchesBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_bipartite(rng, 7, 6, 0.12 + 0.02 * (trial % 10));
        const auto rep = girth_bipartite(g);
        const auto brute = oracle::brute_force_bipartite_girth(g, 13);
        if (rep.girth.is_finite()) {
            ASSERT_EQ(rep.girth.value() % 2, 0u);
            ASSERT_TRUE(is_valid_cycle(g, rep.witness));
            ASSERT_EQ(brute, rep.girth.value());
        } else {
            ASSERT_FALSE(brute.has_value());
        }
    }
}

TEST(GirthHypergraph, Fano) {
    const auto rep = girth_hypergraph(oracle::fano());
    EXPECT_EQ(rep.girth, Girth::finite(3));
    ASSERT_TRUE(rep.witness);
    EXPECT_TRUE(is_valid_cycle(oracle::fano(), *rep.witness));
}

TEST(GirthHypergraph, TwoEdgesSharingAPairGiveLengthTwo) {
    const auto h = Hypergraph::from_edges(4, {{0, 1, 2}, {1, 2, 3}});
    const auto rep = girth_hypergraph(h);
    EXPECT_EQ(rep.girth, Girth::finite(2));
    EXPECT_TRUE(is_valid_cycle(h, *rep.witness));
}

TEST(GirthHypergraph, MatchingIsInfinite) {
    EXPECT_TRUE(girth_hypergraph(oracle::matching(4, 3)).girth.is_infinite());
}

TEST(GirthOracle, Fano) { EXPECT_EQ(girth_oracle(oracle::fano(), 6).girth, Girth::finite(3)); }

TEST(GirthOracle, MatchingReportsSearchLimit) {
    const auto rep = girth_oracle(oracle::matching(5, 3), 10);
    EXPECT_EQ(rep.girth, Girth::none_up_to(10));
    EXPECT_TRUE(rep.girth.at_least(11));
    EXPECT_FALSE(rep.girth.at_least(12));
}

TEST(GirthOracle, SplitCayleyHexagonNeighborhoodHypergraph) {
    const auto h = transforms::neighborhood_hypergraph(geometry::split_cayley_hexagon(2));
    EXPECT_EQ(girth_oracle(h, 5).girth, Girth::none_up_to(5));
    EXPECT_EQ(girth_oracle(h, 6).girth, Girth::finite(6));
}

TEST(GirthOracle, BudgetExceededIsAResourceError) {
    const auto h = oracle::matching(10, 3);
    OracleOptions tight;
    tight.max_incidences = 29;
    EXPECT_THROW(girth_oracle(h, 4, tight), ResourceError);
    EXPECT_THROW(girth_oracle(h, 1), PreconditionError);
}

TEST(GirthOracle, AgreesWithHalvingIdentityOnRandomHypergraphs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 10 + trial % 6, 3 + trial % 7, 2, 4);
        const auto fast = girth_hypergraph(h);
        const auto slow = girth_oracle(h, 8);
        if (fast.girth.is_finite() && fast.girth.value() <= 8) {
            ASSERT_EQ(slow.girth, fast.girth) << "trial " << trial;
            ASSERT_TRUE(is_valid_cycle(h, *fast.witness));
            ASSERT_TRUE(is_valid_cycle(h, *slow.witness));
        } else {
            ASSERT_EQ(slow.girth, Girth::none_up_to(8)) << "trial " << trial;
        }
    }
}

TEST(CycleValidation, RejectsBrokenWitnesses) {
    const auto h = oracle::fano();
    HyperCycle ok{{0, 1, 3}, {0, 3, 1}};
    ASSERT_TRUE(is_valid_cycle(h, ok));
    EXPECT_FALSE(is_valid_cycle(h, HyperCycle{{0, 1, 3}, {0, 0, 1}}));  // repeated edge
    EXPECT_FALSE(is_valid_cycle(h, HyperCycle{{0, 0, 3}, {0, 3, 1}}));  // repeated vertex
    EXPECT_FALSE(is_valid_cycle(h, HyperCycle{{0, 1, 4}, {0, 3, 1}}));  // containment broken
    EXPECT_FALSE(is_valid_cycle(h, HyperCycle{{0}, {0}}));
}

TEST(GirthValue, Rendering) {
    EXPECT_EQ(Girth::finite(6).to_string(), "6");
    EXPECT_EQ(Girth::infinite().to_string(), "inf");
    EXPECT_EQ(Girth::none_up_to(5).to_string(), "inf-up-to 5");
    EXPECT_THROW(Girth::infinite().value(), PreconditionError);
}
