#include <gtest/gtest.h>

#include "hgirth/error.hpp"
#include "hgirth/hypergraph.hpp"
#include "support/oracles.hpp"

using namespace hgirth;

TEST(Hypergraph, CanonicalizesEdgeOrderAndVertexOrder) {
    auto h = Hypergraph::from_edges(4, {{3, 1}, {0, 2}, {0, 1}});
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(Hypergraph, RejectsDuplicateEdgeNamingIt) {
    try {
        Hypergraph::from_edges(3, {{0, 1}, {1, 0}});
        FAIL() << "expected an error";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("{0,1}"), std::string::npos) << e.what();
    }
}

TEST(Hypergraph, RejectsOutOfRangeEmptyAndRepeatedVertex) {
    EXPECT_THROW(Hypergraph::from_edges(3, {{0, 3}}), PreconditionError);
    EXPECT_THROW(Hypergraph::from_edges(3, {{}}), PreconditionError);
    EXPECT_THROW(Hypergraph::from_edges(3, {{1, 1}}), PreconditionError);
}

TEST(Validate, FanoIsThreeUniformThreeRegular) {
    const auto h = oracle::fano();
    // Degrees counted straight off the listed triples.
    std::vector<int> deg(7, 0);
    for (const auto& e : h.edges())
        for (auto v : e) ++deg[v];
    for (int d : deg) ASSERT_EQ(d, 3);

    const auto s = validate(h);
    EXPECT_EQ(s.uniformity, 3u);
    EXPECT_EQ(s.regularity, 3u);
    EXPECT_EQ(s.isolated_vertices, 0u);
    EXPECT_FALSE(s.vacuous_uniformity);
}

TEST(Validate, EmptyEdgeSetIsVacuous) {
    const auto s = validate(Hypergraph::from_edges(5, {}));
    EXPECT_FALSE(s.uniformity.has_value());
    EXPECT_TRUE(s.vacuous_uniformity);
    EXPECT_EQ(s.regularity, 0u);
    EXPECT_EQ(s.isolated_vertices, 5u);
}

TEST(Validate, VertexlessHasRegularityZero) {
    const auto s = validate(Hypergraph::from_edges(0, {}));
    EXPECT_EQ(s.regularity, 0u);
}

TEST(Validate, MixedSizesHaveNeitherUniformityNorRegularity) {
    const auto s = validate(Hypergraph::from_edges(3, {{0, 1, 2}, {0, 1}}));
    EXPECT_FALSE(s.uniformity.has_value());
    EXPECT_FALSE(s.vacuous_uniformity);
    EXPECT_FALSE(s.regularity.has_value());
}

TEST(IncidenceGraph, Fano) {
    const auto g = incidence_graph(oracle::fano());
    EXPECT_EQ(g.n_left(), 7u);
    EXPECT_EQ(g.n_right(), 7u);
    EXPECT_EQ(g.incidences().size(), 21u);
    EXPECT_EQ(g.biregularity(), (std::pair<std::size_t, std::size_t>{3, 3}));
}

TEST(IncidenceGraph, SingleEdgeAndEmpty) {
    const auto g = incidence_graph(Hypergraph::from_edges(2, {{0, 1}}));
    EXPECT_EQ(g.n_left(), 2u);
    EXPECT_EQ(g.n_right(), 1u);
    EXPECT_EQ(g.incidences().size(), 2u);

    const auto e = incidence_graph(Hypergraph::from_edges(4, {}));
    EXPECT_EQ(e.n_left(), 4u);
    EXPECT_EQ(e.n_right(), 0u);
    EXPECT_TRUE(e.incidences().empty());
}

TEST(IncidenceGraph, PreservesIncidenceCountOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 12, 10, 1, 6);
        const auto g = incidence_graph(h);
        ASSERT_EQ(g.incidences().size(), h.num_incidences());
        for (EdgeId j = 0; j < h.num_edges(); ++j) {
            const auto nb = g.right_neighbors(j);
            ASSERT_EQ(Edge(nb.begin(), nb.end()), h.edge(j));
        }
    }
}

TEST(BipartiteGraph, RejectsDuplicatesAndRange) {
    EXPECT_THROW(BipartiteGraph::from_incidences(2, 2, {{0, 0}, {0, 0}}), PreconditionError);
    EXPECT_THROW(BipartiteGraph::from_incidences(2, 2, {{2, 0}}), PreconditionError);
    EXPECT_THROW(BipartiteGraph::from_incidences(2, 2, {{0, 2}}), PreconditionError);
}
