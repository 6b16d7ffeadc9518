#include <gtest/gtest.h>

#include <algorithm>

#include "coopcolor/constructions.hpp"
#include "coopcolor/graph.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace coopcolor;
using coopcolor::testing::Rng;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            edges.push_back({u, static_cast<Vertex>(a + v)});
    return Graph(a + b, edges);
}

// Hub 0 joined to the cycle 1..k.
Graph wheel(std::size_t k) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, static_cast<Vertex>(i % k + 1)});
    }
    return Graph(k + 1, edges);
}

TagSet only_tags(const Graph& g) {
    auto comps = classify_components(g);
    EXPECT_EQ(comps.size(), 1u);
    return comps.at(0).tags;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsOutOfRangeAndDuplicates) {
    EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
    EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
    Graph g(3, {{2, 0}, {1, 0}});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_FALSE(g.adjacent(1, 2));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(GraphFamily, MembersMustShareVertexCount) {
    EXPECT_THROW(GraphFamily(3, {Graph(3), Graph(2)}), InputError);
    EXPECT_NO_THROW(GraphFamily(0, {}));
}

TEST(EdgeColoredMultigraph, ParallelEdgesOnlyAcrossColors) {
    EXPECT_NO_THROW(EdgeColoredMultigraph(2, 2, {{0, 1, 1}, {1, 0, 2}}));
    EXPECT_THROW(EdgeColoredMultigraph(2, 2, {{0, 1, 1}, {1, 0, 1}}), InputError);
    EXPECT_THROW(EdgeColoredMultigraph(2, 2, {{0, 1, 3}}), InputError);
    EXPECT_THROW(EdgeColoredMultigraph(2, 2, {{0, 1, 0}}), InputError);
    EXPECT_THROW(EdgeColoredMultigraph(2, 2, {{0, 0, 1}}), InputError);
}

TEST(ToFamily, SingleEdgeOneColor) {
    auto f = to_family(EdgeColoredMultigraph(2, 1, {{0, 1, 1}}));
    ASSERT_EQ(f.member_count(), 1u);
    EXPECT_EQ(f.member(0), Graph(2, {{0, 1}}));
}

TEST(ToFamily, H1SplitsIntoTwoThreeEdgeGraphs) {
    auto f = to_family(gadget(GadgetId::h1));
    ASSERT_EQ(f.member_count(), 2u);
    EXPECT_EQ(f.member(0), Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(f.member(1), Graph(4, {{0, 2}, {1, 2}, {1, 3}}));
}

TEST(ToFamily, NoEdgesGivesEmptyMembers) {
    auto f = to_family(EdgeColoredMultigraph(5, 3, {}));
    ASSERT_EQ(f.member_count(), 3u);
    for (const auto& g : f.members()) {
        EXPECT_EQ(g.order(), 5u);
        EXPECT_EQ(g.size(), 0u);
    }
}

TEST(ToAdapted, Examples) {
    EXPECT_TRUE(to_adapted(GraphFamily(3, {Graph(3)})).edges().empty());
    Graph k2(2, {{0, 1}});
    auto ecm = to_adapted(GraphFamily(2, {k2, k2}));
    EXPECT_EQ(std::vector<ColoredEdge>(ecm.edges().begin(), ecm.edges().end()),
              (std::vector<ColoredEdge>{{0, 1, 1}, {0, 1, 2}}));
    EXPECT_EQ(ecm.color_count(), 2u);
}

TEST(ToAdapted, TreeCounterexampleRoundTrip) {
    auto f = to_family(gadget(GadgetId::tree_counterexample));
    EXPECT_EQ(to_family(to_adapted(f)), f);
}

TEST(ToAdapted, RoundTripProperty) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto n = rng.below(9);
        auto m = rng.below(5);
        auto family = coopcolor::testing::random_family(n, m, 0.4, rng);
        EXPECT_EQ(to_family(to_adapted(family)), family);
        auto ecm = to_adapted(family);
        EXPECT_EQ(to_adapted(to_family(ecm)), ecm);
    }
}

TEST(MaxDegree, Examples) {
    EXPECT_EQ(max_degree(Graph(3)), 0u);
    EXPECT_EQ(max_degree(wheel(4)), 4u);
    EXPECT_EQ(max_degree(complete_bipartite(1, 7)), 7u);
}

TEST(IsChordal, Examples) {
    EXPECT_TRUE(is_chordal(complete(4)));
    EXPECT_FALSE(is_chordal(cycle(4)));
    std::vector<Edge> k5e;
    for (const auto& e : complete(5).edges())
        if (!(e.u == 0 && e.v == 1))
            k5e.push_back(e);
    EXPECT_TRUE(is_chordal(Graph(5, k5e)));
    EXPECT_FALSE(is_chordal(cycle(5)));
    EXPECT_FALSE(is_chordal(wheel(4)));
    EXPECT_TRUE(is_chordal(Graph(0)));
}

// All labelled graphs on up to 7 vertices against the induced-cycle oracle.
TEST(IsChordal, AgreesWithOracleOnAllSmallGraphs) {
    for (std::size_t n = 0; n <= 7; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.push_back({u, v});
        std::size_t disagreements = 0;
        std::vector<Edge> edges;
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            edges.clear();
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1u)
                    edges.push_back(pairs[k]);
            Graph g(n, edges);
            if (is_chordal(g) == coopcolor::testing::has_chordless_long_cycle(g))
                ++disagreements;
        }
        EXPECT_EQ(disagreements, 0u) << "n=" << n;
    }
}

TEST(ClassifyComponents, K4IsWheel) {
    auto tags = only_tags(complete(4));
    EXPECT_TRUE(tags.contains(ComponentTag::wheel));
    EXPECT_FALSE(tags.contains(ComponentTag::generalized_theta));
    EXPECT_FALSE(tags.contains(ComponentTag::other));
}

TEST(ClassifyComponents, K23IsCompleteBipartiteAndTheta) {
    auto tags = only_tags(complete_bipartite(2, 3));
    EXPECT_TRUE(tags.contains(ComponentTag::complete_bipartite));
    EXPECT_TRUE(tags.contains(ComponentTag::generalized_theta));
    EXPECT_FALSE(tags.contains(ComponentTag::balanced_complete_bipartite));
}

TEST(ClassifyComponents, K22CarriesThreeTags) {
    auto tags = only_tags(complete_bipartite(2, 2));
    EXPECT_TRUE(tags.contains(ComponentTag::balanced_complete_bipartite));
    EXPECT_TRUE(tags.contains(ComponentTag::cycle));
    EXPECT_TRUE(tags.contains(ComponentTag::generalized_theta));
}

TEST(ClassifyComponents, HubOverFourCycleIsW4) {
    auto tags = only_tags(wheel(4));
    EXPECT_TRUE(tags.contains(ComponentTag::wheel));
    EXPECT_FALSE(tags.contains(ComponentTag::fan));
}

TEST(ClassifyComponents, FansPathsTreesAndOther) {
    // Hub 0 over path 1-2-3-4.
    Graph fan(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    EXPECT_TRUE(only_tags(fan).contains(ComponentTag::fan));
    EXPECT_FALSE(only_tags(fan).contains(ComponentTag::wheel));

    auto path = only_tags(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_TRUE(path.contains(ComponentTag::path));
    EXPECT_TRUE(path.contains(ComponentTag::tree));
    EXPECT_FALSE(path.contains(ComponentTag::generalized_theta));

    auto star = only_tags(complete_bipartite(1, 3));
    EXPECT_TRUE(star.contains(ComponentTag::tree));
    EXPECT_FALSE(star.contains(ComponentTag::path));
    EXPECT_TRUE(star.contains(ComponentTag::complete_bipartite));

    auto k5 = only_tags(complete(5));
    EXPECT_EQ(k5, (TagSet{ComponentTag::other}));

    // theta_{1,2,3}: 0 and 1 joined directly, via 2, and via 3-4.
    Graph theta(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});
    EXPECT_TRUE(only_tags(theta).contains(ComponentTag::generalized_theta));
}

TEST(ClassifyComponents, PerComponentWithSides) {
    // K_{2,3} on 0..4, isolated 5, triangle 6,7,8.
    Graph g(9, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {6, 7}, {7, 8}, {6, 8}});
    auto comps = classify_components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_EQ(comps[0].sides, std::make_pair(std::size_t{2}, std::size_t{3}));
    EXPECT_TRUE(comps[1].tags.contains(ComponentTag::path));
    EXPECT_TRUE(comps[2].tags.contains(ComponentTag::cycle));
    EXPECT_TRUE(comps[2].tags.contains(ComponentTag::fan));  // P2 + K1
    EXPECT_FALSE(comps[2].sides.has_value());
}

TEST(ClassifyComponents, InvariantUnderRelabeling) {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto n = rng.between(1, 8);
        auto g = coopcolor::testing::random_graph(n, 0.35, rng);
        auto h = coopcolor::testing::relabel(g, rng.permutation(n));
        auto key = [](const Graph& x) {
            std::vector<std::pair<std::size_t, std::vector<ComponentTag>>> out;
            for (const auto& c : classify_components(x))
                out.emplace_back(c.vertices.size(), c.tags.tags());
            std::sort(out.begin(), out.end());
            return out;
        };
        EXPECT_EQ(key(g), key(h));
    }
}
