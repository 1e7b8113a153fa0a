#include <doctest.h>

#include <random>

#include "gplus/families.hpp"
#include "gplus/graph.hpp"
#include "oracles.hpp"

using namespace gplus;

namespace {

LabeledGraph labeled_k1(Label l)
{
    LabeledGraph g(1);
    g.set_label(0, std::move(l));
    return g;
}

}  // namespace

TEST_CASE("bfs distances on small graphs")
{
    CHECK(bfs_distances(LabeledGraph::path(3), 0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(bfs_distances(LabeledGraph::complete(4), 2) == std::vector<std::size_t>{1, 1, 0, 1});
    CHECK_THROWS_AS(bfs_distances(LabeledGraph::path(3), 3), IndexOutOfRange);

    auto two = LabeledGraph(2);
    CHECK(bfs_distances(two, 0)[1] == unreachable);
}

TEST_CASE("222 and w3 are a diametral pair of G+(2,3)")
{
    auto g = build_Gplus(2, 3);
    auto from = *g.find(Label::combination({2, 2, 2}));
    auto to = *g.find(Label::resolver(3));
    CHECK(bfs_distances(g, from)[to] == 2);
}

TEST_CASE("diameter and radius")
{
    CHECK(diameter(build_G(4, 3)) == 3);
    CHECK(radius(build_G(3, 3)) == 1);
    CHECK(diameter(LabeledGraph(1)) == 0);
    CHECK(radius(LabeledGraph(1)) == 0);
    CHECK_THROWS_AS(diameter(LabeledGraph(2)), DisconnectedGraph);
    CHECK_THROWS_AS(radius(disjoint_union(LabeledGraph::path(2), LabeledGraph(1))),
                    DisconnectedGraph);
}

TEST_CASE("disjoint union")
{
    auto two = disjoint_union(LabeledGraph(1), LabeledGraph(1));
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    auto with_gplus = disjoint_union(LabeledGraph(1), build_Gplus(2, 2));
    CHECK(with_gplus.order() == 6);
    CHECK(with_gplus.size() == build_Gplus(2, 2).size());

    auto k1k3 = disjoint_union(LabeledGraph(1), LabeledGraph::complete(3));
    CHECK(k1k3.order() == 4);
    CHECK(k1k3.size() == 3);
    CHECK_FALSE(k1k3.adjacent(0, 1));
    CHECK(k1k3.adjacent(1, 2));
}

TEST_CASE("union keeps labels distinct by priming collisions")
{
    auto a = labeled_k1(Label::resolver(1));
    auto u = disjoint_union(a, disjoint_union(a, a));
    CHECK(u.label(0)->to_string() == "w1");
    CHECK(u.label(1)->to_string() == "w1'");
    CHECK(u.label(2)->to_string() == "w1''");
    CHECK_NOTHROW(u.check_invariants());
}

TEST_CASE("join")
{
    auto k2 = join(LabeledGraph(1), LabeledGraph(1));
    CHECK(are_adjacency_equal(k2, LabeledGraph::complete(2)));

    auto paw = join(LabeledGraph(1), disjoint_union(LabeledGraph(1), LabeledGraph::complete(2)));
    CHECK(paw.order() == 4);
    CHECK(paw.size() == 4);
    CHECK(degree_sequence(paw) == std::vector<std::size_t>{3, 2, 2, 1});

    auto joined = align(gplus2_by_join(build_Gplus(2, 2), 3));
    CHECK(are_adjacency_equal(joined, align(build_Gplus(2, 3))));
}

TEST_CASE("degree sequences")
{
    CHECK(degree_sequence(build_Gplus(2, 3)) == std::vector<std::size_t>{6, 5, 4, 3, 3, 2, 1});
    CHECK(degree_sequence(LabeledGraph(1)) == std::vector<std::size_t>{0});
    CHECK(degree_sequence(LabeledGraph::complete(4)) == std::vector<std::size_t>{3, 3, 3, 3});
}

TEST_CASE("adjacency equality")
{
    CHECK(are_adjacency_equal(LabeledGraph::complete(2), LabeledGraph::complete(2)));
    CHECK_FALSE(are_adjacency_equal(LabeledGraph::complete(2), LabeledGraph(2)));
    CHECK_THROWS_AS(are_adjacency_equal(LabeledGraph(2), LabeledGraph(3)), SizeMismatch);
    CHECK(are_adjacency_equal(align(build_Gplus2_iterative(4)), build_Gplus2_indexed(4)));
}

TEST_CASE("graph invariants reject bad input")
{
    LabeledGraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), IndexOutOfRange);
    g.set_label(0, Label::resolver(1));
    CHECK_THROWS_AS(g.set_label(1, Label::resolver(1)), GraphError);
    CHECK_THROWS_AS(Label::combination({2, 1}), GraphError);
}

TEST_CASE("property: union/join edge counts, eccentricity bounds, triangle inequality")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n1 = 1 + rng() % 7;
        std::size_t n2 = 1 + rng() % 7;
        auto g1 = oracle::random_graph(n1, 0.4, rng);
        auto g2 = oracle::random_graph(n2, 0.4, rng);

        auto u = disjoint_union(g1, g2);
        auto j = join(g1, g2);
        CHECK(u.size() == g1.size() + g2.size());
        CHECK(j.size() == g1.size() + g2.size() + n1 * n2);
        CHECK_NOTHROW(u.check_invariants());
        CHECK_NOTHROW(j.check_invariants());

        auto seq = degree_sequence(j);
        std::size_t sum = 0;
        for (auto d : seq)
            sum += d;
        CHECK(sum == 2 * j.size());
        CHECK(std::is_sorted(seq.rbegin(), seq.rend()));

        auto c = oracle::random_connected_graph(2 + rng() % 10, 0.2, rng);
        auto diam = diameter(c);
        auto rad = radius(c);
        CHECK(rad <= diam);
        CHECK(diam <= 2 * rad);

        auto ref = oracle::floyd_warshall(c);
        DistanceMatrix dm(c);
        for (Vertex a = 0; a < c.order(); ++a)
            for (Vertex b = 0; b < c.order(); ++b) {
                CHECK(dm(a, b) == ref[a][b]);
                Vertex m = rng() % c.order();
                CHECK(dm(a, b) <= dm(a, m) + dm(m, b));
            }
        CHECK(component_count(c) == 1);
    }
}

TEST_CASE("permuted relabels vertices consistently")
{
    auto g = build_Gplus(2, 2);
    std::vector<Vertex> order{4, 3, 2, 1, 0};
    auto p = g.permuted(order);
    for (Vertex a = 0; a < 5; ++a) {
        CHECK(p.label(a) == g.label(order[a]));
        for (Vertex b = 0; b < 5; ++b)
            CHECK(p.adjacent(a, b) == g.adjacent(order[a], order[b]));
    }
    std::vector<Vertex> bad{0, 0, 1, 2, 3};
    CHECK_THROWS_AS(g.permuted(bad), GraphError);
}
