#include <doctest.h>

#include <numeric>
#include <random>

#include "gplus/families.hpp"
#include "gplus/metric.hpp"
#include "oracles.hpp"

using namespace gplus;

namespace {

std::vector<Vertex> resolvers(const LabeledGraph& g, unsigned c)
{
    std::vector<Vertex> W;
    for (unsigned i = 1; i <= c; ++i)
        W.push_back(*g.find(Label::resolver(i)));
    return W;
}

LabeledGraph star(std::size_t leaves)
{
    LabeledGraph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

}  // namespace

TEST_CASE("vector representations")
{
    auto g = build_Gplus(2, 3);
    auto w = resolvers(g, 3);
    std::vector<Vertex> W{w[0], w[1]};
    CHECK(vector_rep(g, w[2], W).entries == std::vector<std::size_t>{2, 2});
    CHECK(vector_rep(g, w[1], W).entries[1] == 0);

    std::vector<Vertex> end{2};
    CHECK(vector_rep(LabeledGraph::path(3), 0, end).entries == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(vector_rep(LabeledGraph(2), 0, end), IndexOutOfRange);
    std::vector<Vertex> other{1};
    CHECK_THROWS_AS(vector_rep(LabeledGraph(2), 0, other), DisconnectedGraph);
}

TEST_CASE("multiset representations")
{
    std::vector<Vertex> ends{0, 2};
    CHECK(multiset_rep(LabeledGraph::path(3), 1, ends).entries == std::vector<std::size_t>{1, 1});

    auto g = build_Gplus(2, 3);
    auto W = resolvers(g, 3);
    auto top = *g.find(Label::combination({2, 2, 2}));
    CHECK(multiset_rep(g, top, W).entries == std::vector<std::size_t>{2, 2, 2});
    auto rep = multiset_rep(g, W[1], W).entries;
    CHECK(std::is_sorted(rep.begin(), rep.end()));
    CHECK(rep.front() == 0);
}

TEST_CASE("resolving predicates on small graphs")
{
    std::vector<Vertex> a{0};
    CHECK(is_resolving(LabeledGraph::path(3), a));
    CHECK_FALSE(is_resolving(LabeledGraph::complete(3), a));
    CHECK(is_multiset_resolving(LabeledGraph::path(3), a));

    auto k3 = LabeledGraph::complete(3);
    for (std::vector<Vertex> W : {std::vector<Vertex>{}, {0}, {1}, {0, 1}, {0, 2}, {1, 2}})
        CHECK_FALSE(is_multiset_resolving(k3, W));

    std::vector<Vertex> two_leaves{1, 2};
    CHECK_FALSE(is_multiset_resolving(star(3), two_leaves));
    CHECK(oracle::resolves(star(3), two_leaves, true, false) == false);

    std::vector<Vertex> all{0, 1, 2};
    CHECK(is_outer_multiset_resolving(k3, all));
    CHECK_FALSE(is_outer_multiset_resolving(k3, a));
}

TEST_CASE("resolvers of G+(2,3)")
{
    auto g = build_Gplus(2, 3);
    auto W = resolvers(g, 3);
    CHECK(is_resolving(g, W));
    CHECK_FALSE(is_multiset_resolving(g, W));
    CHECK(is_outer_multiset_resolving(g, W));
}

TEST_CASE("resolvers outer-resolve G+(d,c) for d in {2,3}")
{
    for (unsigned d = 2; d <= 3; ++d)
        for (unsigned c = 1; c <= 4; ++c) {
            CAPTURE(d);
            CAPTURE(c);
            auto g = build_Gplus(d, c);
            auto W = resolvers(g, c);
            CHECK(is_outer_multiset_resolving(g, W));
            CHECK(oracle::resolves(g, W, true, true));
        }
    auto g41 = build_Gplus(4, 1);
    CHECK(is_outer_multiset_resolving(g41, resolvers(g41, 1)));
}

TEST_CASE("resolvers fail to outer-resolve G+(4,c) for c >= 2")
{
    // 13 and 14 both reach w1 in one step and w2 in three (through w1 and 11).
    auto g = build_Gplus(4, 2);
    auto W = resolvers(g, 2);
    auto a = *g.find(Label::combination({1, 3}));
    auto b = *g.find(Label::combination({1, 4}));
    CHECK(multiset_rep(g, a, W).entries == std::vector<std::size_t>{1, 3});
    CHECK(multiset_rep(g, b, W).entries == std::vector<std::size_t>{1, 3});
    for (unsigned c = 2; c <= 4; ++c) {
        auto h = build_Gplus(4, c);
        CHECK_FALSE(is_outer_multiset_resolving(h, resolvers(h, c)));
        CHECK_FALSE(oracle::resolves(h, resolvers(h, c), true, true));
    }
}

TEST_CASE("property: predicates agree with the definition-level oracle")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = oracle::random_connected_graph(2 + rng() % 7, 0.3, rng);
        std::vector<Vertex> W;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng() % 3 == 0)
                W.push_back(v);
        CHECK(is_resolving(g, W) == oracle::resolves(g, W, false, false));
        CHECK(is_multiset_resolving(g, W) == oracle::resolves(g, W, true, false));
        CHECK(is_outer_multiset_resolving(g, W) == oracle::resolves(g, W, true, true));
        // Multiset resolving implies vector resolving.
        if (is_multiset_resolving(g, W))
            CHECK(is_resolving(g, W));
    }
}

TEST_CASE("outer multiset dimension of small graphs")
{
    auto p3 = outer_multiset_dimension(LabeledGraph::path(3), 3);
    REQUIRE(p3);
    CHECK(p3->size == 1);
    CHECK(p3->witness == std::vector<Vertex>{0});

    auto k1 = outer_multiset_dimension(LabeledGraph(1), 1);
    REQUIRE(k1);
    CHECK(k1->size == 0);

    CHECK_FALSE(outer_multiset_dimension(LabeledGraph::complete(2), 0));
    auto k2 = outer_multiset_dimension(LabeledGraph::complete(2), 2);
    REQUIRE(k2);
    CHECK(k2->size == 1);

    auto kn = outer_multiset_dimension(LabeledGraph::complete(5), 5);
    REQUIRE(kn);
    CHECK(kn->size == 4);
}

TEST_CASE("outer multiset dimension of G+(d,c), n <= 24")
{
    // Frozen from an independent exhaustive search.
    struct Row {
        unsigned d, c;
        std::size_t dim;
    };
    for (auto [d, c, dim] : {Row{2, 1, 1}, Row{2, 2, 2}, Row{2, 3, 3}, Row{2, 4, 4}, Row{3, 1, 1},
                             Row{3, 2, 2}, Row{3, 3, 3}, Row{3, 4, 4}, Row{4, 1, 1}, Row{4, 2, 3},
                             Row{4, 3, 7}}) {
        CAPTURE(d);
        CAPTURE(c);
        auto g = build_Gplus(d, c);
        auto r = outer_multiset_dimension(g, g.order());
        REQUIRE(r);
        CHECK(r->size == dim);
        CHECK(is_outer_multiset_resolving(g, r->witness));
    }
}

TEST_CASE("property: dimension search is minimal and deterministic")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_connected_graph(3 + rng() % 6, 0.35, rng);
        for (auto kind : {ResolvingKind::Vector, ResolvingKind::Multiset,
                          ResolvingKind::OuterMultiset}) {
            DimensionOptions serial;
            serial.max_size = g.order();
            serial.threads = 1;
            DimensionOptions parallel = serial;
            parallel.threads = 4;
            auto a = resolving_dimension(g, kind, serial);
            auto b = resolving_dimension(g, kind, parallel);
            REQUIRE(a.has_value() == b.has_value());
            if (!a)
                continue;
            CHECK(a->witness == b->witness);
            CHECK(a->size == a->witness.size());
            DistanceMatrix dm(g);
            CHECK(resolves(dm, a->witness, kind));
            for (std::size_t k = 0; k < a->size; ++k) {
                std::vector<Vertex> subset(k);
                std::iota(subset.begin(), subset.end(), Vertex{0});
                do {
                    CHECK_FALSE(resolves(dm, subset, kind));
                } while (next_subset(subset, g.order()));
            }
        }
    }
}

TEST_CASE("multiset dimension can be exhausted")
{
    // In K3 every choice of W leaves two vertices with equal multisets.
    DimensionOptions options;
    options.max_size = 3;
    CHECK_FALSE(resolving_dimension(LabeledGraph::complete(3), ResolvingKind::Multiset, options));
}

TEST_CASE("dimension search enforces the order cap")
{
    auto g = LabeledGraph::path(25);
    DimensionOptions options;
    options.max_size = 1;
    CHECK_THROWS_AS(resolving_dimension(g, ResolvingKind::OuterMultiset, options),
                    OrderCapExceeded);
    options.ignore_cap = true;
    auto r = resolving_dimension(g, ResolvingKind::OuterMultiset, options);
    REQUIRE(r);
    CHECK(r->size == 1);
    CHECK_THROWS_AS(outer_multiset_dimension(LabeledGraph(3), 3), DisconnectedGraph);
}

TEST_CASE("subset ranking")
{
    std::vector<Vertex> s(3);
    std::iota(s.begin(), s.end(), Vertex{0});
    std::uint64_t rank = 0;
    do {
        CHECK(unrank_subset(7, 3, rank) == s);
        ++rank;
    } while (next_subset(s, 7));
    CHECK(rank == 35);
    CHECK_THROWS_AS(unrank_subset(7, 3, 35), std::out_of_range);
}
