#include <doctest.h>

#include <numeric>

#include "gplus/families.hpp"
#include "gplus/spectra.hpp"
#include "oracles.hpp"

using namespace gplus;

namespace {

std::vector<std::string> names(const std::vector<Label>& labels)
{
    std::vector<std::string> out;
    for (const auto& l : labels)
        out.push_back(l.to_string());
    return out;
}

std::vector<std::string> names(const LabeledGraph& g)
{
    std::vector<std::string> out;
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(g.label(v)->to_string());
    return out;
}

}  // namespace

TEST_CASE("combination labels in lexicographic order")
{
    CHECK(names(gen_labels(4, 3)) ==
          std::vector<std::string>{"111", "112", "113", "114", "122", "123", "124",
                                   "133", "134", "144", "222", "223", "224", "233",
                                   "234", "244", "333", "334", "344", "444"});
    CHECK(names(gen_labels(1, 5)) == std::vector<std::string>{"11111"});
    CHECK(names(gen_labels(2, 3)) == std::vector<std::string>{"111", "112", "122", "222"});
    CHECK(gen_labels(11, 1).back().to_string() == "11");
    CHECK(gen_labels(11, 2).back().to_string() == "11.11");
    CHECK_THROWS_AS(gen_labels(0, 3), std::invalid_argument);
}

TEST_CASE("vertex counts follow the binomial formula")
{
    for (unsigned d = 1; d <= 6; ++d)
        for (unsigned c = 1; c <= 6; ++c) {
            auto expected = expected_order(d, c);
            CHECK(BigInt(gen_labels(d, c).size()) == binomial(d + c - 1, c));
            CHECK(BigInt(build_G(d, c).order()) == expected.base);
            CHECK(BigInt(build_Gplus(d, c).order()) == expected.plus);
        }
    CHECK(expected_order(4, 3).base == 20);
    CHECK(expected_order(4, 3).plus == 23);
    CHECK(expected_order(2, 6).base == 7);
    CHECK(expected_order(2, 6).plus == 13);
    CHECK(expected_order(1, 9).base == 1);
    CHECK(expected_order(1, 9).plus == 10);
}

TEST_CASE("G(d,c) special cases")
{
    for (unsigned c = 1; c <= 6; ++c)
        CHECK(are_adjacency_equal(build_G(2, c), LabeledGraph::complete(c + 1)));
    for (unsigned d = 1; d <= 6; ++d)
        CHECK(are_adjacency_equal(build_G(d, 1), LabeledGraph::path(d)));
    auto g33 = build_G(3, 3);
    CHECK(g33.order() == 10);
    CHECK(diameter(g33) == 2);
}

TEST_CASE("G+(d,c) orders and resolver degrees")
{
    CHECK(build_Gplus(2, 6).order() == 13);
    CHECK(build_Gplus(4, 3).order() == 23);
    auto g = build_Gplus(2, 3);
    CHECK(g.degree(*g.find(Label::resolver(1))) == 3);
    CHECK(g.degree(*g.find(Label::resolver(2))) == 2);
    CHECK(g.degree(*g.find(Label::resolver(3))) == 1);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = i + 1; j <= 3; ++j)
            CHECK_FALSE(g.adjacent(*g.find(Label::resolver(i)), *g.find(Label::resolver(j))));
}

TEST_CASE("G+(1,c) is a star")
{
    auto g = build_Gplus(1, 3);
    CHECK(g.order() == 4);
    CHECK(degree_sequence(g) == std::vector<std::size_t>{3, 1, 1, 1});
    CHECK(diameter(g) == 2);
    CHECK(diameter(build_Gplus(1, 1)) == 1);
}

TEST_CASE("iterative construction")
{
    auto c1 = build_Gplus2_iterative(1);
    CHECK(are_adjacency_equal(c1, LabeledGraph::path(3)));
    CHECK(names(c1) == std::vector<std::string>{"2", "1", "w1"});

    auto c2 = build_Gplus2_iterative(2);
    CHECK(c2.order() == 5);
    CHECK(degree_sequence(c2) == std::vector<std::size_t>{4, 3, 2, 2, 1});
    CHECK(names(c2) == std::vector<std::string>{"22", "12", "w1", "w2", "11"});

    auto c3 = align(build_Gplus2_iterative(3));
    CHECK(names(c3) == std::vector<std::string>{"111", "112", "122", "222", "w1", "w2", "w3"});
    CHECK(are_adjacency_equal(c3, build_Gplus(2, 3)));
}

TEST_CASE("indexed construction")
{
    auto c1 = build_Gplus2_indexed(1);
    CHECK(c1.size() == 2);
    CHECK(c1.adjacent(0, 1));
    CHECK(c1.adjacent(0, 2));

    auto c2 = build_Gplus2_indexed(2);
    CHECK(c2.size() == 6);
    for (Vertex j = 1; j <= 4; ++j)
        CHECK(c2.adjacent(0, j));
    CHECK(c2.adjacent(1, 2));
    CHECK(c2.adjacent(1, 3));

    auto c3 = build_Gplus2_indexed(3);
    std::vector<std::size_t> diag;
    for (Vertex v = 0; v < c3.order(); ++v)
        diag.push_back(c3.degree(v));
    CHECK(diag == std::vector<std::size_t>{6, 5, 4, 3, 3, 2, 1});
    CHECK(c3.size() == 12);

    for (unsigned c = 1; c <= 10; ++c)
        CHECK(build_Gplus2_indexed(c).size() == std::size_t{c} * (c + 1));
}

TEST_CASE("three constructions agree after alignment, c = 1..10")
{
    for (unsigned c = 1; c <= 10; ++c) {
        CAPTURE(c);
        auto direct = align(build_Gplus(2, c));
        auto iterative = align(build_Gplus2_iterative(c));
        auto indexed = build_Gplus2_indexed(c);
        CHECK(canonical_order(indexed) == [&] {
            std::vector<Vertex> id(indexed.order());
            std::iota(id.begin(), id.end(), Vertex{0});
            return id;
        }());
        CHECK(are_adjacency_equal(direct, iterative));
        CHECK(are_adjacency_equal(direct, indexed));
        CHECK(are_adjacency_equal(iterative, indexed));
        CHECK(names(direct) == names(iterative));
        CHECK(names(direct) == names(indexed));
    }
}

TEST_CASE("join recursion reproduces G+(2,c), c = 2..10")
{
    for (unsigned c = 2; c <= 10; ++c) {
        CAPTURE(c);
        auto joined = align(gplus2_by_join(build_Gplus(2, c - 1), c));
        auto direct = align(build_Gplus(2, c));
        CHECK(are_adjacency_equal(joined, direct));
        CHECK(names(joined) == names(direct));
    }
    CHECK_THROWS_AS(gplus2_by_join(build_Gplus(2, 1), 1), std::invalid_argument);
}

TEST_CASE("the literal union reading of the recursion is disconnected")
{
    auto literal =
        disjoint_union(LabeledGraph(1), disjoint_union(LabeledGraph(1), build_Gplus(2, 2)));
    CHECK(component_count(literal) == 3);
}

TEST_CASE("distance law and diameter/radius of G(d,c)")
{
    for (unsigned d = 1; d <= 6; ++d)
        for (unsigned c = 1; c <= 4; ++c) {
            CAPTURE(d);
            CAPTURE(c);
            auto g = build_G(d, c);
            auto ref = oracle::floyd_warshall(g);
            for (Vertex u = 0; u < g.order(); ++u)
                for (Vertex v = 0; v < g.order(); ++v) {
                    std::size_t m = 0;
                    for (std::size_t i = 0; i < c; ++i) {
                        long diff = long(g.label(u)->seq[i]) - long(g.label(v)->seq[i]);
                        m = std::max<std::size_t>(m, std::size_t(std::labs(diff)));
                    }
                    CHECK(ref[u][v] == m);
                }
            CHECK(diameter(g) == d - 1);
            CHECK(radius(g) == d / 2);
            if (d >= 2)
                CHECK(diameter(build_Gplus(d, c)) == d);
        }
}

TEST_CASE("append_symbol keeps labels nondecreasing")
{
    auto g = append_symbol(build_Gplus(2, 2), 2);
    CHECK(names(g) == std::vector<std::string>{"112", "122", "222", "w1", "w2"});
    CHECK_THROWS_AS(append_symbol(build_G(3, 1), 1), GraphError);
}
