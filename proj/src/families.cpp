#include "gplus/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace gplus {

void FamilyParams::validate() const
{
    if (d < 1 || c < 1)
        throw std::invalid_argument("family parameters need d >= 1 and c >= 1");
}

std::vector<Label> gen_labels(unsigned d, unsigned c)
{
    FamilyParams{d, c}.validate();
    std::vector<Label> out;
    std::vector<unsigned> seq(c, 1);
    while (true) {
        out.push_back(Label::combination(seq));
        // Bump the rightmost entry below d and flatten the tail to it.
        std::size_t i = c;
        while (i > 0 && seq[i - 1] == d)
            --i;
        if (i == 0)
            break;
        unsigned v = seq[i - 1] + 1;
        std::fill(seq.begin() + static_cast<std::ptrdiff_t>(i - 1), seq.end(), v);
    }
    return out;
}

namespace {

bool close(const Label& x, const Label& y)
{
    for (std::size_t i = 0; i < x.seq.size(); ++i) {
        int diff = static_cast<int>(x.seq[i]) - static_cast<int>(y.seq[i]);
        if (std::abs(diff) > 1)
            return false;
    }
    return true;
}

}  // namespace

LabeledGraph build_G(unsigned d, unsigned c)
{
    auto labels = gen_labels(d, c);
    LabeledGraph g(labels.size());
    for (Vertex u = 0; u < labels.size(); ++u) {
        g.set_label(u, labels[u]);
        for (Vertex v = u + 1; v < labels.size(); ++v)
            if (close(labels[u], labels[v]))
                g.add_edge(u, v);
    }
    g.check_invariants();
    return g;
}

LabeledGraph build_Gplus(unsigned d, unsigned c)
{
    LabeledGraph g = build_G(d, c);
    const std::size_t base = g.order();
    for (unsigned i = 1; i <= c; ++i) {
        Vertex w = g.add_vertex(Label::resolver(i));
        for (Vertex v = 0; v < base; ++v)
            if (g.label(v)->ones() >= i)
                g.add_edge(w, v);
    }
    g.check_invariants();
    return g;
}

LabeledGraph build_Gplus2_iterative(unsigned c)
{
    FamilyParams{2, c}.validate();
    LabeledGraph g(3);
    g.set_label(0, Label::combination({2}));
    g.set_label(1, Label::combination({1}));
    g.set_label(2, Label::resolver(1));
    g.add_edge(0, 1);
    g.add_edge(1, 2);

    for (unsigned k = 2; k <= c; ++k) {
        g = append_symbol(g, 2);
        g.add_vertex(Label::resolver(k));
        Vertex top = g.add_vertex(Label::combination(std::vector<unsigned>(k, 1)));
        for (Vertex v = 0; v < top; ++v)
            g.add_edge(top, v);
    }
    g.check_invariants();
    return g;
}

LabeledGraph build_Gplus2_indexed(unsigned c)
{
    FamilyParams{2, c}.validate();
    const std::size_t n = 2 * std::size_t{c} + 1;
    LabeledGraph g(n);
    for (std::size_t h = 1; h <= c; ++h)
        for (std::size_t j = h + 1; j <= 2 * std::size_t{c} + 2 - h; ++j)
            g.add_edge(h - 1, j - 1);

    for (unsigned k = 1; k <= c + 1; ++k) {
        std::vector<unsigned> seq(c + 1 - k, 1);
        seq.resize(c, 2);
        g.set_label(k - 1, Label::combination(std::move(seq)));
    }
    for (unsigned i = 1; i <= c; ++i)
        g.set_label(c + i, Label::resolver(i));
    g.check_invariants();
    return g;
}

FamilyOrder expected_order(unsigned d, unsigned c)
{
    FamilyParams{d, c}.validate();
    BigInt base = binomial(d + c - 1, d - 1);
    return {base, base + c};
}

std::vector<Vertex> canonical_order(const LabeledGraph& g)
{
    if (!g.fully_labeled())
        throw GraphError("canonical order needs every vertex labeled");
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    auto key = [&](Vertex v) {
        const Label& l = *g.label(v);
        long ones = l.is_combination() ? static_cast<long>(l.ones()) : 0;
        return std::make_tuple(l.is_resolver(), -ones, l.seq, l.index, l.copy);
    };
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key(a) < key(b); });
    return order;
}

LabeledGraph align(const LabeledGraph& g)
{
    auto order = canonical_order(g);
    return g.permuted(order);
}

LabeledGraph append_symbol(const LabeledGraph& g, unsigned symbol)
{
    LabeledGraph out = g;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& l = g.label(v);
        if (l && l->is_combination()) {
            Label grown = *l;
            grown.seq.push_back(symbol);
            if (!std::is_sorted(grown.seq.begin(), grown.seq.end()))
                throw GraphError("appending " + std::to_string(symbol) + " to " + l->to_string() +
                                 " breaks monotonicity");
            out.set_label(v, std::move(grown));
        }
    }
    return out;
}

LabeledGraph gplus2_by_join(const LabeledGraph& prev, unsigned c)
{
    if (c < 2)
        throw std::invalid_argument("join recursion starts at c = 2");
    LabeledGraph top(1);
    top.set_label(0, Label::combination(std::vector<unsigned>(c, 1)));
    LabeledGraph resolver(1);
    resolver.set_label(0, Label::resolver(c));
    return join(top, disjoint_union(resolver, append_symbol(prev, 2)));
}

}  // namespace gplus
