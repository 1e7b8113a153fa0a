#include "gplus/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace gplus {

Label Label::combination(std::vector<unsigned> seq)
{
    if (!std::is_sorted(seq.begin(), seq.end()))
        throw GraphError("combination label must be nondecreasing");
    Label l;
    l.kind = Kind::Combination;
    l.seq = std::move(seq);
    return l;
}

Label Label::resolver(unsigned index)
{
    Label l;
    l.kind = Kind::Resolver;
    l.index = index;
    return l;
}

std::size_t Label::ones() const
{
    return static_cast<std::size_t>(std::count(seq.begin(), seq.end(), 1u));
}

std::string Label::to_string() const
{
    std::string s;
    if (kind == Kind::Resolver) {
        s = "w" + std::to_string(index);
    } else {
        bool wide = std::any_of(seq.begin(), seq.end(), [](unsigned x) { return x > 9; });
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (wide && i > 0)
                s += '.';
            s += std::to_string(seq[i]);
        }
    }
    s.append(copy, '\'');
    return s;
}

LabeledGraph::LabeledGraph(std::size_t n) : n_(n), adj_(n * n, false), labels_(n) {}

LabeledGraph LabeledGraph::complete(std::size_t n)
{
    LabeledGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

LabeledGraph LabeledGraph::path(std::size_t n)
{
    LabeledGraph g(n);
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

void LabeledGraph::check_vertex(Vertex v) const
{
    if (v >= n_)
        throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
}

bool LabeledGraph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[u * n_ + v];
}

void LabeledGraph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (adj_[u * n_ + v])
        return;
    adj_[u * n_ + v] = true;
    adj_[v * n_ + u] = true;
    ++edges_;
}

std::size_t LabeledGraph::degree(Vertex v) const
{
    check_vertex(v);
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u)
        d += adj_[v * n_ + u];
    return d;
}

std::vector<Vertex> LabeledGraph::neighbors(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (adj_[v * n_ + u])
            out.push_back(u);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> LabeledGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[u * n_ + v])
                out.emplace_back(u, v);
    return out;
}

Vertex LabeledGraph::add_vertex(std::optional<Label> label)
{
    const std::size_t m = n_ + 1;
    std::vector<bool> grown(m * m, false);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            grown[u * m + v] = adj_[u * n_ + v];
    adj_ = std::move(grown);
    n_ = m;
    labels_.emplace_back();
    if (label)
        set_label(n_ - 1, std::move(*label));
    return n_ - 1;
}

const std::optional<Label>& LabeledGraph::label(Vertex v) const
{
    check_vertex(v);
    return labels_[v];
}

void LabeledGraph::set_label(Vertex v, Label label)
{
    check_vertex(v);
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && labels_[u] == label)
            throw GraphError("duplicate label " + label.to_string());
    labels_[v] = std::move(label);
}

void LabeledGraph::clear_labels()
{
    std::fill(labels_.begin(), labels_.end(), std::nullopt);
}

bool LabeledGraph::fully_labeled() const
{
    return std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

std::optional<Vertex> LabeledGraph::find(const Label& label) const
{
    for (Vertex v = 0; v < n_; ++v)
        if (labels_[v] == label)
            return v;
    return std::nullopt;
}

LabeledGraph LabeledGraph::permuted(std::span<const Vertex> order) const
{
    if (order.size() != n_)
        throw SizeMismatch("permutation length differs from graph order");
    std::vector<bool> seen(n_, false);
    for (Vertex v : order) {
        check_vertex(v);
        if (seen[v])
            throw GraphError("not a permutation");
        seen[v] = true;
    }
    LabeledGraph out(n_);
    for (Vertex i = 0; i < n_; ++i) {
        out.labels_[i] = labels_[order[i]];
        for (Vertex j = i + 1; j < n_; ++j)
            if (adj_[order[i] * n_ + order[j]])
                out.add_edge(i, j);
    }
    return out;
}

void LabeledGraph::check_invariants() const
{
    std::size_t count = 0;
    for (Vertex u = 0; u < n_; ++u) {
        if (adj_[u * n_ + u])
            throw GraphError("self-loop at vertex " + std::to_string(u));
        for (Vertex v = 0; v < n_; ++v) {
            if (adj_[u * n_ + v] != adj_[v * n_ + u])
                throw GraphError("asymmetric adjacency");
            count += adj_[u * n_ + v];
        }
    }
    if (count != 2 * edges_)
        throw GraphError("edge count out of sync");
    std::set<Label> seen;
    for (const auto& l : labels_)
        if (l && !seen.insert(*l).second)
            throw GraphError("duplicate label " + l->to_string());
}

std::vector<std::size_t> bfs_distances(const LabeledGraph& g, Vertex source)
{
    const std::size_t n = g.order();
    if (source >= n)
        throw IndexOutOfRange("source " + std::to_string(source) + " out of range");
    std::vector<std::size_t> dist(n, unreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] == unreachable && g.adjacent(u, v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const LabeledGraph& g) : n_(g.order()), d_(n_ * n_)
{
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < n_; ++t) {
            d_[s * n_ + t] = row[t];
            if (row[t] == unreachable)
                connected_ = false;
        }
    }
}

std::size_t DistanceMatrix::eccentricity(Vertex v) const
{
    if (!connected_)
        throw DisconnectedGraph();
    std::size_t e = 0;
    for (Vertex u = 0; u < n_; ++u)
        e = std::max(e, (*this)(v, u));
    return e;
}

namespace {

std::vector<std::size_t> eccentricities(const LabeledGraph& g)
{
    if (g.order() == 0)
        throw GraphError("empty graph has no eccentricities");
    DistanceMatrix dm(g);
    if (!dm.connected())
        throw DisconnectedGraph();
    std::vector<std::size_t> ecc(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        ecc[v] = dm.eccentricity(v);
    return ecc;
}

}  // namespace

std::size_t diameter(const LabeledGraph& g)
{
    auto ecc = eccentricities(g);
    return *std::max_element(ecc.begin(), ecc.end());
}

std::size_t radius(const LabeledGraph& g)
{
    auto ecc = eccentricities(g);
    return *std::min_element(ecc.begin(), ecc.end());
}

std::size_t component_count(const LabeledGraph& g)
{
    std::vector<bool> seen(g.order(), false);
    std::size_t components = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        ++components;
        auto dist = bfs_distances(g, s);
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist[v] != unreachable)
                seen[v] = true;
    }
    return components;
}

LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2)
{
    const std::size_t n1 = g1.order();
    LabeledGraph out(n1 + g2.order());
    for (auto [u, v] : g1.edges())
        out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        out.add_edge(n1 + u, n1 + v);

    std::set<Label> used;
    for (Vertex v = 0; v < n1; ++v) {
        if (const auto& l = g1.label(v)) {
            out.set_label(v, *l);
            used.insert(*l);
        }
    }
    for (Vertex v = 0; v < g2.order(); ++v) {
        if (const auto& l = g2.label(v)) {
            Label moved = *l;
            while (used.contains(moved))
                ++moved.copy;
            used.insert(moved);
            out.set_label(n1 + v, std::move(moved));
        }
    }
    out.check_invariants();
    return out;
}

LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2)
{
    LabeledGraph out = disjoint_union(g1, g2);
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex v = 0; v < g2.order(); ++v)
            out.add_edge(u, g1.order() + v);
    out.check_invariants();
    return out;
}

std::vector<std::size_t> degree_sequence(const LabeledGraph& g)
{
    std::vector<std::size_t> deg(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

bool are_adjacency_equal(const LabeledGraph& g1, const LabeledGraph& g2)
{
    if (g1.order() != g2.order())
        throw SizeMismatch("graphs have orders " + std::to_string(g1.order()) + " and " +
                           std::to_string(g2.order()));
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex v = u + 1; v < g1.order(); ++v)
            if (g1.adjacent(u, v) != g2.adjacent(u, v))
                return false;
    return true;
}

}  // namespace gplus
