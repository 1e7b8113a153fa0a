#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gplus {

using Vertex = std::size_t;

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public GraphError {
public:
    using GraphError::GraphError;
};

class DisconnectedGraph : public GraphError {
public:
    DisconnectedGraph() : GraphError("graph is disconnected") {}
};

class SizeMismatch : public GraphError {
public:
    using GraphError::GraphError;
};

// A vertex label: either a combination with repetition x1 <= x2 <= ... <= xc
// over {1..d}, or a resolver marker w_i. `copy` distinguishes otherwise equal
// labels brought together by a disjoint union and prints as trailing primes.
struct Label {
    enum class Kind { Combination, Resolver };

    Kind kind = Kind::Combination;
    std::vector<unsigned> seq;
    unsigned index = 0;
    unsigned copy = 0;

    static Label combination(std::vector<unsigned> seq);
    static Label resolver(unsigned index);

    bool is_combination() const { return kind == Kind::Combination; }
    bool is_resolver() const { return kind == Kind::Resolver; }

    // Number of entries equal to 1 (combinations only).
    std::size_t ones() const;

    std::string to_string() const;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::size_t n);

    static LabeledGraph complete(std::size_t n);
    static LabeledGraph path(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    Vertex add_vertex(std::optional<Label> label = std::nullopt);

    const std::optional<Label>& label(Vertex v) const;
    void set_label(Vertex v, Label label);
    void clear_labels();
    bool fully_labeled() const;
    std::optional<Vertex> find(const Label& label) const;

    // Vertex i of the result is vertex order[i] of *this.
    LabeledGraph permuted(std::span<const Vertex> order) const;

    // Throws GraphError if symmetry, loop-freeness or label distinctness fail.
    void check_invariants() const;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<bool> adj_;
    std::vector<std::optional<Label>> labels_;
};

// Distances from `source`; `unreachable` marks vertices in other components.
std::vector<std::size_t> bfs_distances(const LabeledGraph& g, Vertex source);

class DistanceMatrix {
public:
    explicit DistanceMatrix(const LabeledGraph& g);

    std::size_t order() const { return n_; }
    std::size_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    bool connected() const { return connected_; }
    std::size_t eccentricity(Vertex v) const;

private:
    std::size_t n_;
    std::vector<std::size_t> d_;
    bool connected_ = true;
};

std::size_t diameter(const LabeledGraph& g);
std::size_t radius(const LabeledGraph& g);
std::size_t component_count(const LabeledGraph& g);

LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2);
LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2);

std::vector<std::size_t> degree_sequence(const LabeledGraph& g);

bool are_adjacency_equal(const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace gplus
