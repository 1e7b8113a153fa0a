#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gplus/graph.hpp"

namespace gplus {

// r(u|W): distance to each w_j in order.
struct VectorRep {
    std::vector<std::size_t> entries;
    friend auto operator<=>(const VectorRep&, const VectorRep&) = default;
};

// m(u|W): the same distances as a sorted multiset.
struct MultisetRep {
    std::vector<std::size_t> entries;
    friend auto operator<=>(const MultisetRep&, const MultisetRep&) = default;
};

VectorRep vector_rep(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> W);
MultisetRep multiset_rep(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> W);

VectorRep vector_rep(const LabeledGraph& g, Vertex u, std::span<const Vertex> W);
MultisetRep multiset_rep(const LabeledGraph& g, Vertex u, std::span<const Vertex> W);

enum class ResolvingKind { Vector, Multiset, OuterMultiset };

std::string_view to_string(ResolvingKind kind);

// Vector: r(.|W) injective on V. Multiset: m(.|W) injective on V.
// OuterMultiset: m(.|W) injective on V \ W.
bool resolves(const DistanceMatrix& dm, std::span<const Vertex> W, ResolvingKind kind);

bool is_resolving(const LabeledGraph& g, std::span<const Vertex> W);
bool is_multiset_resolving(const LabeledGraph& g, std::span<const Vertex> W);
bool is_outer_multiset_resolving(const LabeledGraph& g, std::span<const Vertex> W);

struct DimensionResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;
};

struct DimensionOptions {
    std::size_t max_size = 0;
    std::size_t order_cap = 24;
    bool ignore_cap = false;
    unsigned threads = 0;  // 0: hardware concurrency
};

class OrderCapExceeded : public GraphError {
public:
    using GraphError::GraphError;
};

// Smallest resolving set of the given kind with at most max_size vertices.
// Subsets are tried by increasing size, lexicographically within a size; the
// lexicographically first witness of minimum size is returned. std::nullopt
// means the budget was exhausted.
std::optional<DimensionResult> resolving_dimension(const LabeledGraph& g, ResolvingKind kind,
                                                   const DimensionOptions& options);

std::optional<DimensionResult> outer_multiset_dimension(const LabeledGraph& g,
                                                        std::size_t max_size);

// Lexicographic rank helpers over k-subsets of {0..n-1}.
std::vector<Vertex> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank);
bool next_subset(std::vector<Vertex>& subset, std::size_t n);

}  // namespace gplus
