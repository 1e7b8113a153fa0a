#pragma once

#include <vector>

#include "gplus/exact.hpp"
#include "gplus/graph.hpp"

namespace gplus {

struct FamilyParams {
    unsigned d = 1;
    unsigned c = 1;

    // Throws std::invalid_argument unless d >= 1 and c >= 1.
    void validate() const;
};

// All nondecreasing length-c sequences over {1..d}, lexicographically.
std::vector<Label> gen_labels(unsigned d, unsigned c);

// G(d,c): combinations adjacent iff every coordinate differs by at most 1.
LabeledGraph build_G(unsigned d, unsigned c);

// G+(d,c): G(d,c) plus resolvers w_1..w_c, w_i adjacent to the combinations
// containing at least i ones. Resolvers follow the combinations in order.
LabeledGraph build_Gplus(unsigned d, unsigned c);

// G+(2,c) grown from the path 2 ~ 1 ~ w_1: append a 2 to every combination
// label, add an isolated w_c, then add 1^c adjacent to everything.
LabeledGraph build_Gplus2_iterative(unsigned c);

// G+(2,c) on 2c+1 vertices from the edge classes
// E_h = {(h, j) : h+1 <= j <= 2c+2-h}, h = 1..c (1-based). Vertex k <= c+1
// carries 1^(c+1-k) 2^(k-1); vertex c+1+i carries w_i.
LabeledGraph build_Gplus2_indexed(unsigned c);

struct FamilyOrder {
    BigInt base;  // |V(G(d,c))| = C(d+c-1, d-1)
    BigInt plus;  // |V(G+(d,c))| = base + c
};

FamilyOrder expected_order(unsigned d, unsigned c);

// Combinations first by decreasing count of ones, ties lexicographic, then
// w_1..w_c. Every vertex must be labeled.
std::vector<Vertex> canonical_order(const LabeledGraph& g);
LabeledGraph align(const LabeledGraph& g);

// The relabeling of the iterative recipe: `symbol` appended to every
// combination label; resolver labels untouched.
LabeledGraph append_symbol(const LabeledGraph& g, unsigned symbol);

// K_1 v (K_1 u H) with K_1's labeled 1^c and w_c, H = append_symbol(prev, 2).
LabeledGraph gplus2_by_join(const LabeledGraph& prev, unsigned c);

}  // namespace gplus
