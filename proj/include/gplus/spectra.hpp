#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gplus/exact.hpp"
#include "gplus/graph.hpp"

namespace gplus {

struct Eigenvalue {
    BigInt value;
    std::size_t multiplicity = 0;
    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

// Integral Laplacian spectrum, eigenvalues in decreasing order.
struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;
    std::vector<BigInt> charpoly;  // ascending powers, monic

    bool distinct() const;
    std::vector<BigInt> values() const;  // with multiplicity, decreasing
};

// Returned when the integer sweep accounts for fewer than n eigenvalues.
struct NonIntegralResidue {
    std::size_t residual_degree = 0;
    std::vector<Eigenvalue> integral_part;
    std::vector<BigInt> charpoly;
};

using SpectrumResult = std::variant<Spectrum, NonIntegralResidue>;

// Target multiset {0..n} \ {i}.
struct SinSpec {
    std::size_t i = 0;
    std::size_t n = 0;

    std::vector<BigInt> values() const;  // decreasing
};

class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::size_t column, std::size_t row, const std::string& what)
        : std::runtime_error(what), column(column), row(row)
    {
    }
    std::size_t column;
    std::size_t row;
};

class ZeroVector : public std::invalid_argument {
public:
    ZeroVector() : std::invalid_argument("Rayleigh quotient of the zero vector") {}
};

class PreconditionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IntMatrix laplacian(const LabeledGraph& g);

// Checks symmetry, zero row sums, off-diagonal entries in {0, -1}.
bool is_laplacian(const IntMatrix& L);

// dim ker(L - t I) by exact elimination.
std::size_t nullity_at(const IntMatrix& L, const BigInt& t);

// Sweeps t = 0..n; multiplicity of t is the nullity of L - tI. Candidates are
// evaluated concurrently.
SpectrumResult integral_spectrum(const IntMatrix& L);

// Columns x^(0)..x^(2c) of the closed-form eigenvector basis of G+(2,c).
RatMatrix eigenvector_family(unsigned c);

// Eigenvalue of x^(r): 2c-r+1 for r < c, c for r = c, 2c-r for c < r < 2c,
// 0 for r = 2c.
long eigenvalue_of_class(unsigned c, unsigned r);

struct EigenpairReport {
    unsigned c = 0;
    std::vector<long> eigenvalues;  // index r
    std::size_t rank = 0;
};

// Checks L x^(r) = lambda_r x^(r) entrywise for the indexed G+(2,c), pairwise
// distinct eigenvalues, and full rank of the family. Throws
// VerificationFailure at the first violated entry.
EigenpairReport verify_eigenpairs(unsigned c);

// x^T L x / x^T x, cross-checked against the edge sum over L's off-diagonal.
Rational rayleigh(const IntMatrix& L, const RatVector& x);
Rational quadratic_form(const IntMatrix& L, const RatVector& x);
Rational edge_energy(const IntMatrix& L, const RatVector& x);

// N_h = sum_{j=h+1}^{2c+2-h} (x_h - x_j)^2 for h = 1..c (1-based).
std::vector<Rational> n_h_sums(unsigned c, const RatVector& x);

bool realizes_S(const LabeledGraph& g, std::size_t i);

// The i for which g realizes S_{i,n}, if any.
std::optional<std::size_t> realized_S(const LabeledGraph& g);

// K_1 v (K_1 u h), after checking that h realizes S_{i_prev, |h|}.
LabeledGraph realizability_step(const LabeledGraph& h, std::size_t i_prev, std::size_t n_prev);

}  // namespace gplus
