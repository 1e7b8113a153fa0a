#include "gplus/spectra.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "gplus/families.hpp"

namespace gplus {

bool Spectrum::distinct() const
{
    return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](const Eigenvalue& e) { return e.multiplicity == 1; });
}

std::vector<BigInt> Spectrum::values() const
{
    std::vector<BigInt> out;
    for (const auto& e : eigenvalues)
        out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

std::vector<BigInt> SinSpec::values() const
{
    if (i > n)
        throw std::invalid_argument("S_{i,n} needs 0 <= i <= n");
    std::vector<BigInt> out;
    for (std::size_t k = n + 1; k-- > 0;)
        if (k != i)
            out.emplace_back(k);
    return out;
}

IntMatrix laplacian(const LabeledGraph& g)
{
    const std::size_t n = g.order();
    IntMatrix L(n, n);
    for (auto [u, v] : g.edges()) {
        L(u, v) = -1;
        L(v, u) = -1;
        L(u, u) += 1;
        L(v, v) += 1;
    }
    return L;
}

bool is_laplacian(const IntMatrix& L)
{
    if (!L.square())
        return false;
    for (std::size_t i = 0; i < L.rows(); ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < L.cols(); ++j) {
            sum += L(i, j);
            if (i != j && (L(i, j) != L(j, i) || (L(i, j) != 0 && L(i, j) != -1)))
                return false;
        }
        if (sum != 0)
            return false;
    }
    return true;
}

std::size_t nullity_at(const IntMatrix& L, const BigInt& t)
{
    IntMatrix shifted = L;
    for (std::size_t i = 0; i < L.rows(); ++i)
        shifted(i, i) -= t;
    return L.cols() - rank(std::move(shifted));
}

SpectrumResult integral_spectrum(const IntMatrix& L)
{
    if (!L.square())
        throw std::invalid_argument("spectrum of a non-square matrix");
    const std::size_t n = L.rows();

    std::vector<std::future<std::size_t>> jobs;
    jobs.reserve(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
        jobs.push_back(std::async(std::launch::async, [&L, t] { return nullity_at(L, BigInt(t)); }));

    std::vector<Eigenvalue> found;
    std::size_t total = 0;
    for (std::size_t t = n + 1; t-- > 0;) {
        std::size_t m = jobs[t].get();
        if (m > 0) {
            found.push_back({BigInt(t), m});
            total += m;
        }
    }
    auto cp = char_poly(L);
    if (total == n)
        return Spectrum{std::move(found), std::move(cp)};
    return NonIntegralResidue{n - total, std::move(found), std::move(cp)};
}

RatMatrix eigenvector_family(unsigned c)
{
    if (c < 1)
        throw std::invalid_argument("eigenvector family needs c >= 1");
    const std::size_t n = 2 * std::size_t{c} + 1;
    RatMatrix X(n, n);
    auto fill = [&](std::size_t col, std::size_t from, std::size_t count, long value) {
        for (std::size_t k = 0; k < count; ++k)
            X(from + k, col) = value;
    };
    for (std::size_t r = 0; r < c; ++r) {
        const std::size_t m = 2 * (c - r);
        X(r, r) = -static_cast<long>(m);
        fill(r, r + 1, m, 1);
    }
    X(c, c) = -1;
    X(c + 1, c) = 1;
    for (std::size_t r = c + 1; r < 2 * std::size_t{c}; ++r) {
        const std::size_t lead = 2 * c - r;
        const std::size_t m = 2 * (r - c) + 1;
        fill(r, lead, m, -1);
        X(lead + m, r) = static_cast<long>(m);
    }
    fill(2 * c, 0, n, 1);
    return X;
}

long eigenvalue_of_class(unsigned c, unsigned r)
{
    const long cc = c;
    const long rr = r;
    if (r > 2 * c)
        throw std::out_of_range("eigenvector index r must lie in 0..2c");
    if (r < c)
        return 2 * cc - rr + 1;
    if (r == c)
        return cc;
    if (r < 2 * c)
        return 2 * cc - rr;
    return 0;
}

EigenpairReport verify_eigenpairs(unsigned c)
{
    const IntMatrix L = laplacian(build_Gplus2_indexed(c));
    const RatMatrix L_rat = to_rational(L);
    const RatMatrix X = eigenvector_family(c);
    const std::size_t n = L.rows();

    EigenpairReport report;
    report.c = c;
    for (unsigned r = 0; r < n; ++r) {
        const long lambda = eigenvalue_of_class(c, r);
        const RatVector x = X.column(r);
        const RatVector Lx = L_rat * x;
        for (std::size_t row = 0; row < n; ++row) {
            if (Lx[row] != lambda * x[row])
                throw VerificationFailure(r, row,
                                          "L x^(" + std::to_string(r) + ") differs from " +
                                              std::to_string(lambda) + " x^(" + std::to_string(r) +
                                              ") at row " + std::to_string(row + 1));
        }
        report.eigenvalues.push_back(lambda);
    }
    std::set<long> unique(report.eigenvalues.begin(), report.eigenvalues.end());
    if (unique.size() != n)
        throw VerificationFailure(n, 0, "eigenvalues of the family are not pairwise distinct");
    report.rank = rank(X);
    if (report.rank != n)
        throw VerificationFailure(n, 0,
                                  "eigenvector family has rank " + std::to_string(report.rank));
    return report;
}

Rational quadratic_form(const IntMatrix& L, const RatVector& x)
{
    if (x.size() != L.rows() || !L.square())
        throw std::invalid_argument("quadratic form: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = 0; j < L.cols(); ++j)
            if (L(i, j) != 0)
                acc += x[i] * Rational(L(i, j)) * x[j];
    return acc;
}

Rational edge_energy(const IntMatrix& L, const RatVector& x)
{
    if (x.size() != L.rows() || !L.square())
        throw std::invalid_argument("edge energy: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = i + 1; j < L.cols(); ++j)
            if (L(i, j) != 0) {
                Rational diff = x[i] - x[j];
                acc += Rational(-L(i, j)) * diff * diff;
            }
    return acc;
}

Rational rayleigh(const IntMatrix& L, const RatVector& x)
{
    Rational norm = 0;
    for (const auto& v : x)
        norm += v * v;
    if (norm == 0)
        throw ZeroVector();
    Rational form = quadratic_form(L, x);
    if (form != edge_energy(L, x))
        throw std::invalid_argument("x^T L x differs from the edge sum; not a Laplacian");
    return form / norm;
}

std::vector<Rational> n_h_sums(unsigned c, const RatVector& x)
{
    const std::size_t n = 2 * std::size_t{c} + 1;
    if (x.size() != n)
        throw std::invalid_argument("N_h sums need a vector of length 2c+1");
    std::vector<Rational> out(c);
    for (std::size_t h = 1; h <= c; ++h)
        for (std::size_t j = h + 1; j <= 2 * std::size_t{c} + 2 - h; ++j) {
            Rational diff = x[h - 1] - x[j - 1];
            out[h - 1] += diff * diff;
        }
    return out;
}

bool realizes_S(const LabeledGraph& g, std::size_t i)
{
    if (i > g.order())
        return false;
    auto result = integral_spectrum(laplacian(g));
    const auto* spectrum = std::get_if<Spectrum>(&result);
    return spectrum && spectrum->distinct() && spectrum->values() == SinSpec{i, g.order()}.values();
}

std::optional<std::size_t> realized_S(const LabeledGraph& g)
{
    auto result = integral_spectrum(laplacian(g));
    const auto* spectrum = std::get_if<Spectrum>(&result);
    if (!spectrum || !spectrum->distinct())
        return std::nullopt;
    const std::size_t n = g.order();
    std::vector<bool> present(n + 1, false);
    for (const auto& e : spectrum->eigenvalues)
        present[static_cast<std::size_t>(e.value)] = true;
    auto missing = std::find(present.begin(), present.end(), false);
    return static_cast<std::size_t>(missing - present.begin());
}

LabeledGraph realizability_step(const LabeledGraph& h, std::size_t i_prev, std::size_t n_prev)
{
    if (h.order() != n_prev)
        throw PreconditionFailed("graph has " + std::to_string(h.order()) + " vertices, expected " +
                                 std::to_string(n_prev));
    if (!realizes_S(h, i_prev))
        throw PreconditionFailed("graph does not realize S_{" + std::to_string(i_prev) + "," +
                                 std::to_string(n_prev) + "}");
    return join(LabeledGraph(1), disjoint_union(LabeledGraph(1), h));
}

}  // namespace gplus
