#include "gplus/exact.hpp"

#include <numeric>
#include <utility>

namespace gplus {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

namespace {

// Forward Bareiss elimination in place. Returns the rank and the sign of the
// row permutation applied. Entries below the processed rows are left stale.
std::pair<std::size_t, int> bareiss(IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    BigInt prev = 1;
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    return {r, sign};
}

}  // namespace

std::size_t rank(IntMatrix m)
{
    return bareiss(m).first;
}

std::size_t rank(const RatMatrix& m)
{
    IntMatrix scaled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(m(i, j))));
        for (std::size_t j = 0; j < m.cols(); ++j)
            scaled(i, j) = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
    }
    return rank(std::move(scaled));
}

BigInt determinant(IntMatrix m)
{
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    auto [r, sign] = bareiss(m);
    if (r < n)
        return 0;
    return sign * m(n - 1, n - 1);
}

std::vector<BigInt> char_poly(const IntMatrix& m)
{
    if (!m.square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();

    // p holds the characteristic polynomial of the leading r x r block,
    // highest degree first. Each step multiplies by the lower-triangular
    // Toeplitz matrix with first column (1, -a, -R S, -R A S, -R A^2 S, ...).
    std::vector<BigInt> p{1};
    for (std::size_t r = 0; r < n; ++r) {
        const BigInt& a = m(r, r);
        std::vector<BigInt> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -a;

        // s = A_r^k S, starting from S = column r above the diagonal.
        std::vector<BigInt> s(r);
        for (std::size_t i = 0; i < r; ++i)
            s[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                dot += m(r, i) * s[i];
            toeplitz[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<BigInt> next(r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        next[i] += m(i, j) * s[j];
                s = std::move(next);
            }
        }

        std::vector<BigInt> q(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                q[i] += toeplitz[i - j] * p[j];
        p = std::move(q);
    }
    return std::vector<BigInt>(p.rbegin(), p.rend());
}

BigInt evaluate(const std::vector<BigInt>& coeffs, const BigInt& t)
{
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

}  // namespace gplus
