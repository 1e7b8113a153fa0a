#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gplus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const;
    std::vector<T> row(std::size_t i) const;

    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = T(1);
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const
{
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const
{
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix-vector product: length mismatch");
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * x[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& m);

// Rank by fraction-free (Bareiss) elimination; the pivot is the first nonzero
// entry of the current column.
std::size_t rank(IntMatrix m);

// Rows are scaled by the lcm of their denominators, then ranked over Z.
std::size_t rank(const RatMatrix& m);

BigInt determinant(IntMatrix m);

// Coefficients of det(t*I - m), index k holding the coefficient of t^k.
// Computed with Berkowitz's division-free algorithm.
std::vector<BigInt> char_poly(const IntMatrix& m);

BigInt evaluate(const std::vector<BigInt>& coeffs, const BigInt& t);

// Binomial coefficient C(n, k), zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace gplus
