#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>

#include "gtrig/types.hpp"

namespace gtrig {

/// Square dense complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, ComplexVector row_major);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    const ComplexVector& data() const noexcept { return data_; }
    ComplexVector row(std::size_t r) const;

    Matrix transpose() const;
    double norm_one() const;  // max column sum
    double norm_inf() const;  // max row sum
    double max_abs() const { return gtrig::max_abs(data_); }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_ = 0;
    ComplexVector data_;
};

ComplexVector operator*(const Matrix& m, std::span<const Complex> v);
/// Row vector times matrix, v^T M.
ComplexVector left_multiply(std::span<const Complex> v, const Matrix& m);
Complex dot(std::span<const Complex> a, std::span<const Complex> b);  // no conjugation
Matrix power(const Matrix& m, int exponent);
/// Rows are geometric progressions of the nodes: V[r][c] = nodes[c]^r.
Matrix vandermonde(std::span<const Complex> nodes);

Complex determinant(const Matrix& m);

struct Solution {
    ComplexVector x;
    double condition_estimate;  // ||M||_1 ||M^-1||_1
};

/// Partial-pivot elimination. Throws SingularMatrixError when a pivot
/// falls below 1e-13 ||M||.
Solution solve(const Matrix& m, std::span<const Complex> b);

/// ||M||_1 ||M^-1||_1, infinity for a singular matrix.
double condition_estimate(const Matrix& m);

/// Monic characteristic polynomial det(tI - M), ascending coefficients,
/// by the Faddeev-LeVerrier trace recursion.
ComplexVector characteristic_polynomial(const Matrix& m);

struct EigenPair {
    Complex value;
    ComplexVector left_vector;  // L with L M = value L; max entry is 1
    double residual;            // ||L M - value L||_inf
};

/// One pair per eigenvalue counted with multiplicity, in root-finder order.
std::vector<EigenPair> eigenpairs(const Matrix& m);

}  // namespace gtrig
