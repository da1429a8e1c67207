#pragma once

#include <span>

#include "gtrig/linalg.hpp"
#include "gtrig/poly.hpp"

namespace gtrig {

/// T[l][j]: sum of all l-fold products of distinct roots that include
/// root j (l = 0 gives the leading coefficient). Rows index l, columns j.
struct TupleCoefficientMatrix {
    Matrix values;

    int m() const noexcept { return static_cast<int>(values.dim()); }
    Complex operator()(int l, int j) const { return values(l, j); }
    /// Sum over roots of row l, i.e. S_l(0).
    Complex row_sum(int l) const;
};

TupleCoefficientMatrix tuple_coefficients(std::span<const Complex> roots, Complex leading);

/// Generalized trigonometric functions of a polynomial P:
///
///     S_l(x) = sum_j T[l][j] exp(-i r_j x),   l = 0..m-1.
///
/// Holds the monic-normalized P, its roots, T and (for m >= 2) the
/// derivative matrix K with S' = K S. Immutable once built.
class GenTrigSystem {
public:
    explicit GenTrigSystem(const Polynomial& p, double root_tol = 1e-13, int max_iter = 500);
    /// Uses the supplied roots in the given order instead of solving for them.
    GenTrigSystem(const Polynomial& p, RootSet roots);

    int degree() const noexcept { return polynomial_.degree(); }
    const Polynomial& polynomial() const noexcept { return polynomial_; }
    const RootSet& roots() const noexcept { return roots_; }
    const TupleCoefficientMatrix& tuples() const noexcept { return tuples_; }
    /// K; throws InputError when m < 2.
    const Matrix& derivative_matrix() const;

private:
    Polynomial polynomial_;
    RootSet roots_;
    TupleCoefficientMatrix tuples_;
    Matrix k_;
};

/// Largest allowed |Re(-i r x)| in a single exponential.
inline constexpr double kExponentGuard = 700.0;

Complex eval_S(const GenTrigSystem& sys, int l, Complex x);
ComplexVector eval_S_all(const GenTrigSystem& sys, Complex x);

/// Taylor coefficients b_0..b_order of S_l at 0.
ComplexVector taylor_coeffs(const GenTrigSystem& sys, int l, int order);

/// Builds K from the coefficients of the monic P:
///   row 0:        -i in column 1
///   row l<m-1:    (-1)^(l+1) i a_{m-l} in column 1, i in column l+1
///   row m-1:      (-1)^m i a_0 in column 0, (-1)^m i a_1 in column 1
Matrix derivative_matrix(const Polynomial& monic);

/// Witness for the algebraic identity among the S_l.
///
/// With L a left eigenvector of K^m (eigenvalue lambda) put f_l = L K^l S.
/// Then f_l' = f_{l+1} and f_{m-1}' = lambda f_0, and the determinant of
///
///     M[p][q] = f_{p+q}            (p + q <= m-1)
///             = lambda f_{p+q-m}   (p + q >= m)
///
/// is constant in x; det_ref is its value at 0.
struct IdentityCertificate {
    ComplexVector left_vector;
    Complex lambda;
    Complex det_ref;
    double eigen_residual;
    std::vector<ComplexVector> shifted_rows;  // L K^l for l = 0..m-1
};

IdentityCertificate identity_certificate(const GenTrigSystem& sys);
Complex eval_det_M(const IdentityCertificate& cert, const GenTrigSystem& sys, Complex x);

/// The Hankel-like matrix above, for arbitrary f values and lambda.
Matrix shift_matrix(std::span<const Complex> f, Complex lambda);

}  // namespace gtrig
