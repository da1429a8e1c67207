#pragma once

#include "gtrig/gentrig.hpp"

namespace gtrig {

/// Roots closer than this to an integer are refused by the series code.
inline constexpr double kIntegerRootGuard = 1e-8;

/// Throws NearIntegerRootError naming the first root within `threshold`
/// of an integer.
void require_off_integers(const RootSet& roots, double threshold = kIntegerRootGuard);

/// R_l(x) = sum_j T[l][j] exp(-i r_j x) / (exp(-i r_j pi) - exp(i r_j pi)).
Complex eval_R(const GenTrigSystem& sys, int l, Complex x);

/// c_{-n,l} = (1/2pi) int_{-pi}^{pi} R_l(x) e^{inx} dx in closed form,
/// (-1)^n / (2 pi i) sum_j T[l][j] / (n - r_j).
Complex fourier_coefficient(const GenTrigSystem& sys, int l, long n);

/// C(P): c_{-n,l} = (-1)^n sum_k C[l][k] n^k / P(n). Columns are ascending
/// powers of n.
struct AssociatedMatrix {
    int m = 0;
    Matrix c;                  // from the quotients P/(x - r_j)
    Matrix c_cross_check;      // from the tuple coefficients of P
    double condition_estimate = 0.0;

    /// 2 pi i C, the integral-valued form for integer P.
    Matrix scaled() const;
    /// Same matrix with columns in descending powers of n.
    static Matrix descending(const Matrix& ascending);
};

AssociatedMatrix associated_matrix(const GenTrigSystem& sys);

struct OracleEstimate {
    Complex value;
    double error_bar;
};

inline constexpr long kDefaultOracleTerms = 100000;

/// Symmetric partial sums of n^k / P(n) (optionally times (-1)^n) over
/// -N..N with n and -n paired, accelerated by Richardson extrapolation
/// over N, 2N, 4N (plain) or iterated averaging of consecutive partial
/// sums (alternating). Independent of the closed-form machinery.
OracleEstimate brute_force_sum(const Polynomial& p, int k, bool alternating, long n_terms = kDefaultOracleTerms);

struct SeriesOptions {
    double root_tol = 1e-13;
    long oracle_terms = kDefaultOracleTerms;
    bool run_oracle = true;
};

/// A_k = sum_n n^k/P(n) and B_k = sum_n (-1)^n n^k/P(n) over all integers,
/// k = 0..m-1. A_{m-1} is the symmetric limit.
struct SeriesResult {
    ComplexVector a;
    ComplexVector b;
    ComplexVector rhs_a;  // (R_l(pi) + R_l(-pi)) / 2
    ComplexVector rhs_b;  // R_l(0)
    std::vector<OracleEstimate> oracle_a;  // empty when the oracle is skipped
    std::vector<OracleEstimate> oracle_b;
    double condition_estimate = 0.0;
    double solve_residual = 0.0;  // max of ||C a - rhs_a||, ||C b - rhs_b||
};

SeriesResult evaluate_sums(const Polynomial& p, const SeriesOptions& options = {});
SeriesResult evaluate_sums(const GenTrigSystem& sys, const SeriesOptions& options = {});

}  // namespace gtrig
