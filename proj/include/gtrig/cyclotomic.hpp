#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gtrig/gentrig.hpp"

namespace gtrig {

/// The rescaled functions of P = x^m - 1,
///
///     S_l(x) = 1/(m eta^l) sum_j zeta^(l j) exp(eta zeta^j x),
///
/// with zeta = e^(2 pi i/m) and eta = e^(i pi/m), so eta^2 = zeta and
/// eta^m = -1. For m = 2 these are cos and sin; for m = 1, S_0 = e^(-x).
class CyclotomicSystem {
public:
    explicit CyclotomicSystem(int m);

    int m() const noexcept { return m_; }
    Complex zeta() const noexcept { return zeta_; }
    Complex eta() const noexcept { return eta_; }
    /// zeta^k for any integer k, reduced mod m before evaluation.
    Complex zeta_pow(long k) const { return zeta_powers_[residue(k, m_)]; }
    /// The general system of x^m - 1, with its roots found numerically.
    const GenTrigSystem& general() const noexcept { return general_; }

private:
    int m_;
    Complex zeta_;
    Complex eta_;
    ComplexVector zeta_powers_;
    GenTrigSystem general_;
};

Complex eval_S_cyclo(const CyclotomicSystem& sys, int l, Complex x);
ComplexVector eval_S_cyclo_all(const CyclotomicSystem& sys, Complex x);

struct RescalePair {
    Complex direct;    // eval_S_cyclo
    Complex rescaled;  // through the general S^P_l at i eta x
};

/// Compares S_l(x) with S^P_l(i eta x) / (m u_l), where u_0 = 1 and
/// u_l = (-1)^(l-1) eta^l for l >= 1 is the unit relating the tuple
/// coefficients of x^m - 1 to zeta^(l j) / eta^l.
RescalePair rescale_consistency(const CyclotomicSystem& sys, int l, Complex x);

/// Truncated power series: zeta^(-l) sum_k (-1)^k x^(km-l)/(km-l)!, over
/// k = 0..terms-1 for l = 0 and k = 1..terms otherwise.
Complex taylor_eval_cyclo(const CyclotomicSystem& sys, int l, Complex x, int terms);

/// S_l(x1 + x2) = sum_r signs[r] S_{partner[r]}(x1) S_r(x2).
struct AdditionRule {
    int m;
    int l;
    std::vector<int> signs;    // +1 for r <= l, -1 for r > l
    std::vector<int> partner;  // (l - r) mod m
};

AdditionRule addition_rule(int m, int l);
Complex apply_addition(const CyclotomicSystem& sys, const AdditionRule& rule, Complex x1, Complex x2);

/// det M(x) for f_l = zeta^l S_l(x) and lambda = -1. Constant in x, with
/// value det M(0) = (-1)^(m(m-1)/2) since f(0) = (1, 0, ..., 0).
Complex cyclotomic_det(const CyclotomicSystem& sys, Complex x);

struct FactorialIdentity {
    boost::multiprecision::cpp_rational sum_a;  // k1 = k2 = k3 (mod 3)
    boost::multiprecision::cpp_rational sum_b;  // (k1, k2, k3) = (0, 1, 2) (mod 3)
    boost::multiprecision::cpp_rational sum_b_any_order;  // residues any permutation of {0,1,2}
    bool holds;  // sum_a == 3 sum_b
};

/// Exact check of sum_A 1/(k1!k2!k3!) = 3 sum_B 1/(k1!k2!k3!) over ordered
/// triples of non-negative integers with k1 + k2 + k3 = n. Needs 3 | n.
FactorialIdentity factorial_identity_check(int n);

/// S_l(pi) - S_l(-pi).
Complex delta(const CyclotomicSystem& sys, int l);

struct MatrixAResult {
    Matrix a;
    Complex det;
    double det_via_factorization;  // |prod a_j| |det V|^2 / m^m
};

/// A_m[l][k] = (-1)^(k+1) J^l_k i^(k + m (k mod 2)), with
/// J^l_k = eta^(m-1-k-l+s) Delta_s and s = (m-1-k+l) mod m.
MatrixAResult matrix_A(const CyclotomicSystem& sys);

}  // namespace gtrig
