#include "gtrig/cyclotomic.hpp"

#include <sstream>

#include "gtrig/errors.hpp"

namespace gtrig {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

Polynomial unity_polynomial(int m) {
    if (m < 1 || m > kMaxDegree) throw InputError("cyclotomic order m must be in 1..24");
    ComplexVector c(m + 1, Complex{});
    c[0] = -1.0;
    c[m] = 1.0;
    return Polynomial(std::move(c));
}

// eta^k = e^(i pi k / m) for any integer k.
Complex eta_pow(int m, long k) {
    return std::polar(1.0, kPi * static_cast<double>(residue(k, 2 * m)) / m);
}

Complex i_pow(long k) {
    static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[residue(k, 4)];
}

void check_index(const CyclotomicSystem& sys, int l) {
    if (l < 0 || l >= sys.m())
        throw InputError("function index l=" + std::to_string(l) + " outside 0.." + std::to_string(sys.m() - 1));
}

}  // namespace

CyclotomicSystem::CyclotomicSystem(int m)
    : m_(m), zeta_(std::polar(1.0, 2.0 * kPi / m)), eta_(std::polar(1.0, kPi / m)),
      general_(unity_polynomial(m)) {
    zeta_powers_.reserve(m);
    for (int k = 0; k < m; ++k) zeta_powers_.push_back(std::polar(1.0, 2.0 * kPi * k / m));
}

Complex eval_S_cyclo(const CyclotomicSystem& sys, int l, Complex x) {
    check_index(sys, l);
    const int m = sys.m();
    Complex s{};
    for (int j = 0; j < m; ++j) {
        const Complex exponent = sys.eta() * sys.zeta_pow(j) * x;
        if (std::abs(exponent.real()) > kExponentGuard) {
            std::ostringstream msg;
            msg << "exponent overflow at x = " << x;
            throw OverflowError(msg.str(), sys.zeta_pow(j));
        }
        s += sys.zeta_pow(static_cast<long>(l) * j) * std::exp(exponent);
    }
    return s / (static_cast<double>(m) * eta_pow(m, l));
}

ComplexVector eval_S_cyclo_all(const CyclotomicSystem& sys, Complex x) {
    ComplexVector out(sys.m());
    for (int l = 0; l < sys.m(); ++l) out[l] = eval_S_cyclo(sys, l, x);
    return out;
}

RescalePair rescale_consistency(const CyclotomicSystem& sys, int l, Complex x) {
    check_index(sys, l);
    const int m = sys.m();
    const Complex unit = l == 0 ? Complex{1.0} : ((l - 1) % 2 == 0 ? 1.0 : -1.0) * eta_pow(m, l);
    const Complex general = eval_S(sys.general(), l, kI * sys.eta() * x);
    return {eval_S_cyclo(sys, l, x), general / (static_cast<double>(m) * unit)};
}

Complex taylor_eval_cyclo(const CyclotomicSystem& sys, int l, Complex x, int terms) {
    check_index(sys, l);
    const int m = sys.m();
    if (terms < 1 || terms * m > 170) throw InputError("series needs 1 <= terms and terms*m <= 170");
    const int last = l == 0 ? (terms - 1) * m : terms * m - l;
    Complex sum{};
    Complex term = 1.0;  // x^n / n!
    for (int n = 0; n <= last; ++n) {
        if ((n + l) % m == 0) {
            const int k = (n + l) / m;
            if (l == 0 || k >= 1) sum += (k % 2 == 0 ? 1.0 : -1.0) * term;
        }
        term *= x / static_cast<double>(n + 1);
    }
    return sum * sys.zeta_pow(-l);
}

AdditionRule addition_rule(int m, int l) {
    if (m < 1 || l < 0 || l >= m) throw InputError("addition rule needs 0 <= l < m");
    AdditionRule rule{m, l, {}, {}};
    for (int r = 0; r < m; ++r) {
        rule.signs.push_back(r <= l ? 1 : -1);
        rule.partner.push_back(residue(l - r, m));
    }
    return rule;
}

Complex apply_addition(const CyclotomicSystem& sys, const AdditionRule& rule, Complex x1, Complex x2) {
    if (rule.m != sys.m()) throw InputError("addition rule built for a different m");
    const ComplexVector s1 = eval_S_cyclo_all(sys, x1);
    const ComplexVector s2 = eval_S_cyclo_all(sys, x2);
    Complex out{};
    for (int r = 0; r < rule.m; ++r) out += static_cast<double>(rule.signs[r]) * s1[rule.partner[r]] * s2[r];
    return out;
}

Complex cyclotomic_det(const CyclotomicSystem& sys, Complex x) {
    ComplexVector f = eval_S_cyclo_all(sys, x);
    for (int l = 0; l < sys.m(); ++l) f[l] *= sys.zeta_pow(l);
    return determinant(shift_matrix(f, -1.0));
}

FactorialIdentity factorial_identity_check(int n) {
    if (n < 0 || n > 120) throw InputError("factorial identity check needs 0 <= n <= 120");
    if (n % 3 != 0) throw InputError("factorial identity needs n divisible by 3, got " + std::to_string(n));

    std::vector<cpp_int> fact(n + 1);
    fact[0] = 1;
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

    // Work with n!/(k1!k2!k3!) so everything stays integral until the end.
    cpp_int a = 0, b = 0, b_any = 0;
    for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k1 + k2 <= n; ++k2) {
            const int k3 = n - k1 - k2;
            const int r1 = k1 % 3, r2 = k2 % 3, r3 = k3 % 3;
            if (r1 == r2 && r2 == r3) {
                a += fact[n] / (fact[k1] * fact[k2] * fact[k3]);
            } else if (r1 != r2 && r2 != r3 && r1 != r3) {
                const cpp_int w = fact[n] / (fact[k1] * fact[k2] * fact[k3]);
                b_any += w;
                if (r1 == 0 && r2 == 1) b += w;
            }
        }
    }
    FactorialIdentity out{cpp_rational(a, fact[n]), cpp_rational(b, fact[n]), cpp_rational(b_any, fact[n]), false};
    out.holds = out.sum_a == 3 * out.sum_b;
    return out;
}

Complex delta(const CyclotomicSystem& sys, int l) {
    return eval_S_cyclo(sys, l, kPi) - eval_S_cyclo(sys, l, -kPi);
}

MatrixAResult matrix_A(const CyclotomicSystem& sys) {
    const int m = sys.m();
    if (m > 12) throw InputError("matrix A_m is built for m <= 12");
    ComplexVector d(m);
    for (int l = 0; l < m; ++l) d[l] = delta(sys, l);

    Matrix a(m);
    for (int l = 0; l < m; ++l) {
        for (int k = 0; k < m; ++k) {
            const int s = residue(m - 1 - k + l, m);
            const Complex j = eta_pow(m, m - 1 - k - l + s) * d[s];
            const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
            a(l, k) = sign * j * i_pow(k + m * (k % 2));
        }
    }

    double product = 1.0;
    for (int j = 0; j < m; ++j) {
        const Complex w = sys.eta() * sys.zeta_pow(j) * kPi;
        product *= std::abs(std::exp(w) - std::exp(-w));
    }
    ComplexVector nodes(m);
    for (int j = 0; j < m; ++j) nodes[j] = sys.zeta_pow(j);
    const double vdet = std::abs(determinant(vandermonde(nodes)));

    MatrixAResult out{a, determinant(a), 0.0};
    out.det_via_factorization = product * vdet * vdet / std::pow(static_cast<double>(m), m);
    return out;
}

}  // namespace gtrig
