#include "gtrig/gentrig.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "gtrig/errors.hpp"

namespace gtrig {

Complex TupleCoefficientMatrix::row_sum(int l) const {
    Complex s{};
    for (int j = 0; j < m(); ++j) s += values(l, j);
    return s;
}

TupleCoefficientMatrix tuple_coefficients(std::span<const Complex> roots, Complex leading) {
    const int m = static_cast<int>(roots.size());
    if (m < 1) throw InputError("tuple_coefficients needs at least one root");
    const Polynomial monic = Polynomial::from_roots(roots);
    Matrix t(m);
    for (int j = 0; j < m; ++j) {
        // The quotient P/(x - r_j) has coefficient (-1)^s e_s(roots without j)
        // on x^(m-1-s); multiplying e_{l-1} by r_j gives the l-tuples with j.
        const ComplexVector q = synthetic_divide(monic, roots[j]).quotient.coeffs();
        t(0, j) = leading;
        for (int l = 1; l < m; ++l) {
            const double sign = (l - 1) % 2 == 0 ? 1.0 : -1.0;
            t(l, j) = roots[j] * sign * q[m - l];
        }
    }
    return {std::move(t)};
}

GenTrigSystem::GenTrigSystem(const Polynomial& p, double root_tol, int max_iter)
    : GenTrigSystem(p, find_roots(p, root_tol, max_iter)) {}

GenTrigSystem::GenTrigSystem(const Polynomial& p, RootSet roots)
    : polynomial_(p.monic()), roots_(std::move(roots)),
      tuples_(tuple_coefficients(roots_.roots, 1.0)) {
    if (p.degree() < 1) throw InputError("generalized trigonometric functions need degree >= 1");
    if (static_cast<int>(roots_.roots.size()) != p.degree())
        throw InputError("root count does not match the degree");
    if (degree() >= 2) k_ = gtrig::derivative_matrix(polynomial_);
}

const Matrix& GenTrigSystem::derivative_matrix() const {
    if (degree() < 2) throw InputError("derivative matrix needs degree >= 2");
    return k_;
}

namespace {

void check_index(const GenTrigSystem& sys, int l) {
    if (l < 0 || l >= sys.degree())
        throw InputError("function index l=" + std::to_string(l) + " outside 0.." +
                         std::to_string(sys.degree() - 1));
}

ComplexVector exponentials(const GenTrigSystem& sys, Complex x) {
    ComplexVector out;
    out.reserve(sys.roots().roots.size());
    for (const auto& r : sys.roots().roots) {
        const double growth = std::abs(r.imag() * x.real()) + std::abs(r.real() * x.imag());
        if (growth > kExponentGuard) {
            std::ostringstream msg;
            msg << "exponent overflow: root " << r << " at x = " << x;
            throw OverflowError(msg.str(), r);
        }
        out.push_back(std::exp(-kI * r * x));
    }
    return out;
}

}  // namespace

Complex eval_S(const GenTrigSystem& sys, int l, Complex x) {
    check_index(sys, l);
    const ComplexVector e = exponentials(sys, x);
    Complex s{};
    for (int j = 0; j < sys.degree(); ++j) s += sys.tuples()(l, j) * e[j];
    return s;
}

ComplexVector eval_S_all(const GenTrigSystem& sys, Complex x) {
    const ComplexVector e = exponentials(sys, x);
    const int m = sys.degree();
    ComplexVector out(m);
    for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j) out[l] += sys.tuples()(l, j) * e[j];
    return out;
}

ComplexVector taylor_coeffs(const GenTrigSystem& sys, int l, int order) {
    check_index(sys, l);
    if (order < 0 || order > 170) throw InputError("Taylor order must be in 0..170");
    const auto& roots = sys.roots().roots;
    ComplexVector weight(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) weight[j] = sys.tuples()(l, static_cast<int>(j));

    ComplexVector b(order + 1);
    for (int k = 0; k <= order; ++k) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            b[k] += weight[j];
            weight[j] *= -kI * roots[j] / static_cast<double>(k + 1);
        }
    }
    return b;
}

Matrix derivative_matrix(const Polynomial& monic) {
    const int m = monic.degree();
    if (m < 2) throw InputError("derivative matrix needs degree >= 2");
    const auto a = [&](int k) { return monic[k] / monic.leading(); };
    const double sign_m = m % 2 == 0 ? 1.0 : -1.0;
    Matrix k(m);
    k(0, 1) = -kI;
    for (int l = 1; l < m - 1; ++l) {
        const double sign = (l + 1) % 2 == 0 ? 1.0 : -1.0;
        k(l, 1) += sign * kI * a(m - l);
        k(l, l + 1) += kI;
    }
    k(m - 1, 0) += sign_m * kI * a(0);
    k(m - 1, 1) += sign_m * kI * a(1);
    return k;
}

Matrix shift_matrix(std::span<const Complex> f, Complex lambda) {
    const std::size_t m = f.size();
    Matrix out(m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            out(p, q) = p + q < m ? f[p + q] : lambda * f[p + q - m];
    return out;
}

IdentityCertificate identity_certificate(const GenTrigSystem& sys) {
    const int m = sys.degree();
    if (m < 2) throw InputError("identity certificate needs degree >= 2");
    const Matrix& k = sys.derivative_matrix();
    const Matrix km = power(k, m);

    const double zero_floor = 1e-12 * std::max(1.0, km.max_abs());
    const std::vector<EigenPair> pairs = eigenpairs(km);
    std::optional<std::size_t> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double mod = std::abs(pairs[i].value);
        if (mod <= zero_floor) continue;
        if (!chosen) {
            chosen = i;
            continue;
        }
        const double best = std::abs(pairs[*chosen].value);
        const double tie = 1e-9 * std::max(mod, best);
        if (mod > best + tie) {
            chosen = i;
        } else if (std::abs(mod - best) <= tie &&
                   std::arg(pairs[i].value) < std::arg(pairs[*chosen].value) - 1e-9) {
            chosen = i;
        }
    }
    if (!chosen) throw NumericalError("no nonzero eigenvalue; certificate unavailable");

    IdentityCertificate cert;
    cert.left_vector = pairs[*chosen].left_vector;
    cert.lambda = pairs[*chosen].value;
    cert.eigen_residual = pairs[*chosen].residual;
    cert.shifted_rows.push_back(cert.left_vector);
    for (int l = 1; l < m; ++l) cert.shifted_rows.push_back(left_multiply(cert.shifted_rows.back(), k));
    cert.det_ref = eval_det_M(cert, sys, 0.0);
    return cert;
}

Complex eval_det_M(const IdentityCertificate& cert, const GenTrigSystem& sys, Complex x) {
    const ComplexVector s = eval_S_all(sys, x);
    ComplexVector f(cert.shifted_rows.size());
    for (std::size_t l = 0; l < f.size(); ++l) f[l] = dot(cert.shifted_rows[l], s);
    return determinant(shift_matrix(f, cert.lambda));
}

}  // namespace gtrig
