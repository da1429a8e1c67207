#include "gtrig/series.hpp"

#include <sstream>

#include "gtrig/errors.hpp"

namespace gtrig {
namespace {

void check_index(const GenTrigSystem& sys, int l) {
    if (l < 0 || l >= sys.degree())
        throw InputError("function index l=" + std::to_string(l) + " outside 0.." +
                         std::to_string(sys.degree() - 1));
}

// 1 / (exp(-i r pi) - exp(i r pi)) for every root.
ComplexVector boundary_weights(const GenTrigSystem& sys) {
    require_off_integers(sys.roots());
    ComplexVector w;
    for (const auto& r : sys.roots().roots) {
        if (std::abs(r.imag()) * kPi > kExponentGuard) {
            std::ostringstream msg;
            msg << "exponent overflow: root " << r << " too far from the real axis";
            throw OverflowError(msg.str(), r);
        }
        w.push_back(1.0 / (std::exp(-kI * r * kPi) - std::exp(kI * r * kPi)));
    }
    return w;
}

ComplexVector eval_R_all(const GenTrigSystem& sys, const ComplexVector& weights, Complex x) {
    const int m = sys.degree();
    ComplexVector out(m);
    for (int j = 0; j < m; ++j) {
        const Complex e = weights[j] * std::exp(-kI * sys.roots().roots[j] * x);
        for (int l = 0; l < m; ++l) out[l] += sys.tuples()(l, j) * e;
    }
    return out;
}

// Compensated (Neumaier) running sum.
class Accumulator {
public:
    void add(Complex v) {
        sum_re_ = add_part(sum_re_, comp_re_, v.real());
        sum_im_ = add_part(sum_im_, comp_im_, v.imag());
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static double add_part(double sum, double& comp, double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        return t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

constexpr double kErrorBarFloor = 1e-12;
constexpr int kAveragingDepth = 8;

}  // namespace

void require_off_integers(const RootSet& roots, double threshold) {
    for (const auto& r : roots.roots) {
        const double d = distance_to_integers(r);
        if (d < threshold) {
            std::ostringstream msg;
            msg << "root " << r << " lies within " << d << " of the integer " << std::round(r.real())
                << "; the series terms are singular there";
            throw NearIntegerRootError(msg.str(), r, d);
        }
    }
}

Complex eval_R(const GenTrigSystem& sys, int l, Complex x) {
    check_index(sys, l);
    const ComplexVector w = boundary_weights(sys);
    Complex s{};
    for (int j = 0; j < sys.degree(); ++j) {
        const Complex r = sys.roots().roots[j];
        if (std::abs(r.imag() * x.real()) + std::abs(r.real() * x.imag()) > kExponentGuard) {
            std::ostringstream msg;
            msg << "exponent overflow: root " << r << " at x = " << x;
            throw OverflowError(msg.str(), r);
        }
        s += w[j] * sys.tuples()(l, j) * std::exp(-kI * r * x);
    }
    return s;
}

Complex fourier_coefficient(const GenTrigSystem& sys, int l, long n) {
    check_index(sys, l);
    require_off_integers(sys.roots());
    Complex s{};
    for (int j = 0; j < sys.degree(); ++j) s += sys.tuples()(l, j) / (static_cast<double>(n) - sys.roots().roots[j]);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * s / (2.0 * kPi * kI);
}

Matrix AssociatedMatrix::scaled() const {
    Matrix out = c;
    const Complex factor = 2.0 * kPi * kI;
    for (std::size_t r = 0; r < out.dim(); ++r)
        for (std::size_t k = 0; k < out.dim(); ++k) out(r, k) *= factor;
    return out;
}

Matrix AssociatedMatrix::descending(const Matrix& ascending) {
    const std::size_t n = ascending.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) out(r, k) = ascending(r, n - 1 - k);
    return out;
}

AssociatedMatrix associated_matrix(const GenTrigSystem& sys) {
    require_off_integers(sys.roots());
    const int m = sys.degree();
    const auto& roots = sys.roots().roots;
    const auto& t = sys.tuples();
    const Polynomial& p = sys.polynomial();

    // Route 1: sum_j T[l][j] / (n - r_j) = sum_j T[l][j] Q_j(n) / P(n).
    Matrix quotient_route(m);
    for (int j = 0; j < m; ++j) {
        const ComplexVector q = synthetic_divide(p, roots[j]).quotient.coeffs();
        for (int l = 0; l < m; ++l)
            for (int k = 0; k < m; ++k) quotient_route(l, k) += t(l, j) * q[k];
    }

    // Route 2: the coefficients of Q_j written through T itself,
    // a_{k+1} - (-1)^(m-k-1) T[m-k-1][j] below the top power, 1 on top.
    Matrix tuple_route(m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            Complex coeff = 1.0;
            if (k <= m - 2) {
                const double sign = (m - k - 1) % 2 == 0 ? 1.0 : -1.0;
                coeff = p[k + 1] - sign * t(m - k - 1, j);
            }
            for (int l = 0; l < m; ++l) tuple_route(l, k) += t(l, j) * coeff;
        }
    }

    double gap = 0.0;
    for (std::size_t i = 0; i < quotient_route.data().size(); ++i)
        gap = std::max(gap, std::abs(quotient_route.data()[i] - tuple_route.data()[i]));
    if (gap > 1e-9 * (1.0 + quotient_route.max_abs())) {
        std::ostringstream msg;
        msg << "associated matrix cross-check failed: routes differ by " << gap;
        throw NumericalError(msg.str());
    }

    AssociatedMatrix out;
    out.m = m;
    const Complex inv = 1.0 / (2.0 * kPi * kI);
    out.c = Matrix(m);
    out.c_cross_check = Matrix(m);
    for (int l = 0; l < m; ++l)
        for (int k = 0; k < m; ++k) {
            out.c(l, k) = quotient_route(l, k) * inv;
            out.c_cross_check(l, k) = tuple_route(l, k) * inv;
        }
    out.condition_estimate = condition_estimate(out.c);
    return out;
}

OracleEstimate brute_force_sum(const Polynomial& p, int k, bool alternating, long n_terms) {
    if (k < 0 || k > p.degree() - 1) throw InputError("oracle power k must be in 0..m-1");
    if (n_terms < 10) throw InputError("oracle needs at least 10 terms");

    auto term = [&](long n) {
        const double x = static_cast<double>(n);
        const Complex denom = p(x);
        if (std::abs(denom) <= 1e-12 * p.magnitude_at(x)) {
            throw NearIntegerRootError("P vanishes at or near the integer " + std::to_string(n), Complex(x), 0.0);
        }
        return std::pow(x, k) / denom;
    };
    auto paired = [&](long n) { return term(n) + term(-n); };

    if (!alternating) {
        Accumulator acc;
        acc.add(term(0));
        Complex partial[3];
        const long marks[3] = {n_terms, 2 * n_terms, 4 * n_terms};
        int next = 0;
        for (long n = 1; n <= marks[2]; ++n) {
            acc.add(paired(n));
            if (n == marks[next]) partial[next++] = acc.value();
        }
        const Complex r1a = 2.0 * partial[1] - partial[0];
        const Complex r1b = 2.0 * partial[2] - partial[1];
        const Complex r2 = (4.0 * r1b - r1a) / 3.0;
        return {r2, std::max(std::abs(r2 - r1b), kErrorBarFloor)};
    }

    Accumulator acc;
    acc.add(term(0));
    for (long n = 1; n <= n_terms; ++n) acc.add((n % 2 == 0 ? 1.0 : -1.0) * paired(n));
    ComplexVector level{acc.value()};
    for (long n = n_terms + 1; n <= n_terms + kAveragingDepth; ++n) {
        acc.add((n % 2 == 0 ? 1.0 : -1.0) * paired(n));
        level.push_back(acc.value());
    }
    double increment = 0.0;
    while (level.size() > 1) {
        increment = std::abs(level[1] - level[0]) / 2.0;
        for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
        level.pop_back();
    }
    return {level[0], std::max(increment, kErrorBarFloor)};
}

SeriesResult evaluate_sums(const GenTrigSystem& sys, const SeriesOptions& options) {
    const int m = sys.degree();
    if (m < 2) throw InputError("sums of n^k/P(n) diverge for degree < 2");
    const ComplexVector weights = boundary_weights(sys);
    const AssociatedMatrix assoc = associated_matrix(sys);

    SeriesResult out;
    const ComplexVector at_pi = eval_R_all(sys, weights, kPi);
    const ComplexVector at_minus_pi = eval_R_all(sys, weights, -kPi);
    out.rhs_b = eval_R_all(sys, weights, 0.0);
    out.rhs_a.resize(m);
    for (int l = 0; l < m; ++l) out.rhs_a[l] = 0.5 * (at_pi[l] + at_minus_pi[l]);

    constexpr double kConditionLimit = 1e13;
    if (!(assoc.condition_estimate <= kConditionLimit)) {
        std::ostringstream msg;
        msg << "associated matrix C(P) is degenerate (condition estimate " << assoc.condition_estimate
            << "); the closed form needs a non-degenerate C(P)";
        throw SingularMatrixError(msg.str(), 0);
    }
    Solution sol_a, sol_b;
    try {
        sol_a = solve(assoc.c, out.rhs_a);
        sol_b = solve(assoc.c, out.rhs_b);
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError(std::string("associated matrix C(P) is degenerate; the closed form needs a "
                                              "non-degenerate C(P): ") +
                                      e.what(),
                                  e.pivot());
    }
    out.a = std::move(sol_a.x);
    out.b = std::move(sol_b.x);
    out.condition_estimate = sol_a.condition_estimate;

    auto residual = [&](const ComplexVector& x, const ComplexVector& rhs) {
        const ComplexVector cx = assoc.c * x;
        double r = 0.0;
        for (int l = 0; l < m; ++l) r = std::max(r, std::abs(cx[l] - rhs[l]));
        return r;
    };
    out.solve_residual = std::max(residual(out.a, out.rhs_a), residual(out.b, out.rhs_b));

    if (options.run_oracle) {
        for (int k = 0; k < m; ++k) {
            out.oracle_a.push_back(brute_force_sum(sys.polynomial(), k, false, options.oracle_terms));
            out.oracle_b.push_back(brute_force_sum(sys.polynomial(), k, true, options.oracle_terms));
        }
    }
    return out;
}

SeriesResult evaluate_sums(const Polynomial& p, const SeriesOptions& options) {
    if (p.degree() < 2) throw InputError("sums of n^k/P(n) diverge for degree < 2");
    const GenTrigSystem sys(p, options.root_tol);
    SeriesOptions closed_only = options;
    closed_only.run_oracle = false;
    SeriesResult out = evaluate_sums(sys, closed_only);

    // The machinery works with the monic P; rescale to the caller's P.
    const Complex lead = p.leading();
    for (auto& v : out.a) v /= lead;
    for (auto& v : out.b) v /= lead;

    if (options.run_oracle) {
        for (int k = 0; k < p.degree(); ++k) {
            out.oracle_a.push_back(brute_force_sum(p, k, false, options.oracle_terms));
            out.oracle_b.push_back(brute_force_sum(p, k, true, options.oracle_terms));
        }
    }
    return out;
}

}  // namespace gtrig
