#include <algorithm>
#include <limits>
#include <random>

#include "gtrig/errors.hpp"
#include "gtrig/poly.hpp"

namespace gtrig {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kStagnationWindow = 40;

struct HornerResult {
    Complex value;
    Complex slope;
    double bound;  // rounding-error scale: sum |a_k| |z|^k
};

HornerResult horner(const ComplexVector& a, Complex z) {
    Complex p = a.back();
    Complex dp{};
    double bound = std::abs(a.back());
    const double az = std::abs(z);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
        bound = bound * az + std::abs(a[k]);
    }
    return {p, dp, bound};
}

// Groups real parts that agree to roundoff, so conjugate pairs order by
// imaginary part rather than by noise in the real part.
void sort_roots(ComplexVector& roots) {
    std::sort(roots.begin(), roots.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    const double scale = 1.0 + max_abs(roots);
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= roots.size(); ++i) {
        if (i == roots.size() || roots[i].real() - roots[i - 1].real() > 1e-9 * scale) {
            std::sort(roots.begin() + static_cast<long>(begin), roots.begin() + static_cast<long>(i),
                      [](Complex a, Complex b) { return a.imag() < b.imag(); });
            begin = i;
        }
    }
}

ComplexVector aberth(const ComplexVector& a, double tol, int max_iter) {
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 1) return {-a[0] / a[1]};

    // Start on a circle of radius |a_0|^(1/n), offset off the axes.
    const double radius = std::max(std::pow(std::abs(a[0]), 1.0 / n), 1e-3);
    ComplexVector z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0 * kPi * k / n + 0.4);

    std::vector<bool> done(n, false);
    std::mt19937_64 rng(0x5eed1234ULL);
    std::normal_distribution<double> jitter(0.0, 1.0);

    double best_residual = std::numeric_limits<double>::infinity();
    ComplexVector best = z;
    int since_improvement = 0;

    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            const auto h = horner(a, z[i]);
            const double scaled = std::abs(h.value) / h.bound;
            worst = std::max(worst, scaled);
            if (std::abs(h.value) <= 8.0 * kEps * h.bound) {
                done[i] = true;
                continue;
            }
            all_done = false;
            if (h.slope == Complex{}) {
                z[i] += Complex{jitter(rng), jitter(rng)} * 1e-3 * (1.0 + std::abs(z[i]));
                continue;
            }
            const Complex ratio = h.value / h.slope;
            Complex repulsion{};
            for (int j = 0; j < n; ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            const Complex step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            if (std::abs(step) <= tol * std::max(1.0, std::abs(z[i]))) done[i] = true;
        }
        if (all_done) return z;

        if (worst < best_residual) {
            best_residual = worst;
            best = z;
            since_improvement = 0;
        } else if (++since_improvement >= kStagnationWindow) {
            for (int i = 0; i < n; ++i) {
                if (!done[i]) z[i] += Complex{jitter(rng), jitter(rng)} * 1e-3 * (1.0 + std::abs(z[i]));
            }
            since_improvement = 0;
        }
    }
    if (std::all_of(done.begin(), done.end(), [](bool d) { return d; })) return z;
    throw ConvergenceError("root finder did not converge after " + std::to_string(max_iter) +
                               " iterations",
                           best, best_residual);
}

}  // namespace

RootSet find_roots(const Polynomial& p, double tol, int max_iter) {
    if (p.degree() < 1) throw InputError("find_roots needs degree >= 1");
    if (!(tol > 0.0)) throw InputError("root tolerance must be positive");

    const Polynomial monic = p.monic();
    ComplexVector a = monic.coeffs();

    // Exact zero roots are split off before iterating.
    ComplexVector roots;
    std::size_t zeros = 0;
    while (a[zeros] == Complex{}) ++zeros;
    roots.assign(zeros, Complex{});
    a.erase(a.begin(), a.begin() + static_cast<long>(zeros));

    if (a.size() > 1) {
        try {
            const ComplexVector found = aberth(a, tol, max_iter);
            roots.insert(roots.end(), found.begin(), found.end());
        } catch (const ConvergenceError& e) {
            ComplexVector best(zeros, Complex{});
            best.insert(best.end(), e.best_iterate().begin(), e.best_iterate().end());
            double residual = 0.0;
            for (const auto& r : best) residual = std::max(residual, std::abs(p(r)));
            throw ConvergenceError(e.what(), best, residual);
        }
    }

    sort_roots(roots);
    RootSet out{std::move(roots), 0.0};
    for (const auto& r : out.roots) out.residual = std::max(out.residual, std::abs(p(r)));
    return out;
}

}  // namespace gtrig
