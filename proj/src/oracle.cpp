#include "gtrig/oracle.hpp"

#include "gtrig/errors.hpp"
#include "gtrig/series.hpp"

namespace gtrig::oracle {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw InputError("Gauss-Legendre order must be positive");
    std::vector<double> nodes(n), weights(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return {nodes, weights};
}

Complex integrate(const std::function<Complex(double)>& f, double a, double b, int panels, int order) {
    const auto [nodes, weights] = gauss_legendre(order);
    const double width = (b - a) / panels;
    Complex total{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        Complex panel{};
        for (int i = 0; i < order; ++i) panel += weights[i] * f(mid + 0.5 * width * nodes[i]);
        total += 0.5 * width * panel;
    }
    return total;
}

Complex fourier_coefficient_quadrature(const GenTrigSystem& sys, int l, long n) {
    const auto integrand = [&](double x) {
        return eval_R(sys, l, x) * std::exp(kI * static_cast<double>(n) * x);
    };
    return integrate(integrand, -kPi, kPi, 16, 16) / (2.0 * kPi);
}

ComplexVector central_difference(const GenTrigSystem& sys, Complex x, double h) {
    const ComplexVector up = eval_S_all(sys, x + h);
    const ComplexVector down = eval_S_all(sys, x - h);
    ComplexVector out(up.size());
    for (std::size_t i = 0; i < up.size(); ++i) out[i] = (up[i] - down[i]) / (2.0 * h);
    return out;
}

}  // namespace gtrig::oracle
