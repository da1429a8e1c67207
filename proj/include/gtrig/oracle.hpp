#pragma once

#include <functional>
#include <utility>

#include "gtrig/gentrig.hpp"

namespace gtrig::oracle {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Composite Gauss-Legendre rule with `panels` equal panels of `order` nodes.
Complex integrate(const std::function<Complex(double)>& f, double a, double b, int panels, int order);

/// (1/2pi) int_{-pi}^{pi} R_l(x) e^{inx} dx with a 256-node composite rule
/// (16 panels of 16 nodes).
Complex fourier_coefficient_quadrature(const GenTrigSystem& sys, int l, long n);

/// Central difference of S(x) along the real direction.
ComplexVector central_difference(const GenTrigSystem& sys, Complex x, double h);

}  // namespace gtrig::oracle
