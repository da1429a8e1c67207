#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace gtrig {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Max modulus over a vector; 0 for an empty one.
inline double max_abs(const ComplexVector& v) {
    double out = 0.0;
    for (const auto& z : v) out = std::max(out, std::abs(z));
    return out;
}

// (n)_m: representative of n modulo m in [0, m).
inline int residue(long n, int m) {
    const long r = n % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace gtrig
